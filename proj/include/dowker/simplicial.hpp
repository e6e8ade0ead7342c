// Abstract simplicial complexes stored by their maximal simplices, with
// on-demand face enumeration, edge-connectedness and homology ranks over
// the two-element field.
#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <compare>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace dowker {

/// Homology ranks indexed by dimension 0..cap.
using BettiVector = std::vector<int>;

/// Nonempty, strictly sorted set of vertex names.
class Simplex {
public:
    explicit Simplex(std::vector<std::string> vertices) : vertices_(std::move(vertices)) {
        std::sort(vertices_.begin(), vertices_.end());
        vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
        if (vertices_.empty()) throw std::invalid_argument("Simplex: empty vertex set");
    }

    const std::vector<std::string>& vertices() const { return vertices_; }
    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }

    bool contains_vertex(const std::string& v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    /// Face relation: every vertex of *this appears in other.
    bool is_face_of(const Simplex& other) const {
        return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                             vertices_.end());
    }

    std::strong_ordering operator<=>(const Simplex& other) const = default;

    friend std::ostream& operator<<(std::ostream& os, const Simplex& s) {
        os << "[";
        for (std::size_t i = 0; i < s.vertices_.size(); ++i)
            os << (i ? ", " : "") << s.vertices_[i];
        return os << "]";
    }

private:
    std::vector<std::string> vertices_;
};

/// Simplicial complex over a labeled vertex universe. Only the maximal
/// simplices (an antichain under inclusion) are stored; faces are generated
/// on demand. The universe is the ambient label set: a universe vertex is a
/// vertex *of the complex* only if it lies in some simplex.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex from_maximal(const std::vector<Simplex>& candidates,
                                          std::vector<std::string> universe) {
        SimplicialComplex k;
        k.universe_ = std::move(universe);
        const std::set<std::string> uni(k.universe_.begin(), k.universe_.end());
        for (const auto& s : candidates)
            for (const auto& v : s.vertices())
                if (!uni.count(v))
                    throw std::invalid_argument("from_maximal: vertex " + v + " outside universe");
        for (const auto& s : candidates) {
            bool dominated = false;
            for (const auto& t : candidates)
                if (s.is_face_of(t) && !(t.is_face_of(s))) {
                    dominated = true;
                    break;
                }
            if (!dominated) k.maximal_.insert(s);
        }
        return k;
    }

    const std::vector<std::string>& universe() const { return universe_; }
    const std::set<Simplex>& maximal() const { return maximal_; }
    bool empty() const { return maximal_.empty(); }

    /// Largest simplex dimension, or -1 for the empty complex.
    int dimension() const {
        int d = -1;
        for (const auto& s : maximal_) d = std::max(d, s.dimension());
        return d;
    }

    /// Vertices of the complex (its 0-simplices), sorted.
    std::vector<std::string> vertices() const {
        std::set<std::string> vs;
        for (const auto& s : maximal_) vs.insert(s.vertices().begin(), s.vertices().end());
        return {vs.begin(), vs.end()};
    }

    /// Every face of every maximal simplex with dimension <= dim_cap.
    std::set<Simplex> all_faces(int dim_cap) const {
        std::set<Simplex> out;
        std::vector<std::string> scratch;
        for (const auto& top : maximal_) {
            const auto& verts = top.vertices();
            // subsets of size up to dim_cap+1, generated by recursion to
            // avoid 2^n masks when only low dimensions are requested
            scratch.clear();
            enumerate_subsets(verts, 0, dim_cap + 1, scratch, out);
        }
        return out;
    }

    bool contains(const Simplex& s) const {
        for (const auto& top : maximal_)
            if (s.is_face_of(top)) return true;
        return false;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.universe_ == b.universe_ && a.maximal_ == b.maximal_;
    }

    friend std::ostream& operator<<(std::ostream& os, const SimplicialComplex& k) {
        os << "{";
        bool first = true;
        for (const auto& s : k.maximal_) {
            os << (first ? "" : ", ") << s;
            first = false;
        }
        return os << "}";
    }

private:
    static void enumerate_subsets(const std::vector<std::string>& verts, std::size_t start,
                                  std::size_t max_size, std::vector<std::string>& scratch,
                                  std::set<Simplex>& out) {
        if (!scratch.empty()) out.insert(Simplex(scratch));
        if (scratch.size() == max_size) return;
        for (std::size_t i = start; i < verts.size(); ++i) {
            scratch.push_back(verts[i]);
            enumerate_subsets(verts, i + 1, max_size, scratch, out);
            scratch.pop_back();
        }
    }

    std::vector<std::string> universe_;
    std::set<Simplex> maximal_;
};

/// A's faces all lie in B. Both complexes must share the universe.
inline bool is_subcomplex(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.universe() != b.universe())
        throw std::invalid_argument("is_subcomplex: universe mismatch");
    for (const auto& s : a.maximal())
        if (!b.contains(s)) return false;
    return true;
}

/// Partition of the complex's vertices by chains of edges with overlapping
/// closures; equivalently, connectivity of the 1-skeleton.
inline std::vector<std::vector<std::string>> edge_connected_components(const SimplicialComplex& k) {
    const auto verts = k.vertices();
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = i;

    std::vector<std::size_t> parent(verts.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };

    for (const auto& e : k.all_faces(1))
        if (e.dimension() == 1)
            parent[find(idx[e.vertices()[0]])] = find(idx[e.vertices()[1]]);

    std::map<std::size_t, std::vector<std::string>> blocks;
    for (std::size_t i = 0; i < verts.size(); ++i) blocks[find(i)].push_back(verts[i]);
    std::vector<std::vector<std::string>> out;
    for (auto& [root, block] : blocks) out.push_back(std::move(block));
    return out;
}

namespace detail {

/// Rank over Z/2 of a column set held as bitsets, by Gaussian elimination.
inline int z2_rank(std::vector<boost::dynamic_bitset<>> cols) {
    int rank = 0;
    std::vector<boost::dynamic_bitset<>> pivots;
    std::vector<std::size_t> pivot_rows;
    for (auto& col : cols) {
        for (std::size_t p = 0; p < pivots.size(); ++p)
            if (col.test(pivot_rows[p])) col ^= pivots[p];
        if (col.none()) continue;
        std::size_t low = col.find_first();
        for (std::size_t b = low; b != boost::dynamic_bitset<>::npos; b = col.find_next(b)) low = b;
        pivots.push_back(col);
        pivot_rows.push_back(low);
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Homology ranks over Z/2 for dimensions 0..dim_cap, exact for the full
/// complex: faces are enumerated one dimension past the cap so the last
/// rank is closed. The empty complex yields all zeros.
inline BettiVector betti_numbers(const SimplicialComplex& k, int dim_cap) {
    if (dim_cap < 0) throw std::invalid_argument("betti_numbers: negative dim_cap");
    const auto faces = k.all_faces(dim_cap + 1);

    std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(dim_cap) + 2);
    for (const auto& f : faces) by_dim[f.dimension()].push_back(f);
    std::vector<std::map<Simplex, std::size_t>> index(by_dim.size());
    for (std::size_t d = 0; d < by_dim.size(); ++d)
        for (std::size_t i = 0; i < by_dim[d].size(); ++i) index[d][by_dim[d][i]] = i;

    std::vector<int> boundary_rank(by_dim.size() + 1, 0);
    for (std::size_t d = 1; d < by_dim.size(); ++d) {
        if (by_dim[d].empty()) continue;
        std::vector<boost::dynamic_bitset<>> cols(by_dim[d].size(),
                                                  boost::dynamic_bitset<>(by_dim[d - 1].size()));
        for (std::size_t c = 0; c < by_dim[d].size(); ++c) {
            const auto& verts = by_dim[d][c].vertices();
            std::vector<std::string> sub(verts.begin() + 1, verts.end());
            for (std::size_t omit = 0; omit < verts.size(); ++omit) {
                cols[c].set(index[d - 1].at(Simplex(sub)));
                if (omit + 1 < verts.size()) sub[omit] = verts[omit];
            }
        }
        boundary_rank[d] = detail::z2_rank(std::move(cols));
    }

    BettiVector betti(static_cast<std::size_t>(dim_cap) + 1, 0);
    for (int d = 0; d <= dim_cap; ++d)
        betti[d] = static_cast<int>(by_dim[d].size()) - boundary_rank[d] - boundary_rank[d + 1];
    return betti;
}

/// Alternating sum of face counts over all dimensions (no cap).
inline long euler_characteristic(const SimplicialComplex& k) {
    const int top = k.dimension();
    if (top < 0) return 0;
    long chi = 0;
    for (const auto& f : k.all_faces(top))
        chi += f.dimension() % 2 == 0 ? 1 : -1;
    return chi;
}

}  // namespace dowker
