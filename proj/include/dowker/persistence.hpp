// Power filtrations of Dowker complexes, barcodes over the two-element
// field, and the intersection bi-filtration grid.
//
// A filtration runs over powers i = 1..j (optionally from 0, the identity
// power) where j is the eventual-period index: complexes are constant from
// j on, so infinite deaths are exact rather than truncated.
#pragma once

#include <dowker/complexes.hpp>
#include <dowker/digraph.hpp>
#include <dowker/relation.hpp>
#include <dowker/simplicial.hpp>

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace dowker {

enum class Side { K, L };

inline const char* side_name(Side s) { return s == Side::K ? "K" : "L"; }

/// Nested Dowker complexes of successive powers, with per-simplex births.
/// levels holds the complexes for powers start_level..stabilization_index;
/// birth maps every face of dimension <= dim_cap + 1 to the first power
/// containing it.
struct FilteredComplex {
    Side side = Side::K;
    int start_level = 1;
    int stabilization_index = 1;  // the eventual-period index j
    int dim_cap = 3;
    std::vector<SimplicialComplex> levels;
    std::map<Simplex, int> birth;

    const SimplicialComplex& level(int i) const { return levels.at(i - start_level); }
    int last_level() const { return stabilization_index; }
};

namespace detail {

inline SimplicialComplex side_complex(const Relation& r, Side side) {
    return side == Side::K ? dowker_K(r) : dowker_L(r);
}

inline std::string join_labels(const std::vector<std::string>& labels) {
    std::ostringstream os;
    for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? ", " : "") << labels[i];
    return os.str();
}

// Builds the hypothesis-failure message for a side, quoting the vertices
// that break it and, when the chain really does lose a simplex, the first
// power where inclusion fails.
inline hypothesis_error filtration_hypothesis_error(const Relation& r, Side side, int j) {
    const auto have = side == Side::K ? domain(r) : image(r);
    std::vector<std::string> missing;
    for (const auto& v : r.source_labels())
        if (std::find(have.begin(), have.end(), v) == have.end()) missing.push_back(v);
    std::ostringstream os;
    os << "power filtration (" << side_name(side) << " side) requires "
       << (side == Side::K ? "Dom R = X" : "Ima R = X") << "; missing: " << join_labels(missing);
    Relation pow = r;
    for (int i = 1; i <= j; ++i) {
        const Relation next = compose(r, pow);
        const SimplicialComplex a = side_complex(pow, side);
        const SimplicialComplex b = side_complex(next, side);
        if (!is_subcomplex(a, b)) {
            for (const auto& s : a.maximal())
                if (!b.contains(s)) {
                    os << "; inclusion fails between powers " << i << " and " << i + 1
                       << " (simplex " << s << " is lost)";
                    return hypothesis_error(os.str());
                }
        }
        pow = next;
    }
    return hypothesis_error(os.str());
}

}  // namespace detail

/// The K- or L-side power filtration of a self-relation. The K side needs
/// Dom R = X and the L side Ima R = X; otherwise the level complexes would
/// not be nested and a hypothesis_error describes the failure.
inline FilteredComplex power_filtration(const Relation& r, Side side, bool include_zero = false,
                                        int dim_cap = 3) {
    detail::require_self(r, "power_filtration");
    const EventualPeriod ep = eventual_period(r);
    if (side == Side::K ? !is_total(r) : !is_surjective(r))
        throw detail::filtration_hypothesis_error(r, side, ep.index);

    FilteredComplex fc;
    fc.side = side;
    fc.start_level = include_zero ? 0 : 1;
    fc.stabilization_index = ep.index;
    fc.dim_cap = dim_cap;

    Relation pow = include_zero ? Relation::identity(r.source_labels()) : r;
    for (int i = fc.start_level; i <= ep.index; ++i) {
        fc.levels.push_back(detail::side_complex(pow, side));
        for (const auto& f : fc.levels.back().all_faces(dim_cap + 1))
            fc.birth.emplace(f, i);  // keeps the first level seen
        pow = compose(r, pow);
    }
    return fc;
}

/// Half-open persistence interval [birth, death) in dimension dim;
/// death is absent for classes alive at stabilization.
struct Bar {
    int dim = 0;
    int birth = 0;
    std::optional<int> death;

    friend bool operator==(const Bar&, const Bar&) = default;
};

struct Barcode {
    std::vector<Bar> bars;
};

/// Standard boundary-matrix reduction over Z/2. Simplices are ordered by
/// (birth, dimension, vertex labels), which makes the output reproducible
/// bit for bit. Zero-length pairs are dropped; creators unpaired at the
/// last level die at infinity.
inline Barcode barcode(const FilteredComplex& fc) {
    const int cap = fc.dim_cap;

    std::vector<const Simplex*> order;
    order.reserve(fc.birth.size());
    for (const auto& [s, b] : fc.birth) order.push_back(&s);
    std::sort(order.begin(), order.end(), [&](const Simplex* a, const Simplex* b) {
        const int ba = fc.birth.at(*a), bb = fc.birth.at(*b);
        if (ba != bb) return ba < bb;
        if (a->dimension() != b->dimension()) return a->dimension() < b->dimension();
        return *a < *b;
    });
    std::map<Simplex, std::size_t> position;
    for (std::size_t i = 0; i < order.size(); ++i) position[*order[i]] = i;

    const std::size_t n = order.size();
    std::vector<boost::dynamic_bitset<>> columns(n, boost::dynamic_bitset<>(n));
    for (std::size_t c = 0; c < n; ++c) {
        const auto& verts = order[c]->vertices();
        if (verts.size() == 1) continue;
        for (std::size_t omit = 0; omit < verts.size(); ++omit) {
            std::vector<std::string> sub;
            for (std::size_t i = 0; i < verts.size(); ++i)
                if (i != omit) sub.push_back(verts[i]);
            columns[c].set(position.at(Simplex(sub)));
        }
    }

    auto lowest = [](const boost::dynamic_bitset<>& col) -> std::size_t {
        std::size_t low = boost::dynamic_bitset<>::npos;
        for (std::size_t b = col.find_first(); b != boost::dynamic_bitset<>::npos;
             b = col.find_next(b))
            low = b;
        return low;
    };

    std::vector<std::size_t> pivot_owner(n, boost::dynamic_bitset<>::npos);
    std::vector<std::size_t> killed_by(n, boost::dynamic_bitset<>::npos);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t low = lowest(columns[c]);
        while (low != boost::dynamic_bitset<>::npos &&
               pivot_owner[low] != boost::dynamic_bitset<>::npos) {
            columns[c] ^= columns[pivot_owner[low]];
            low = lowest(columns[c]);
        }
        if (low != boost::dynamic_bitset<>::npos) {
            pivot_owner[low] = c;
            killed_by[low] = c;
        }
    }

    Barcode code;
    for (std::size_t i = 0; i < n; ++i) {
        if (columns[i].any()) continue;  // only zeroed columns create classes
        const int dim = order[i]->dimension();
        if (dim > cap) continue;
        const int b = fc.birth.at(*order[i]);
        if (killed_by[i] != boost::dynamic_bitset<>::npos) {
            const int d = fc.birth.at(*order[killed_by[i]]);
            if (d > b) code.bars.push_back({dim, b, d});
        } else {
            code.bars.push_back({dim, b, std::nullopt});
        }
    }
    std::sort(code.bars.begin(), code.bars.end(), [](const Bar& a, const Bar& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.birth != b.birth) return a.birth < b.birth;
        const int da = a.death.value_or(INT_MAX), db = b.death.value_or(INT_MAX);
        return da < db;
    });
    return code;
}

/// Faces present in both complexes: the antichain of pairwise intersections
/// of the maximal simplices.
inline SimplicialComplex intersect_complexes(const SimplicialComplex& a,
                                             const SimplicialComplex& b) {
    if (a.universe() != b.universe())
        throw std::invalid_argument("intersect_complexes: universe mismatch");
    std::vector<Simplex> candidates;
    for (const auto& s : a.maximal())
        for (const auto& t : b.maximal()) {
            std::vector<std::string> common;
            std::set_intersection(s.vertices().begin(), s.vertices().end(), t.vertices().begin(),
                                  t.vertices().end(), std::back_inserter(common));
            if (!common.empty()) candidates.emplace_back(common);
        }
    return SimplicialComplex::from_maximal(candidates, a.universe());
}

/// The (m, n) cell of the intersection bi-filtration.
inline SimplicialComplex bifiltration_cell(const Relation& r, int m, int n) {
    detail::require_self(r, "bifiltration_cell");
    return intersect_complexes(dowker_K(power(r, m)), dowker_L(power(r, n)));
}

/// Pointwise homology ranks of the bi-filtration over [1..j]^2.
struct BifiltrationGrid {
    int stabilization_index = 1;
    int dim_cap = 3;
    std::map<std::pair<int, int>, BettiVector> cells;
};

/// Requires Dom R = X = Ima R so that both power chains are nested; the
/// grid is finite because both axes stabilize at the eventual-period index.
inline BifiltrationGrid bifiltration_grid(const Relation& r, int dim_cap = 3) {
    detail::require_self(r, "bifiltration_grid");
    const EventualPeriod ep = eventual_period(r);
    if (!is_total(r)) throw detail::filtration_hypothesis_error(r, Side::K, ep.index);
    if (!is_surjective(r)) throw detail::filtration_hypothesis_error(r, Side::L, ep.index);

    BifiltrationGrid grid;
    grid.stabilization_index = ep.index;
    grid.dim_cap = dim_cap;

    std::vector<SimplicialComplex> k_side, l_side;
    Relation pow = r;
    for (int i = 1; i <= ep.index; ++i) {
        k_side.push_back(dowker_K(pow));
        l_side.push_back(dowker_L(pow));
        pow = compose(r, pow);
    }
    for (int m = 1; m <= ep.index; ++m)
        for (int n = 1; n <= ep.index; ++n)
            grid.cells[{m, n}] =
                betti_numbers(intersect_complexes(k_side[m - 1], l_side[n - 1]), dim_cap);
    return grid;
}

/// Common endpoints certifying a simplex of the (m, n) bi-filtration cell:
/// alpha reaches every vertex of the simplex in n steps and every vertex
/// reaches omega in m steps, so each vertex lies on an (alpha, omega)-walk
/// of length m + n. Absent when the simplex is not in the cell.
struct WalkWitness {
    std::string alpha;
    std::string omega;

    friend bool operator==(const WalkWitness&, const WalkWitness&) = default;
};

inline std::optional<WalkWitness> walk_witness(const Relation& r, int m, int n,
                                               const Simplex& simplex) {
    detail::require_self(r, "walk_witness");
    const Relation rm = power(r, m);
    const Relation rn = power(r, n);
    if (!dowker_K(rm).contains(simplex) || !dowker_L(rn).contains(simplex)) return std::nullopt;

    BitRow members(r.source_size());
    for (const auto& v : simplex.vertices()) members.set(*r.source_index(v));

    WalkWitness w;
    for (std::size_t alpha = 0; alpha < r.source_size(); ++alpha)
        if ((members & rn.row(alpha)) == members) {
            w.alpha = r.source_labels()[alpha];
            break;
        }
    for (std::size_t omega = 0; omega < r.source_size(); ++omega)
        if ((members & rm.column(omega)) == members) {
            w.omega = r.source_labels()[omega];
            break;
        }
    return w;
}

}  // namespace dowker
