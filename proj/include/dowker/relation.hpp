// Finite relations between labeled vertex sets, stored as dense boolean
// bit-row matrices. Provides the relational algebra everything else is
// built on: composition, inversion, powers, domain/image predicates and
// eventual-period detection for self-relations.
#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dowker {

/// Raised when an operation's mathematical hypothesis does not hold for the
/// given input (e.g. a power filtration of a non-total relation). Kept
/// distinct from std::invalid_argument, which signals malformed input.
class hypothesis_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using BitRow = boost::dynamic_bitset<>;

/// Least (index, period) pair with R^index == R^(index + period).
struct EventualPeriod {
    int index = 0;
    int period = 0;

    friend bool operator==(const EventualPeriod&, const EventualPeriod&) = default;
};

/// A relation R between two finite labeled sets X (sources) and Y (targets),
/// held as a boolean incidence matrix with rows indexed by X and columns by Y.
/// A relation whose two label lists are identical is a self-relation and
/// doubles as a directed graph on its vertex set.
///
/// Values are immutable after construction; all algebra returns new objects.
class Relation {
public:
    Relation() = default;

    static Relation from_matrix(const std::vector<std::vector<int>>& rows,
                                std::vector<std::string> source_labels = {},
                                std::vector<std::string> target_labels = {}) {
        const std::size_t m = rows.size();
        const std::size_t n = m == 0 ? 0 : rows.front().size();
        for (const auto& row : rows)
            if (row.size() != n)
                throw std::invalid_argument("from_matrix: ragged rows");
        if (source_labels.empty()) source_labels = default_labels("x", m);
        if (target_labels.empty() && n > 0) target_labels = default_labels("y", n);
        Relation r(std::move(source_labels), std::move(target_labels));
        if (r.source_labels_.size() != m || r.target_labels_.size() != n)
            throw std::invalid_argument("from_matrix: label counts do not match matrix dimensions");
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (rows[i][j]) r.rows_[i].set(j);
        return r;
    }

    /// Self-relation with the same label list on both sides (default x1..xn).
    static Relation self_from_matrix(const std::vector<std::vector<int>>& rows,
                                     std::vector<std::string> labels = {}) {
        if (labels.empty()) labels = default_labels("x", rows.size());
        return from_matrix(rows, labels, labels);
    }

    static Relation from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs,
                               std::vector<std::string> source_labels,
                               std::vector<std::string> target_labels) {
        Relation r(std::move(source_labels), std::move(target_labels));
        for (const auto& [a, b] : pairs) {
            const auto i = r.source_index(a);
            const auto j = r.target_index(b);
            if (!i || !j)
                throw std::invalid_argument("from_pairs: pair (" + a + ", " + b +
                                            ") uses a label outside the vertex sets");
            r.rows_[*i].set(*j);
        }
        return r;
    }

    static Relation identity(std::vector<std::string> labels) {
        Relation r(labels, labels);
        for (std::size_t i = 0; i < r.rows_.size(); ++i) r.rows_[i].set(i);
        return r;
    }

    /// All-ones relation (the matrix J when square).
    static Relation full(std::vector<std::string> source_labels,
                         std::vector<std::string> target_labels) {
        Relation r(std::move(source_labels), std::move(target_labels));
        for (auto& row : r.rows_) row.set();
        return r;
    }

    static Relation empty(std::vector<std::string> source_labels,
                          std::vector<std::string> target_labels) {
        return Relation(std::move(source_labels), std::move(target_labels));
    }

    static Relation from_bitrows(std::vector<BitRow> rows,
                                 std::vector<std::string> source_labels,
                                 std::vector<std::string> target_labels) {
        Relation r(std::move(source_labels), std::move(target_labels));
        r.rows_ = std::move(rows);
        return r;
    }

    const std::vector<std::string>& source_labels() const { return source_labels_; }
    const std::vector<std::string>& target_labels() const { return target_labels_; }
    std::size_t source_size() const { return source_labels_.size(); }
    std::size_t target_size() const { return target_labels_.size(); }

    bool at(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
    const BitRow& row(std::size_t i) const { return rows_[i]; }

    /// Column support {i : x_i R y_j} as a bit vector over the sources.
    BitRow column(std::size_t j) const {
        BitRow col(source_size());
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i].test(j)) col.set(i);
        return col;
    }

    std::optional<std::size_t> source_index(const std::string& label) const {
        return index_of(source_labels_, label);
    }
    std::optional<std::size_t> target_index(const std::string& label) const {
        return index_of(target_labels_, label);
    }

    /// True when (a, b) is in the relation; labels must exist.
    bool relates(const std::string& a, const std::string& b) const {
        const auto i = source_index(a);
        const auto j = target_index(b);
        if (!i || !j) throw std::invalid_argument("relates: unknown label");
        return at(*i, *j);
    }

    bool is_self() const { return source_labels_ == target_labels_; }

    std::size_t edge_count() const {
        std::size_t c = 0;
        for (const auto& row : rows_) c += row.count();
        return c;
    }

    friend bool operator==(const Relation& a, const Relation& b) {
        return a.source_labels_ == b.source_labels_ && a.target_labels_ == b.target_labels_ &&
               a.rows_ == b.rows_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Relation& r) {
        os << r.source_size() << "x" << r.target_size() << " relation {";
        bool first = true;
        for (std::size_t i = 0; i < r.source_size(); ++i)
            for (std::size_t j = 0; j < r.target_size(); ++j)
                if (r.at(i, j)) {
                    os << (first ? "" : ", ") << "(" << r.source_labels_[i] << ","
                       << r.target_labels_[j] << ")";
                    first = false;
                }
        return os << "}";
    }

    const std::vector<BitRow>& rows() const { return rows_; }

private:
    Relation(std::vector<std::string> source_labels, std::vector<std::string> target_labels)
        : source_labels_(std::move(source_labels)), target_labels_(std::move(target_labels)) {
        check_unique(source_labels_);
        check_unique(target_labels_);
        rows_.assign(source_labels_.size(), BitRow(target_labels_.size()));
    }

    static std::vector<std::string> default_labels(const std::string& stem, std::size_t n) {
        std::vector<std::string> out;
        out.reserve(n);
        for (std::size_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
        return out;
    }

    static void check_unique(const std::vector<std::string>& labels) {
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("duplicate vertex label");
    }

    static std::optional<std::size_t> index_of(const std::vector<std::string>& labels,
                                               const std::string& label) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label) return i;
        return std::nullopt;
    }

    std::vector<std::string> source_labels_;
    std::vector<std::string> target_labels_;
    std::vector<BitRow> rows_;
};

/// outer ∘ inner: (x, z) related iff there is a y with x inner y and y outer z.
/// Requires inner's target labels to equal outer's source labels.
inline Relation compose(const Relation& outer, const Relation& inner) {
    if (inner.target_labels() != outer.source_labels())
        throw std::invalid_argument("compose: inner targets do not match outer sources");
    std::vector<BitRow> rows(inner.source_size(), BitRow(outer.target_size()));
    for (std::size_t x = 0; x < inner.source_size(); ++x) {
        const BitRow& mid = inner.row(x);
        for (std::size_t y = mid.find_first(); y != BitRow::npos; y = mid.find_next(y))
            rows[x] |= outer.row(y);
    }
    return Relation::from_bitrows(std::move(rows), inner.source_labels(), outer.target_labels());
}

inline Relation inverse(const Relation& r) {
    std::vector<BitRow> rows(r.target_size(), BitRow(r.source_size()));
    for (std::size_t j = 0; j < r.target_size(); ++j) rows[j] = r.column(j);
    return Relation::from_bitrows(std::move(rows), r.target_labels(), r.source_labels());
}

namespace detail {
inline void require_self(const Relation& r, const char* op) {
    if (!r.is_self())
        throw std::invalid_argument(std::string(op) + ": requires a self-relation");
}
}  // namespace detail

/// R^n on a self-relation. n = 0 is the identity; n < 0 iterates the inverse.
inline Relation power(const Relation& r, long n) {
    detail::require_self(r, "power");
    if (n == 0) return Relation::identity(r.source_labels());
    const Relation base = n > 0 ? r : inverse(r);
    Relation acc = base;
    for (long k = 1; k < std::abs(n); ++k) acc = compose(base, acc);
    return acc;
}

/// Sources with a nonempty row, in label order.
inline std::vector<std::string> domain(const Relation& r) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < r.source_size(); ++i)
        if (r.row(i).any()) out.push_back(r.source_labels()[i]);
    return out;
}

/// Targets with a nonempty column, in label order.
inline std::vector<std::string> image(const Relation& r) {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < r.target_size(); ++j)
        if (r.column(j).any()) out.push_back(r.target_labels()[j]);
    return out;
}

inline bool is_total(const Relation& r) {
    for (std::size_t i = 0; i < r.source_size(); ++i)
        if (!r.row(i).any()) return false;
    return true;
}

inline bool is_surjective(const Relation& r) {
    for (std::size_t j = 0; j < r.target_size(); ++j)
        if (!r.column(j).any()) return false;
    return true;
}

/// Least (j, p) with R^j == R^(j+p), found by iterating powers and recording
/// the first index at which each matrix appears. The first repeated matrix
/// closes the cycle, which makes j and p simultaneously least.
inline EventualPeriod eventual_period(const Relation& r) {
    detail::require_self(r, "eventual_period");
    if (r.source_size() == 0)
        throw std::invalid_argument("eventual_period: empty vertex set");
    std::map<std::vector<BitRow>, int> first_seen;
    Relation pow = r;
    for (int k = 1;; ++k) {
        auto [it, inserted] = first_seen.emplace(pow.rows(), k);
        if (!inserted) return EventualPeriod{it->second, k - it->second};
        pow = compose(r, pow);
    }
}

/// The stable power R^j, defined only when the eventual period is (j, 1).
inline Relation r_infinity(const Relation& r) {
    const EventualPeriod ep = eventual_period(r);
    if (ep.period != 1)
        throw hypothesis_error("r_infinity: relation does not converge (period " +
                               std::to_string(ep.period) + " > 1)");
    return power(r, ep.index);
}

}  // namespace dowker
