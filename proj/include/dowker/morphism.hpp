// Verification of the structure-preserving maps between relations: graph
// homomorphisms, right/left morphisms and their multivalued versions,
// conjugacy, and shift-equivalence witnesses. Everything here checks a
// given candidate; nothing searches.
#pragma once

#include <dowker/complexes.hpp>
#include <dowker/relation.hpp>
#include <dowker/simplicial.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dowker {

/// Total vertex map, one codomain label per source label.
using VertexMap = std::map<std::string, std::string>;

/// Multivalued vertex map; empty images make the morphism conditions vacuous.
using MultiMap = std::map<std::string, std::set<std::string>>;

/// Candidate witness for shift equivalence: S: X -> Y, T: Y -> X and a lag.
struct ShiftWitness {
    Relation S;
    Relation T;
    int lag = 1;
};

/// First pair violating a morphism condition, for diagnostics.
struct PairViolation {
    std::string left;
    std::string right;

    friend bool operator==(const PairViolation&, const PairViolation&) = default;
};

namespace detail {

inline void check_map_signature(const VertexMap& f, const std::vector<std::string>& from,
                                const std::vector<std::string>& to, const char* op) {
    const std::set<std::string> codomain(to.begin(), to.end());
    for (const auto& v : from) {
        const auto it = f.find(v);
        if (it == f.end())
            throw std::invalid_argument(std::string(op) + ": map is undefined on " + v);
        if (!codomain.count(it->second))
            throw std::invalid_argument(std::string(op) + ": image " + it->second +
                                        " of " + v + " is outside the codomain");
    }
}

inline void check_multimap_signature(const MultiMap& f, const std::vector<std::string>& from,
                                     const std::vector<std::string>& to, const char* op) {
    const std::set<std::string> codomain(to.begin(), to.end());
    for (const auto& v : from) {
        const auto it = f.find(v);
        if (it == f.end())
            throw std::invalid_argument(std::string(op) + ": multimap is undefined on " + v);
        for (const auto& a : it->second)
            if (!codomain.count(a))
                throw std::invalid_argument(std::string(op) + ": image " + a + " of " + v +
                                            " is outside the codomain");
    }
}

}  // namespace detail

/// The relation {(x, f(x))} induced by a map.
inline Relation map_as_relation(const VertexMap& f, const std::vector<std::string>& from,
                                const std::vector<std::string>& to) {
    detail::check_map_signature(f, from, to, "map_as_relation");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& v : from) pairs.emplace_back(v, f.at(v));
    return Relation::from_pairs(pairs, from, to);
}

/// First pair (x1, x2) with x1 R x2 but not f(x1) R' f(x2).
inline std::optional<PairViolation> graph_homomorphism_violation(const VertexMap& f,
                                                                 const Relation& r,
                                                                 const Relation& r2) {
    detail::require_self(r, "graph homomorphism");
    detail::require_self(r2, "graph homomorphism");
    detail::check_map_signature(f, r.source_labels(), r2.source_labels(), "graph homomorphism");
    for (const auto& x1 : r.source_labels())
        for (const auto& x2 : r.source_labels())
            if (r.relates(x1, x2) && !r2.relates(f.at(x1), f.at(x2)))
                return PairViolation{x1, x2};
    return std::nullopt;
}

inline bool is_graph_homomorphism(const VertexMap& f, const Relation& r, const Relation& r2) {
    return !graph_homomorphism_violation(f, r, r2);
}

/// Right morphism f: (X, Y, R) -> (X, Z, R'), a map Y -> Z with
/// x R y implying x R' f(y). Sources must coincide.
inline std::optional<PairViolation> right_morphism_violation(const VertexMap& f, const Relation& r,
                                                             const Relation& r2) {
    if (r.source_labels() != r2.source_labels())
        throw std::invalid_argument("right morphism: relations do not share sources");
    detail::check_map_signature(f, r.target_labels(), r2.target_labels(), "right morphism");
    for (const auto& x : r.source_labels())
        for (const auto& y : r.target_labels())
            if (r.relates(x, y) && !r2.relates(x, f.at(y)))
                return PairViolation{x, y};
    return std::nullopt;
}

inline bool is_right_morphism(const VertexMap& f, const Relation& r, const Relation& r2) {
    return !right_morphism_violation(f, r, r2);
}

/// Left morphism g: (X, Z, R) -> (Y, Z, R'), a map X -> Y with
/// x R z implying g(x) R' z. Targets must coincide.
inline std::optional<PairViolation> left_morphism_violation(const VertexMap& g, const Relation& r,
                                                            const Relation& r2) {
    if (r.target_labels() != r2.target_labels())
        throw std::invalid_argument("left morphism: relations do not share targets");
    detail::check_map_signature(g, r.source_labels(), r2.source_labels(), "left morphism");
    for (const auto& x : r.source_labels())
        for (const auto& z : r.target_labels())
            if (r.relates(x, z) && !r2.relates(g.at(x), z))
                return PairViolation{x, z};
    return std::nullopt;
}

inline bool is_left_morphism(const VertexMap& g, const Relation& r, const Relation& r2) {
    return !left_morphism_violation(g, r, r2);
}

/// Multi-right morphism: x R y implies x R' a for every a in F(y).
inline std::optional<PairViolation> multi_right_morphism_violation(const MultiMap& f,
                                                                   const Relation& r,
                                                                   const Relation& r2) {
    if (r.source_labels() != r2.source_labels())
        throw std::invalid_argument("multi-right morphism: relations do not share sources");
    detail::check_multimap_signature(f, r.target_labels(), r2.target_labels(),
                                     "multi-right morphism");
    for (const auto& x : r.source_labels())
        for (const auto& y : r.target_labels())
            if (r.relates(x, y))
                for (const auto& a : f.at(y))
                    if (!r2.relates(x, a)) return PairViolation{x, y};
    return std::nullopt;
}

inline bool is_multi_right_morphism(const MultiMap& f, const Relation& r, const Relation& r2) {
    return !multi_right_morphism_violation(f, r, r2);
}

/// Multi-left morphism: x R z implies a R' z for every a in G(x).
inline std::optional<PairViolation> multi_left_morphism_violation(const MultiMap& g,
                                                                  const Relation& r,
                                                                  const Relation& r2) {
    if (r.target_labels() != r2.target_labels())
        throw std::invalid_argument("multi-left morphism: relations do not share targets");
    detail::check_multimap_signature(g, r.source_labels(), r2.source_labels(),
                                     "multi-left morphism");
    for (const auto& x : r.source_labels())
        for (const auto& z : r.target_labels())
            if (r.relates(x, z))
                for (const auto& a : g.at(x))
                    if (!r2.relates(a, z)) return PairViolation{x, z};
    return std::nullopt;
}

inline bool is_multi_left_morphism(const MultiMap& g, const Relation& r, const Relation& r2) {
    return !multi_left_morphism_violation(g, r, r2);
}

/// A relation seen as a multivalued map y -> R(y) on its rows.
inline MultiMap relation_as_multimap(const Relation& r) {
    MultiMap out;
    for (std::size_t i = 0; i < r.source_size(); ++i) {
        auto& img = out[r.source_labels()[i]];
        const BitRow& row = r.row(i);
        for (std::size_t j = row.find_first(); j != BitRow::npos; j = row.find_next(j))
            img.insert(r.target_labels()[j]);
    }
    return out;
}

inline bool is_bijection(const VertexMap& f, const std::vector<std::string>& from,
                         const std::vector<std::string>& to) {
    if (from.size() != to.size()) return false;
    std::set<std::string> seen;
    for (const auto& v : from) {
        const auto it = f.find(v);
        if (it == f.end() || !seen.insert(it->second).second) return false;
    }
    const std::set<std::string> codomain(to.begin(), to.end());
    for (const auto& v : seen)
        if (!codomain.count(v)) return false;
    return true;
}

/// First entry (x, y) at which phi o R1 and R2 o phi disagree.
inline std::optional<PairViolation> conjugacy_violation(const VertexMap& phi, const Relation& r1,
                                                        const Relation& r2) {
    detail::require_self(r1, "conjugacy");
    detail::require_self(r2, "conjugacy");
    if (!is_bijection(phi, r1.source_labels(), r2.source_labels()))
        throw std::invalid_argument("conjugacy: map is not a bijection between the vertex sets");
    const Relation phi_rel = map_as_relation(phi, r1.source_labels(), r2.source_labels());
    const Relation lhs = compose(phi_rel, r1);  // phi o R1
    const Relation rhs = compose(r2, phi_rel);  // R2 o phi
    for (std::size_t i = 0; i < lhs.source_size(); ++i)
        for (std::size_t j = 0; j < lhs.target_size(); ++j)
            if (lhs.at(i, j) != rhs.at(i, j))
                return PairViolation{lhs.source_labels()[i], lhs.target_labels()[j]};
    return std::nullopt;
}

inline bool is_conjugacy(const VertexMap& phi, const Relation& r1, const Relation& r2) {
    return !conjugacy_violation(phi, r1, r2);
}

/// Name of the first defining equation a shift witness fails, if any.
/// The four equations: R1 o T = T o R2, S o R1 = R2 o S, T o S = R1^lag,
/// S o T = R2^lag.
inline std::optional<std::string> shift_equivalence_violation(const Relation& r1,
                                                              const Relation& r2,
                                                              const ShiftWitness& w) {
    detail::require_self(r1, "shift equivalence");
    detail::require_self(r2, "shift equivalence");
    if (w.lag < 1) throw std::invalid_argument("shift equivalence: lag must be positive");
    if (w.S.source_labels() != r1.source_labels() || w.S.target_labels() != r2.source_labels())
        throw std::invalid_argument("shift equivalence: S must map the first vertex set to the second");
    if (w.T.source_labels() != r2.source_labels() || w.T.target_labels() != r1.source_labels())
        throw std::invalid_argument("shift equivalence: T must map the second vertex set to the first");
    if (compose(r1, w.T) != compose(w.T, r2)) return "R1 o T = T o R2";
    if (compose(w.S, r1) != compose(r2, w.S)) return "S o R1 = R2 o S";
    if (compose(w.T, w.S) != power(r1, w.lag)) return "T o S = R1^lag";
    if (compose(w.S, w.T) != power(r2, w.lag)) return "S o T = R2^lag";
    return std::nullopt;
}

inline bool verify_shift_equivalence(const Relation& r1, const Relation& r2,
                                     const ShiftWitness& w) {
    return !shift_equivalence_violation(r1, r2, w);
}

/// Checks the complex-inclusion consequence of a right morphism: K_R is a
/// subcomplex of K_R'. When f is bijective and its inverse is itself a
/// right morphism (a relabeling of the targets), the complexes must be
/// equal and that stronger conclusion is checked instead. The morphism
/// itself is a precondition and is re-verified.
inline bool assert_inclusion_from_right_morphism(const VertexMap& f, const Relation& r,
                                                 const Relation& r2) {
    if (!is_right_morphism(f, r, r2))
        throw hypothesis_error("assert_inclusion_from_right_morphism: f is not a right morphism");
    const SimplicialComplex kr = dowker_K(r);
    const SimplicialComplex kr2 = dowker_K(r2);
    if (!is_subcomplex(kr, kr2)) return false;
    if (is_bijection(f, r.target_labels(), r2.target_labels())) {
        VertexMap back;
        for (const auto& [y, z] : f) back[z] = y;
        if (is_right_morphism(back, r2, r)) return kr == kr2;
    }
    return true;
}

}  // namespace dowker
