// The two Dowker complexes of a relation. K is spanned by column supports
// (sets of sources sharing a target witness), L by row supports; L of a
// relation is exactly K of its inverse.
#pragma once

#include <dowker/relation.hpp>
#include <dowker/simplicial.hpp>

#include <map>
#include <string>
#include <vector>

namespace dowker {

/// A Dowker complex together with one generating witness per maximal
/// simplex (a target whose column support is that simplex).
struct WitnessedComplex {
    SimplicialComplex complex;
    std::map<Simplex, std::string> witness;
};

inline WitnessedComplex dowker_K_witnessed(const Relation& r) {
    std::vector<Simplex> candidates;
    std::map<Simplex, std::string> generator;
    for (std::size_t j = 0; j < r.target_size(); ++j) {
        const BitRow col = r.column(j);
        if (col.none()) continue;  // empty columns span nothing
        std::vector<std::string> verts;
        for (std::size_t i = col.find_first(); i != BitRow::npos; i = col.find_next(i))
            verts.push_back(r.source_labels()[i]);
        Simplex s(verts);
        generator.emplace(s, r.target_labels()[j]);  // keep the first witness
        candidates.push_back(std::move(s));
    }
    WitnessedComplex out;
    out.complex = SimplicialComplex::from_maximal(candidates, r.source_labels());
    for (const auto& s : out.complex.maximal()) out.witness.emplace(s, generator.at(s));
    return out;
}

/// Simplices are sets of sources related to a common target.
inline SimplicialComplex dowker_K(const Relation& r) {
    return dowker_K_witnessed(r).complex;
}

inline WitnessedComplex dowker_L_witnessed(const Relation& r) {
    return dowker_K_witnessed(inverse(r));
}

/// Simplices are sets of targets related to a common source; equals
/// dowker_K(inverse(R)).
inline SimplicialComplex dowker_L(const Relation& r) {
    return dowker_K(inverse(r));
}

struct DualityReport {
    bool equal = false;
    BettiVector k_side;
    BettiVector l_side;
};

/// Machine-checkable consequence of Dowker duality: the two complexes have
/// equal homology ranks up to dim_cap.
inline DualityReport duality_check(const Relation& r, int dim_cap) {
    DualityReport report;
    report.k_side = betti_numbers(dowker_K(r), dim_cap);
    report.l_side = betti_numbers(dowker_L(r), dim_cap);
    report.equal = report.k_side == report.l_side;
    return report;
}

}  // namespace dowker
