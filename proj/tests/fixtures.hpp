// Shared fixture relations used across the test suites.
#pragma once

#include <dowker/relation.hpp>

namespace fixtures {

using dowker::Relation;

// 4x5 relation whose Dowker complexes are a triangle-plus-point on the K
// side and a three-edge path on the L side.
inline Relation fix_a() {
    return Relation::from_matrix({{1, 0, 0, 0, 1},
                                  {0, 0, 1, 1, 0},
                                  {1, 0, 0, 0, 1},
                                  {1, 1, 0, 0, 0}});
}

// Strictly upper-triangular (nilpotent) 3x3 self-relation.
inline Relation fix_n() {
    return Relation::self_from_matrix({{0, 1, 1}, {0, 0, 1}, {0, 0, 0}});
}

// Cyclic permutation x1 -> x2 -> x3 -> x1.
inline Relation fix_c3() {
    return Relation::self_from_matrix({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
}

// All-ones 3x3 relation J.
inline Relation fix_j3() {
    return Relation::full({"x1", "x2", "x3"}, {"x1", "x2", "x3"});
}

// Identity on 3 vertices.
inline Relation fix_i3() {
    return Relation::identity({"x1", "x2", "x3"});
}

}  // namespace fixtures
