#pragma once

// Enumeration of divisor classes with prescribed self-intersection and a
// bounded degree against a fixed positive class, in a lattice of signature
// (1, rank-1). Finiteness comes from the Hodge index theorem: the quadratic
// form A(v) = 2(v.B)^2 - B^2 * v^2 is positive definite, and the targets
// have A(v) = 2d^2 - B^2 * square for each degree d in the window.

#include <vector>

#include "k3bott/lattice.hpp"

namespace k3bott {

struct EnumerationQuery {
  Int square;          // target v^2
  Int degree_min;      // bounds on v.B, inclusive
  Int degree_max;
  DivisorClass reference;  // B, must have B^2 > 0
  bool primitive_only = false;
};

// Exactly the set { v != 0 : v^2 = square, degree_min <= v.B <= degree_max },
// sorted lexicographically. Throws if the lattice does not have signature
// (1, rank-1), if reference^2 <= 0, or if the degree window is empty.
std::vector<DivisorClass> enumerate_classes(const IntegralLattice& lat,
                                            const EnumerationQuery& query);

// Provable per-coordinate bound for the same solution set: every solution v
// has |v_i| <= bound. Derived from the definite majorant A above via
// (e_i . v)^2 <= (A^{-1})_ii * A(v), computed exactly from adj(A)/det(A).
Int required_box_bound(const IntegralLattice& lat,
                       const EnumerationQuery& query);

// Exhaustive coordinate search over [-box_bound, box_bound]^rank. Testing
// oracle for enumerate_classes; throws if box_bound is below the provable
// bound above.
std::vector<DivisorClass> brute_force_classes(const IntegralLattice& lat,
                                              const EnumerationQuery& query,
                                              const Int& box_bound);

}  // namespace k3bott
