#pragma once

// Positivity tests against a fixed polarization B: chamber validation,
// nefness with certificates, detection of low-degree elliptic pencils, and
// the Saint-Donat basepoint-free / very-ample criteria.
//
// Effectivity convention: a (-2)-class C is deemed effective iff C.B > 0,
// an isotropic class e iff e.B > 0. On a K3 surface realizing the lattice
// with B ample this is forced by Riemann-Roch.

#include <optional>
#include <string>
#include <vector>

#include "k3bott/enumerate.hpp"
#include "k3bott/lattice.hpp"

namespace k3bott {

struct PolarizationViolation {
  std::string message;
  std::optional<DivisorClass> witness;
};

// Empty result means: lattice is K3-valid, ample^2 > 0, and no (-2)-class
// or nonzero isotropic class is orthogonal to ample (B lies in an open
// chamber of the positive cone).
std::vector<PolarizationViolation> validate_polarization(
    const IntegralLattice& lat, const DivisorClass& ample);

// A K3-valid lattice together with an ample class in an open chamber.
// The constructor enforces validate_k3_lattice and validate_polarization.
class PolarizedLattice {
 public:
  PolarizedLattice(IntegralLattice lattice, DivisorClass ample);

  const IntegralLattice& lattice() const { return lattice_; }
  const DivisorClass& ample() const { return ample_; }
  const Int& ample_square() const { return b2_; }

 private:
  IntegralLattice lattice_;
  DivisorClass ample_;
  Int b2_;
};

struct NefResult {
  bool nef = false;
  std::optional<DivisorClass> obstruction;  // effective class with D.C < 0
  std::string note;
  explicit operator bool() const { return nef; }
};

// Largest degree t = C.B of a (-2)-class C that could satisfy D.C < 0;
// 0 when no such class can exist. Requires D.B >= 0 and D^2 >= 0.
//
// Derivation: write beta = B^2, s = D.B, delta = D^2 and split C and D
// orthogonally against B. The complement is negative definite, so
// Cauchy-Schwarz gives D.C >= st/beta - sqrt((s^2/beta - delta)(t^2/beta + 2)).
// Since D.C is an integer, a violation means D.C <= -1, which after
// clearing denominators forces
//     delta*t^2 + 2*s*t <= 2*s^2 - 2*beta*delta - beta.
// For delta >= 0 the left side is increasing in t >= 0, so the admissible
// t are a finite initial segment. The same estimate with an isotropic class
// in place of C gives delta*t^2 + 2*s*t + beta <= 0, which is impossible:
// a class in the closed positive cone never pairs negatively with an
// effective isotropic class, so only (-2)-classes need to be searched.
Int minus_two_search_limit(const PolarizedLattice& pol, const DivisorClass& d);

// True iff D.C >= 0 for every effective (-2)-class and every effective
// isotropic class. Classes outside the closed positive cone (D.B < 0 or
// D^2 < 0) are never nef on a K3 surface and are rejected directly.
NefResult is_nef(const PolarizedLattice& pol, const DivisorClass& d);

struct EllipticPencil {
  DivisorClass fiber_class;
  Int degree;  // fiber_class . B
  bool operator==(const EllipticPencil&) const = default;
};

// All primitive nef isotropic classes E with 1 <= E.B <= max_degree: the
// fiber classes of the elliptic fibrations of low degree. Sorted by degree,
// then lexicographically.
std::vector<EllipticPencil> find_low_degree_elliptic(const PolarizedLattice& pol,
                                                     const Int& max_degree = 4);

struct SaintDonatResult {
  bool holds = false;
  std::optional<DivisorClass> certificate;
  std::string reason;
  explicit operator bool() const { return holds; }
};

// B is basepoint-free unless some nef isotropic E has E.B = 1.
SaintDonatResult saint_donat_basepoint_free(const PolarizedLattice& pol);

// B (with B^2 >= 4, else throws) is very ample unless (a) some nef
// isotropic E has E.B in {1,2}, or (b) B = 2E with E^2 = 2. The wall case
// (c) C^2 = -2, C.B = 0 cannot occur for a valid polarization.
SaintDonatResult saint_donat_very_ample(const PolarizedLattice& pol);

// Standalone variant for a raw pair: also searches for case (c).
SaintDonatResult saint_donat_very_ample(const IntegralLattice& lat,
                                        const DivisorClass& nef_b);

}  // namespace k3bott
