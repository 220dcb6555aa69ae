#include "k3bott/positivity.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace k3bott {

namespace {

std::string join_violations(const std::vector<PolarizationViolation>& vs) {
  std::ostringstream os;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) os << "; ";
    os << vs[i].message;
  }
  return os.str();
}

}  // namespace

std::vector<PolarizationViolation> validate_polarization(
    const IntegralLattice& lat, const DivisorClass& ample) {
  std::vector<PolarizationViolation> out;
  for (const auto& v : validate_k3_lattice(lat)) out.push_back({v, {}});
  if (!out.empty()) return out;

  if (ample.rank() != lat.rank()) {
    out.push_back({"ample class rank does not match lattice", {}});
    return out;
  }
  const Int b2 = self_intersection(lat, ample);
  if (b2 <= 0) {
    std::ostringstream os;
    os << "ample^2 = " << b2 << " is not positive";
    out.push_back({os.str(), {}});
    return out;
  }

  // Both wall searches are finite: degree window [0, 0].
  EnumerationQuery walls{Int(-2), Int(0), Int(0), ample, false};
  for (const auto& c : enumerate_classes(lat, walls)) {
    std::ostringstream os;
    os << "(-2)-class " << c.str() << " is orthogonal to the ample class";
    out.push_back({os.str(), c});
  }
  // Nonzero isotropic classes orthogonal to B cannot exist in signature
  // (1, rank-1); the search documents that the chamber condition holds.
  EnumerationQuery iso{Int(0), Int(0), Int(0), ample, false};
  for (const auto& e : enumerate_classes(lat, iso)) {
    std::ostringstream os;
    os << "isotropic class " << e.str() << " is orthogonal to the ample class";
    out.push_back({os.str(), e});
  }
  return out;
}

PolarizedLattice::PolarizedLattice(IntegralLattice lattice, DivisorClass ample)
    : lattice_(std::move(lattice)), ample_(std::move(ample)) {
  const auto violations = validate_polarization(lattice_, ample_);
  if (!violations.empty())
    throw std::invalid_argument("invalid polarization: " +
                                join_violations(violations));
  b2_ = self_intersection(lattice_, ample_);
}

Int minus_two_search_limit(const PolarizedLattice& pol, const DivisorClass& d) {
  const Int s = pairing(pol.lattice(), pol.ample(), d);
  const Int delta = self_intersection(pol.lattice(), d);
  if (s < 0 || delta < 0)
    throw std::invalid_argument(
        "search limit is defined for classes in the closed positive cone");
  const Int beta = pol.ample_square();
  const Int rhs = 2 * s * s - 2 * beta * delta - beta;
  auto admissible = [&](const Int& t) { return delta * t * t + 2 * s * t <= rhs; };
  if (!admissible(1)) return 0;
  if (delta == 0) return rhs / (2 * s);  // s > 0 here since admissible(1)
  // largest root of delta*t^2 + 2*s*t - rhs; the isqrt seed is within one.
  Int t = (-s + isqrt(s * s + delta * rhs)) / delta;
  while (admissible(t + 1)) ++t;
  while (t > 1 && !admissible(t)) --t;
  return t;
}

NefResult is_nef(const PolarizedLattice& pol, const DivisorClass& d) {
  if (d.rank() != pol.lattice().rank())
    throw std::invalid_argument("divisor class rank does not match lattice");
  if (d.is_zero()) return {true, {}, "zero class"};

  const Int s = pairing(pol.lattice(), pol.ample(), d);
  if (s < 0)
    return {false, pol.ample(),
            "negative degree against the ample class, which is effective"};
  const Int delta = self_intersection(pol.lattice(), d);
  if (delta < 0) {
    NefResult r{false, {}, "self-intersection is negative, so the class lies outside the closed positive cone"};
    if (delta == -2 && s > 0) r.obstruction = d;  // the class obstructs itself
    return r;
  }

  const Int limit = minus_two_search_limit(pol, d);
  if (limit >= 1) {
    EnumerationQuery walls{Int(-2), Int(1), limit, pol.ample(), false};
    for (const auto& c : enumerate_classes(pol.lattice(), walls)) {
      if (pairing(pol.lattice(), d, c) < 0) {
        std::ostringstream os;
        os << "pairs negatively with the effective (-2)-class " << c.str();
        return {false, c, os.str()};
      }
    }
  }
  // Effective isotropic classes never obstruct a class in the closed
  // positive cone; see minus_two_search_limit.
  return {true, {}, ""};
}

std::vector<EllipticPencil> find_low_degree_elliptic(const PolarizedLattice& pol,
                                                     const Int& max_degree) {
  std::vector<EllipticPencil> out;
  if (max_degree < 1) return out;
  EnumerationQuery query{Int(0), Int(1), max_degree, pol.ample(), true};
  for (const auto& e : enumerate_classes(pol.lattice(), query)) {
    if (!is_nef(pol, e).nef) continue;
    out.push_back({e, pairing(pol.lattice(), pol.ample(), e)});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const EllipticPencil& a, const EllipticPencil& b) {
                     return a.degree < b.degree;
                   });
  return out;
}

SaintDonatResult saint_donat_basepoint_free(const PolarizedLattice& pol) {
  const auto pencils = find_low_degree_elliptic(pol, Int(1));
  if (!pencils.empty()) {
    std::ostringstream os;
    os << "elliptic pencil " << pencils.front().fiber_class.str()
       << " has degree 1 against B";
    return {false, pencils.front().fiber_class, os.str()};
  }
  return {true, {}, "no elliptic pencil of degree 1"};
}

SaintDonatResult saint_donat_very_ample(const PolarizedLattice& pol) {
  if (pol.ample_square() < 4)
    throw std::invalid_argument("very-ampleness test requires B^2 >= 4");

  // (a) an elliptic pencil of degree 1 or 2
  const auto pencils = find_low_degree_elliptic(pol, Int(2));
  if (!pencils.empty()) {
    std::ostringstream os;
    os << "elliptic pencil " << pencils.front().fiber_class.str()
       << " has degree " << pencils.front().degree << " against B";
    return {false, pencils.front().fiber_class, os.str()};
  }

  // (b) B = 2E with E^2 = 2, checked by exact division of coordinates
  bool halves = true;
  DivisorClass half;
  for (const auto& c : pol.ample().coords) {
    if (c % 2 != 0) { halves = false; break; }
    half.coords.push_back(c / 2);
  }
  if (halves && self_intersection(pol.lattice(), half) == 2) {
    return {false, half, "B = 2E with E^2 = 2"};
  }
  return {true, {}, ""};
}

SaintDonatResult saint_donat_very_ample(const IntegralLattice& lat,
                                        const DivisorClass& nef_b) {
  if (self_intersection(lat, nef_b) < 4)
    throw std::invalid_argument("very-ampleness test requires B^2 >= 4");
  // (c) a (-2)-class orthogonal to B; possible here since nef_b need not
  // lie in an open chamber.
  EnumerationQuery walls{Int(-2), Int(0), Int(0), nef_b, false};
  for (const auto& c : enumerate_classes(lat, walls)) {
    std::ostringstream os;
    os << "(-2)-class " << c.str() << " has degree 0 against B";
    return {false, c, os.str()};
  }
  return saint_donat_very_ample(PolarizedLattice(lat, nef_b));
}

}  // namespace k3bott
