#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "k3bott/positivity.hpp"
#include "support/generators.hpp"

using namespace k3bott;
using k3bott::testing::Rng;

namespace {

const IntegralLattice kU = IntegralLattice::from_ints({{0, 1}, {1, 0}});
const IntegralLattice kDeg62 = IntegralLattice::from_ints({{2, 5}, {5, 10}});
const IntegralLattice kUnigonal = IntegralLattice::from_ints({{-2, 1}, {1, 0}});

PolarizedLattice unigonal(long long m) {
  return PolarizedLattice(kUnigonal, DivisorClass{1, m});
}

// All effective (-2)- and isotropic classes of degree <= cap against B.
struct EffectiveClasses {
  std::vector<DivisorClass> minus_two;
  std::vector<DivisorClass> isotropic;
};

EffectiveClasses effective_classes(const PolarizedLattice& pol, long long cap) {
  EffectiveClasses out;
  out.minus_two = enumerate_classes(
      pol.lattice(), {Int(-2), Int(1), Int(cap), pol.ample(), false});
  out.isotropic = enumerate_classes(
      pol.lattice(), {Int(0), Int(1), Int(cap), pol.ample(), false});
  return out;
}

// Independent nefness check: same positive-cone gates, but a blunt
// degree-1000 search instead of the Cauchy-Schwarz window.
bool brute_nef(const PolarizedLattice& pol, const EffectiveClasses& classes,
               const DivisorClass& d) {
  if (d.is_zero()) return true;
  if (pairing(pol.lattice(), pol.ample(), d) < 0) return false;
  if (self_intersection(pol.lattice(), d) < 0) return false;
  for (const auto& c : classes.minus_two)
    if (pairing(pol.lattice(), d, c) < 0) return false;
  for (const auto& e : classes.isotropic)
    if (pairing(pol.lattice(), d, e) < 0) return false;
  return true;
}

}  // namespace

TEST_CASE("validate_polarization finds wall classes") {
  const auto bad = validate_polarization(kU, DivisorClass{1, 1});
  REQUIRE(bad.size() == 2);  // +-(1,-1) are both orthogonal to B
  REQUIRE(bad.front().witness.has_value());
  CHECK(self_intersection(kU, *bad.front().witness) == -2);
  CHECK(pairing(kU, *bad.front().witness, DivisorClass{1, 1}) == 0);

  CHECK(validate_polarization(kU, DivisorClass{1, 2}).empty());

  // B = B0 + 2E pairs to zero with the section B0
  const auto m2 = validate_polarization(kUnigonal, DivisorClass{1, 2});
  REQUIRE_FALSE(m2.empty());
  REQUIRE(m2.front().witness.has_value());
  // the wall search sees both signs of the section class B0
  CHECK((*m2.front().witness == DivisorClass{1, 0} ||
         *m2.front().witness == DivisorClass{-1, 0}));
  CHECK(validate_polarization(kUnigonal, DivisorClass{1, 3}).empty());
}

TEST_CASE("validate_polarization rejects non-K3 lattices and bad squares") {
  CHECK_FALSE(validate_polarization(IntegralLattice::from_ints({{1}}),
                                    DivisorClass{1})
                  .empty());  // odd
  const auto nonpos = validate_polarization(kU, DivisorClass{1, 0});
  REQUIRE_FALSE(nonpos.empty());
  CHECK(nonpos.front().message.find("not positive") != std::string::npos);
}

TEST_CASE("PolarizedLattice construction enforces the chamber condition") {
  CHECK_THROWS_AS(PolarizedLattice(kU, DivisorClass{1, 1}),
                  std::invalid_argument);
  CHECK_NOTHROW(PolarizedLattice(kU, DivisorClass{1, 2}));
}

TEST_CASE("is_nef on the unigonal lattice") {
  const auto pol = unigonal(21);
  CHECK(is_nef(pol, DivisorClass{0, 1}).nef);   // fiber class
  CHECK(is_nef(pol, DivisorClass{1, 21}).nef);  // B itself
  // B0 + E is isotropic and effective but crosses the wall B0
  const auto r = is_nef(pol, DivisorClass{1, 1});
  CHECK_FALSE(r.nef);
  REQUIRE(r.obstruction.has_value());
  CHECK(*r.obstruction == DivisorClass{1, 0});
}

TEST_CASE("is_nef certificate on U") {
  const PolarizedLattice pol(kU, DivisorClass{1, 2});
  const auto r = is_nef(pol, DivisorClass{1, 0});
  CHECK_FALSE(r.nef);
  REQUIRE(r.obstruction.has_value());
  CHECK(*r.obstruction == DivisorClass{1, -1});
  CHECK(pairing(kU, DivisorClass{1, 0}, *r.obstruction) < 0);
}

TEST_CASE("classes outside the closed positive cone are not nef") {
  // diag(2,-6) has no (-2)- or isotropic classes at all, so only the cone
  // gates can decide.
  const IntegralLattice lat = IntegralLattice::from_ints({{2, 0}, {0, -6}});
  const PolarizedLattice pol(lat, DivisorClass{1, 0});
  CHECK_FALSE(is_nef(pol, DivisorClass{0, 1}).nef);
  CHECK(is_nef(pol, DivisorClass{1, 0}).nef);
  // negative degree against B
  CHECK_FALSE(is_nef(pol, DivisorClass{-1, 0}).nef);
  // a (-2)-class obstructs itself
  const PolarizedLattice polu(kU, DivisorClass{1, 2});
  const auto r = is_nef(polu, DivisorClass{1, -1});
  CHECK_FALSE(r.nef);
  REQUIRE(r.obstruction.has_value());
  CHECK(*r.obstruction == DivisorClass{1, -1});
}

TEST_CASE("the (-2) search window is sound against a degree-1000 search") {
  const std::vector<PolarizedLattice> fixtures = {
      PolarizedLattice(kU, DivisorClass{1, 2}),
      unigonal(21),
      PolarizedLattice(kDeg62, DivisorClass{1, 2}),
      PolarizedLattice(IntegralLattice::from_ints({{0, 2}, {2, 0}}),
                       DivisorClass{1, 23}),
  };
  for (const auto& pol : fixtures) {
    const auto classes = effective_classes(pol, 1000);
    for (long long x = -6; x <= 6; ++x) {
      for (long long y = -6; y <= 6; ++y) {
        const DivisorClass d{x, y};
        if (pairing(pol.lattice(), pol.ample(), d) < 0) continue;
        if (self_intersection(pol.lattice(), d) < 0) continue;
        const Int limit = minus_two_search_limit(pol, d);
        for (const auto& c : classes.minus_two) {
          if (pairing(pol.lattice(), d, c) < 0) {
            // every violating class must lie inside the derived window
            CHECK(pairing(pol.lattice(), pol.ample(), c) <= limit);
          }
        }
        // the same estimate shows isotropic classes never violate
        for (const auto& e : classes.isotropic)
          CHECK(pairing(pol.lattice(), d, e) >= 0);
      }
    }
  }
}

TEST_CASE("is_nef agrees with the brute-force oracle on rank-2 fixtures") {
  const std::vector<PolarizedLattice> fixtures = {
      PolarizedLattice(kU, DivisorClass{1, 2}),
      unigonal(21),
      PolarizedLattice(kDeg62, DivisorClass{1, 2}),
  };
  for (const auto& pol : fixtures) {
    const auto classes = effective_classes(pol, 1000);
    for (long long x = -6; x <= 6; ++x)
      for (long long y = -6; y <= 6; ++y) {
        const DivisorClass d{x, y};
        CHECK(is_nef(pol, d).nef == brute_nef(pol, classes, d));
      }
  }
}

TEST_CASE("is_nef agrees with the brute-force oracle in rank 3") {
  const IntegralLattice lat =
      IntegralLattice::from_ints({{0, 1, 0}, {1, 0, 0}, {0, 0, -2}});
  const PolarizedLattice pol(lat, DivisorClass{3, 4, 1});
  const auto classes = effective_classes(pol, 400);
  for (long long x = -3; x <= 3; ++x)
    for (long long y = -3; y <= 3; ++y)
      for (long long z = -3; z <= 3; ++z) {
        const DivisorClass d{x, y, z};
        CHECK(is_nef(pol, d).nef == brute_nef(pol, classes, d));
      }
}

TEST_CASE("nef classes are closed under addition") {
  Rng rng(1234321);
  int found = 0;
  while (found < 40) {
    const auto lat = testing::random_hyperbolic_lattice(rng, 2, 7);
    DivisorClass b = testing::random_positive_class(rng, lat);
    if (!validate_polarization(lat, b).empty()) continue;
    const PolarizedLattice pol(lat, b);
    const auto d1 = testing::random_class(rng, 2, 6);
    const auto d2 = testing::random_class(rng, 2, 6);
    if (!is_nef(pol, d1).nef || !is_nef(pol, d2).nef) continue;
    CHECK(is_nef(pol, d1 + d2).nef);
    ++found;
  }
}

TEST_CASE("find_low_degree_elliptic") {
  for (long long a = 1; a <= 5; ++a) {
    const PolarizedLattice rank1(
        IntegralLattice::from_ints({{2 * a}}), DivisorClass{1});
    CHECK(find_low_degree_elliptic(rank1).empty());
  }
  const auto pencils = find_low_degree_elliptic(unigonal(21));
  REQUIRE(pencils.size() == 1);
  CHECK(pencils.front().fiber_class == DivisorClass{0, 1});
  CHECK(pencils.front().degree == 1);

  CHECK(find_low_degree_elliptic(PolarizedLattice(kDeg62, DivisorClass{1, 2}))
            .empty());
}

TEST_CASE("find_low_degree_elliptic returns nef primitive isotropic classes") {
  const std::vector<PolarizedLattice> fixtures = {
      PolarizedLattice(kU, DivisorClass{1, 2}),
      unigonal(21),
      unigonal(3),
      PolarizedLattice(IntegralLattice::from_ints({{0, 2}, {2, 0}}),
                       DivisorClass{1, 23}),
  };
  for (const auto& pol : fixtures) {
    Int last_degree = 0;
    for (const auto& p : find_low_degree_elliptic(pol)) {
      CHECK(self_intersection(pol.lattice(), p.fiber_class) == 0);
      CHECK(is_primitive(pol.lattice(), p.fiber_class));
      CHECK(is_nef(pol, p.fiber_class).nef);
      CHECK(p.degree == pairing(pol.lattice(), pol.ample(), p.fiber_class));
      CHECK(p.degree >= last_degree);  // sorted by degree
      last_degree = p.degree;
    }
  }
}

TEST_CASE("basepoint-freeness fails exactly on degree-1 pencils") {
  // rank one: always basepoint-free
  const PolarizedLattice rank1(IntegralLattice::from_ints({{24}}),
                               DivisorClass{1});
  CHECK(saint_donat_basepoint_free(rank1).holds);

  const auto uni = saint_donat_basepoint_free(unigonal(21));
  CHECK_FALSE(uni.holds);
  REQUIRE(uni.certificate.has_value());
  CHECK(*uni.certificate == DivisorClass{0, 1});

  const auto u = saint_donat_basepoint_free(PolarizedLattice(kU, DivisorClass{1, 2}));
  CHECK_FALSE(u.holds);
  CHECK(*u.certificate == DivisorClass{0, 1});

  // consistency with the pencil list
  const std::vector<PolarizedLattice> fixtures = {
      PolarizedLattice(kU, DivisorClass{1, 2}),
      unigonal(5),
      PolarizedLattice(kDeg62, DivisorClass{1, 2}),
      PolarizedLattice(IntegralLattice::from_ints({{0, 2}, {2, 0}}),
                       DivisorClass{1, 23}),
      rank1,
  };
  for (const auto& pol : fixtures) {
    const auto pencils = find_low_degree_elliptic(pol, Int(1));
    CHECK(saint_donat_basepoint_free(pol).holds == pencils.empty());
  }
}

TEST_CASE("very-ampleness") {
  // smooth quartic: rank one of degree 4
  CHECK(saint_donat_very_ample(
            PolarizedLattice(IntegralLattice::from_ints({{4}}), DivisorClass{1}))
            .holds);
  // B^2 < 4 is out of scope for the criterion
  CHECK_THROWS_AS(saint_donat_very_ample(PolarizedLattice(
                      IntegralLattice::from_ints({{2}}), DivisorClass{1})),
                  std::invalid_argument);
  // unigonal: a degree-1 pencil, case (a)
  const auto uni = saint_donat_very_ample(unigonal(21));
  CHECK_FALSE(uni.holds);
  CHECK(*uni.certificate == DivisorClass{0, 1});
  // hyperelliptic double cover: B = 2A with A^2 = 2, case (b)
  const auto dbl = saint_donat_very_ample(
      PolarizedLattice(IntegralLattice::from_ints({{2}}), DivisorClass{2}));
  CHECK_FALSE(dbl.holds);
  CHECK(*dbl.certificate == DivisorClass{1});
}

TEST_CASE("standalone very-ampleness sees wall classes") {
  // U + <-2>: B = (1,2,0) is nef with B^2 = 4 but orthogonal to the
  // (-2)-class (0,0,1), case (c)
  const IntegralLattice lat = IntegralLattice::from_ints(
      {{0, 1, 0}, {1, 0, 0}, {0, 0, -2}});
  const auto r = saint_donat_very_ample(lat, DivisorClass{1, 2, 0});
  CHECK_FALSE(r.holds);
  REQUIRE(r.certificate.has_value());
  CHECK(self_intersection(lat, *r.certificate) == -2);
  CHECK(pairing(lat, *r.certificate, DivisorClass{1, 2, 0}) == 0);
}

TEST_CASE("B is nef for every valid polarization") {
  Rng rng(999);
  int found = 0;
  while (found < 30) {
    const auto lat = testing::random_hyperbolic_lattice(rng, 2, 8);
    const auto b = testing::random_positive_class(rng, lat);
    if (!validate_polarization(lat, b).empty()) continue;
    const PolarizedLattice pol(lat, b);
    CHECK(is_nef(pol, b).nef);
    ++found;
  }
}
