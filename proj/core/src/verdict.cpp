#include "k3bott/verdict.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace k3bott {

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Vanishes: return "vanishes";
    case VerdictStatus::Fails: return "fails";
    case VerdictStatus::Undetermined: return "undetermined";
    case VerdictStatus::NeedsFiberData: return "needs_fiber_data";
  }
  return "";
}

std::optional<VerdictStatus> verdict_status_from_string(std::string_view s) {
  if (s == "vanishes") return VerdictStatus::Vanishes;
  if (s == "fails") return VerdictStatus::Fails;
  if (s == "undetermined") return VerdictStatus::Undetermined;
  if (s == "needs_fiber_data") return VerdictStatus::NeedsFiberData;
  return std::nullopt;
}

const std::vector<RuleInfo>& rule_registry() {
  static const std::vector<RuleInfo> rules = {
      {"riemann-roch-under-20",
       "chi(X, Omega^1 ⊗ B) = B^2 - 20 is negative, so H^1(X, Omega^1 ⊗ B) "
       "is nonzero by Riemann-Roch."},
      {"rank-one-classification",
       "A polarized K3 surface of Picard rank one and degree 20 or at least "
       "24 satisfies full Bott vanishing; this covers every multiple of the "
       "generator."},
      {"rank-one-degree-22",
       "Every polarized K3 surface of degree 22 has H^1(X, Omega^1 ⊗ B) != 0: "
       "such surfaces are hyperplane sections of genus-12 Fano 3-folds, so "
       "the curve section does not determine the surface."},
      {"high-degree-no-pencil",
       "B^2 >= 74 with no elliptic pencil of degree at most 4 forces "
       "H^1(X, Omega^1 ⊗ B) = 0: the only remaining obstruction would be an "
       "anticanonical embedding into a Fano 3-fold, and Prokhorov's bound "
       "(-K_Y)^3 <= 72 rules it out."},
      {"degree-72-double-plane",
       "The degree-2 K3 double plane with B = 6A is an anticanonical section "
       "of the weighted projective space P(3,1,1,1) with (-K)^3 = 72, so "
       "H^1(X, Omega^1 ⊗ B) != 0."},
      {"fano-window",
       "20 <= B^2 <= 72 with no low-degree elliptic pencil: H^1(X, Omega^1 ⊗ "
       "B) != 0 exactly when X is an anticanonical section of a Fano 3-fold "
       "with isolated canonical Gorenstein singularities (a Noether-Lefschetz "
       "condition, bounded by Prokhorov's (-K_Y)^3 <= 72); not decided by "
       "the Picard lattice alone."},
      {"unigonal-cusp",
       "A degree-1 elliptic pencil with a type II (cuspidal) fiber gives "
       "H^1(X, Omega^1 ⊗ B) != 0 for every B^2."},
      {"unigonal-small",
       "A degree-1 elliptic pencil with B^2 <= 38: the 24 non-smooth points "
       "of the fibration cannot impose independent conditions on |B + 2E|, "
       "so H^1(X, Omega^1 ⊗ B) != 0."},
      {"unigonal-nodal-high-degree",
       "A degree-1 elliptic pencil with B^2 >= 40 and only nodal (type I_1) "
       "singular fibers gives H^1(X, Omega^1 ⊗ B) = 0 for this pencil."},
      {"pencil-bad-fiber",
       "An elliptic pencil of degree r with a fiber of type III (r = 2) or "
       "IV (r = 3): the non-smooth subscheme fails to impose independent "
       "conditions on |B + 2E|, so H^1(X, Omega^1 ⊗ B) != 0."},
      {"pencil-high-degree",
       "An elliptic pencil of degree r in {2,3,4} with B^2 >= 92 / 140 / 194 "
       "respectively and no fiber of type III (r = 2) or IV (r = 3) gives "
       "H^1(X, Omega^1 ⊗ B) = 0 for this pencil."},
      {"pencil-window-open",
       "This elliptic pencil has B^2 below the decided range, and the "
       "implemented criteria do not determine the vanishing."},
      {"needs-fiber-data",
       "The verdict depends on the Kodaira types of the singular fibers of "
       "this pencil, which are not determined by the Picard lattice."},
      {"known-lattice-degree-62",
       "The Gram matrix matches the rank-2 lattice [[2,5],[5,10]] of "
       "anticanonical K3 sections of P(O ⊕ O(2)) over P^2, where a primitive "
       "ample B of degree 62 has H^1(X, Omega^1 ⊗ B) != 0; the verdict for "
       "this input stays undetermined because the embedding is not a lattice "
       "invariant."},
      {"bpf-multiples",
       "B ample and basepoint-free with H^1(X, Omega^1 ⊗ B) = 0 implies "
       "H^1(X, Omega^1 ⊗ B^j) = 0 for all j >= 1."},
  };
  return rules;
}

const RuleInfo* find_rule(std::string_view id) {
  for (const auto& r : rule_registry())
    if (r.id == id) return &r;
  return nullptr;
}

Reason make_reason(std::string_view rule_id, std::string witness) {
  const RuleInfo* info = find_rule(rule_id);
  if (!info)
    throw std::logic_error("unknown rule id: " + std::string(rule_id));
  return Reason{std::string(info->id), std::string(info->citation),
                std::move(witness)};
}

Int euler_char_line_bundle(const Int& square) {
  if (square % 2 != 0)
    throw std::invalid_argument("L^2 must be even on a K3 surface");
  return 2 + square / 2;
}

Int euler_char_omega_twist(const Int& b_squared) {
  if (b_squared % 2 != 0)
    throw std::invalid_argument("B^2 must be even on a K3 surface");
  return b_squared - 20;
}

Verdict rank_one_verdict(const Int& degree, const Int& multiple) {
  if (degree <= 0 || degree % 2 != 0)
    throw std::invalid_argument("degree must be a positive even integer");
  if (multiple < 1)
    throw std::invalid_argument("multiple must be a positive integer");

  const Int b2 = multiple * multiple * degree;
  std::ostringstream w;
  w << "A^2 = " << degree << ", B = " << multiple << "A, B^2 = " << b2;

  if (degree == 20 || degree >= 24)
    return {VerdictStatus::Vanishes,
            {make_reason("rank-one-classification", w.str())}};

  // degree in {2,...,18} or 22 from here on
  if (multiple == 1) {
    if (degree == 22)
      return {VerdictStatus::Fails, {make_reason("rank-one-degree-22", w.str())}};
    return {VerdictStatus::Fails,
            {make_reason("riemann-roch-under-20", w.str())}};
  }
  if (b2 < 20)
    return {VerdictStatus::Fails,
            {make_reason("riemann-roch-under-20", w.str())}};
  if (degree == 2 && multiple == 6)
    return {VerdictStatus::Fails,
            {make_reason("degree-72-double-plane", w.str())}};
  if (b2 >= 74)
    return {VerdictStatus::Vanishes,
            {make_reason("high-degree-no-pencil",
                         w.str() + "; rank one, so no isotropic classes")}};
  std::ostringstream u;
  u << w.str() << "; Fano window [20, 72]";
  return {VerdictStatus::Undetermined, {make_reason("fano-window", u.str())}};
}

std::vector<std::string> validate_fibration(const PolarizedLattice& pol,
                                            const FibrationData& data) {
  std::vector<std::string> out;
  const auto& lat = pol.lattice();
  const auto& e = data.fiber_class;
  if (e.rank() != lat.rank()) {
    out.push_back("fiber_class rank does not match lattice");
    return out;
  }
  const Int e2 = self_intersection(lat, e);
  if (e2 != 0) {
    std::ostringstream os;
    os << "fiber_class " << e.str() << " has E^2 = " << e2 << ", expected 0";
    out.push_back(os.str());
  }
  if (e.is_zero() || !is_primitive(lat, e))
    out.push_back("fiber_class " + e.str() + " is not primitive");
  if (e2 == 0 && !e.is_zero()) {
    const auto nef = is_nef(pol, e);
    if (!nef.nef)
      out.push_back("fiber_class " + e.str() + " is not nef: " + nef.note);
  }
  if (!out.empty()) return out;

  const Int r = pairing(lat, pol.ample(), e);
  Int total = 0;
  for (const auto& [type, count] : data.singular_fibers) {
    if (count < 1) {
      out.push_back("fiber count for type " + type.str() +
                    " must be positive");
      continue;
    }
    total += Int(count) * type.s_degree();
    if (Int(type.component_count()) > r) {
      std::ostringstream os;
      os << "fiber type " << type.str() << " is inadmissible for a pencil of "
         << "degree " << r << ": a fiber has at most " << r
         << (r == 1 ? " component" : " components");
      out.push_back(os.str());
    }
  }
  if (total != 24) {
    std::ostringstream os;
    os << "total degree of the non-smooth subscheme is " << total
       << ", must be 24";
    out.push_back(os.str());
  }
  return out;
}

namespace {

bool has_fiber_type(const FibrationData& data, KodairaType::Kind kind) {
  return std::any_of(data.singular_fibers.begin(), data.singular_fibers.end(),
                     [&](const FiberCount& fc) {
                       return fc.type.kind() == kind && fc.count > 0;
                     });
}

enum class PencilOutcome { Fails, Vanishes, Undetermined, NeedsData };

struct PencilVerdict {
  PencilOutcome outcome;
  Reason reason;
};

PencilVerdict evaluate_pencil(const EllipticPencil& pencil, const Int& b2,
                              const FibrationData* data) {
  const long r = pencil.degree.convert_to<long>();  // r in [1, 4]
  std::ostringstream w;
  w << "E = " << pencil.fiber_class.str() << ", r = " << r
    << ", B^2 = " << b2;

  if (r == 1) {
    if (data && has_fiber_type(*data, KodairaType::Kind::II))
      return {PencilOutcome::Fails,
              make_reason("unigonal-cusp", w.str() + "; type II fiber present")};
    if (b2 <= 38)
      return {PencilOutcome::Fails, make_reason("unigonal-small", w.str())};
    if (data)
      return {PencilOutcome::Vanishes,
              make_reason("unigonal-nodal-high-degree", w.str())};
    return {PencilOutcome::NeedsData,
            make_reason("needs-fiber-data",
                        w.str() + "; a type II fiber would be decisive")};
  }

  if (r == 2 || r == 3) {
    const auto bad =
        r == 2 ? KodairaType::Kind::III : KodairaType::Kind::IV;
    const char* bad_name = r == 2 ? "III" : "IV";
    const Int threshold = r == 2 ? 92 : 140;
    if (data && has_fiber_type(*data, bad))
      return {PencilOutcome::Fails,
              make_reason("pencil-bad-fiber",
                          w.str() + "; type " + bad_name + " fiber present")};
    if (!data)
      return {PencilOutcome::NeedsData,
              make_reason("needs-fiber-data", w.str() + "; a type " +
                                                  bad_name +
                                                  " fiber would be decisive")};
    if (b2 >= threshold)
      return {PencilOutcome::Vanishes,
              make_reason("pencil-high-degree", w.str())};
    std::ostringstream u;
    u << w.str() << "; decided only for B^2 >= " << threshold;
    return {PencilOutcome::Undetermined,
            make_reason("pencil-window-open", u.str())};
  }

  // r == 4: no fiber type forces failure, so the data is never decisive.
  if (b2 >= 194)
    return {PencilOutcome::Vanishes,
            make_reason("pencil-high-degree",
                        w.str() + "; no failing fiber type for r = 4")};
  return {PencilOutcome::Undetermined,
          make_reason("pencil-window-open",
                      w.str() + "; decided only for B^2 >= 194")};
}

bool is_degree62_gram(const IntegralLattice& lat) {
  if (lat.rank() != 2) return false;
  return lat.gram(0, 0) == 2 && lat.gram(0, 1) == 5 && lat.gram(1, 0) == 5 &&
         lat.gram(1, 1) == 10;
}

}  // namespace

Verdict bott_verdict(const PolarizedLattice& pol,
                     const std::vector<FibrationData>& fibrations) {
  const Int b2 = pol.ample_square();

  if (b2 < 20) {
    std::ostringstream w;
    w << "B^2 = " << b2 << ", chi(Omega^1 ⊗ B) = " << b2 - 20;
    return {VerdictStatus::Fails, {make_reason("riemann-roch-under-20", w.str())}};
  }

  const auto pencils = find_low_degree_elliptic(pol, Int(4));

  // Attach supplied fiber data to the pencils it belongs to.
  std::vector<const FibrationData*> attached(pencils.size(), nullptr);
  for (const auto& data : fibrations) {
    const auto violations = validate_fibration(pol, data);
    if (!violations.empty()) {
      std::string msg = "invalid fibration data: ";
      for (size_t i = 0; i < violations.size(); ++i)
        msg += (i ? "; " : "") + violations[i];
      throw std::invalid_argument(msg);
    }
    bool matched = false;
    for (size_t i = 0; i < pencils.size(); ++i) {
      if (pencils[i].fiber_class == data.fiber_class) {
        if (attached[i])
          throw std::invalid_argument("duplicate fibration data for class " +
                                      data.fiber_class.str());
        attached[i] = &data;
        matched = true;
        break;
      }
    }
    if (!matched)
      throw std::invalid_argument(
          "fibration data for " + data.fiber_class.str() +
          " does not match any nef primitive isotropic class of degree <= 4");
  }

  if (pencils.empty()) {
    if (pol.lattice().rank() == 1) {
      Int k = pol.ample().coords[0];
      if (k < 0) k = -k;  // the generator can be taken ample
      return rank_one_verdict(pol.lattice().gram(0, 0), k);
    }
    if (b2 >= 74) {
      std::ostringstream w;
      w << "B^2 = " << b2 << " >= 74; no elliptic pencil of degree <= 4";
      return {VerdictStatus::Vanishes,
              {make_reason("high-degree-no-pencil", w.str())}};
    }
    std::ostringstream w;
    w << "B^2 = " << b2 << " in the Fano window [20, 72]";
    Verdict v{VerdictStatus::Undetermined, {make_reason("fano-window", w.str())}};
    if (is_degree62_gram(pol.lattice()))
      v.reasons.push_back(make_reason("known-lattice-degree-62",
                                      "gram = [[2,5],[5,10]], B^2 = " +
                                          b2.str()));
    return v;
  }

  std::vector<PencilVerdict> results;
  results.reserve(pencils.size());
  for (size_t i = 0; i < pencils.size(); ++i)
    results.push_back(evaluate_pencil(pencils[i], b2, attached[i]));

  const auto count = [&](PencilOutcome o) {
    return std::count_if(results.begin(), results.end(),
                         [&](const PencilVerdict& p) { return p.outcome == o; });
  };

  // Any failing pencil decides the question. Vanishing requires every
  // pencil to clear its own criterion; the theorems are per-fibration and
  // are not combined across pencils.
  if (count(PencilOutcome::Fails) > 0) {
    Verdict v{VerdictStatus::Fails, {}};
    for (const auto& p : results)
      if (p.outcome == PencilOutcome::Fails) v.reasons.push_back(p.reason);
    return v;
  }
  Verdict v;
  for (const auto& p : results) v.reasons.push_back(p.reason);
  if (count(PencilOutcome::Vanishes) == static_cast<long>(results.size()))
    v.status = VerdictStatus::Vanishes;
  else if (count(PencilOutcome::NeedsData) > 0)
    v.status = VerdictStatus::NeedsFiberData;
  else
    v.status = VerdictStatus::Undetermined;
  return v;
}

MultiplesStatement propagate_multiples(const PolarizedLattice& pol,
                                       bool base_vanishes) {
  if (!base_vanishes)
    return {false,
            "no claim: H^1(X, Omega^1 ⊗ B) = 0 is not established for the "
            "base bundle",
            std::nullopt};
  const auto bpf = saint_donat_basepoint_free(pol);
  if (!bpf.holds)
    return {false, "no claim: B is not basepoint-free (" + bpf.reason + ")",
            std::nullopt};
  return {true, "H^1(X, Omega^1 ⊗ B^j) = 0 for all j >= 1",
          make_reason("bpf-multiples")};
}

}  // namespace k3bott
