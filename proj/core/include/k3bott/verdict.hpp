#pragma once

// The decision engine for the vanishing of H^1(X, Omega^1_X ⊗ B) on a
// polarized K3 surface, assembled from exact lattice-level criteria:
// the Riemann-Roch obstruction below degree 20, the rank-one
// classification, the high-degree theorem for B^2 >= 74, and the analysis
// of low-degree elliptic pencils with their singular-fiber data.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k3bott/kodaira.hpp"
#include "k3bott/positivity.hpp"

namespace k3bott {

struct FiberCount {
  KodairaType type;
  int count = 0;
  bool operator==(const FiberCount&) const = default;
};

// A low-degree elliptic fibration: its fiber class E plus the multiset of
// Kodaira types of its singular fibers. Valid data satisfies:
//   - E is primitive, nef, isotropic;
//   - the s-degrees sum to 24 (the non-smooth subscheme has degree 24);
//   - each type has at most r = E.B components (so I_n needs n <= r,
//     III needs r >= 2, IV needs r >= 3; for r = 1 only I_1 and II).
struct FibrationData {
  DivisorClass fiber_class;
  std::vector<FiberCount> singular_fibers;
};

enum class VerdictStatus { Vanishes, Fails, Undetermined, NeedsFiberData };

std::string_view to_string(VerdictStatus s);
std::optional<VerdictStatus> verdict_status_from_string(std::string_view s);

struct Reason {
  std::string rule;      // id in the rule registry
  std::string citation;  // human-readable statement of the rule
  std::string witness;   // the data that triggered it
  bool operator==(const Reason&) const = default;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Undetermined;
  std::vector<Reason> reasons;  // never empty
  bool operator==(const Verdict&) const = default;
};

struct RuleInfo {
  std::string_view id;
  std::string_view citation;
};

// Every Reason must cite a rule implemented here.
const std::vector<RuleInfo>& rule_registry();
const RuleInfo* find_rule(std::string_view id);
Reason make_reason(std::string_view rule_id, std::string witness = "");

// chi(X, L) = 2 + L^2/2 for a line bundle on a K3 surface; equals h^0 for
// L nef and big. Throws on odd input.
Int euler_char_line_bundle(const Int& square);

// chi(X, Omega^1_X ⊗ B) = B^2 - 20. Throws on odd input.
Int euler_char_omega_twist(const Int& b_squared);

// Verdict for Pic(X) = Z*A with A^2 = degree > 0 and B = multiple * A.
Verdict rank_one_verdict(const Int& degree, const Int& multiple);

// Violations of the FibrationData invariants against r = E.B.
std::vector<std::string> validate_fibration(const PolarizedLattice& pol,
                                            const FibrationData& data);

// The full decision procedure. Supplied fibration data must match pencils
// found by find_low_degree_elliptic and satisfy the FibrationData
// invariants; otherwise this throws std::invalid_argument.
Verdict bott_verdict(const PolarizedLattice& pol,
                     const std::vector<FibrationData>& fibrations = {});

// H^1(X, Omega^1 ⊗ B) = 0 propagates to all positive multiples of B when B
// is basepoint-free.
struct MultiplesStatement {
  bool asserts_all_multiples = false;
  std::string note;
  std::optional<Reason> citation;
  bool operator==(const MultiplesStatement&) const = default;
};

MultiplesStatement propagate_multiples(const PolarizedLattice& pol,
                                       bool base_vanishes);

}  // namespace k3bott
