#pragma once

// Surface descriptions (JSON documents in, reports out) for the command
// line front end. The JSON report schema is documented in
// docs/report-schema.json and is stable; parse_report_json is an exact
// inverse of render_json.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "k3bott/verdict.hpp"

namespace k3bott {

// A malformed or semantically invalid input document. `field` names the
// offending part of the document.
class InputError : public std::runtime_error {
 public:
  InputError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct RankOneInput {
  Int degree;    // A^2, even and positive
  Int multiple;  // B = multiple * A
};

struct SurfaceSpec {
  std::optional<std::vector<std::vector<Int>>> gram;
  std::optional<std::vector<Int>> ample;
  std::optional<std::vector<Int>> line_bundle;  // defaults to ample
  std::vector<FibrationData> fibrations;
  std::optional<RankOneInput> rank_one;  // alternative to gram/ample
};

SurfaceSpec parse_surface_spec(const std::string& json_text);
SurfaceSpec load_surface_spec(const std::string& path);

struct ReportComputed {
  int rank = 0;
  LatticeSignature sig;
  Int b_squared;
  Int euler_line_bundle;
  Int euler_omega_twist;
  bool ample_primitive = false;
  std::vector<EllipticPencil> pencils;
  MultiplesStatement multiples;
  bool operator==(const ReportComputed&) const = default;
};

struct Report {
  Verdict verdict;
  ReportComputed computed;
  std::vector<std::string> warnings;
  bool operator==(const Report&) const = default;
};

// Full pipeline: lattice validation, polarization validation, verdict,
// propagation to multiples. Throws InputError on invalid input.
Report analyze(const SurfaceSpec& spec);

std::string render_text(const Report& report);
std::string render_json(const Report& report);
Report parse_report_json(const std::string& json_text);

// Vanishes -> 0, Fails -> 1, Undetermined / NeedsFiberData -> 2.
int exit_code(VerdictStatus status);
inline constexpr int kExitInputError = 64;

}  // namespace k3bott
