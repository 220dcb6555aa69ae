#include "k3bott/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace k3bott {

namespace {

using nlohmann::json;

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
json int_to_json(const Int& x) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (x >= lo && x <= hi) return x.convert_to<std::int64_t>();
  return x.str();
}

Int int_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw InputError(field, "not a valid integer string");
    }
  }
  throw InputError(field, "expected an integer");
}

std::vector<Int> int_vector_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw InputError(field, "expected an array of integers");
  std::vector<Int> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(int_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

json int_vector_to_json(const std::vector<Int>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(int_to_json(x));
  return out;
}

FibrationData fibration_from_json(const json& j, const std::string& field) {
  if (!j.is_object()) throw InputError(field, "expected an object");
  FibrationData data;
  if (!j.contains("fiber_class"))
    throw InputError(field + ".fiber_class", "missing");
  data.fiber_class =
      DivisorClass(int_vector_from_json(j["fiber_class"], field + ".fiber_class"));
  if (!j.contains("singular_fibers"))
    throw InputError(field + ".singular_fibers", "missing");
  const json& fibers = j["singular_fibers"];
  if (!fibers.is_array())
    throw InputError(field + ".singular_fibers", "expected an array");
  for (size_t i = 0; i < fibers.size(); ++i) {
    const std::string ff =
        field + ".singular_fibers[" + std::to_string(i) + "]";
    const json& fc = fibers[i];
    if (!fc.is_object() || !fc.contains("type") || !fc.contains("count"))
      throw InputError(ff, "expected {type, count}");
    if (!fc["type"].is_string())
      throw InputError(ff + ".type", "expected a string");
    const auto type = KodairaType::parse(fc["type"].get<std::string>());
    if (!type)
      throw InputError(ff + ".type",
                       "unknown Kodaira type \"" +
                           fc["type"].get<std::string>() +
                           "\" (expected I1..I9, II, III, IV)");
    const Int count = int_from_json(fc["count"], ff + ".count");
    if (count < 1 || count > 24)
      throw InputError(ff + ".count", "must be in [1, 24]");
    data.singular_fibers.push_back({*type, count.convert_to<int>()});
  }
  return data;
}

}  // namespace

SurfaceSpec parse_surface_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError("document", e.what());
  }
  if (!j.is_object()) throw InputError("document", "expected a JSON object");

  static const std::vector<std::string> known = {
      "gram", "ample", "line_bundle", "fibrations", "rank_one", "comment"};
  for (const auto& [key, _] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw InputError(key, "unknown field");

  SurfaceSpec spec;
  if (j.contains("gram")) {
    if (!j["gram"].is_array()) throw InputError("gram", "expected a matrix");
    std::vector<std::vector<Int>> gram;
    for (size_t i = 0; i < j["gram"].size(); ++i)
      gram.push_back(int_vector_from_json(j["gram"][i],
                                          "gram[" + std::to_string(i) + "]"));
    spec.gram = std::move(gram);
  }
  if (j.contains("ample"))
    spec.ample = int_vector_from_json(j["ample"], "ample");
  if (j.contains("line_bundle"))
    spec.line_bundle = int_vector_from_json(j["line_bundle"], "line_bundle");
  if (j.contains("fibrations")) {
    if (!j["fibrations"].is_array())
      throw InputError("fibrations", "expected an array");
    for (size_t i = 0; i < j["fibrations"].size(); ++i)
      spec.fibrations.push_back(fibration_from_json(
          j["fibrations"][i], "fibrations[" + std::to_string(i) + "]"));
  }
  if (j.contains("rank_one")) {
    const json& r = j["rank_one"];
    if (!r.is_object() || !r.contains("degree") || !r.contains("multiple"))
      throw InputError("rank_one", "expected {degree, multiple}");
    spec.rank_one = RankOneInput{int_from_json(r["degree"], "rank_one.degree"),
                                 int_from_json(r["multiple"], "rank_one.multiple")};
  }
  return spec;
}

SurfaceSpec load_surface_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("document", "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_surface_spec(buf.str());
}

namespace {

struct ResolvedInput {
  IntegralLattice lattice;
  DivisorClass ample;
  DivisorClass line_bundle;
};

ResolvedInput resolve_input(const SurfaceSpec& spec) {
  const bool has_lattice = spec.gram.has_value() || spec.ample.has_value();
  if (spec.rank_one && has_lattice)
    throw InputError("rank_one",
                     "give either rank_one or gram/ample, not both");
  if (spec.rank_one) {
    const auto& r = *spec.rank_one;
    if (r.degree <= 0 || r.degree % 2 != 0)
      throw InputError("rank_one.degree", "must be a positive even integer");
    if (r.multiple < 1)
      throw InputError("rank_one.multiple", "must be a positive integer");
    IntegralLattice lat({{r.degree}}, {"A"});
    DivisorClass ample({1});
    DivisorClass bundle(std::vector<Int>{r.multiple});
    return {std::move(lat), std::move(ample), std::move(bundle)};
  }

  if (!spec.gram) throw InputError("gram", "missing");
  if (!spec.ample) throw InputError("ample", "missing");
  std::optional<IntegralLattice> lat;
  try {
    lat.emplace(*spec.gram);
  } catch (const std::invalid_argument& e) {
    throw InputError("gram", e.what());
  }
  const auto k3 = validate_k3_lattice(*lat);
  if (!k3.empty()) {
    std::string msg = "not a K3 Picard lattice: ";
    for (size_t i = 0; i < k3.size(); ++i) msg += (i ? "; " : "") + k3[i];
    throw InputError("gram", msg);
  }
  if (static_cast<int>(spec.ample->size()) != lat->rank())
    throw InputError("ample", "length does not match lattice rank");
  DivisorClass ample(*spec.ample);
  const auto pv = validate_polarization(*lat, ample);
  if (!pv.empty()) {
    std::string msg;
    for (size_t i = 0; i < pv.size(); ++i)
      msg += (i ? "; " : "") + pv[i].message;
    throw InputError("ample", msg);
  }
  DivisorClass bundle = ample;
  if (spec.line_bundle) {
    if (static_cast<int>(spec.line_bundle->size()) != lat->rank())
      throw InputError("line_bundle", "length does not match lattice rank");
    bundle = DivisorClass(*spec.line_bundle);
    if (bundle != ample) {
      const auto bv = validate_polarization(*lat, bundle);
      if (!bv.empty()) {
        std::string msg;
        for (size_t i = 0; i < bv.size(); ++i)
          msg += (i ? "; " : "") + bv[i].message;
        throw InputError("line_bundle", msg);
      }
      PolarizedLattice chamber(*lat, ample);
      if (pairing(*lat, ample, bundle) <= 0)
        throw InputError("line_bundle", "not in the chamber of the ample class");
      const auto nef = is_nef(chamber, bundle);
      if (!nef.nef)
        throw InputError("line_bundle", "not ample: " + nef.note);
    }
  }
  return {std::move(*lat), std::move(ample), std::move(bundle)};
}

bool gram_equals(const IntegralLattice& lat,
                 const std::vector<std::vector<long long>>& m) {
  if (lat.rank() != static_cast<int>(m.size())) return false;
  for (int i = 0; i < lat.rank(); ++i)
    for (int j = 0; j < lat.rank(); ++j)
      if (lat.gram(i, j) != m[i][j]) return false;
  return true;
}

}  // namespace

Report analyze(const SurfaceSpec& spec) {
  ResolvedInput in = resolve_input(spec);
  PolarizedLattice pol(in.lattice, in.line_bundle);

  Report report;
  report.computed.rank = in.lattice.rank();
  report.computed.sig = signature(in.lattice);
  report.computed.b_squared = pol.ample_square();
  report.computed.euler_line_bundle = euler_char_line_bundle(pol.ample_square());
  report.computed.euler_omega_twist = euler_char_omega_twist(pol.ample_square());
  report.computed.ample_primitive = is_primitive(in.lattice, in.line_bundle);
  report.computed.pencils = find_low_degree_elliptic(pol, Int(4));

  if (!report.computed.ample_primitive)
    report.warnings.push_back("the analyzed line bundle is not primitive");
  if (gram_equals(in.lattice, {{2, 5}, {5, 10}}))
    report.warnings.push_back(
        "Gram matrix matches the known degree-62 example lattice [[2,5],[5,10]]");
  if (gram_equals(in.lattice, {{-2, 1}, {1, 0}}))
    report.warnings.push_back(
        "Gram matrix matches the known unigonal example lattice [[-2,1],[1,0]]");

  try {
    report.verdict = bott_verdict(pol, spec.fibrations);
  } catch (const std::invalid_argument& e) {
    throw InputError("fibrations", e.what());
  }
  report.computed.multiples = propagate_multiples(
      pol, report.verdict.status == VerdictStatus::Vanishes);
  return report;
}

namespace {

json reason_to_json(const Reason& r) {
  return json{{"rule", r.rule}, {"citation", r.citation}, {"witness", r.witness}};
}

Reason reason_from_json(const json& j, const std::string& field) {
  if (!j.is_object() || !j.contains("rule") || !j.contains("citation") ||
      !j.contains("witness"))
    throw InputError(field, "expected {rule, citation, witness}");
  return Reason{j["rule"].get<std::string>(), j["citation"].get<std::string>(),
                j["witness"].get<std::string>()};
}

}  // namespace

std::string render_json(const Report& report) {
  json j;
  j["verdict"] = std::string(to_string(report.verdict.status));
  j["reasons"] = json::array();
  for (const auto& r : report.verdict.reasons)
    j["reasons"].push_back(reason_to_json(r));

  json c;
  c["rank"] = report.computed.rank;
  c["signature"] =
      json::array({report.computed.sig.positives, report.computed.sig.negatives});
  c["b_squared"] = int_to_json(report.computed.b_squared);
  c["euler_char_line_bundle"] = int_to_json(report.computed.euler_line_bundle);
  c["euler_char_omega_twist"] = int_to_json(report.computed.euler_omega_twist);
  c["ample_primitive"] = report.computed.ample_primitive;
  c["pencils"] = json::array();
  for (const auto& p : report.computed.pencils)
    c["pencils"].push_back(json{{"fiber_class", int_vector_to_json(p.fiber_class.coords)},
                                {"degree", int_to_json(p.degree)}});
  json m;
  m["asserts_all_multiples"] = report.computed.multiples.asserts_all_multiples;
  m["note"] = report.computed.multiples.note;
  m["citation"] = report.computed.multiples.citation
                      ? reason_to_json(*report.computed.multiples.citation)
                      : json(nullptr);
  c["multiples"] = m;
  j["computed"] = c;
  j["warnings"] = report.warnings;
  return j.dump(2) + "\n";
}

Report parse_report_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError("report", e.what());
  }
  Report report;
  const auto status = verdict_status_from_string(j.value("verdict", ""));
  if (!status) throw InputError("verdict", "unknown verdict status");
  report.verdict.status = *status;
  if (!j.contains("reasons") || !j["reasons"].is_array())
    throw InputError("reasons", "expected an array");
  for (size_t i = 0; i < j["reasons"].size(); ++i)
    report.verdict.reasons.push_back(reason_from_json(
        j["reasons"][i], "reasons[" + std::to_string(i) + "]"));

  if (!j.contains("computed") || !j["computed"].is_object())
    throw InputError("computed", "expected an object");
  const json& c = j["computed"];
  report.computed.rank = c.at("rank").get<int>();
  report.computed.sig = {c.at("signature").at(0).get<int>(),
                         c.at("signature").at(1).get<int>()};
  report.computed.b_squared = int_from_json(c.at("b_squared"), "b_squared");
  report.computed.euler_line_bundle =
      int_from_json(c.at("euler_char_line_bundle"), "euler_char_line_bundle");
  report.computed.euler_omega_twist =
      int_from_json(c.at("euler_char_omega_twist"), "euler_char_omega_twist");
  report.computed.ample_primitive = c.at("ample_primitive").get<bool>();
  for (size_t i = 0; i < c.at("pencils").size(); ++i) {
    const json& p = c.at("pencils")[i];
    const std::string field = "pencils[" + std::to_string(i) + "]";
    report.computed.pencils.push_back(
        {DivisorClass(int_vector_from_json(p.at("fiber_class"),
                                           field + ".fiber_class")),
         int_from_json(p.at("degree"), field + ".degree")});
  }
  const json& m = c.at("multiples");
  report.computed.multiples.asserts_all_multiples =
      m.at("asserts_all_multiples").get<bool>();
  report.computed.multiples.note = m.at("note").get<std::string>();
  if (!m.at("citation").is_null())
    report.computed.multiples.citation =
        reason_from_json(m.at("citation"), "multiples.citation");

  if (j.contains("warnings"))
    report.warnings = j["warnings"].get<std::vector<std::string>>();
  return report;
}

std::string render_text(const Report& report) {
  std::ostringstream os;
  os << "verdict: " << to_string(report.verdict.status) << "\n\n";
  os << "reasons:\n";
  for (const auto& r : report.verdict.reasons) {
    os << "  [" << r.rule << "]";
    if (!r.witness.empty()) os << " " << r.witness;
    os << "\n      " << r.citation << "\n";
  }
  const auto& c = report.computed;
  os << "\ncomputed:\n";
  os << "  rank " << c.rank << ", signature (" << c.sig.positives << ", "
     << c.sig.negatives << ")\n";
  os << "  B^2 = " << c.b_squared << "\n";
  os << "  chi(B) = " << c.euler_line_bundle
     << ", chi(Omega^1 ⊗ B) = " << c.euler_omega_twist << "\n";
  os << "  B primitive: " << (c.ample_primitive ? "yes" : "no") << "\n";
  if (c.pencils.empty()) {
    os << "  no elliptic pencils of degree <= 4\n";
  } else {
    os << "  elliptic pencils of degree <= 4:\n";
    for (const auto& p : c.pencils)
      os << "    E = " << p.fiber_class.str() << ", degree " << p.degree
         << "\n";
  }
  os << "  multiples: " << c.multiples.note << "\n";
  if (!report.warnings.empty()) {
    os << "\nwarnings:\n";
    for (const auto& w : report.warnings) os << "  - " << w << "\n";
  }
  return os.str();
}

int exit_code(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Vanishes: return 0;
    case VerdictStatus::Fails: return 1;
    case VerdictStatus::Undetermined:
    case VerdictStatus::NeedsFiberData: return 2;
  }
  return 2;
}

}  // namespace k3bott
