// Command line front end: analyze a surface description, enumerate divisor
// classes, or inspect the del Pezzo cone machinery.
//
// Exit codes for `analyze`: 0 = vanishes, 1 = fails, 2 = undetermined or
// needs fiber data, 64 = input error. Other subcommands: 0 or 64.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "k3bott/delpezzo.hpp"
#include "k3bott/io.hpp"

namespace {

using namespace k3bott;

// pretty-print a class in the lattice basis, e.g. "H - E1 - E2"
std::string symbolic(const IntegralLattice& lat, const DivisorClass& v) {
  if (lat.basis_labels().empty() || v.is_zero()) return v.str();
  std::string out;
  for (int i = 0; i < lat.rank(); ++i) {
    const Int& c = v.coords[i];
    if (c == 0) continue;
    const std::string label = lat.basis_labels()[i];
    if (out.empty()) {
      if (c == 1)
        out = label;
      else if (c == -1)
        out = "-" + label;
      else
        out = c.str() + label;
    } else {
      const Int a = c < 0 ? Int(-c) : c;
      out += (c < 0 ? " - " : " + ");
      out += (a == 1 ? label : a.str() + label);
    }
  }
  return out;
}

int run_analyze(const std::string& path, const std::string& format) {
  Report report;
  try {
    report = analyze(load_surface_spec(path));
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (format == "json")
    std::cout << render_json(report);
  else
    std::cout << render_text(report);
  return exit_code(report.verdict.status);
}

int run_enumerate(const std::string& path, long long square, long long dmin,
                  long long dmax, bool primitive) {
  SurfaceSpec spec;
  try {
    spec = load_surface_spec(path);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  try {
    if (!spec.gram || !spec.ample)
      throw std::invalid_argument("spec must provide gram and ample");
    IntegralLattice lat(*spec.gram);
    EnumerationQuery query{Int(square), Int(dmin), Int(dmax),
                           DivisorClass(*spec.ample), primitive};
    const auto classes = enumerate_classes(lat, query);
    for (const auto& v : classes) {
      std::cout << "class " << v.str() << "   square " << square << "   degree "
                << pairing(lat, v, query.reference) << "\n";
    }
    std::cout << "total: " << classes.size() << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int run_delpezzo(int degree) {
  if (degree < 5 || degree > 7) {
    std::cerr << "error: degree must be 5, 6, or 7\n";
    return kExitInputError;
  }
  const DelPezzoLattice dp(degree);
  const auto curves = minus_one_curves(dp);
  const auto graph = dual_graph(dp, curves);

  std::cout << "del Pezzo surface of degree " << degree << ": "
            << curves.size() << " (-1)-curves\n";
  for (size_t i = 0; i < curves.size(); ++i) {
    std::cout << "  [" << i << "] " << curves[i].cls.str() << "  =  "
              << symbolic(dp.lattice(), curves[i].cls) << "   (-K).C = "
              << pairing(dp.lattice(), dp.anticanonical(), curves[i].cls)
              << "\n";
  }
  std::cout << "dual graph adjacency:\n";
  for (int i = 0; i < graph.vertex_count(); ++i) {
    std::cout << "  [" << i << "]";
    for (int j : graph.adjacency[i]) std::cout << " " << j;
    std::cout << "\n";
  }
  std::cout << graph.vertex_count() << " vertices, " << graph.edge_count()
            << " edges, girth " << graph.girth() << "\n";
  if (degree == 5)
    std::cout << "Petersen: " << (graph.is_petersen() ? "yes" : "no") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bott vanishing decision engine for polarized K3 surface lattices"};
  app.require_subcommand(1);

  std::string path;
  std::string format = "text";
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "Decide whether H^1(X, Omega^1 ⊗ B) vanishes for a surface spec");
  analyze_cmd->add_option("file", path, "surface spec (JSON)")->required();
  analyze_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  long long square = 0, dmin = 0, dmax = 0;
  bool primitive = false;
  auto* enum_cmd = app.add_subcommand(
      "enumerate", "List divisor classes of given square and degree window");
  enum_cmd->add_option("file", path, "surface spec (JSON)")->required();
  enum_cmd->add_option("--square", square, "target self-intersection")->required();
  enum_cmd->add_option("--degree-min", dmin, "minimum degree against B")->required();
  enum_cmd->add_option("--degree-max", dmax, "maximum degree against B")->required();
  enum_cmd->add_flag("--primitive", primitive, "keep only primitive classes");

  int degree = 5;
  auto* dp_cmd = app.add_subcommand(
      "delpezzo", "List the (-1)-curves and dual graph of a del Pezzo surface");
  dp_cmd->add_option("--degree", degree, "degree of the del Pezzo surface (5..7)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : k3bott::kExitInputError;
  }

  if (analyze_cmd->parsed()) return run_analyze(path, format);
  if (enum_cmd->parsed()) return run_enumerate(path, square, dmin, dmax, primitive);
  if (dp_cmd->parsed()) return run_delpezzo(degree);
  return k3bott::kExitInputError;
}
