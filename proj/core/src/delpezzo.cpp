#include "k3bott/delpezzo.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "k3bott/enumerate.hpp"

namespace k3bott {

namespace {

IntegralLattice make_dp_lattice(int degree) {
  const int n = 10 - degree;
  std::vector<std::vector<Int>> gram(n, std::vector<Int>(n, 0));
  gram[0][0] = 1;
  for (int i = 1; i < n; ++i) gram[i][i] = -1;
  std::vector<std::string> labels{"H"};
  for (int i = 1; i < n; ++i) labels.push_back("E" + std::to_string(i));
  return IntegralLattice(std::move(gram), std::move(labels));
}

DivisorClass make_canonical(int rank) {
  DivisorClass k;
  k.coords.assign(rank, 1);
  k.coords[0] = -3;
  return k;
}

void check_cone_degree(const DelPezzoLattice& dp) {
  if (dp.degree() < 5)
    throw std::domain_error(
        "cone-of-lines positivity tests are supported for degrees 5..7");
}

}  // namespace

DelPezzoLattice::DelPezzoLattice(int degree)
    : degree_(degree),
      lattice_(make_dp_lattice((degree >= 1 && degree <= 7)
                                   ? degree
                                   : throw std::invalid_argument(
                                         "del Pezzo degree must be in [1, 7]"))),
      canonical_(make_canonical(10 - degree)) {}

std::vector<MinusOneCurve> minus_one_curves(const DelPezzoLattice& dp) {
  // (-K)^2 = degree > 0, signature (1, rank-1): the enumeration engine for
  // K3 lattices applies verbatim to these odd lattices.
  EnumerationQuery query{Int(-1), Int(1), Int(1), dp.anticanonical(), false};
  std::vector<MinusOneCurve> out;
  for (auto& cls : enumerate_classes(dp.lattice(), query))
    out.push_back({std::move(cls)});
  return out;
}

bool DualGraph::is_regular(int k) const {
  return std::all_of(adjacency.begin(), adjacency.end(),
                     [&](const auto& nbrs) {
                       return static_cast<int>(nbrs.size()) == k;
                     });
}

// shortest cycle through each start vertex by BFS; fine at these sizes
int DualGraph::girth() const {
  const int n = vertex_count();
  int best = std::numeric_limits<int>::max();
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adjacency[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (v != parent[u]) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? -1 : best;
}

bool DualGraph::is_petersen() const {
  return vertex_count() == 10 && edge_count() == 15 && is_regular(3) &&
         girth() == 5;
}

DualGraph dual_graph(const DelPezzoLattice& dp,
                     const std::vector<MinusOneCurve>& curves) {
  const int n = static_cast<int>(curves.size());
  DualGraph g;
  g.adjacency.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Int p = pairing(dp.lattice(), curves[i].cls, curves[j].cls);
      if (p == 0) continue;
      if (p != 1) {
        std::ostringstream os;
        os << "curves " << curves[i].cls.str() << " and " << curves[j].cls.str()
           << " pair to " << p << "; distinct (-1)-curves meet in 0 or 1 points";
        throw std::logic_error(os.str());
      }
      g.adjacency[i].push_back(j);
      g.adjacency[j].push_back(i);
      g.edges.emplace_back(i, j);
    }
  }
  return g;
}

bool dp_is_nef(const DelPezzoLattice& dp, const DivisorClass& l) {
  check_cone_degree(dp);
  for (const auto& c : minus_one_curves(dp))
    if (pairing(dp.lattice(), l, c.cls) < 0) return false;
  return true;
}

bool dp_is_ample(const DelPezzoLattice& dp, const DivisorClass& l) {
  check_cone_degree(dp);
  for (const auto& c : minus_one_curves(dp))
    if (pairing(dp.lattice(), l, c.cls) <= 0) return false;
  return true;
}

AmpleDecomposition decompose_ample(const DelPezzoLattice& dp,
                                   const DivisorClass& l) {
  check_cone_degree(dp);
  const auto curves = minus_one_curves(dp);

  bool have_min = false;
  Int a;
  const MinusOneCurve* contracted = nullptr;
  for (const auto& c : curves) {
    const Int deg = pairing(dp.lattice(), l, c.cls);
    if (deg <= 0) throw std::invalid_argument("class is not ample: degree " +
                                              deg.str() + " on " + c.cls.str());
    if (!have_min || deg < a) {
      have_min = true;
      a = deg;
      contracted = &c;  // curves are sorted, so the first hit is lex-least
    }
  }

  AmpleDecomposition out;
  out.min_line_degree = a;
  out.nef_part = l - a * dp.anticanonical();
  out.contracted = *contracted;
  return out;
}

}  // namespace k3bott
