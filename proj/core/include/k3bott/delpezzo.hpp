#pragma once

// The cone machinery of del Pezzo surfaces of degree <= 7: the Picard
// lattice of the blow-up of P^2 in 9 - degree points, the finitely many
// (-1)-curves spanning the cone of curves, their dual graph, and the
// decomposition L = a(-K) + M of an ample class with M nef and of degree
// zero on a contracted (-1)-curve.

#include <vector>

#include "k3bott/lattice.hpp"

namespace k3bott {

// Basis (H, E_1, ..., E_{9-degree}); gram diag(1, -1, ..., -1); canonical
// class K = (-3, 1, ..., 1), so (-K)^2 = degree.
class DelPezzoLattice {
 public:
  explicit DelPezzoLattice(int degree);  // degree in [1, 7]

  int degree() const { return degree_; }
  const IntegralLattice& lattice() const { return lattice_; }
  const DivisorClass& canonical() const { return canonical_; }
  DivisorClass anticanonical() const { return -canonical_; }

 private:
  int degree_;
  IntegralLattice lattice_;
  DivisorClass canonical_;
};

// A class with C^2 = -1 and C.(-K) = 1.
struct MinusOneCurve {
  DivisorClass cls;
  bool operator==(const MinusOneCurve&) const = default;
};

// All (-1)-classes, sorted lexicographically. 10 in degree 5, 6 in
// degree 6, 3 in degree 7.
std::vector<MinusOneCurve> minus_one_curves(const DelPezzoLattice& dp);

struct DualGraph {
  std::vector<std::vector<int>> adjacency;   // neighbor index lists, sorted
  std::vector<std::pair<int, int>> edges;    // i < j

  int vertex_count() const { return static_cast<int>(adjacency.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool is_regular(int k) const;
  int girth() const;  // length of a shortest cycle; -1 if acyclic
  // 10 vertices, 3-regular, girth 5 characterizes the Petersen graph.
  bool is_petersen() const;
};

// Vertices = curves, edge iff pairing 1. Distinct (-1)-curves in degree
// >= 3 meet in 0 or 1 points; any other pairing throws (it would mean the
// input list is not a (-1)-curve list of such a surface).
DualGraph dual_graph(const DelPezzoLattice& dp,
                     const std::vector<MinusOneCurve>& curves);

// The cone-of-lines tests. Only degrees 5..7 are supported: there the cone
// of curves is spanned by the (-1)-curves and no (-2)-classes interfere.
bool dp_is_nef(const DelPezzoLattice& dp, const DivisorClass& l);
bool dp_is_ample(const DelPezzoLattice& dp, const DivisorClass& l);

struct AmpleDecomposition {
  Int min_line_degree;       // a = min over (-1)-curves of L.C
  DivisorClass nef_part;     // M = L - a(-K), nef
  MinusOneCurve contracted;  // lexicographically least line with M.C = 0
};

// L = a(-K) + M for ample L; throws if L is not ample.
AmpleDecomposition decompose_ample(const DelPezzoLattice& dp,
                                   const DivisorClass& l);

}  // namespace k3bott
