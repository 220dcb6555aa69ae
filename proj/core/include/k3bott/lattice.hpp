#pragma once

// Integral lattices (symmetric bilinear forms over Z) and divisor classes.
// A Picard lattice of a K3 surface is an even nondegenerate lattice of
// signature (1, rank-1); del Pezzo lattices are odd. Both live here.

#include <initializer_list>
#include <string>
#include <vector>

#include "k3bott/integers.hpp"

namespace k3bott {

// Integer coordinate vector in a fixed lattice basis.
struct DivisorClass {
  std::vector<Int> coords;

  DivisorClass() = default;
  explicit DivisorClass(std::vector<Int> c) : coords(std::move(c)) {}
  DivisorClass(std::initializer_list<long long> c) {
    coords.assign(c.begin(), c.end());
  }

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;

  bool operator==(const DivisorClass&) const = default;

  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass operator-() const;

  std::string str() const;  // "(a, b, ...)"
};

// Lexicographic on coordinates; the deterministic order used for output.
bool operator<(const DivisorClass& a, const DivisorClass& b);

DivisorClass operator*(const Int& k, const DivisorClass& v);

struct LatticeSignature {
  int positives = 0;
  int negatives = 0;
  bool operator==(const LatticeSignature&) const = default;
};

// Nondegenerate symmetric bilinear form on Z^rank given by its Gram matrix.
// Immutable after construction; the constructor rejects non-symmetric,
// empty, or degenerate input.
class IntegralLattice {
 public:
  explicit IntegralLattice(std::vector<std::vector<Int>> gram,
                           std::vector<std::string> basis_labels = {});

  static IntegralLattice from_ints(
      const std::vector<std::vector<long long>>& gram,
      std::vector<std::string> basis_labels = {});

  int rank() const { return rank_; }
  const std::vector<std::vector<Int>>& gram() const { return gram_; }
  const Int& gram(int i, int j) const { return gram_[i][j]; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const Int& determinant() const { return det_; }

 private:
  int rank_ = 0;
  std::vector<std::vector<Int>> gram_;
  std::vector<std::string> labels_;
  Int det_;
};

// v^T * gram * w; symmetric and bilinear.
Int pairing(const IntegralLattice& lat, const DivisorClass& v,
            const DivisorClass& w);

Int self_intersection(const IntegralLattice& lat, const DivisorClass& v);

// gram * v, the linear functional w |-> v.w as an integer covector.
std::vector<Int> gram_times(const IntegralLattice& lat, const DivisorClass& v);

// Sylvester signature by exact rational congruence diagonalization.
LatticeSignature signature(const IntegralLattice& lat);

// gcd of the coordinates is 1. Rejects the zero vector.
bool is_primitive(const IntegralLattice& lat, const DivisorClass& v);

// Empty result means the lattice is an even lattice of signature
// (1, rank-1), i.e. a candidate K3 Picard lattice.
std::vector<std::string> validate_k3_lattice(const IntegralLattice& lat);

// Bareiss fraction-free determinant of a square integer matrix.
Int integer_determinant(std::vector<std::vector<Int>> m);

}  // namespace k3bott
