#include "k3bott/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace k3bott {

bool DivisorClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Int& c) { return c == 0; });
}

static void check_same_rank(const DivisorClass& a, const DivisorClass& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("divisor classes have different ranks");
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  check_same_rank(*this, o);
  DivisorClass r = *this;
  for (int i = 0; i < rank(); ++i) r.coords[i] += o.coords[i];
  return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
  check_same_rank(*this, o);
  DivisorClass r = *this;
  for (int i = 0; i < rank(); ++i) r.coords[i] -= o.coords[i];
  return r;
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

DivisorClass operator*(const Int& k, const DivisorClass& v) {
  DivisorClass r = v;
  for (auto& c : r.coords) c *= k;
  return r;
}

bool operator<(const DivisorClass& a, const DivisorClass& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(),
                                      b.coords.begin(), b.coords.end());
}

std::string DivisorClass::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < rank(); ++i) {
    if (i) os << ", ";
    os << coords[i];
  }
  os << ")";
  return os.str();
}

Int integer_determinant(std::vector<std::vector<Int>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) { p = i; break; }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

IntegralLattice::IntegralLattice(std::vector<std::vector<Int>> gram,
                                 std::vector<std::string> basis_labels)
    : gram_(std::move(gram)), labels_(std::move(basis_labels)) {
  rank_ = static_cast<int>(gram_.size());
  if (rank_ < 1) throw std::invalid_argument("lattice rank must be >= 1");
  for (const auto& row : gram_)
    if (static_cast<int>(row.size()) != rank_)
      throw std::invalid_argument("gram matrix is not square");
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      if (gram_[i][j] != gram_[j][i])
        throw std::invalid_argument("gram matrix is not symmetric");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != rank_)
    throw std::invalid_argument("basis_labels length does not match rank");
  det_ = integer_determinant(gram_);
  if (det_ == 0)
    throw std::invalid_argument("gram matrix is degenerate (determinant 0)");
}

IntegralLattice IntegralLattice::from_ints(
    const std::vector<std::vector<long long>>& gram,
    std::vector<std::string> basis_labels) {
  std::vector<std::vector<Int>> g;
  g.reserve(gram.size());
  for (const auto& row : gram) g.emplace_back(row.begin(), row.end());
  return IntegralLattice(std::move(g), std::move(basis_labels));
}

Int pairing(const IntegralLattice& lat, const DivisorClass& v,
            const DivisorClass& w) {
  if (v.rank() != lat.rank() || w.rank() != lat.rank())
    throw std::invalid_argument("divisor class rank does not match lattice");
  Int acc = 0;
  for (int i = 0; i < lat.rank(); ++i) {
    if (v.coords[i] == 0) continue;
    Int row = 0;
    for (int j = 0; j < lat.rank(); ++j) row += lat.gram(i, j) * w.coords[j];
    acc += v.coords[i] * row;
  }
  return acc;
}

Int self_intersection(const IntegralLattice& lat, const DivisorClass& v) {
  return pairing(lat, v, v);
}

std::vector<Int> gram_times(const IntegralLattice& lat, const DivisorClass& v) {
  if (v.rank() != lat.rank())
    throw std::invalid_argument("divisor class rank does not match lattice");
  std::vector<Int> out(lat.rank(), 0);
  for (int i = 0; i < lat.rank(); ++i)
    for (int j = 0; j < lat.rank(); ++j)
      out[i] += lat.gram(i, j) * v.coords[j];
  return out;
}

// Symmetric Gaussian elimination over Q. Zero pivots are repaired either by
// swapping in a later basis vector with nonzero square or, failing that, by
// the substitution e_k := e_k + e_j against an off-diagonal entry, which
// makes the new diagonal entry 2*m[k][j] != 0.
LatticeSignature signature(const IntegralLattice& lat) {
  const int n = lat.rank();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Rat(lat.gram(i, j));

  auto swap_basis = [&](int a, int b) {
    std::swap(m[a], m[b]);
    for (int i = 0; i < n; ++i) std::swap(m[i][a], m[i][b]);
  };
  auto add_basis = [&](int a, int b) {  // e_a := e_a + e_b
    for (int j = 0; j < n; ++j) m[a][j] += m[b][j];
    for (int i = 0; i < n; ++i) m[i][a] += m[i][b];
  };

  LatticeSignature sig;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      int diag = -1, off = -1;
      for (int j = k + 1; j < n && diag < 0; ++j)
        if (m[j][j] != 0) diag = j;
      for (int j = k + 1; j < n && off < 0; ++j)
        if (m[k][j] != 0) off = j;
      if (diag >= 0)
        swap_basis(k, diag);
      else if (off >= 0)
        add_basis(k, off);
      else
        throw std::invalid_argument("degenerate form in signature computation");
    }
    const Rat pivot = m[k][k];
    if (pivot > 0)
      ++sig.positives;
    else
      ++sig.negatives;
    for (int i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rat f = m[i][k] / pivot;
      for (int j = k + 1; j < n; ++j) m[i][j] -= f * m[k][j];
    }
    // row/column k is spent; clear it only after the whole block update
    for (int i = k + 1; i < n; ++i) {
      m[i][k] = 0;
      m[k][i] = 0;
    }
  }
  return sig;
}

bool is_primitive(const IntegralLattice& lat, const DivisorClass& v) {
  if (v.rank() != lat.rank())
    throw std::invalid_argument("divisor class rank does not match lattice");
  if (v.is_zero())
    throw std::invalid_argument("primitivity is undefined for the zero class");
  Int g = 0;
  for (const auto& c : v.coords) g = boost::multiprecision::gcd(g, c);
  return g == 1;
}

std::vector<std::string> validate_k3_lattice(const IntegralLattice& lat) {
  std::vector<std::string> violations;
  for (int i = 0; i < lat.rank(); ++i) {
    if (lat.gram(i, i) % 2 != 0) {
      std::ostringstream os;
      os << "odd lattice: gram[" << i << "][" << i << "] = " << lat.gram(i, i);
      violations.push_back(os.str());
    }
  }
  const LatticeSignature sig = signature(lat);
  if (sig != LatticeSignature{1, lat.rank() - 1}) {
    std::ostringstream os;
    os << "signature (" << sig.positives << ", " << sig.negatives
       << "), expected (1, " << lat.rank() - 1 << ")";
    violations.push_back(os.str());
  }
  return violations;
}

}  // namespace k3bott
