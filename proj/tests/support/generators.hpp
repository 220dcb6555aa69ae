#pragma once

// Shared randomized-input helpers for the test suite. Every generator takes
// an explicit engine, so runs are reproducible from their fixed seeds.

#include <random>
#include <vector>

#include "k3bott/lattice.hpp"

namespace k3bott::testing {

using Rng = std::mt19937_64;

inline long long rand_int(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

// Random symmetric integer matrix with entries in [-max_entry, max_entry],
// resampled until nondegenerate of signature (1, rank-1). With even = true
// the diagonal entries are forced even (the K3 case).
inline IntegralLattice random_hyperbolic_lattice(Rng& rng, int rank,
                                                 long long max_entry,
                                                 bool even = false) {
  while (true) {
    std::vector<std::vector<Int>> g(rank, std::vector<Int>(rank));
    for (int i = 0; i < rank; ++i)
      for (int j = i; j < rank; ++j)
        g[i][j] = g[j][i] = rand_int(rng, -max_entry, max_entry);
    if (even)
      for (int i = 0; i < rank; ++i)
        if (g[i][i] % 2 != 0) g[i][i] += g[i][i] > 0 ? -1 : 1;
    try {
      IntegralLattice lat(std::move(g));
      if (signature(lat) == LatticeSignature{1, rank - 1}) return lat;
    } catch (const std::invalid_argument&) {
      // degenerate draw, resample
    }
  }
}

inline DivisorClass random_class(Rng& rng, int rank, long long box) {
  std::vector<Int> coords;
  for (int i = 0; i < rank; ++i) coords.emplace_back(rand_int(rng, -box, box));
  return DivisorClass(std::move(coords));
}

// Random class with positive self-intersection.
inline DivisorClass random_positive_class(Rng& rng, const IntegralLattice& lat,
                                          long long box = 4) {
  while (true) {
    DivisorClass v = random_class(rng, lat.rank(), box);
    if (self_intersection(lat, v) > 0) return v;
  }
}

// Random unimodular integer matrix: a product of shears, swaps, and sign
// flips of the identity.
inline std::vector<std::vector<Int>> random_unimodular(Rng& rng, int n,
                                                       int steps = 12) {
  std::vector<std::vector<Int>> t(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) t[i][i] = 1;
  for (int s = 0; s < steps; ++s) {
    const int i = static_cast<int>(rand_int(rng, 0, n - 1));
    int j = static_cast<int>(rand_int(rng, 0, n - 1));
    switch (rand_int(rng, 0, 2)) {
      case 0: {  // column shear: col_i += k * col_j
        if (i == j) j = (j + 1) % n;
        const Int k = rand_int(rng, -3, 3);
        for (int r = 0; r < n; ++r) t[r][i] += k * t[r][j];
        break;
      }
      case 1:  // column swap
        for (int r = 0; r < n; ++r) std::swap(t[r][i], t[r][j]);
        break;
      default:  // sign flip
        for (int r = 0; r < n; ++r) t[r][i] = -t[r][i];
    }
  }
  return t;
}

// Congruent lattice T^T G T for unimodular T.
inline IntegralLattice transformed_lattice(
    const IntegralLattice& lat, const std::vector<std::vector<Int>>& t) {
  const int n = lat.rank();
  std::vector<std::vector<Int>> gt(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) gt[i][j] += lat.gram(i, k) * t[k][j];
  std::vector<std::vector<Int>> out(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out[i][j] += t[k][i] * gt[k][j];
  return IntegralLattice(std::move(out));
}

}  // namespace k3bott::testing
