#include "k3bott/enumerate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace k3bott {

namespace {

void check_query(const IntegralLattice& lat, const EnumerationQuery& query) {
  if (query.reference.rank() != lat.rank())
    throw std::invalid_argument("reference class rank does not match lattice");
  if (query.degree_min > query.degree_max)
    throw std::invalid_argument("degree_min must be <= degree_max");
  if (signature(lat) != LatticeSignature{1, lat.rank() - 1})
    throw std::invalid_argument("enumeration needs signature (1, rank-1)");
  if (self_intersection(lat, query.reference) <= 0)
    throw std::invalid_argument(
        "reference class must have positive self-intersection");
}

struct UduDecomposition {
  std::vector<Rat> d;               // positive diagonal
  std::vector<std::vector<Rat>> u;  // unit upper triangular
};

// A = U^T D U, so q_A(x) = sum_i d_i * (x_i + sum_{j>i} u_ij x_j)^2.
UduDecomposition udu_decompose(const std::vector<std::vector<Int>>& a) {
  const int n = static_cast<int>(a.size());
  UduDecomposition out;
  out.d.assign(n, Rat(0));
  out.u.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) out.u[i][i] = 1;
  for (int i = 0; i < n; ++i) {
    Rat di = Rat(a[i][i]);
    for (int k = 0; k < i; ++k) di -= out.d[k] * out.u[k][i] * out.u[k][i];
    if (di <= 0)
      throw std::logic_error("form is not positive definite");
    out.d[i] = di;
    for (int j = i + 1; j < n; ++j) {
      Rat uij = Rat(a[i][j]);
      for (int k = 0; k < i; ++k) uij -= out.d[k] * out.u[k][i] * out.u[k][j];
      out.u[i][j] = uij / di;
    }
  }
  return out;
}

// All integer x with (x + c)^2 <= t, t >= 0. The isqrt seed is within one
// of the true endpoint; the exact loops fix it up.
void quadratic_range(const Rat& c, const Rat& t, Int& lo, Int& hi) {
  const Int root = floor_sqrt(t);
  hi = floor_rat(-c) + root;
  while (Rat(hi + 1) + c <= 0 || (Rat(hi + 1) + c) * (Rat(hi + 1) + c) <= t)
    ++hi;
  while (Rat(hi) + c > 0 && (Rat(hi) + c) * (Rat(hi) + c) > t) --hi;
  lo = ceil_rat(-c) - root;
  while (Rat(lo - 1) + c >= 0 || (Rat(lo - 1) + c) * (Rat(lo - 1) + c) <= t)
    --lo;
  while (Rat(lo) + c < 0 && (Rat(lo) + c) * (Rat(lo) + c) > t) ++lo;
}

// All t in Z^m with q(t - s) == target, q positive definite in UDU form.
// Descending recursion; every bound is an exact rational comparison.
void fp_shifted(const UduDecomposition& udu, const std::vector<Rat>& s,
                int level, std::vector<Int>& t, const Rat& remaining,
                std::vector<std::vector<Int>>& out) {
  if (level < 0) {
    if (remaining == 0) out.push_back(t);
    return;
  }
  Rat c = -s[level];
  const int m = static_cast<int>(t.size());
  for (int j = level + 1; j < m; ++j)
    c += udu.u[level][j] * (Rat(t[j]) - s[j]);
  Int lo, hi;
  quadratic_range(c, remaining / udu.d[level], lo, hi);
  for (Int x = lo; x <= hi; ++x) {
    const Rat term = udu.d[level] * (Rat(x) + c) * (Rat(x) + c);
    if (term > remaining) continue;
    t[static_cast<size_t>(level)] = x;
    fp_shifted(udu, s, level - 1, t, remaining - term, out);
  }
}

Int coords_gcd(const DivisorClass& v) {
  Int g = 0;
  for (const auto& c : v.coords) g = boost::multiprecision::gcd(g, c);
  return g;
}

Int dot(const std::vector<Int>& w, const std::vector<Int>& v) {
  Int acc = 0;
  for (size_t i = 0; i < w.size(); ++i) acc += w[i] * v[i];
  return acc;
}

// Per-degree solver. The degree constraint v.B = d is linear with integer
// covector w = G*B; a unimodular column reduction turns w into (g, 0, .., 0),
// giving a particular solution direction y (w.y = g) and a full basis of the
// kernel sublattice, which is exactly the G-orthogonal complement of B and
// hence negative definite. On the solution coset v = (d/g) y + U t the
// equation v^2 = square becomes q(t - s) = rho for the positive definite
// form q = -U^T G U, solved by bounded enumeration.
class DegreeSolver {
 public:
  DegreeSolver(const IntegralLattice& lat, const DivisorClass& reference)
      : n_(lat.rank()) {
    const std::vector<Int> w = gram_times(lat, reference);

    std::vector<std::vector<Int>> cols(n_, std::vector<Int>(n_, 0));
    for (int i = 0; i < n_; ++i) cols[i][i] = 1;
    std::vector<Int> a = w;
    for (int i = 1; i < n_; ++i) {
      if (a[i] == 0) continue;
      // extended euclid on (a[0], a[i]), applied to the tracking columns
      Int old_r = a[0], r = a[i];
      Int old_s = 1, s = 0;
      Int old_t = 0, tt = 1;
      while (r != 0) {
        const Int q = old_r / r;  // truncated division keeps the identity
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * tt; old_t = tt; tt = tmp;
      }
      // old_s * a[0] + old_t * a[i] = old_r = gcd
      std::vector<Int> c0(n_), ci(n_);
      for (int k = 0; k < n_; ++k) {
        c0[k] = old_s * cols[0][k] + old_t * cols[i][k];
        ci[k] = (a[0] / old_r) * cols[i][k] - (a[i] / old_r) * cols[0][k];
      }
      cols[0] = std::move(c0);
      cols[i] = std::move(ci);
      a[0] = old_r;
      a[i] = 0;
    }
    g_ = a[0] < 0 ? Int(-a[0]) : a[0];
    if (a[0] < 0)
      for (auto& x : cols[0]) x = -x;
    y_ = cols[0];
    kernel_.assign(cols.begin() + 1, cols.end());

    // q = -U^T G U and the couplings needed per degree
    const int m = n_ - 1;
    std::vector<std::vector<Int>> gu(m);
    for (int j = 0; j < m; ++j)
      gu[j] = gram_times(lat, DivisorClass(kernel_[j]));
    std::vector<std::vector<Int>> q(m, std::vector<Int>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) q[i][j] = -dot(gu[i], kernel_[j]);
    if (m > 0) udu_ = udu_decompose(q);  // positive definite by Hodge index
    q_ = std::move(q);
    std::vector<Int> utgy(m, Int(0));
    for (int j = 0; j < m; ++j) utgy[j] = dot(gu[j], y_);
    y2_ = pairing(lat, DivisorClass(y_), DivisorClass(y_));

    // The completed-square center for degree d is (d/g) * s1, and the radius
    // is (d/g)^2 * rho1 - square, both linear in the solved base case
    // q s1 = U^T G y.
    if (m > 0) {
      std::vector<Rat> b(m);
      for (int j = 0; j < m; ++j) b[j] = Rat(utgy[j]);
      s1_ = solve_spd(b);
      rho1_ = Rat(y2_);
      for (int j = 0; j < m; ++j) rho1_ += b[j] * s1_[j];
    }
  }

  // all v with v.B == d and v^2 == square, unsorted
  void solve(const Int& d, const Int& square,
             std::vector<DivisorClass>& out) const {
    if (d % g_ != 0) return;
    const Int k = d / g_;
    const int m = n_ - 1;

    std::vector<Int> v0(n_);
    for (int i = 0; i < n_; ++i) v0[i] = k * y_[i];

    if (m == 0) {
      if (k != 0 && k * k * y2_ == square) out.emplace_back(v0);
      return;
    }

    std::vector<Rat> s(m);
    for (int j = 0; j < m; ++j) s[j] = Rat(k) * s1_[j];
    const Rat rho = Rat(k * k) * rho1_ - Rat(square);
    if (rho < 0) return;

    std::vector<std::vector<Int>> ts;
    std::vector<Int> t(m, 0);
    fp_shifted(udu_, s, m - 1, t, rho, ts);
    for (const auto& sol : ts) {
      std::vector<Int> v = v0;
      for (int j = 0; j < m; ++j)
        for (int i = 0; i < n_; ++i) v[i] += sol[j] * kernel_[j][i];
      DivisorClass cls(std::move(v));
      if (cls.is_zero()) continue;
      out.push_back(std::move(cls));
    }
  }

 private:
  // solve q x = b for the positive definite q, by rational elimination
  std::vector<Rat> solve_spd(const std::vector<Rat>& b) const {
    const int m = static_cast<int>(b.size());
    std::vector<std::vector<Rat>> aug(m, std::vector<Rat>(m + 1));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) aug[i][j] = Rat(q_[i][j]);
      aug[i][m] = b[i];
    }
    for (int col = 0; col < m; ++col) {
      int piv = col;
      while (aug[piv][col] == 0) ++piv;  // q is nonsingular
      std::swap(aug[col], aug[piv]);
      for (int i = 0; i < m; ++i) {
        if (i == col || aug[i][col] == 0) continue;
        const Rat f = aug[i][col] / aug[col][col];
        for (int j = col; j <= m; ++j) aug[i][j] -= f * aug[col][j];
      }
    }
    std::vector<Rat> x(m);
    for (int i = 0; i < m; ++i) x[i] = aug[i][m] / aug[i][i];
    return x;
  }

  int n_;
  Int g_;
  std::vector<Int> y_;
  std::vector<std::vector<Int>> kernel_;
  std::vector<std::vector<Int>> q_;
  UduDecomposition udu_;
  Int y2_;
  std::vector<Rat> s1_;
  Rat rho1_;
};

}  // namespace

std::vector<DivisorClass> enumerate_classes(const IntegralLattice& lat,
                                            const EnumerationQuery& query) {
  check_query(lat, query);
  const DegreeSolver solver(lat, query.reference);

  std::vector<DivisorClass> out;
  for (Int d = query.degree_min; d <= query.degree_max; ++d)
    solver.solve(d, query.square, out);
  if (query.primitive_only) {
    std::erase_if(out,
                  [](const DivisorClass& v) { return coords_gcd(v) != 1; });
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int required_box_bound(const IntegralLattice& lat,
                       const EnumerationQuery& query) {
  check_query(lat, query);
  const int n = lat.rank();
  const Int beta = self_intersection(lat, query.reference);
  const std::vector<Int> w = gram_times(lat, query.reference);

  // The majorant A = 2ww^T - beta*G is positive definite (it is beta^2 on
  // the reference class and -beta*G on its negative definite complement),
  // and every solution has A(v) = 2d^2 - beta*square. Cauchy-Schwarz in the
  // A-inner product gives v_i^2 <= (A^{-1})_ii * A(v) = adj(A)_ii/det(A) * A(v).
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[i][j] = 2 * w[i] * w[j] - beta * lat.gram(i, j);

  const Int r_lo = 2 * query.degree_min * query.degree_min - beta * query.square;
  const Int r_hi = 2 * query.degree_max * query.degree_max - beta * query.square;
  const Int r_max = std::max(r_lo, r_hi);
  if (r_max <= 0) return 0;

  const Int det_a = integer_determinant(a);
  Int bound = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<Int>> minor;
    for (int r = 0; r < n; ++r) {
      if (r == i) continue;
      std::vector<Int> row;
      for (int c = 0; c < n; ++c)
        if (c != i) row.push_back(a[r][c]);
      minor.push_back(std::move(row));
    }
    const Int adj_ii = minor.empty() ? Int(1) : integer_determinant(minor);
    bound = std::max(bound, floor_sqrt(Rat(r_max * adj_ii, det_a)));
  }
  return bound;
}

std::vector<DivisorClass> brute_force_classes(const IntegralLattice& lat,
                                              const EnumerationQuery& query,
                                              const Int& box_bound) {
  const Int needed = required_box_bound(lat, query);
  if (box_bound < needed) {
    std::ostringstream os;
    os << "box_bound " << box_bound << " is below the provable bound "
       << needed;
    throw std::invalid_argument(os.str());
  }
  const int n = lat.rank();
  const std::vector<Int> w = gram_times(lat, query.reference);

  std::vector<DivisorClass> out;
  DivisorClass v;
  v.coords.assign(n, -box_bound);
  while (true) {
    if (!v.is_zero() && self_intersection(lat, v) == query.square) {
      Int deg = 0;
      for (int i = 0; i < n; ++i) deg += w[i] * v.coords[i];
      if (deg >= query.degree_min && deg <= query.degree_max &&
          (!query.primitive_only || coords_gcd(v) == 1))
        out.push_back(v);
    }
    int i = n - 1;
    while (i >= 0 && v.coords[i] == box_bound) {
      v.coords[i] = -box_bound;
      --i;
    }
    if (i < 0) break;
    ++v.coords[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace k3bott
