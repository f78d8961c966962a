#pragma once

// Shared test helpers: seeded random generators and a brute-force expansion
// oracle that never touches the library's series algorithms (no Horner
// composition, no Lagrange inversion, no exp recurrence).

#include <cstddef>
#include <random>
#include <vector>

#include "sheffer/poly.hpp"
#include "sheffer/rational.hpp"
#include "sheffer/series.hpp"

namespace testing_support {

using sheffer::Poly;
using sheffer::Rational;
using sheffer::RationalSeries;

/// Numerators in [-5, 5], denominators in [1, 4].
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  Rational rational() {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    return Rational(num(rng_), den(rng_));
  }
  Rational nonzero_rational() {
    Rational r;
    while (r.is_zero()) r = rational();
    return r;
  }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  Poly poly(std::size_t max_degree) {
    std::vector<Rational> c(index(0, max_degree + 1));
    for (auto& v : c) v = rational();
    return Poly(std::move(c));
  }
  RationalSeries series(std::size_t order) {
    std::vector<Rational> c(order + 1);
    for (auto& v : c) v = rational();
    return RationalSeries(order, std::move(c));
  }
  RationalSeries invertible(std::size_t order) {
    auto c = series(order).coeffs();
    c[0] = nonzero_rational();
    return RationalSeries(order, std::move(c));
  }
  RationalSeries delta(std::size_t order) {
    auto c = series(order).coeffs();
    c[0] = Rational(0);
    c[1] = nonzero_rational();
    return RationalSeries(order, std::move(c));
  }

 private:
  std::mt19937 rng_;
};

// ---- brute-force oracle on plain coefficient vectors ----

using Coeffs = std::vector<Rational>;

inline Coeffs naive_mul(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (i + j < out.size()) out[i + j] += a[i] * b[j];
  return out;
}

inline Coeffs naive_one(std::size_t len) {
  Coeffs c(len);
  c[0] = Rational(1);
  return c;
}

/// sum_k f_k g^k with g(0) = 0, by explicit powers.
inline Coeffs naive_compose(const Coeffs& f, const Coeffs& g) {
  Coeffs out(f.size());
  Coeffs power = naive_one(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += f[k] * power[i];
    power = naive_mul(power, g);
  }
  return out;
}

/// Solve a * r = 1 by forward substitution on the convolution equations.
inline Coeffs naive_reciprocal(const Coeffs& a) {
  Coeffs r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    Rational rhs = k == 0 ? Rational(1) : Rational(0);
    for (std::size_t j = 1; j <= k; ++j) rhs -= a[j] * r[k - j];
    r[k] = rhs / a[0];
  }
  return r;
}

/// Coefficient-by-coefficient solve of h(g(y)) = y, recomposing every step.
inline Coeffs naive_inverse(const Coeffs& h) {
  Coeffs g(h.size());
  for (std::size_t k = 1; k < h.size(); ++k) {
    const Coeffs hg = naive_compose(h, g);
    const Rational target = k == 1 ? Rational(1) : Rational(0);
    g[k] = (target - hg[k]) / h[1];
  }
  return g;
}

/// sum_k g^k / k!.
inline Coeffs naive_exp(const Coeffs& g) {
  Coeffs out(g.size());
  Coeffs power = naive_one(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += power[i] / sheffer::factorial(static_cast<unsigned>(k));
    power = naive_mul(power, g);
  }
  return out;
}

/// polys k = 0..n of  prefactor(y) * e^{x u(y)}, expanding e^{x u} as
/// sum_j x^j u^j / j! and reading off the bivariate coefficients.
inline std::vector<Poly> naive_expand(const Coeffs& u, const Coeffs& prefactor, std::size_t n) {
  std::vector<std::vector<Rational>> grid(n + 1, std::vector<Rational>(n + 1));  // [k][j]
  Coeffs power = naive_one(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const Coeffs term = naive_mul(power, prefactor);
    for (std::size_t k = 0; k <= n; ++k) grid[k][j] += term[k] / sheffer::factorial(static_cast<unsigned>(j));
    power = naive_mul(power, u);
  }
  std::vector<Poly> out;
  for (std::size_t k = 0; k <= n; ++k) {
    Coeffs c = grid[k];
    for (auto& v : c) v *= sheffer::factorial(static_cast<unsigned>(k));
    out.emplace_back(std::move(c));
  }
  return out;
}

inline Coeffs truncate(const Coeffs& c, std::size_t n) { return Coeffs(c.begin(), c.begin() + n + 1); }

/// Sheffer-Appell polynomials of (l, h) from first principles.
inline std::vector<Poly> naive_sheffer_appell(const Coeffs& l, const Coeffs& h, std::size_t n) {
  const Coeffs u = naive_inverse(truncate(h, n));
  const Coeffs ln = truncate(l, n);
  const Coeffs pre = naive_reciprocal(naive_mul(naive_compose(ln, u), ln));
  return naive_expand(u, pre, n);
}

inline std::vector<Poly> naive_sheffer(const Coeffs& l, const Coeffs& h, std::size_t n) {
  const Coeffs u = naive_inverse(truncate(h, n));
  return naive_expand(u, naive_reciprocal(naive_compose(truncate(l, n), u)), n);
}

inline Coeffs coeffs_of(const RationalSeries& s) { return s.coeffs(); }

}  // namespace testing_support
