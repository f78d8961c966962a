#include "sheffer/matrix.hpp"

#include <algorithm>

namespace sheffer {

Matrix<Poly> lift(const Matrix<Rational>& m) {
  Matrix<Poly> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Poly(m(i, j));
  return out;
}

Matrix<Rational> wronskian_powers_matrix(const DeltaSeries& h, std::size_t n) {
  detail::require_order(h.order(), n, "wronskian_powers_matrix");
  const RationalSeries hn = h.series().truncated(n);
  Matrix<Rational> m(n + 1, n + 1);
  RationalSeries power = RationalSeries::one(n);
  for (std::size_t j = 0; j <= n; ++j) {
    if (j > 0) power = power * hn;
    const auto col = derivative_vector(power);
    for (std::size_t i = 0; i <= n; ++i) m(i, j) = col[i];
  }
  return m;
}

Matrix<Rational> omega(std::size_t n) {
  Matrix<Rational> m(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i) m(i, i) = factorial(static_cast<unsigned>(i));
  return m;
}

Matrix<Rational> omega_inverse(std::size_t n) {
  Matrix<Rational> m(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i) m(i, i) = Rational(1) / factorial(static_cast<unsigned>(i));
  return m;
}

bool check_pascal_product(const RationalSeries& f, const RationalSeries& g, std::size_t n) {
  detail::require_order(f.order(), n, "check_pascal_product");
  detail::require_order(g.order(), n, "check_pascal_product");
  const auto fn = f.truncated(n);
  const auto gn = g.truncated(n);
  const auto lhs = pascal_matrix(fn * gn, n);
  const auto pf = pascal_matrix(fn, n);
  const auto pg = pascal_matrix(gn, n);
  return lhs == pf * pg && lhs == pg * pf;
}

bool check_composition_factorization(const RationalSeries& l, const DeltaSeries& h, std::size_t n) {
  detail::require_order(l.order(), n, "check_composition_factorization");
  detail::require_order(h.order(), n, "check_composition_factorization");
  // A delta series needs order >= 1 even when n is 0.
  const std::size_t work = std::max<std::size_t>(n, 1);
  const auto lw = l.truncated(work);
  const auto hw = h.truncated(work);
  const auto lhs = wronskian_vector(compose(lw, hw), n);
  return lhs == wronskian_powers_matrix(hw, n) * omega_inverse(n) * wronskian_vector(lw, n);
}

bool check_linearity(const RationalSeries& f, const RationalSeries& g, const Rational& u,
                     const Rational& v, std::size_t n) {
  detail::require_order(f.order(), n, "check_linearity");
  detail::require_order(g.order(), n, "check_linearity");
  const auto fn = f.truncated(n);
  const auto gn = g.truncated(n);
  const auto combo = u * fn + v * gn;
  const bool pascal = pascal_matrix(combo, n).dense() ==
                      u * pascal_matrix(fn, n).dense() + v * pascal_matrix(gn, n).dense();
  const bool wronskian =
      wronskian_vector(combo, n) == u * wronskian_vector(fn, n) + v * wronskian_vector(gn, n);
  return pascal && wronskian;
}

}  // namespace sheffer
