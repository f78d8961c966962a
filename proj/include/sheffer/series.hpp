#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sheffer/error.hpp"
#include "sheffer/poly.hpp"
#include "sheffer/rational.hpp"

namespace sheffer {

/// Formal power series in y truncated at a fixed order n: coefficients of
/// y^0 .. y^n, results correct modulo y^{n+1}. The coefficient ring is
/// Rational or Poly.
///
/// Binary operations require equal orders and throw ContractViolation
/// otherwise; there is no silent truncation. Use truncated() explicitly.
template <class R>
class Series {
 public:
  using value_type = R;

  explicit Series(std::size_t order) : coeffs_(order + 1) {}
  /// Missing high coefficients are zero; more than order+1 is an error.
  Series(std::size_t order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > order + 1)
      throw ContractViolation("series has " + std::to_string(coeffs_.size()) +
                              " coefficients but order " + std::to_string(order));
    coeffs_.resize(order + 1);
  }

  static Series constant(std::size_t order, R c) {
    Series s(order);
    s.coeffs_[0] = std::move(c);
    return s;
  }
  static Series one(std::size_t order) { return constant(order, R(Rational(1))); }
  /// The series y (zero when order is 0).
  static Series variable(std::size_t order) {
    Series s(order);
    if (order >= 1) s.coeffs_[1] = R(Rational(1));
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const R& operator[](std::size_t k) const { return coeffs_.at(k); }
  const std::vector<R>& coeffs() const { return coeffs_; }

  Series truncated(std::size_t order) const {
    if (order > this->order())
      throw ContractViolation("cannot raise truncation order " + std::to_string(this->order()) +
                              " to " + std::to_string(order));
    return Series(order, std::vector<R>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  Series& operator+=(const Series& o) {
    require_same_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  Series& operator-=(const Series& o) {
    require_same_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  Series& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Rational& s) { return a *= s; }
  friend Series operator*(const Rational& s, Series a) { return a *= s; }
  Series operator-() const {
    Series s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
  }

  /// Cauchy product modulo y^{order+1}.
  friend Series operator*(const Series& a, const Series& b) {
    a.require_same_order(b);
    const std::size_t n = a.order();
    Series out(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (is_zero_coeff(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j <= n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }

  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  static bool is_zero_coeff(const R& c) { return c.is_zero(); }

  void require_same_order(const Series& o) const {
    if (o.order() != order())
      throw ContractViolation("series order mismatch: " + std::to_string(order()) + " vs " +
                              std::to_string(o.order()));
  }

  std::vector<R> coeffs_;
};

using RationalSeries = Series<Rational>;
using PolySeries = Series<Poly>;

/// Series with zero constant term and nonzero linear term.
class DeltaSeries {
 public:
  explicit DeltaSeries(RationalSeries s);
  const RationalSeries& series() const { return s_; }
  std::size_t order() const { return s_.order(); }
  DeltaSeries truncated(std::size_t order) const { return DeltaSeries(s_.truncated(order)); }
  friend bool operator==(const DeltaSeries&, const DeltaSeries&) = default;

 private:
  RationalSeries s_;
};

/// Series with nonzero constant term.
class InvertibleSeries {
 public:
  explicit InvertibleSeries(RationalSeries s);
  const RationalSeries& series() const { return s_; }
  std::size_t order() const { return s_.order(); }
  InvertibleSeries truncated(std::size_t order) const {
    return InvertibleSeries(s_.truncated(order));
  }
  friend bool operator==(const InvertibleSeries&, const InvertibleSeries&) = default;

 private:
  RationalSeries s_;
};

/// Embeds a rational series into a Poly-coefficient series (constants in x).
template <class R>
Series<R> lift(const RationalSeries& s) {
  std::vector<R> c;
  c.reserve(s.order() + 1);
  for (const auto& v : s.coeffs()) c.emplace_back(v);
  return Series<R>(s.order(), std::move(c));
}

/// Term-wise d/dy; the result has order one less than the input.
template <class R>
Series<R> derivative(const Series<R>& a) {
  if (a.order() == 0) throw ContractViolation("derivative of an order-0 series");
  std::vector<R> c(a.order());
  for (std::size_t k = 1; k <= a.order(); ++k) {
    c[k - 1] = a[k];
    c[k - 1] *= Rational(static_cast<long>(k));
  }
  return Series<R>(a.order() - 1, std::move(c));
}

/// Multiplicative inverse of an invertible series.
RationalSeries reciprocal(const InvertibleSeries& a);
/// Convenience overload; throws ContractViolation on a zero constant term.
RationalSeries reciprocal(const RationalSeries& a);

/// f(g(y)) modulo y^{order+1}, by Horner evaluation in the series ring.
template <class R>
Series<R> compose(const Series<R>& f, const DeltaSeries& g) {
  if (f.order() != g.order())
    throw ContractViolation("compose: order mismatch " + std::to_string(f.order()) + " vs " +
                            std::to_string(g.order()));
  const std::size_t n = f.order();
  const Series<R> inner = lift<R>(g.series());
  Series<R> acc = Series<R>::constant(n, f[n]);
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * inner;
    acc += Series<R>::constant(n, f[k]);
  }
  return acc;
}

/// Compositional inverse: compose(h, inverse(h)) = y.
DeltaSeries compositional_inverse(const DeltaSeries& h);

/// exp(g) for a series with zero constant term.
template <class R>
Series<R> exp_delta(const Series<R>& g) {
  if (!g[0].is_zero()) throw ContractViolation("exp_delta: nonzero constant term");
  const std::size_t n = g.order();
  // E' = g' E  =>  k E_k = sum_{j=1}^{k} j g_j E_{k-j}
  std::vector<R> e(n + 1);
  e[0] = R(Rational(1));
  for (std::size_t k = 1; k <= n; ++k) {
    R acc{};
    for (std::size_t j = 1; j <= k; ++j) {
      if (g[j].is_zero()) continue;
      R term = g[j] * e[k - j];
      term *= Rational(static_cast<long>(j));
      acc += term;
    }
    acc *= Rational(1, static_cast<long>(k));
    e[k] = std::move(acc);
  }
  return Series<R>(n, std::move(e));
}

/// Entry k is the k-th y-derivative at zero: k! * coeff[k].
template <class R>
std::vector<R> derivative_vector(const Series<R>& a) {
  std::vector<R> out;
  out.reserve(a.order() + 1);
  Rational fact(1);
  for (std::size_t k = 0; k <= a.order(); ++k) {
    if (k > 0) fact *= Rational(static_cast<long>(k));
    R v = a[k];
    v *= fact;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace sheffer
