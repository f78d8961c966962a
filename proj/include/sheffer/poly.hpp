#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "sheffer/rational.hpp"

namespace sheffer {

/// Dense univariate polynomial in x over the rationals, coefficient of x^0
/// first. Canonical: no trailing zero coefficient; the zero polynomial has no
/// coefficients at all.
class Poly {
 public:
  Poly() = default;
  Poly(Rational constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);

  static Poly x() { return monomial(Rational(1), 1); }
  static Poly monomial(const Rational& coeff, std::size_t degree);

  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of x^k; zero past the degree.
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;

  Rational eval(const Rational& at) const;
  Poly derivative(std::size_t times = 1) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Human-readable, descending powers: "x^2 - 1/2*x + 3".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

}  // namespace sheffer
