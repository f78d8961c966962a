#include "sheffer/series.hpp"

namespace sheffer {

DeltaSeries::DeltaSeries(RationalSeries s) : s_(std::move(s)) {
  if (s_.order() < 1) throw ContractViolation("delta series needs order >= 1");
  if (!s_[0].is_zero()) throw ContractViolation("delta series must have zero constant term");
  if (s_[1].is_zero()) throw ContractViolation("delta series must have nonzero linear term");
}

InvertibleSeries::InvertibleSeries(RationalSeries s) : s_(std::move(s)) {
  if (s_[0].is_zero()) throw ContractViolation("invertible series must have nonzero constant term");
}

RationalSeries reciprocal(const InvertibleSeries& a) {
  const RationalSeries& s = a.series();
  const std::size_t n = s.order();
  std::vector<Rational> r(n + 1);
  const Rational inv0 = Rational(1) / s[0];
  r[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j)
      if (!s[j].is_zero()) acc += s[j] * r[k - j];
    r[k] = -acc * inv0;
  }
  return RationalSeries(n, std::move(r));
}

RationalSeries reciprocal(const RationalSeries& a) { return reciprocal(InvertibleSeries(a)); }

DeltaSeries compositional_inverse(const DeltaSeries& h) {
  const std::size_t n = h.order();
  // Lagrange inversion: [y^k] h^{-1} = (1/k) [y^{k-1}] (y/h(y))^k.
  // y/h(y) is the reciprocal of h(y)/y, known through order n-1.
  std::vector<Rational> shifted(h.series().coeffs().begin() + 1, h.series().coeffs().end());
  const RationalSeries phi = reciprocal(RationalSeries(n - 1, std::move(shifted)));
  std::vector<Rational> g(n + 1);
  RationalSeries power = RationalSeries::one(n - 1);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * phi;
    g[k] = power[k - 1] * Rational(1, static_cast<long>(k));
  }
  DeltaSeries inverse{RationalSeries(n, std::move(g))};
#ifndef NDEBUG
  if (compose(h.series(), inverse) != RationalSeries::variable(n))
    throw ContractViolation("compositional inverse post-condition failed");
#endif
  return inverse;
}

}  // namespace sheffer
