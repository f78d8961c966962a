#include "sheffer/engine.hpp"

#include <algorithm>

namespace sheffer {

namespace {

std::size_t at_least_one(std::size_t n) { return std::max<std::size_t>(n, 1); }

void require_order(const ShefferPair& p, std::size_t needed, const char* what) {
  if (p.order() < needed)
    throw ContractViolation(std::string(what) + ": pair order " + std::to_string(p.order()) +
                            " is below the required " + std::to_string(needed));
}

// x * s(y) as a Poly-coefficient series.
PolySeries times_x(const RationalSeries& s) {
  std::vector<Poly> c;
  c.reserve(s.order() + 1);
  for (const auto& v : s.coeffs()) c.push_back(Poly::monomial(v, 1));
  return PolySeries(s.order(), std::move(c));
}

// k! [y^k] gf for k = 0..n.
std::vector<Poly> taylor_polys(const PolySeries& gf, std::size_t n) {
  std::vector<Poly> out;
  out.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out.push_back(gf[k] * factorial(static_cast<unsigned>(k)));
  return out;
}

// e^{x u(y)} * prefactor(y), expanded to polynomials 0..n.
std::vector<Poly> expand(const DeltaSeries& u, const RationalSeries& prefactor, std::size_t n) {
  const PolySeries gf = exp_delta(times_x(u.series())) * lift<Poly>(prefactor);
  return taylor_polys(gf, n);
}

const Poly& at(const std::vector<Poly>& seq, std::size_t k) {
  if (k >= seq.size())
    throw ContractViolation("sequence has no polynomial of degree " + std::to_string(k));
  return seq[k];
}

// sum_k (x a_k + b_k + c_k) A_n^{(k)} / k!
Poly derivative_sum(const Poly& an, const CoeffTriple& t, std::size_t n) {
  Poly acc;
  for (std::size_t k = 0; k <= n; ++k) {
    const Poly dk = an.derivative(k) * (Rational(1) / factorial(static_cast<unsigned>(k)));
    if (dk.is_zero()) break;
    acc += Poly::monomial(t.a[k], 1) * dk + dk * (t.b[k] + t.c[k]);
  }
  return acc;
}

}  // namespace

ShefferPair::ShefferPair(InvertibleSeries l, DeltaSeries h) : l_(std::move(l)), h_(std::move(h)) {
  if (l_.order() != h_.order())
    throw ContractViolation("pair order mismatch: l has order " + std::to_string(l_.order()) +
                            ", h has order " + std::to_string(h_.order()));
}

ShefferPair ShefferPair::truncated(std::size_t order) const {
  return ShefferPair(l_.truncated(order), h_.truncated(order));
}

bool ShefferPair::is_associated() const {
  return l_.series() == RationalSeries::one(l_.order());
}

std::string_view to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::sheffer: return "sheffer";
    case SequenceKind::appell: return "appell";
    case SequenceKind::sheffer_appell: return "sheffer-appell";
    case SequenceKind::associated: return "associated";
  }
  return "?";
}

std::string_view to_string(Identity id) {
  switch (id) {
    case Identity::differential_equation: return "differential-equation";
    case Identity::derivative_recurrence: return "derivative-recurrence";
    case Identity::scaled_recurrence: return "scaled-recurrence";
    case Identity::binomial_recurrence: return "binomial-recurrence";
  }
  return "?";
}

PolySeries exponential_xy(std::size_t order) {
  return exp_delta(times_x(RationalSeries::variable(order)));
}

PolySequence sheffer_appell_sequence(const ShefferPair& p, std::size_t n) {
  require_order(p, n, "sheffer_appell_sequence");
  const ShefferPair q = p.truncated(at_least_one(n));
  const DeltaSeries u = compositional_inverse(q.h());
  const RationalSeries& l = q.l().series();
  return {SequenceKind::sheffer_appell, expand(u, reciprocal(compose(l, u) * l), n)};
}

PolySequence sheffer_sequence(const ShefferPair& p, std::size_t n) {
  require_order(p, n, "sheffer_sequence");
  const ShefferPair q = p.truncated(at_least_one(n));
  const DeltaSeries u = compositional_inverse(q.h());
  const auto kind = q.is_associated() ? SequenceKind::associated : SequenceKind::sheffer;
  return {kind, expand(u, reciprocal(compose(q.l().series(), u)), n)};
}

PolySequence appell_sequence(const InvertibleSeries& l, std::size_t n) {
  if (l.order() < n)
    throw ContractViolation("appell_sequence: series order " + std::to_string(l.order()) +
                            " is below " + std::to_string(n));
  if (n == 0) return {SequenceKind::appell, {Poly(Rational(1) / l.series()[0])}};
  return {SequenceKind::appell,
          expand(DeltaSeries(RationalSeries::variable(n)), reciprocal(l.truncated(n)), n)};
}

PolySequence discrete_convolution(std::span<const Rational> kernel, const PolySequence& s) {
  if (kernel.size() < s.polys.size())
    throw ContractViolation("discrete_convolution: kernel has " + std::to_string(kernel.size()) +
                            " entries, sequence has " + std::to_string(s.polys.size()));
  const auto kind = (s.kind == SequenceKind::appell) ? SequenceKind::appell : SequenceKind::sheffer_appell;
  PolySequence out{kind, {}};
  out.polys.reserve(s.polys.size());
  for (std::size_t n = 0; n < s.polys.size(); ++n) {
    Poly acc;
    for (std::size_t k = 0; k <= n; ++k) {
      if (kernel[k].is_zero()) continue;
      acc += s.polys[n - k] * (binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * kernel[k]);
    }
    out.polys.push_back(std::move(acc));
  }
  return out;
}

CoeffSeries coefficient_series(const ShefferPair& p, Identity id, std::size_t n) {
  // One order is consumed by y-derivatives; the derivative series must still
  // carry a delta series, hence order >= 2 for the pair.
  const std::size_t w = std::max<std::size_t>(n + 1, 2);
  require_order(p, w, "coefficient_series");
  const ShefferPair q = p.truncated(w);
  const std::size_t m = w - 1;
  const RationalSeries l = q.l().series().truncated(m);
  const RationalSeries lp = derivative(q.l().series());
  const RationalSeries hp = derivative(q.h().series());
  const DeltaSeries h = q.h().truncated(m);
  const RationalSeries& hs = h.series();

  RationalSeries a(m), b(m), c(m);
  switch (id) {
    case Identity::differential_equation:
      a = hs * reciprocal(hp);
      b = -(hs * compose(lp, h) * reciprocal(compose(l, h)));
      c = -(hs * lp * reciprocal(hp * l));
      break;
    case Identity::derivative_recurrence:
      a = reciprocal(hp);
      b = -(compose(lp, h) * reciprocal(compose(l, h)));
      c = -(lp * reciprocal(hp * l));
      break;
    case Identity::scaled_recurrence: {
      const DeltaSeries u = compositional_inverse(h);
      a = compose(hp, u);
      b = -(a * lp * reciprocal(l));
      c = -(compose(lp, u) * reciprocal(compose(l, u)));
      break;
    }
    case Identity::binomial_recurrence: {
      const DeltaSeries u = compositional_inverse(h);
      const RationalSeries hpu = compose(hp, u);
      a = reciprocal(hpu);
      b = -(lp * reciprocal(l));
      c = -(compose(lp, u) * reciprocal(hpu * compose(l, u)));
      break;
    }
  }
  return {a.truncated(n), b.truncated(n), c.truncated(n)};
}

CoeffTriple coefficient_triple(const ShefferPair& p, Identity id, std::size_t n) {
  const CoeffSeries s = coefficient_series(p, id, n);
  return {id, derivative_vector(s.a), derivative_vector(s.b), derivative_vector(s.c)};
}

Poly residual(const std::vector<Poly>& seq, const CoeffTriple& t, std::size_t n) {
  if (t.a.size() <= n || t.b.size() <= n || t.c.size() <= n)
    throw ContractViolation("coefficient triple shorter than degree " + std::to_string(n));
  const Poly x = Poly::x();
  switch (t.identity) {
    case Identity::differential_equation:
      return derivative_sum(at(seq, n), t, n) - at(seq, n) * Rational(static_cast<long>(n));
    case Identity::derivative_recurrence:
      return at(seq, n + 1) - derivative_sum(at(seq, n), t, n);
    case Identity::scaled_recurrence: {
      Poly r = at(seq, n + 1) * t.a[0] - x * at(seq, n);
      for (std::size_t k = 0; k <= n; ++k) {
        const Rational binom = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
        r -= at(seq, n - k) * (binom * (t.b[k] + t.c[k]));
        if (k >= 1) r += at(seq, n + 1 - k) * (binom * t.a[k]);
      }
      return r;
    }
    case Identity::binomial_recurrence: {
      Poly r = at(seq, n + 1);
      for (std::size_t k = 0; k <= n; ++k) {
        const Rational binom = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
        const Poly weight = Poly::monomial(t.a[k], 1) + Poly(t.b[k] + t.c[k]);
        r -= weight * at(seq, n - k) * binom;
      }
      return r;
    }
  }
  throw ContractViolation("unknown identity");
}

Poly residual(const ShefferPair& p, Identity id, std::size_t n) {
  const std::size_t degrees = id == Identity::differential_equation ? n : n + 1;
  const auto seq = sheffer_appell_sequence(p, degrees);
  return residual(seq.polys, coefficient_triple(p, id, n), n);
}

Poly corollary_residual(const ShefferPair& p, Corollary which, std::size_t n) {
  if (!p.is_associated()) throw InvalidArgument("corollary identities require l = 1");
  Identity id = Identity::differential_equation;
  switch (which) {
    case Corollary::differential: id = Identity::differential_equation; break;
    case Corollary::derivative_recurrence:
    case Corollary::scaled_duplicate: id = Identity::derivative_recurrence; break;
    case Corollary::binomial_recurrence: id = Identity::binomial_recurrence; break;
  }
  const CoeffTriple t = coefficient_triple(p, id, n);
  const auto is_zero = [](const Rational& v) { return v.is_zero(); };
  if (!std::all_of(t.b.begin(), t.b.end(), is_zero) || !std::all_of(t.c.begin(), t.c.end(), is_zero))
    throw ContractViolation("associated pair produced nonzero b or c coefficients");
  const std::size_t degrees = id == Identity::differential_equation ? n : n + 1;
  return residual(sheffer_appell_sequence(p, degrees).polys, t, n);
}

Matrix<Poly> x_derivative_table(const std::vector<Poly>& seq, std::size_t n) {
  Matrix<Poly> m(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      m(i, j) = at(seq, i).derivative(j) * (Rational(1) / factorial(static_cast<unsigned>(j)));
  return m;
}

LemmaSides lemma_sides(const ShefferPair& p, std::size_t n) {
  require_order(p, n, "lemma_check");
  const ShefferPair q = p.truncated(at_least_one(n));
  const RationalSeries& l = q.l().series();
  const DeltaSeries u = compositional_inverse(q.h());

  Matrix<Poly> lhs = x_derivative_table(sheffer_appell_sequence(q, n).polys, n);

  const auto exy = exponential_xy(q.order());
  const Matrix<Rational> scalar = wronskian_powers_matrix(u, n) * omega_inverse(n) *
                                  pascal_matrix(reciprocal(l), n).dense() *
                                  pascal_matrix(reciprocal(compose(l, q.h())), n).dense();
  Matrix<Poly> rhs = lift(scalar) * pascal_matrix(exy, n).dense();
  return {std::move(lhs), std::move(rhs)};
}

bool lemma_check(const ShefferPair& p, std::size_t n) {
  const auto sides = lemma_sides(p, n);
  return sides.lhs == sides.rhs;
}

}  // namespace sheffer
