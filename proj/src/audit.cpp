#include "sheffer/audit.hpp"

#include <functional>

namespace sheffer {

namespace {

using ResidualFn = std::function<Poly(const std::vector<Poly>&, std::size_t)>;

Rational fact(std::size_t k) { return factorial(static_cast<unsigned>(k)); }
Rational binom(std::size_t n, std::size_t k) {
  return binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
}

// A_i, with A_{-1} = A_{-2} = 0 (only ever multiplied by vanishing binomials).
Poly term(const std::vector<Poly>& seq, std::ptrdiff_t i) {
  return i < 0 ? Poly() : seq.at(static_cast<std::size_t>(i));
}

std::vector<Rational> table(std::size_t n, const std::function<Rational(std::size_t)>& f) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k <= n; ++k) out.push_back(f(k));
  return out;
}

// d A_d - d x A_{d-1} - sum_{k=1}^{d} C(d,k) A_{d-k} (b_k + c_k)
Poly differential_recurrence(const std::vector<Poly>& s, std::size_t d, const std::vector<Rational>& b,
                             const std::vector<Rational>& c) {
  const Rational dd(static_cast<long>(d));
  Poly r = s[d] * dd - Poly::x() * term(s, static_cast<std::ptrdiff_t>(d) - 1) * dd;
  for (std::size_t k = 1; k <= d; ++k) r -= s[d - k] * (binom(d, k) * (b[k] + c[k]));
  return r;
}

// A_{d+1} - x A_d - sum_{k=0}^{d} C(d,k) A_{d-k} (b_k + c_k)
Poly first_order_recurrence(const std::vector<Poly>& s, std::size_t d, const std::vector<Rational>& b,
                            const std::vector<Rational>& c) {
  Poly r = s[d + 1] - Poly::x() * s[d];
  for (std::size_t k = 0; k <= d; ++k) r -= s[d - k] * (binom(d, k) * (b[k] + c[k]));
  return r;
}

AuditEntry run(std::string id, std::string variant, std::string family, ParamMap params, std::size_t n,
               Identity identity, PrintedCoeffs printed, const ResidualFn& fn) {
  const ShefferPair pair = make_pair(family, params, n + 2);
  const auto seq = sheffer_appell_sequence(pair, n + 1).polys;
  AuditEntry e;
  e.id = std::move(id);
  e.variant = std::move(variant);
  e.family = std::move(family);
  e.params = std::move(params);
  e.n = n;
  e.derived = coefficient_triple(pair, identity, n);
  e.printed = std::move(printed);
  for (std::size_t d = 0; d <= n; ++d) {
    Poly r = fn(seq, d);
    if (r.is_zero()) continue;
    if (!e.residual_degree) {
      e.residual = std::move(r);
      e.residual_degree = d;
    }
    e.failing_degrees.push_back(d);
  }
  e.pass = e.failing_degrees.empty();
  return e;
}

}  // namespace

AuditReport audit_closed_forms(std::size_t n) {
  if (n < 3) throw InvalidArgument("audit needs n >= 3");
  AuditReport report;
  report.n = n;
  auto& out = report.entries;
  const Poly x = Poly::x();

  for (long lam_value : {0L, 1L}) {
    const Rational lam(lam_value);
    const Rational lp1 = lam + Rational(1);
    const ParamMap params{{"lambda", lam}};
    const ShefferPair pair = make_pair("laguerre", params, n + 2);

    PrintedCoeffs closed{table(n, [](std::size_t k) { return fact(k); }),
                         table(n, [&](std::size_t k) { return lp1 * (fact(k + 1) - fact(k)); }),
                         table(n, [&](std::size_t k) {
                           return lp1 * (fact(k + 2) * Rational(1, 2) - fact(k + 3) * Rational(1, 6));
                         })};
    out.push_back(run("laguerre-differential-closed-form", "printed", "laguerre", params, n,
                      Identity::differential_equation, closed, [&](const std::vector<Poly>& s, std::size_t d) {
                        Poly lhs;
                        for (std::size_t k = 1; k <= d; ++k) {
                          const long kk = static_cast<long>(k);
                          const Rational shift = Rational(kk * (kk - 1) * (kk + 4)) * lp1 * Rational(1, 6);
                          lhs += (x - Poly(shift)) * s[d - k] * (binom(d, k) * fact(k));
                        }
                        return lhs - s[d] * Rational(static_cast<long>(d));
                      }));
    const CoeffTriple t21 = coefficient_triple(pair, Identity::differential_equation, n);
    out.push_back(run("laguerre-differential-closed-form", "derived", "laguerre", params, n,
                      Identity::differential_equation, closed,
                      [&](const std::vector<Poly>& s, std::size_t d) { return residual(s, t21, d); }));

    PrintedCoeffs appell{table(n, [](std::size_t k) {
                           return k == 0 ? Rational(-1) : k == 1 ? Rational(2) : k == 2 ? Rational(-2) : Rational(0);
                         }),
                         table(n, [&](std::size_t k) { return -lp1 * fact(k); }),
                         table(n, [&](std::size_t k) { return k == 0 ? -lp1 : k == 1 ? lp1 : Rational(0); })};
    out.push_back(run("laguerre-appell-recurrence", "printed", "laguerre", params, n,
                      Identity::derivative_recurrence, appell, [&](const std::vector<Poly>& s, std::size_t d) {
                        const auto di = static_cast<std::ptrdiff_t>(d);
                        Poly r = s[d + 1] + (x + Poly(Rational(2) * lp1)) * s[d];
                        r -= x * term(s, di - 1) * Rational(2 * static_cast<long>(d));
                        r += (x + Poly(lp1)) * term(s, di - 2) * (Rational(2) * binom(d, 2));
                        for (std::size_t k = 3; k <= d; ++k) r -= s[d - k] * (lp1 * binom(d, k) * fact(k));
                        return r;
                      }));
    const CoeffTriple t31 = coefficient_triple(pair, Identity::derivative_recurrence, n);
    out.push_back(run("laguerre-appell-recurrence", "derived", "laguerre", params, n,
                      Identity::derivative_recurrence, appell,
                      [&](const std::vector<Poly>& s, std::size_t d) { return residual(s, t31, d); }));
  }

  for (long m_value : {0L, 1L}) {
    const Rational m(m_value);
    const Rational mp1 = m + Rational(1);
    const ParamMap params{{"m", m}};
    const ShefferPair pair = make_pair("miller-lee", params, n + 2);

    PrintedCoeffs diff{table(n, [](std::size_t k) { return Rational(k == 1 ? 1 : 0); }),
                       table(n, [&](std::size_t k) { return k == 0 ? Rational(0) : mp1 * fact(k); }),
                       table(n, [&](std::size_t k) { return k == 0 ? Rational(0) : -mp1 * fact(k); })};
    out.push_back(run("miller-lee-differential-recurrence", "printed", "miller-lee", params, n,
                      Identity::differential_equation, diff, [&](const std::vector<Poly>& s, std::size_t d) {
                        return differential_recurrence(s, d, diff.b, diff.c);
                      }));
    const CoeffTriple t21 = coefficient_triple(pair, Identity::differential_equation, n);
    out.push_back(run("miller-lee-differential-recurrence", "derived", "miller-lee", params, n,
                      Identity::differential_equation, diff, [&](const std::vector<Poly>& s, std::size_t d) {
                        return differential_recurrence(s, d, t21.b, t21.c);
                      }));

    PrintedCoeffs first{table(n, [](std::size_t k) { return Rational(k == 0 ? 1 : 0); }),
                        table(n, [&](std::size_t k) { return mp1 * fact(k); }),
                        table(n, [&](std::size_t k) { return -mp1 * fact(k); })};
    out.push_back(run("miller-lee-derivative-recurrence", "printed", "miller-lee", params, n,
                      Identity::derivative_recurrence, first, [&](const std::vector<Poly>& s, std::size_t d) {
                        return first_order_recurrence(s, d, first.b, first.c);
                      }));
    const CoeffTriple t31 = coefficient_triple(pair, Identity::derivative_recurrence, n);
    out.push_back(run("miller-lee-derivative-recurrence", "derived", "miller-lee", params, n,
                      Identity::derivative_recurrence, first, [&](const std::vector<Poly>& s, std::size_t d) {
                        return first_order_recurrence(s, d, t31.b, t31.c);
                      }));

    // The published table names the parameter lambda; it is read as m.
    PrintedCoeffs scaled{table(n, [](std::size_t k) { return Rational(k == 0 ? 1 : 0); }),
                         table(n, [&](std::size_t k) { return -mp1 * fact(k); }),
                         table(n, [&](std::size_t k) { return -mp1 * fact(k); })};
    out.push_back(run("miller-lee-scaled-recurrence", "printed", "miller-lee", params, n,
                      Identity::scaled_recurrence, scaled, [&](const std::vector<Poly>& s, std::size_t d) {
                        Poly r = s[d + 1] - x * s[d];
                        for (std::size_t k = 0; k <= d; ++k)
                          r += s[d - k] * (Rational(2) * mp1 * binom(d, k) * fact(k));
                        return r;
                      }));
    const CoeffTriple t32 = coefficient_triple(pair, Identity::scaled_recurrence, n);
    out.push_back(run("miller-lee-scaled-recurrence", "derived", "miller-lee", params, n,
                      Identity::scaled_recurrence, scaled,
                      [&](const std::vector<Poly>& s, std::size_t d) { return residual(s, t32, d); }));
  }
  return report;
}

}  // namespace sheffer
