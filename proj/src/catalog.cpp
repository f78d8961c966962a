#include "sheffer/catalog.hpp"

#include <algorithm>
#include <functional>

namespace sheffer {

namespace {

RationalSeries exp_series(std::size_t order) {
  std::vector<Rational> c(order + 1);
  Rational term(1);
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) term *= Rational(1, static_cast<long>(k));
    c[k] = term;
  }
  return RationalSeries(order, std::move(c));
}

// y / (y - 1) = -(y + y^2 + ...)
RationalSeries laguerre_delta(std::size_t order) {
  std::vector<Rational> c(order + 1, Rational(-1));
  c[0] = Rational(0);
  return RationalSeries(order, std::move(c));
}

const Rational& param(const ParamMap& params, std::string_view family, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end())
    throw InvalidArgument("family '" + std::string(family) + "' requires parameter '" + name + "'");
  return it->second;
}

using Builder = std::function<ShefferPair(const ParamMap&, std::size_t)>;

struct Entry {
  FamilyInfo info;
  Builder build;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"monomial", {}, "identity pair (1, y); polynomials x^n", false},
       [](const ParamMap&, std::size_t n) {
         return ShefferPair(RationalSeries::one(n), RationalSeries::variable(n));
       }},
      {{"laguerre", {"lambda"}, "generalized Laguerre pair ((1-y)^(-lambda-1), y/(y-1))", false},
       [](const ParamMap& p, std::size_t n) {
         const Rational& lambda = param(p, "laguerre", "lambda");
         return ShefferPair(binomial_series(-lambda - Rational(1), n), laguerre_delta(n));
       }},
      {{"miller-lee", {"m"}, "Miller-Lee type Appell pair ((1-y)^(m+1), y)", false},
       [](const ParamMap& p, std::size_t n) {
         const Rational& m = param(p, "miller-lee", "m");
         return ShefferPair(binomial_series(m + Rational(1), n), RationalSeries::variable(n));
       }},
      {{"hermite", {}, "probabilists' Hermite pair (exp(y^2/2), y)", true},
       [](const ParamMap&, std::size_t n) {
         std::vector<Rational> c(n + 1);
         Rational term(1);  // 1 / (2^j j!)
         for (std::size_t j = 0; 2 * j <= n; ++j) {
           if (j > 0) term *= Rational(1, 2 * static_cast<long>(j));
           c[2 * j] = term;
         }
         return ShefferPair(RationalSeries(n, std::move(c)), RationalSeries::variable(n));
       }},
      {{"bernoulli", {}, "Bernoulli pair ((e^y - 1)/y, y)", true},
       [](const ParamMap&, std::size_t n) {
         std::vector<Rational> c(n + 1);
         for (std::size_t k = 0; k <= n; ++k)
           c[k] = Rational(1) / factorial(static_cast<unsigned>(k + 1));
         return ShefferPair(RationalSeries(n, std::move(c)), RationalSeries::variable(n));
       }},
      {{"euler", {}, "Euler pair ((e^y + 1)/2, y)", true},
       [](const ParamMap&, std::size_t n) {
         RationalSeries l = exp_series(n) * Rational(1, 2);
         l += RationalSeries::constant(n, Rational(1, 2));
         return ShefferPair(std::move(l), RationalSeries::variable(n));
       }},
      {{"exp-shift", {}, "shifted-exponential pair (e^y, y)", true},
       [](const ParamMap&, std::size_t n) {
         return ShefferPair(exp_series(n), RationalSeries::variable(n));
       }},
      {{"log-assoc", {}, "associated pair (1, e^y - 1)", true},
       [](const ParamMap&, std::size_t n) {
         return ShefferPair(RationalSeries::one(n), exp_series(n) - RationalSeries::one(n));
       }},
  };
  return entries;
}

}  // namespace

RationalSeries binomial_series(const Rational& alpha, std::size_t order) {
  // (1 - y)^alpha: c_{k+1} = c_k (k - alpha) / (k + 1)
  std::vector<Rational> c(order + 1);
  c[0] = Rational(1);
  for (std::size_t k = 0; k < order; ++k)
    c[k + 1] = c[k] * (Rational(static_cast<long>(k)) - alpha) * Rational(1, static_cast<long>(k + 1));
  return RationalSeries(order, std::move(c));
}

const std::vector<FamilyInfo>& list_families() {
  static const std::vector<FamilyInfo> infos = [] {
    std::vector<FamilyInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

ShefferPair make_pair(std::string_view name, const ParamMap& params, std::size_t order) {
  if (order < 1) throw InvalidArgument("truncation order must be at least 1");
  for (const auto& e : registry()) {
    if (e.info.name != name) continue;
    for (const auto& [key, value] : params) {
      (void)value;
      if (std::find(e.info.params.begin(), e.info.params.end(), key) == e.info.params.end())
        throw InvalidArgument("family '" + e.info.name + "' has no parameter '" + key + "'");
    }
    try {
      return e.build(params, order);
    } catch (const ContractViolation& err) {
      throw InvalidArgument("parameters give an invalid pair for '" + e.info.name + "': " + err.what());
    }
  }
  throw UnknownFamily("unknown family '" + std::string(name) + "'");
}

}  // namespace sheffer
