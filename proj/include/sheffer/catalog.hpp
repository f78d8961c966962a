#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sheffer/engine.hpp"
#include "sheffer/rational.hpp"

namespace sheffer {

using ParamMap = std::map<std::string, Rational, std::less<>>;

struct FamilyInfo {
  std::string name;
  std::vector<std::string> params;  // all rational-valued
  std::string description;
  bool extension;  // cross-check family rather than one of the primary examples
};

/// Stable order: monomial, laguerre, miller-lee, then the cross-check families.
const std::vector<FamilyInfo>& list_families();

/// Builds the named pair at the requested truncation order (>= 1).
/// Throws UnknownFamily for an unknown name and InvalidArgument for missing
/// or unexpected parameters.
ShefferPair make_pair(std::string_view name, const ParamMap& params, std::size_t order);

/// Coefficients of (1 - y)^alpha through y^order, by the binomial recurrence.
RationalSeries binomial_series(const Rational& alpha, std::size_t order);

}  // namespace sheffer
