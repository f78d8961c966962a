#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sheffer/catalog.hpp"
#include "sheffer/engine.hpp"

namespace sheffer {

/// Coefficient tables as published alongside the closed-form identities,
/// evaluated for concrete parameters. Reported for comparison only.
struct PrintedCoeffs {
  std::vector<Rational> a, b, c;
};

/// One closed-form identity for one parameter value, checked at every
/// degree 0..n against the engine-generated Sheffer-Appell sequence.
struct AuditEntry {
  std::string id;
  std::string variant;  // "printed": the published closed form; "derived": extracted coefficients
  std::string family;
  ParamMap params;
  std::size_t n = 0;
  bool pass = false;
  std::vector<std::size_t> failing_degrees;
  /// Residual at the first failing degree (zero polynomial on PASS).
  Poly residual;
  std::optional<std::size_t> residual_degree;
  CoeffTriple derived;
  PrintedCoeffs printed;
};

struct AuditReport {
  std::size_t n = 0;
  std::vector<AuditEntry> entries;
};

/// Evaluates the published Laguerre and Miller-Lee closed forms literally and
/// next to them the same identities with engine-extracted coefficients.
/// Requires n >= 3.
AuditReport audit_closed_forms(std::size_t n);

}  // namespace sheffer
