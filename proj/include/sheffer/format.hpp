#pragma once

#include <string>

#include "json.hpp"

#include "sheffer/audit.hpp"
#include "sheffer/catalog.hpp"
#include "sheffer/engine.hpp"
#include "sheffer/matrix.hpp"

namespace sheffer {

using json = nlohmann::json;

// Wire formats (docs/formats.md): rationals are "p/q" strings ("p" when
// q = 1), polynomials are arrays of those in ascending degree, series are
// {"order", "coeffs"}, matrices are row-major nested arrays.

json to_json(const Rational& r);
json to_json(const Poly& p);
json to_json(const RationalSeries& s);
json to_json(const PolySeries& s);
json to_json(const PolySequence& seq);
json to_json(const CoeffTriple& t);
json to_json(const FamilyInfo& f);
json to_json(const ParamMap& params);
json to_json(const AuditReport& report);

template <class R>
json to_json(const Matrix<R>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Rational rational_from_json(const json& j);
Poly poly_from_json(const json& j);
RationalSeries rational_series_from_json(const json& j);

/// "degree,index,coefficient" rows, one per stored coefficient.
std::string to_csv(const PolySequence& seq);

/// LaTeX for one polynomial, descending powers: "x - \frac{1}{2}".
std::string to_latex(const Poly& p);
/// One aligned equation per degree.
std::string to_latex(const PolySequence& seq);

}  // namespace sheffer
