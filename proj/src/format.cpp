#include "sheffer/format.hpp"

#include <sstream>

namespace sheffer {

json to_json(const Rational& r) { return r.str(); }

json to_json(const Poly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

json to_json(const RationalSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

json to_json(const PolySeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

json to_json(const PolySequence& seq) {
  json polys = json::array();
  for (const auto& p : seq.polys) polys.push_back(to_json(p));
  return {{"kind", std::string(to_string(seq.kind))}, {"polys", std::move(polys)}};
}

namespace {
json vec(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& r : v) arr.push_back(r.str());
  return arr;
}
}  // namespace

json to_json(const CoeffTriple& t) {
  return {{"identity", std::string(to_string(t.identity))}, {"a", vec(t.a)}, {"b", vec(t.b)}, {"c", vec(t.c)}};
}

json to_json(const FamilyInfo& f) {
  json params = json::array();
  for (const auto& p : f.params) params.push_back({{"name", p}, {"type", "rational"}});
  return {{"name", f.name}, {"params", std::move(params)}, {"description", f.description},
          {"extension", f.extension}};
}

json to_json(const ParamMap& params) {
  json obj = json::object();
  for (const auto& [k, v] : params) obj[k] = v.str();
  return obj;
}

json to_json(const AuditReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json failing = json::array();
    for (auto d : e.failing_degrees) failing.push_back(d);
    entries.push_back({
        {"identity-id", e.id},
        {"variant", e.variant},
        {"family", e.family},
        {"parameters", to_json(e.params)},
        {"n", e.n},
        {"status", e.pass ? "PASS" : "FAIL"},
        {"failing-degrees", std::move(failing)},
        {"residual-degree", e.residual_degree ? json(*e.residual_degree) : json(nullptr)},
        {"residual", to_json(e.residual)},
        {"derived-coeffs", to_json(e.derived)},
        {"printed-coeffs", {{"a", vec(e.printed.a)}, {"b", vec(e.printed.b)}, {"c", vec(e.printed.c)}}},
    });
  }
  return {{"n", report.n}, {"entries", std::move(entries)}};
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw InvalidArgument("rational must be a JSON string");
  return Rational::parse(j.get<std::string>());
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial must be a JSON array");
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(rational_from_json(v));
  if (!c.empty() && c.back().is_zero()) throw InvalidArgument("polynomial has a trailing zero coefficient");
  return Poly(std::move(c));
}

RationalSeries rational_series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw InvalidArgument("series must be an object with 'order' and 'coeffs'");
  const auto order = j.at("order").get<std::size_t>();
  std::vector<Rational> c;
  for (const auto& v : j.at("coeffs")) c.push_back(rational_from_json(v));
  if (c.size() != order + 1) throw InvalidArgument("series coefficient count does not match order");
  return RationalSeries(order, std::move(c));
}

std::string to_csv(const PolySequence& seq) {
  std::ostringstream os;
  os << "degree,index,coefficient\n";
  for (std::size_t n = 0; n < seq.polys.size(); ++n) {
    const auto coeffs = seq.polys[n].coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k) os << n << ',' << k << ',' << coeffs[k].str() << '\n';
  }
  return os.str();
}

namespace {
std::string latex_number(const Rational& mag) {
  if (mag.is_integer()) return mag.str();
  return "\\frac{" + mag.numerator_str() + "}{" + mag.denominator_str() + "}";
}
}  // namespace

std::string to_latex(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto coeffs = p.coeffs();
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Rational& c = coeffs[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (k == 0) {
      out += latex_number(mag);
      continue;
    }
    if (!mag.is_one()) out += latex_number(mag);
    out += "x";
    if (k > 1) out += "^{" + std::to_string(k) + "}";
  }
  return out;
}

std::string to_latex(const PolySequence& seq) {
  std::ostringstream os;
  os << "\\begin{align*}\n";
  for (std::size_t n = 0; n < seq.polys.size(); ++n) {
    os << "  p_{" << n << "}(x) &= " << to_latex(seq.polys[n]);
    os << (n + 1 < seq.polys.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{align*}\n";
  return os.str();
}

}  // namespace sheffer
