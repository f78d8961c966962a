#include "sheffer/sheffer.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "sheffer/audit.hpp"
#include "sheffer/catalog.hpp"
#include "sheffer/engine.hpp"
#include "sheffer/error.hpp"
#include "sheffer/format.hpp"
#include "sheffer/matrix.hpp"

struct shf_pair {
  sheffer::ShefferPair value;
};

struct shf_sequence {
  sheffer::PolySequence value;
};

namespace {

thread_local std::string last_error;

shf_status fail(shf_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs body, translating exceptions into status codes.
template <class Body>
shf_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return SHF_OK;
  } catch (const sheffer::UnknownFamily& e) {
    return fail(SHF_ERR_UNKNOWN_FAMILY, e.what());
  } catch (const sheffer::InvalidArgument& e) {
    return fail(SHF_ERR_INVALID_ARGUMENT, e.what());
  } catch (const sheffer::ContractViolation& e) {
    return fail(SHF_ERR_CONTRACT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SHF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SHF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SHF_ERR_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class T>
void require(const T* p, const char* name) {
  if (p == nullptr) throw sheffer::InvalidArgument(std::string(name) + " is null");
}

sheffer::Identity identity_of(shf_identity id) {
  switch (id) {
    case SHF_IDENTITY_DIFFERENTIAL: return sheffer::Identity::differential_equation;
    case SHF_IDENTITY_DERIVATIVE_RECURRENCE: return sheffer::Identity::derivative_recurrence;
    case SHF_IDENTITY_SCALED_RECURRENCE: return sheffer::Identity::scaled_recurrence;
    case SHF_IDENTITY_BINOMIAL_RECURRENCE: return sheffer::Identity::binomial_recurrence;
  }
  throw sheffer::InvalidArgument("unknown identity");
}

void write_residual(const sheffer::Poly& r, char** residual_json, int* is_zero) {
  if (residual_json != nullptr) *residual_json = dup(sheffer::to_json(r).dump());
  *is_zero = r.is_zero() ? 1 : 0;
}

}  // namespace

extern "C" {

const char* shf_last_error(void) { return last_error.c_str(); }

void shf_string_free(char* s) { std::free(s); }

shf_status shf_families_json(char** out) {
  return guarded([&] {
    require(out, "out");
    sheffer::json arr = sheffer::json::array();
    for (const auto& f : sheffer::list_families()) arr.push_back(sheffer::to_json(f));
    *out = dup(arr.dump());
  });
}

shf_status shf_pair_create(const char* family, const char* const* param_names,
                           const char* const* param_values, size_t param_count, size_t order,
                           shf_pair** out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    sheffer::ParamMap params;
    for (size_t i = 0; i < param_count; ++i) {
      require(param_names[i], "parameter name");
      require(param_values[i], "parameter value");
      if (!params.emplace(param_names[i], sheffer::Rational::parse(param_values[i])).second)
        throw sheffer::InvalidArgument(std::string("duplicate parameter '") + param_names[i] + "'");
    }
    *out = new shf_pair{sheffer::make_pair(family, params, order)};
  });
}

shf_status shf_pair_from_coefficients(const char* const* l_coeffs, const char* const* h_coeffs,
                                      size_t count, shf_pair** out) {
  return guarded([&] {
    require(out, "out");
    require(l_coeffs, "l_coeffs");
    require(h_coeffs, "h_coeffs");
    if (count < 2) throw sheffer::InvalidArgument("a pair needs at least two coefficients (order >= 1)");
    std::vector<sheffer::Rational> l, h;
    for (size_t i = 0; i < count; ++i) {
      require(l_coeffs[i], "l coefficient");
      require(h_coeffs[i], "h coefficient");
      l.push_back(sheffer::Rational::parse(l_coeffs[i]));
      h.push_back(sheffer::Rational::parse(h_coeffs[i]));
    }
    try {
      *out = new shf_pair{sheffer::ShefferPair(sheffer::RationalSeries(count - 1, std::move(l)),
                                               sheffer::RationalSeries(count - 1, std::move(h)))};
    } catch (const sheffer::ContractViolation& e) {
      throw sheffer::InvalidArgument(e.what());
    }
  });
}

void shf_pair_free(shf_pair* pair) { delete pair; }

size_t shf_pair_order(const shf_pair* pair) { return pair == nullptr ? 0 : pair->value.order(); }

shf_status shf_sequence_generate(const shf_pair* pair, shf_kind kind, size_t n, shf_sequence** out) {
  return guarded([&] {
    require(pair, "pair");
    require(out, "out");
    sheffer::PolySequence seq;
    switch (kind) {
      case SHF_KIND_SHEFFER: seq = sheffer::sheffer_sequence(pair->value, n); break;
      case SHF_KIND_APPELL: seq = sheffer::appell_sequence(pair->value.l(), n); break;
      case SHF_KIND_SHEFFER_APPELL: seq = sheffer::sheffer_appell_sequence(pair->value, n); break;
      default: throw sheffer::InvalidArgument("unknown sequence kind");
    }
    *out = new shf_sequence{std::move(seq)};
  });
}

void shf_sequence_free(shf_sequence* seq) { delete seq; }

size_t shf_sequence_length(const shf_sequence* seq) { return seq == nullptr ? 0 : seq->value.polys.size(); }

shf_status shf_sequence_poly_json(const shf_sequence* seq, size_t degree, char** out) {
  return guarded([&] {
    require(seq, "seq");
    require(out, "out");
    if (degree >= seq->value.polys.size()) throw sheffer::InvalidArgument("degree out of range");
    *out = dup(sheffer::to_json(seq->value.polys[degree]).dump());
  });
}

shf_status shf_sequence_render(const shf_sequence* seq, shf_format format, char** out) {
  return guarded([&] {
    require(seq, "seq");
    require(out, "out");
    switch (format) {
      case SHF_FORMAT_JSON: *out = dup(sheffer::to_json(seq->value).dump()); break;
      case SHF_FORMAT_CSV: *out = dup(sheffer::to_csv(seq->value)); break;
      case SHF_FORMAT_LATEX: *out = dup(sheffer::to_latex(seq->value)); break;
      default: throw sheffer::InvalidArgument("unknown output format");
    }
  });
}

shf_status shf_coefficients_json(const shf_pair* pair, shf_identity identity, size_t n, char** out) {
  return guarded([&] {
    require(pair, "pair");
    require(out, "out");
    *out = dup(sheffer::to_json(sheffer::coefficient_triple(pair->value, identity_of(identity), n)).dump());
  });
}

shf_status shf_residual(const shf_pair* pair, shf_identity identity, size_t n, char** residual_json,
                        int* is_zero) {
  return guarded([&] {
    require(pair, "pair");
    require(is_zero, "is_zero");
    write_residual(sheffer::residual(pair->value, identity_of(identity), n), residual_json, is_zero);
  });
}

shf_status shf_corollary_residual(const shf_pair* pair, shf_corollary which, size_t n, char** residual_json,
                                  int* is_zero) {
  return guarded([&] {
    require(pair, "pair");
    require(is_zero, "is_zero");
    sheffer::Corollary c;
    switch (which) {
      case SHF_COROLLARY_DIFFERENTIAL: c = sheffer::Corollary::differential; break;
      case SHF_COROLLARY_DERIVATIVE_RECURRENCE: c = sheffer::Corollary::derivative_recurrence; break;
      case SHF_COROLLARY_SCALED_DUPLICATE: c = sheffer::Corollary::scaled_duplicate; break;
      case SHF_COROLLARY_BINOMIAL_RECURRENCE: c = sheffer::Corollary::binomial_recurrence; break;
      default: throw sheffer::InvalidArgument("unknown corollary");
    }
    write_residual(sheffer::corollary_residual(pair->value, c, n), residual_json, is_zero);
  });
}

shf_status shf_lemma_check(const shf_pair* pair, size_t n, int* holds) {
  return guarded([&] {
    require(pair, "pair");
    require(holds, "holds");
    *holds = sheffer::lemma_check(pair->value, n) ? 1 : 0;
  });
}

shf_status shf_property_check(const shf_pair* pair, shf_property property, size_t n, int* holds) {
  return guarded([&] {
    require(pair, "pair");
    require(holds, "holds");
    const auto& l = pair->value.l().series();
    const auto& h = pair->value.h();
    bool ok = false;
    switch (property) {
      case SHF_PROPERTY_LINEARITY:
        ok = sheffer::check_linearity(l, h.series(), sheffer::Rational(2), sheffer::Rational(-1, 3), n);
        break;
      case SHF_PROPERTY_PASCAL_PRODUCT:
        ok = sheffer::check_pascal_product(l, h.series(), n) &&
             sheffer::check_pascal_product(l, sheffer::reciprocal(l), n);
        break;
      case SHF_PROPERTY_WRONSKIAN_PRODUCT:
        ok = sheffer::check_wronskian_product(l, h.series(), n) &&
             sheffer::check_wronskian_product(sheffer::lift<sheffer::Poly>(l), sheffer::exponential_xy(l.order()), n);
        break;
      case SHF_PROPERTY_COMPOSITION:
        ok = sheffer::check_composition_factorization(l, h, n) &&
             sheffer::check_composition_factorization(sheffer::reciprocal(l), h, n);
        break;
      default: throw sheffer::InvalidArgument("unknown property");
    }
    *holds = ok ? 1 : 0;
  });
}

shf_status shf_convolution_check(const shf_pair* pair, size_t n, int* holds) {
  return guarded([&] {
    require(pair, "pair");
    require(holds, "holds");
    if (pair->value.order() < n) throw sheffer::ContractViolation("pair order below n");
    const auto kernel = sheffer::derivative_vector(sheffer::reciprocal(pair->value.l().series().truncated(n)));
    const auto conv = sheffer::discrete_convolution(kernel, sheffer::sheffer_sequence(pair->value, n));
    *holds = conv.polys == sheffer::sheffer_appell_sequence(pair->value, n).polys ? 1 : 0;
  });
}

shf_status shf_audit_json(size_t n, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup(sheffer::to_json(sheffer::audit_closed_forms(n)).dump(2));
  });
}

}  // extern "C"
