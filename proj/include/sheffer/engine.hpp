#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "sheffer/matrix.hpp"
#include "sheffer/poly.hpp"
#include "sheffer/series.hpp"

namespace sheffer {

/// The generating pair (l, h): l invertible, h a delta series, equal orders.
class ShefferPair {
 public:
  ShefferPair(InvertibleSeries l, DeltaSeries h);
  ShefferPair(RationalSeries l, RationalSeries h)
      : ShefferPair(InvertibleSeries(std::move(l)), DeltaSeries(std::move(h))) {}

  const InvertibleSeries& l() const { return l_; }
  const DeltaSeries& h() const { return h_; }
  std::size_t order() const { return h_.order(); }
  /// order must be >= 1 and <= order().
  ShefferPair truncated(std::size_t order) const;
  /// True when l is exactly the constant 1.
  bool is_associated() const;

 private:
  InvertibleSeries l_;
  DeltaSeries h_;
};

enum class SequenceKind { sheffer, appell, sheffer_appell, associated };

std::string_view to_string(SequenceKind kind);

/// polys[k] has exact degree k.
struct PolySequence {
  SequenceKind kind;
  std::vector<Poly> polys;
};

/// e^{x y} as a Poly-coefficient series: coefficient of y^k is x^k / k!.
PolySeries exponential_xy(std::size_t order);

/// e^{x h^{-1}(y)} / (l(h^{-1}(y)) l(y)); requires p.order() >= n.
PolySequence sheffer_appell_sequence(const ShefferPair& p, std::size_t n);
/// e^{x h^{-1}(y)} / l(h^{-1}(y)); kind is `associated` when l = 1.
PolySequence sheffer_sequence(const ShefferPair& p, std::size_t n);
/// e^{x y} / l(y); requires l.order() >= n.
PolySequence appell_sequence(const InvertibleSeries& l, std::size_t n);

/// result_n = sum_k C(n, k) kernel[k] s_{n-k}; kernel needs at least as many
/// entries as s has polynomials.
PolySequence discrete_convolution(std::span<const Rational> kernel, const PolySequence& s);

/// The four identities satisfied by every Sheffer-Appell sequence:
///   differential_equation    sum_k (x a_k + b_k + c_k) A_n^{(k)}/k! = n A_n
///   derivative_recurrence    A_{n+1} = sum_k (x a_k + b_k + c_k) A_n^{(k)}/k!
///   scaled_recurrence        a_0 A_{n+1} = x A_n + sum_k C(n,k) A_{n-k} (b_k + c_k)
///                                          - sum_{k>=1} C(n,k) A_{n+1-k} a_k
///   binomial_recurrence      A_{n+1} = sum_k C(n,k) (x a_k + b_k + c_k) A_{n-k}
/// Each comes with its own defining series for (a, b, c); see coefficient_triple.
enum class Identity { differential_equation, derivative_recurrence, scaled_recurrence, binomial_recurrence };

std::string_view to_string(Identity id);

/// Taylor coefficients at y = 0 (k-th derivatives) of the identity's defining
/// series, k = 0..n.
struct CoeffTriple {
  Identity identity;
  std::vector<Rational> a, b, c;
};

/// The y-series behind a CoeffTriple, computed at the given working order.
struct CoeffSeries {
  RationalSeries a, b, c;
};

/// Requires p.order() >= n + 1.
CoeffSeries coefficient_series(const ShefferPair& p, Identity id, std::size_t n);
CoeffTriple coefficient_triple(const ShefferPair& p, Identity id, std::size_t n);

/// Left side minus right side of the identity at degree n; the zero
/// polynomial for every valid pair. Requires p.order() >= n + 1.
Poly residual(const ShefferPair& p, Identity id, std::size_t n);

/// Residual of the identity against a caller-supplied sequence and triple
/// (seq needs degrees up to n + 1 for the recurrences, n otherwise).
Poly residual(const std::vector<Poly>& seq, const CoeffTriple& t, std::size_t n);

/// Associated-sequence specializations (l = 1). differential and
/// derivative/binomial recurrences delegate to the corresponding identity;
/// `scaled` is the printed duplicate of the derivative recurrence.
enum class Corollary { differential, derivative_recurrence, scaled_duplicate, binomial_recurrence };

/// Throws InvalidArgument when l != 1.
Poly corollary_residual(const ShefferPair& p, Corollary which, std::size_t n);

/// Entry (i, j) = A_i^{(j)}(x) / j!, i, j = 0..n, with x-derivatives.
Matrix<Poly> x_derivative_table(const std::vector<Poly>& seq, std::size_t n);

/// The two sides of the matrix factorization of the Sheffer-Appell table.
struct LemmaSides {
  Matrix<Poly> lhs;
  Matrix<Poly> rhs;
};
LemmaSides lemma_sides(const ShefferPair& p, std::size_t n);
bool lemma_check(const ShefferPair& p, std::size_t n);

}  // namespace sheffer
