#pragma once

#include <cstddef>
#include <vector>

#include "sheffer/error.hpp"
#include "sheffer/poly.hpp"
#include "sheffer/rational.hpp"
#include "sheffer/series.hpp"

namespace sheffer {

/// Dense row-major rows x cols matrix over Rational or Poly.
template <class R>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(Rational(1));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_lower_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_shape(b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
    return out;
  }
  friend Matrix operator*(const Rational& s, Matrix a) {
    for (auto& v : a.data_) v *= s;
    return a;
  }
  /// Schoolbook product.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ContractViolation("matrix product: inner dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void require_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractViolation("matrix shape mismatch");
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<R> data_;
};

/// Square matrix whose entries above the diagonal are identically zero.
template <class R>
class LowerTriangularMatrix {
 public:
  explicit LowerTriangularMatrix(Matrix<R> m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || !m_.is_lower_triangular())
      throw ContractViolation("matrix is not square lower triangular");
  }
  std::size_t dimension() const { return m_.rows(); }
  const R& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix<R>& dense() const { return m_; }

  friend LowerTriangularMatrix operator*(const LowerTriangularMatrix& a,
                                         const LowerTriangularMatrix& b) {
    return LowerTriangularMatrix(a.m_ * b.m_);
  }
  friend bool operator==(const LowerTriangularMatrix&, const LowerTriangularMatrix&) = default;

 private:
  Matrix<R> m_;
};

/// Embeds a rational matrix into Poly entries.
Matrix<Poly> lift(const Matrix<Rational>& m);

namespace detail {
inline void require_order(std::size_t have, std::size_t n, const char* what) {
  if (have < n)
    throw ContractViolation(std::string(what) + ": series order " + std::to_string(have) +
                            " is below dimension index " + std::to_string(n));
}
}  // namespace detail

/// Generalized Pascal functional matrix at y = 0: entry (i, j) is
/// C(i, j) f^{(i-j)}(0) for i >= j.
template <class R>
LowerTriangularMatrix<R> pascal_matrix(const Series<R>& f, std::size_t n) {
  detail::require_order(f.order(), n, "pascal_matrix");
  const auto dv = derivative_vector(f.truncated(n));
  Matrix<R> m(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      R v = dv[i - j];
      v *= binomial(static_cast<unsigned>(i), static_cast<unsigned>(j));
      m(i, j) = std::move(v);
    }
  return LowerTriangularMatrix<R>(std::move(m));
}

/// Column [f(0), f'(0), ..., f^{(n)}(0)]^T.
template <class R>
Matrix<R> wronskian_vector(const Series<R>& f, std::size_t n) {
  detail::require_order(f.order(), n, "wronskian_vector");
  auto dv = derivative_vector(f.truncated(n));
  Matrix<R> m(n + 1, 1);
  for (std::size_t i = 0; i <= n; ++i) m(i, 0) = std::move(dv[i]);
  return m;
}

/// W_n[1, h, h^2, ..., h^n] at y = 0; lower triangular since h^j = O(y^j).
Matrix<Rational> wronskian_powers_matrix(const DeltaSeries& h, std::size_t n);

/// diag(0!, 1!, ..., n!) and its inverse.
Matrix<Rational> omega(std::size_t n);
Matrix<Rational> omega_inverse(std::size_t n);

/// P_n[f g] = P_n[f] P_n[g] = P_n[g] P_n[f].
bool check_pascal_product(const RationalSeries& f, const RationalSeries& g, std::size_t n);

/// W_n[f g] = P_n[f] W_n[g] = P_n[g] W_n[f].
template <class R>
bool check_wronskian_product(const Series<R>& f, const Series<R>& g, std::size_t n) {
  detail::require_order(f.order(), n, "check_wronskian_product");
  detail::require_order(g.order(), n, "check_wronskian_product");
  const auto fn = f.truncated(n);
  const auto gn = g.truncated(n);
  const auto lhs = wronskian_vector(fn * gn, n);
  return lhs == pascal_matrix(fn, n).dense() * wronskian_vector(gn, n) &&
         lhs == pascal_matrix(gn, n).dense() * wronskian_vector(fn, n);
}

/// W_n[l(h(y))] = W_n[1, h, ..., h^n] Omega_n^{-1} W_n[l], all at y = 0.
bool check_composition_factorization(const RationalSeries& l, const DeltaSeries& h, std::size_t n);

/// P_n and W_n are linear: P[u f + v g] = u P[f] + v P[g], likewise W.
bool check_linearity(const RationalSeries& f, const RationalSeries& g, const Rational& u,
                     const Rational& v, std::size_t n);

}  // namespace sheffer
