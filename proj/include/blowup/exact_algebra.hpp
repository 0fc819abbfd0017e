#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "blowup/error.hpp"

namespace blowup::algebra {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense row-major matrix with value semantics.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // rows x cols, diagonal, d1 | d2 | ..., d_i >= 0
  IntMatrix V;  // cols x cols, unimodular
};

// U * m * V == D.
SmithForm smith_normal_form(const IntMatrix& m);

// Finitely generated abelian group Z^rank + Z/d1 + ... + Z/dk with
// d1 | d2 | ... | dk and every d_i >= 2.
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const noexcept { return rank == 0 && torsion.empty(); }
  bool is_finite() const noexcept { return rank == 0; }
  // Product of the torsion divisors; only meaningful when rank == 0.
  Integer order() const;
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Group presented by generators = columns and relations = rows of m.
AbelianGroup cokernel(const IntMatrix& m);

// Integer Laurent polynomial. Coefficients are stored densely from min_exp();
// the first and last stored coefficients are nonzero, and the zero polynomial
// stores nothing.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Integer& coeff, int exponent);
  static LaurentPoly t() { return monomial(1, 1); }
  static LaurentPoly from_coeffs(int min_exp, std::vector<Integer> coeffs);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Exponent range; both are 0 for the zero polynomial.
  int min_exp() const noexcept { return low_; }
  int max_exp() const noexcept {
    return coeffs_.empty() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1;
  }
  Integer coeff(int exponent) const;
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

  // True for +-t^k.
  bool is_unit() const;
  LaurentPoly shifted(int k) const;
  // Substitute t -> t^-1.
  LaurentPoly reflected() const;
  Integer content() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Integer> coeffs_;
};

using LaurentMatrix = Matrix<LaurentPoly>;

// Exact quotient a / b in Z[t, t^-1]; throws std::domain_error when b does
// not divide a.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// Bareiss elimination over Z[t, t^-1]; the 0x0 determinant is 1.
LaurentPoly laurent_det(const LaurentMatrix& m);

Rational eval_at(const LaurentPoly& p, const Integer& x);

// Representative of the class p * (+-t^k) with lowest exponent 0 and a
// positive top coefficient.
LaurentPoly unit_normalize(const LaurentPoly& p);
bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b);

// gcd in Z[t, t^-1], unit-normalized; gcd(0, 0) == 0.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace blowup::algebra
