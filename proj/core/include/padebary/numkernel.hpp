#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace padebary {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Dense row-major complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  /// Throws InvalidArgument on ragged rows or non-finite entries.
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const cplx> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  double max_abs() const;
  double norm_inf() const;
  bool all_finite() const;

  CVector operator*(std::span<const cplx> x) const;

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  CVector data_;
};

double norm_inf(std::span<const cplx> x);
double max_abs(std::span<const cplx> x);

/// Value returned by evaluators at a pole hit: +inf real part, zero imaginary.
cplx pole_marker();
bool is_pole(cplx z);

/// Integer power with the convention z^0 == 1 for every z, including 0.
cplx ipow(cplx z, int n);

/// Solves A x = b by Gaussian elimination with partial row pivoting followed
/// by one step of iterative refinement.
///
/// Throws SingularMatrix when a pivot falls below n * eps * max|A_ij|, and
/// InvalidArgument on shape mismatch or non-finite input.
CVector solve_dense(const CMatrix& a, std::span<const cplx> b);

/// Minimum-norm solution of a square system that may be rank deficient, via a
/// complete orthogonal decomposition. Accepts the system only when it is
/// consistent: ||A x - b|| <= rel_tol * (||A|| ||x|| + ||b||) in the max norm.
///
/// Throws SingularMatrix when the system is inconsistent, InvalidArgument as
/// solve_dense.
CVector solve_min_norm(const CMatrix& a, std::span<const cplx> b, double rel_tol = 1e-10);

/// Polynomial with complex coefficients stored in ascending powers.
///
/// Trailing zero coefficients are trimmed on construction so that the leading
/// stored coefficient is nonzero; the zero polynomial is stored as {0} and has
/// degree 0.
class Polynomial {
 public:
  Polynomial() : coeffs_{cplx{0.0}} {}
  explicit Polynomial(CVector coeffs);
  Polynomial(std::initializer_list<cplx> coeffs) : Polynomial(CVector(coeffs)) {}

  static Polynomial constant(cplx c) { return Polynomial(CVector{c}); }
  /// c * t^n
  static Polynomial monomial(int n, cplx c = 1.0);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const CVector& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == cplx{0.0}; }

  /// Coefficient of t^i; zero outside [0, degree].
  cplx operator[](int i) const {
    return (i < 0 || i > degree()) ? cplx{0.0} : coeffs_[static_cast<std::size_t>(i)];
  }

  /// Horner evaluation.
  cplx operator()(cplx t) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(cplx s);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, cplx s) { return lhs *= s; }
  friend Polynomial operator*(cplx s, Polynomial rhs) { return rhs *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  CVector coeffs_;
};

cplx poly_eval(const Polynomial& p, cplx t);
Polynomial poly_derivative(const Polynomial& p);

/// All complex roots of p, with multiplicity, as eigenvalues of the companion
/// matrix, each refined by a few guarded Newton steps.
///
/// Requires degree >= 1 (InvalidArgument otherwise). Throws NoConvergence when
/// the eigenvalue iteration fails.
CVector poly_roots(const Polynomial& p);

}  // namespace padebary
