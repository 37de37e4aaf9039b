#include "padebary/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "padebary/errors.hpp"

namespace padebary {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0}) {}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix rows");
    for (const cplx& v : r) {
      if (!finite(v)) throw InvalidArgument("non-finite matrix entry");
      data_.push_back(v);
    }
  }
}

double CMatrix::max_abs() const { return padebary::max_abs(data_); }

double CMatrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (const cplx& v : row(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

bool CMatrix::all_finite() const { return std::all_of(data_.begin(), data_.end(), finite); }

CVector CMatrix::operator*(std::span<const cplx> x) const {
  if (x.size() != cols_) throw InvalidArgument("matrix-vector shape mismatch");
  CVector y(rows_, cplx{0.0});
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  }
  return y;
}

double norm_inf(std::span<const cplx> x) { return max_abs(x); }

double max_abs(std::span<const cplx> x) {
  double m = 0.0;
  for (const cplx& v : x) m = std::max(m, std::abs(v));
  return m;
}

cplx pole_marker() { return {std::numeric_limits<double>::infinity(), 0.0}; }

bool is_pole(cplx z) { return std::isinf(z.real()) || std::isinf(z.imag()); }

cplx ipow(cplx z, int n) {
  if (n < 0) return cplx{1.0} / ipow(z, -n);
  cplx result{1.0};
  cplx base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

namespace {

struct LuFactors {
  CMatrix lu;
  std::vector<std::size_t> perm;
};

LuFactors lu_factor(const CMatrix& a) {
  const std::size_t n = a.rows();
  LuFactors f{a, std::vector<std::size_t>(n)};
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  const double threshold = static_cast<double>(n) * kEps * a.max_abs();
  CMatrix& m = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(m(i, k)) > best) {
        best = std::abs(m(i, k));
        piv = i;
      }
    }
    if (best <= threshold || best == 0.0) {
      throw SingularMatrix("pivot " + std::to_string(k) + " of " + std::to_string(n) +
                           " below threshold");
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx l = m(i, k) / m(k, k);
      m(i, k) = l;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= l * m(k, j);
    }
  }
  return f;
}

CVector lu_solve(const LuFactors& f, std::span<const cplx> b) {
  const std::size_t n = f.perm.size();
  CVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[f.perm[i]];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) x[i] -= f.lu(i, j) * x[j];
    x[i] /= f.lu(i, i);
  }
  return x;
}

}  // namespace

CVector solve_dense(const CMatrix& a, std::span<const cplx> b) {
  if (a.rows() != a.cols()) throw InvalidArgument("solve_dense needs a square matrix");
  if (b.size() != a.rows()) throw InvalidArgument("right-hand side length mismatch");
  if (!a.all_finite() || !std::all_of(b.begin(), b.end(), finite)) {
    throw InvalidArgument("non-finite entry in linear system");
  }
  if (a.rows() == 0) return {};

  const LuFactors f = lu_factor(a);
  CVector x = lu_solve(f, b);

  // One refinement step; kept only when it lowers the residual.
  CVector r = a * x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
  const CVector dx = lu_solve(f, r);
  CVector refined = x;
  for (std::size_t i = 0; i < x.size(); ++i) refined[i] += dx[i];
  CVector r2 = a * refined;
  for (std::size_t i = 0; i < r2.size(); ++i) r2[i] = b[i] - r2[i];
  if (norm_inf(r2) < norm_inf(r)) x = std::move(refined);

  if (!std::all_of(x.begin(), x.end(), finite)) {
    throw SingularMatrix("solution overflowed");
  }
  return x;
}

CVector solve_min_norm(const CMatrix& a, std::span<const cplx> b, double rel_tol) {
  if (a.rows() != a.cols()) throw InvalidArgument("solve_min_norm needs a square matrix");
  if (b.size() != a.rows()) throw InvalidArgument("right-hand side length mismatch");
  if (!a.all_finite() || !std::all_of(b.begin(), b.end(), finite)) {
    throw InvalidArgument("non-finite entry in linear system");
  }
  const auto n = static_cast<Eigen::Index>(a.rows());
  if (n == 0) return {};

  Eigen::MatrixXcd m(n, n);
  Eigen::VectorXcd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    rhs(i) = b[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(m);
  const Eigen::VectorXcd sol = cod.solve(rhs);
  CVector x(sol.data(), sol.data() + n);

  CVector r = a * x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  const double scale = a.norm_inf() * norm_inf(x) + norm_inf(b);
  if (!std::all_of(x.begin(), x.end(), finite) || norm_inf(r) > rel_tol * scale) {
    throw SingularMatrix("inconsistent rank-deficient system");
  }
  return x;
}

Polynomial::Polynomial(CVector coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(int n, cplx c) {
  if (n < 0) throw InvalidArgument("negative monomial degree");
  CVector v(static_cast<std::size_t>(n) + 1, cplx{0.0});
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == cplx{0.0}) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(cplx{0.0});
}

cplx Polynomial::operator()(cplx t) const {
  cplx acc{0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), cplx{0.0});
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), cplx{0.0});
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(cplx s) {
  for (cplx& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  CVector out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, cplx{0.0});
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

cplx poly_eval(const Polynomial& p, cplx t) { return p(t); }

Polynomial poly_derivative(const Polynomial& p) {
  if (p.degree() == 0) return Polynomial{};
  CVector d(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) d[static_cast<std::size_t>(i - 1)] = p[i] * double(i);
  return Polynomial(std::move(d));
}

CVector poly_roots(const Polynomial& p) {
  const int d = p.degree();
  if (d < 1) throw InvalidArgument("poly_roots needs degree >= 1");
  const cplx lead = p[d];

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -p[i] / lead;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw NoConvergence("companion eigenvalues");

  const Polynomial dp = poly_derivative(p);
  CVector roots(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    cplx r = solver.eigenvalues()(i);
    if (!finite(r)) throw NoConvergence("non-finite eigenvalue");
    double res = std::abs(p(r));
    for (int it = 0; it < 4 && res > 0.0; ++it) {
      const cplx slope = dp(r);
      if (slope == cplx{0.0}) break;
      const cplx next = r - p(r) / slope;
      const double next_res = std::abs(p(next));
      if (!(next_res < res)) break;
      r = next;
      res = next_res;
    }
    roots[static_cast<std::size_t>(i)] = r;
  }
  return roots;
}

}  // namespace padebary
