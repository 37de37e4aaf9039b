#include "padebary/pade.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "padebary/errors.hpp"

namespace padebary {

namespace {

bool vanishes_at_origin(const Polynomial& den) {
  return std::abs(den[0]) <= 4.0 * std::numeric_limits<double>::epsilon() * max_abs(den.coeffs());
}

// Laplace expansion along the first row; fine for the q <= 4 minors used here.
cplx laplace_det(const CMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1.0;
  if (n == 1) return m(0, 0);
  cplx det{0.0};
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == cplx{0.0}) continue;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    det += sign * m(0, j) * laplace_det([&] {
      CMatrix minor(n - 1, n - 1);
      for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t k = 0, c = 0; k < n; ++k) {
          if (k != j) minor(i - 1, c++) = m(i, k);
        }
      }
      return minor;
    }());
  }
  return det;
}

double hadamard_bound(const CMatrix& m) {
  double bound = 1.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (const cplx& v : m.row(i)) s += std::norm(v);
    bound *= std::sqrt(s);
  }
  return bound;
}

}  // namespace

cplx RationalFunction::operator()(cplx t) const {
  const cplx d = den(t);
  if (d == cplx{0.0}) return pole_marker();
  return num(t) / d;
}

RationalFunction RationalFunction::normalized() const {
  const cplx d0 = den[0];
  if (d0 == cplx{0.0}) throw ZeroAtOrigin("cannot normalize");
  return {num * (1.0 / d0), den * (1.0 / d0)};
}

Polynomial pade_type_numerator(const FormalPowerSeries& c, std::span<const cplx> b, int p) {
  if (b.empty()) throw InvalidDenominator("empty denominator");
  if (b.front() == cplx{0.0} || b.back() == cplx{0.0}) {
    throw InvalidDenominator("b_0 * b_q must be nonzero");
  }
  if (p < 0) throw InvalidArgument("negative numerator degree");
  c.require_order(p, "pade_type_numerator");
  const int q = static_cast<int>(b.size()) - 1;
  CVector a(static_cast<std::size_t>(p) + 1, cplx{0.0});
  for (int k = 0; k <= p; ++k) {
    for (int j = 0; j <= std::min(k, q); ++j) {
      a[static_cast<std::size_t>(k)] += c[k - j] * b[static_cast<std::size_t>(j)];
    }
  }
  return Polynomial(std::move(a));
}

RationalFunction pade_type(const FormalPowerSeries& c, std::span<const cplx> b, int p) {
  return {pade_type_numerator(c, b, p), Polynomial(CVector(b.begin(), b.end()))};
}

CMatrix pade_denominator_system(const FormalPowerSeries& c, int p, int q) {
  if (p < 0 || q < 0) throw InvalidArgument("negative degree");
  c.require_order(p + q, "pade_denominator_system");
  CMatrix m(static_cast<std::size_t>(q), static_cast<std::size_t>(q) + 1);
  for (int k = 1; k <= q; ++k) {
    for (int j = 0; j <= q; ++j) m(k - 1, j) = c[p + k - j];
  }
  return m;
}

CVector pade_denominator(const FormalPowerSeries& c, int p, int q) {
  const CMatrix full = pade_denominator_system(c, p, q);
  if (q == 0) return {cplx{1.0}};
  // Move the b_0 = 1 column to the right-hand side.
  CMatrix a(static_cast<std::size_t>(q), static_cast<std::size_t>(q));
  CVector rhs(static_cast<std::size_t>(q));
  for (int k = 0; k < q; ++k) {
    rhs[k] = -full(k, 0);
    for (int j = 1; j <= q; ++j) a(k, j - 1) = full(k, j);
  }
  CVector b;
  try {
    b = solve_dense(a, rhs);
  } catch (const SingularMatrix&) {
    // Non-normal entry: a consistent system still defines the approximant.
    b = solve_min_norm(a, rhs);
  }
  b.insert(b.begin(), cplx{1.0});
  return b;
}

RationalFunction pade(const FormalPowerSeries& c, int p, int q) {
  const CVector b = pade_denominator(c, p, q);
  if (b.back() == cplx{0.0}) {
    // Denominator degree fell below q; the convolution only needs b_0 b_deg != 0.
    return {pade_type_numerator(c, Polynomial(b).coeffs(), p), Polynomial(b)};
  }
  return pade_type(c, b, p);
}

RationalFunction pade_determinant_oracle(const FormalPowerSeries& c, int p, int q) {
  if (p < 0 || q < 0) throw InvalidArgument("negative degree");
  if (q > 4) throw InvalidArgument("determinant oracle supports q <= 4");
  c.require_order(p + q, "pade_determinant_oracle");

  // Rows 1..q of both determinants: row r holds c_{p-q+r+j}, j = 0..q.
  CMatrix lower(static_cast<std::size_t>(q), static_cast<std::size_t>(q) + 1);
  for (int r = 1; r <= q; ++r) {
    for (int j = 0; j <= q; ++j) lower(r - 1, j) = c[p - q + r + j];
  }
  auto cofactor = [&](int col) {
    CMatrix minor(static_cast<std::size_t>(q), static_cast<std::size_t>(q));
    for (int r = 0; r < q; ++r) {
      for (int j = 0, k = 0; j <= q; ++j) {
        if (j != col) minor(r, k++) = lower(r, j);
      }
    }
    const double sign = (col % 2 == 0) ? 1.0 : -1.0;
    return std::pair{sign * laplace_det(minor), hadamard_bound(minor)};
  };

  Polynomial num;
  Polynomial den;
  double scale = 1.0;
  for (int j = 0; j <= q; ++j) {
    const auto [cof, bound] = cofactor(j);
    const Polynomial tq = Polynomial::monomial(q - j);
    num += tq * partial_sum(c, p - q + j) * cof;
    den += tq * cof;
    if (j == q) scale = bound;
  }
  if (std::abs(den[0]) <= 1e-12 * scale) {
    throw DegenerateDeterminant("constant term of the denominator determinant vanishes");
  }
  return {num, den};
}

FormalPowerSeries expand_rational(const RationalFunction& r, int n) {
  if (n < 0) throw InvalidArgument("negative expansion order");
  if (r.den[0] == cplx{0.0} || vanishes_at_origin(r.den)) {
    throw ZeroAtOrigin("expand_rational");
  }
  const cplx b0 = r.den[0];
  CVector d(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    cplx acc = r.num[k];
    for (int j = 1; j <= std::min(k, r.den.degree()); ++j) acc -= r.den[j] * d[k - j];
    d[k] = acc / b0;
  }
  return FormalPowerSeries(std::move(d));
}

DiagonalEngine classic_engine() {
  return [](const FormalPowerSeries& c, int m) { return pade(c, m, m); };
}

RationalFunction shift_numerator(const FormalPowerSeries& c, int n, int p, const DiagonalEngine& engine) {
  if (n < 0 || p < 0) throw InvalidArgument("negative shift or degree");
  c.require_order(n + 2 * p, "shift_numerator");
  const RationalFunction inner = engine(tail_series(c, n).truncated(2 * p), p);
  return {partial_sum(c, n - 1) * inner.den + Polynomial::monomial(n) * inner.num, inner.den};
}

RationalFunction shift_denominator(const FormalPowerSeries& c, int n, int p, const DiagonalEngine& engine) {
  if (n < 0 || p < 0) throw InvalidArgument("negative shift or degree");
  c.require_order(n + 2 * p, "shift_denominator");
  const FormalPowerSeries lifted = shift_up(c.truncated(n + 2 * p), n);
  const RationalFunction inner = engine(lifted, p + n);
  const CVector& a = inner.num.coeffs();
  CVector reduced;
  if (static_cast<int>(a.size()) > n) reduced.assign(a.begin() + n, a.end());
  if (reduced.empty()) reduced.push_back(cplx{0.0});
  return {Polynomial(std::move(reduced)), inner.den};
}

}  // namespace padebary
