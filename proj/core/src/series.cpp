#include "padebary/series.hpp"

#include <cmath>
#include <random>
#include <string>

#include "padebary/errors.hpp"

namespace padebary {

FormalPowerSeries::FormalPowerSeries(CVector coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("a series needs at least one coefficient");
  for (const cplx& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InvalidArgument("non-finite series coefficient");
    }
  }
}

cplx FormalPowerSeries::operator[](int i) const {
  if (i < 0) return cplx{0.0};
  if (i > order()) {
    throw InsufficientOrder("coefficient c_" + std::to_string(i) + " requested from a series of order " +
                            std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(i)];
}

FormalPowerSeries FormalPowerSeries::truncated(int n) const {
  require_order(n, "truncated");
  if (n < 0) throw InvalidArgument("negative truncation order");
  return FormalPowerSeries(CVector(coeffs_.begin(), coeffs_.begin() + n + 1));
}

void FormalPowerSeries::require_order(int n, const char* what) const {
  if (order() < n) {
    throw InsufficientOrder(std::string(what) + " needs order " + std::to_string(n) +
                            ", series has order " + std::to_string(order()));
  }
}

FormalPowerSeries tan_over_t_series(double omega, int order) {
  if (omega == 0.0 || !std::isfinite(omega)) throw InvalidArgument("omega must be finite and nonzero");
  if (order < 0) throw InvalidArgument("negative order");
  const auto m = static_cast<std::size_t>(order) + 2;
  std::vector<double> tan_coeffs(m, 0.0);
  tan_coeffs[1] = 1.0;
  for (std::size_t n = 1; n + 1 < m; ++n) {
    double conv = 0.0;
    for (std::size_t i = 0; i <= n; ++i) conv += tan_coeffs[i] * tan_coeffs[n - i];
    tan_coeffs[n + 1] = conv / static_cast<double>(n + 1);
  }
  CVector c(static_cast<std::size_t>(order) + 1);
  double w = 1.0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    c[n] = tan_coeffs[n + 1] * w;
    w *= omega;
  }
  return FormalPowerSeries(std::move(c));
}

FormalPowerSeries log1p_over_t_series(int order) {
  if (order < 0) throw InvalidArgument("negative order");
  CVector c(static_cast<std::size_t>(order) + 1);
  for (std::size_t n = 0; n < c.size(); ++n) {
    c[n] = (n % 2 == 0 ? 1.0 : -1.0) / static_cast<double>(n + 1);
  }
  return FormalPowerSeries(std::move(c));
}

FormalPowerSeries geometric_series(cplx r, int order) {
  if (order < 0) throw InvalidArgument("negative order");
  CVector c(static_cast<std::size_t>(order) + 1);
  cplx w{1.0};
  for (cplx& v : c) {
    v = w;
    w *= r;
  }
  return FormalPowerSeries(std::move(c));
}

FormalPowerSeries exp_series(int order) {
  if (order < 0) throw InvalidArgument("negative order");
  CVector c(static_cast<std::size_t>(order) + 1);
  double w = 1.0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (n > 0) w /= static_cast<double>(n);
    c[n] = w;
  }
  return FormalPowerSeries(std::move(c));
}

FormalPowerSeries perturb(const FormalPowerSeries& s, double eps, std::uint64_t seed) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw InvalidArgument("eps must be finite and >= 0");
  std::mt19937_64 gen(seed);
  CVector c = s.coeffs();
  for (cplx& v : c) {
    const double unit = static_cast<double>(gen() >> 11) * 0x1.0p-53;  // [0, 1)
    v += eps * (2.0 * unit - 1.0);
  }
  return FormalPowerSeries(std::move(c));
}

Polynomial partial_sum(const FormalPowerSeries& s, int n) {
  if (n < 0) return Polynomial{};
  s.require_order(n, "partial_sum");
  return Polynomial(CVector(s.coeffs().begin(), s.coeffs().begin() + n + 1));
}

FormalPowerSeries mul_truncated(const FormalPowerSeries& a, const FormalPowerSeries& b, int n) {
  if (n < 0) throw InvalidArgument("negative order");
  a.require_order(n, "mul_truncated");
  b.require_order(n, "mul_truncated");
  CVector c(static_cast<std::size_t>(n) + 1, cplx{0.0});
  for (int k = 0; k <= n; ++k) {
    for (int j = 0; j <= k; ++j) c[static_cast<std::size_t>(k)] += a[j] * b[k - j];
  }
  return FormalPowerSeries(std::move(c));
}

FormalPowerSeries tail_series(const FormalPowerSeries& s, int n) {
  if (n < 0) throw InvalidArgument("negative shift");
  s.require_order(n, "tail_series");
  return FormalPowerSeries(CVector(s.coeffs().begin() + n, s.coeffs().end()));
}

FormalPowerSeries shift_up(const FormalPowerSeries& s, int n) {
  if (n < 0) throw InvalidArgument("negative shift");
  CVector c(static_cast<std::size_t>(n), cplx{0.0});
  c.insert(c.end(), s.coeffs().begin(), s.coeffs().end());
  return FormalPowerSeries(std::move(c));
}

}  // namespace padebary
