#pragma once

#include <complex>
#include <cstdint>
#include <span>

#include "padebary/numkernel.hpp"

namespace padebary {

/// Truncated formal power series c_0 + c_1 t + ... + c_N t^N.
///
/// Reading c_i for i < 0 yields 0; reading past the truncation order throws
/// InsufficientOrder, since those coefficients are unknown rather than zero.
class FormalPowerSeries {
 public:
  /// Throws InvalidArgument when empty or when a coefficient is not finite.
  explicit FormalPowerSeries(CVector coeffs);
  FormalPowerSeries(std::initializer_list<cplx> coeffs)
      : FormalPowerSeries(CVector(coeffs)) {}

  /// Truncation order N.
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const CVector& coeffs() const noexcept { return coeffs_; }

  cplx operator[](int i) const;

  /// max_i |c_i| over the stored coefficients.
  double scale() const { return max_abs(coeffs_); }

  /// The first n+1 coefficients.
  FormalPowerSeries truncated(int n) const;

  /// Throws InsufficientOrder unless order() >= n. `what` names the caller.
  void require_order(int n, const char* what) const;

  friend bool operator==(const FormalPowerSeries&, const FormalPowerSeries&) = default;

 private:
  CVector coeffs_;
};

/// tan(omega t) / (omega t), from the recurrence (n+1) T_{n+1} = [n==0] + sum T_i T_{n-i}
/// of tan' = 1 + tan^2.
FormalPowerSeries tan_over_t_series(double omega, int order);

/// log(1 + t) / t, c_n = (-1)^n / (n+1).
FormalPowerSeries log1p_over_t_series(int order);

/// c_n = r^n.
FormalPowerSeries geometric_series(cplx r, int order);

/// c_n = 1 / n!.
FormalPowerSeries exp_series(int order);

/// Adds an independent real perturbation drawn uniformly from [-eps, eps] to
/// each coefficient. Draws come from std::mt19937_64 seeded with `seed`; the
/// 53 high bits of each draw are mapped to [0, 1) directly, so the result is
/// identical on every standard library.
FormalPowerSeries perturb(const FormalPowerSeries& s, double eps, std::uint64_t seed);

/// f_n(t) = c_0 + ... + c_n t^n; the zero polynomial for n < 0.
Polynomial partial_sum(const FormalPowerSeries& s, int n);

/// Cauchy product truncated at order n. Both factors must reach order n.
FormalPowerSeries mul_truncated(const FormalPowerSeries& a, const FormalPowerSeries& b, int n);

/// f^n(t) = c_n + c_{n+1} t + ..., so that f = f_{n-1} + t^n f^n.
FormalPowerSeries tail_series(const FormalPowerSeries& s, int n);

/// t^n f(t): n leading zeros followed by the coefficients of f.
FormalPowerSeries shift_up(const FormalPowerSeries& s, int n);

}  // namespace padebary
