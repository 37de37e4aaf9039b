#pragma once

#include <functional>
#include <span>

#include "padebary/numkernel.hpp"
#include "padebary/series.hpp"

namespace padebary {

/// num(t) / den(t) with ascending-coefficient polynomials.
struct RationalFunction {
  Polynomial num;
  Polynomial den;

  /// Returns pole_marker() when the denominator vanishes exactly.
  cplx operator()(cplx t) const;

  /// Both polynomials divided by den(0). Throws ZeroAtOrigin when den(0) == 0.
  RationalFunction normalized() const;
};

/// Numerator of the Pade-type approximant (p/q) for a prescribed denominator
/// b_0..b_q: a_k = sum_{j=0}^{min(k,q)} c_{k-j} b_j, k = 0..p.
///
/// Throws InvalidDenominator when b is empty or b_0 * b_q == 0, and
/// InsufficientOrder when the series does not reach order p.
Polynomial pade_type_numerator(const FormalPowerSeries& c, std::span<const cplx> b, int p);

/// (p/q)_f with the given denominator; matches f through t^p.
RationalFunction pade_type(const FormalPowerSeries& c, std::span<const cplx> b, int p);

/// Full q x (q+1) coefficient matrix of the homogeneous denominator system:
/// row k-1 (k = 1..q), column j holds c_{p+k-j}, with c_i = 0 for i < 0.
CMatrix pade_denominator_system(const FormalPowerSeries& c, int p, int q);

/// Denominator b_0..b_q of [p/q]_f with b_0 = 1.
///
/// A singular but consistent system (an entry inside a non-normal block of the
/// table) is solved in the minimum-norm sense; any solution gives the same
/// reduced approximant. Throws SingularMatrix when the system is singular and
/// inconsistent, i.e. no denominator with b_0 = 1 exists.
CVector pade_denominator(const FormalPowerSeries& c, int p, int q);

/// [p/q]_f; matches f through t^{p+q}.
RationalFunction pade(const FormalPowerSeries& c, int p, int q);

/// [p/q]_f from the ratio of two (q+1) x (q+1) determinants, each expanded
/// along its polynomial first row with cofactors computed by Laplace
/// expansion. Does not touch the linear solver, so it can serve as an
/// independent check of pade(). Not normalized.
///
/// Requires q <= 4. Throws DegenerateDeterminant when the constant term of the
/// denominator is below 1e-12 times the Hadamard bound of its minor.
RationalFunction pade_determinant_oracle(const FormalPowerSeries& c, int p, int q);

/// Long-division coefficients d_0..d_n of num/den.
/// Throws ZeroAtOrigin when den(0) == 0.
FormalPowerSeries expand_rational(const RationalFunction& r, int n);

/// Any constructor of the diagonal approximant [m/m] of a series.
using DiagonalEngine = std::function<RationalFunction(const FormalPowerSeries&, int m)>;

/// The diagonal entry of the classic Pade table.
DiagonalEngine classic_engine();

/// [n+p/p]_f as c_0 + ... + c_{n-1} t^{n-1} + t^n R_{p,p}(t), where R_{p,p} is
/// the diagonal approximant of the tail f^n. Needs order n + 2p.
RationalFunction shift_numerator(const FormalPowerSeries& c, int n, int p, const DiagonalEngine& engine);

/// [p/n+p]_f as t^{-n} R_{p+n,p+n}(t), where R is the diagonal approximant of
/// t^n f(t). The n leading numerator coefficients, zero by construction, are
/// dropped. Needs order n + 2p.
RationalFunction shift_denominator(const FormalPowerSeries& c, int n, int p, const DiagonalEngine& engine);

}  // namespace padebary
