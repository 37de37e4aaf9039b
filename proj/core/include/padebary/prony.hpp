#pragma once

#include <span>
#include <vector>

#include "padebary/numkernel.hpp"
#include "padebary/pade.hpp"
#include "padebary/series.hpp"

namespace padebary {

/// One term a / (1 - p t) of a partial fraction sum.
struct PartialFractionTerm {
  cplx a;  // residue
  cplx p;  // node
};

/// R(t) = sum_i a_i / (1 - p_i t), a rational function of type [k/k+1] for
/// k + 1 terms with distinct nodes.
struct PartialFraction {
  std::vector<PartialFractionTerm> terms;

  int k() const { return static_cast<int>(terms.size()) - 1; }
  CVector residues() const;
  CVector nodes() const;

  /// pole_marker() when t hits 1 / p_i within 1e-13 (1 + |t|).
  cplx operator()(cplx t) const;

  /// d_j = sum_i a_i p_i^j, j = 0..n.
  FormalPowerSeries expand(int n) const;

  /// Product form: denominator prod (1 - p_i t), normalized to den(0) == 1.
  RationalFunction to_rational() const;
};

/// Intermediate quantities of the Prony-style construction, exposed for
/// checking.
struct PronyResult {
  PartialFraction approximant;
  /// b_0 = 1, b_1..b_{k+1} from the Hankel system.
  CVector hankel_solution;
};

/// Full (k+1) x (k+2) Hankel coefficient matrix: row n, column j holds c_{j+n}.
CMatrix prony_hankel_system(const FormalPowerSeries& c, int k);

/// Partial fraction Pade approximant [k/k+1] of c with its Hankel solution.
///
/// 1. sum_{j=1}^{k+1} b_j c_{j+n} = -c_n, n = 0..k, with b_0 = 1.
/// 2. The nodes are the k+1 roots of B(x) = sum_j b_j x^j, since the moment
///    identity requires B(p_i) = 0.
/// 3. The residues solve the Vandermonde system sum_i a_i p_i^j = c_j, j = 0..k.
///
/// The result matches c through t^{2k+1}. Throws InsufficientOrder when
/// order < 2k+1, SingularMatrix for a singular Hankel system, and
/// NonDistinctNodes when two nodes lie within 1e-6 max|p_i| of each other, in
/// which case no simple partial fraction form exists.
PronyResult pfpa_detailed(const FormalPowerSeries& c, int k);

PartialFraction pfpa(const FormalPowerSeries& c, int k);

/// a_i = -p_i P(1/p_i) / Q'(1/p_i) for [k/k+1] = P / Q.
/// Throws ZeroNode for p_i == 0 and ZeroDerivative when Q'(1/p_i) == 0.
CVector residues_via_derivative(const Polynomial& numerator, const Polynomial& denominator,
                                std::span<const cplx> nodes);

/// r_n = sum_{j=0}^{k+1} b_j c_{j+n}, n = 0..k: the conditions making B
/// orthogonal to x^0..x^k under the moment functional x^i -> c_i.
CVector orthogonality_residuals(const FormalPowerSeries& c, std::span<const cplx> b, int k);

}  // namespace padebary
