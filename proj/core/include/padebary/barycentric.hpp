#pragma once

#include <functional>
#include <span>

#include "padebary/numkernel.hpp"
#include "padebary/pade.hpp"
#include "padebary/series.hpp"

namespace padebary {

/// R(t) = sum_i a_i / (pnodes_i - t)  /  sum_j b_j / (znodes_j - t).
///
/// pnodes are poles and znodes are zeros of R unless a node appears in both
/// families, in which case the shared factor cancels. Nodes must be pairwise
/// distinct within each family and nonzero.
struct BarycentricForm1 {
  CVector a;
  CVector pnodes;
  CVector b;
  CVector znodes;

  int p() const { return static_cast<int>(a.size()) - 1; }
  int q() const { return static_cast<int>(b.size()) - 1; }
};

/// R(t) = sum_i a_i / (1 - pnodes_i t)  /  sum_j b_j / (1 - znodes_j t).
///
/// Same as BarycentricForm1 with reciprocal nodes. A zero node is allowed and
/// contributes a constant term, lowering the corresponding degree.
struct BarycentricForm2 {
  CVector a;
  CVector pnodes;
  CVector b;
  CVector znodes;

  int p() const { return static_cast<int>(a.size()) - 1; }
  int q() const { return static_cast<int>(b.size()) - 1; }
};

/// Barycentric Pade approximant in form 1: matches c through t^{p+q}, with
/// p = pnodes.size() - 1, q = znodes.size() - 1, normalized so that
/// sum_j b_j / znodes_j == 1.
///
/// Solves the (p+q+2)-square system made of the normalization row and, for
/// k = 0..p+q,
///   sum_i a_i pnodes_i^{-(k+1)} - sum_j b_j sum_{l<k} c_l znodes_j^{-(k-l+1)} = c_k.
///
/// Throws InvalidNodes for a zero or repeated node, InsufficientOrder for a
/// short series, SingularMatrix for a degenerate node configuration.
BarycentricForm1 bpa_form1(const FormalPowerSeries& c, std::span<const cplx> pnodes,
                           std::span<const cplx> znodes);

/// Form 2 analogue of bpa_form1, normalized so that sum_j b_j == 1:
///   sum_i a_i pnodes_i^k - sum_j b_j sum_{l<k} c_l znodes_j^{k-l} = c_k.
BarycentricForm2 bpa_form2(const FormalPowerSeries& c, std::span<const cplx> pnodes,
                           std::span<const cplx> znodes);

/// Barycentric Pade-type approximant: denominator weights b are prescribed and
/// the numerator weights solve, for k = 0..p,
///   sum_i a_i pnodes_i^{-(k+1)} = sum_j b_j sum_{l<=k} c_l znodes_j^{-(k-l+1)}.
/// Matches c through t^p. Throws DegenerateDenominator when the prescribed
/// denominator vanishes at t = 0.
BarycentricForm1 bpta_form1(const FormalPowerSeries& c, std::span<const cplx> b,
                            std::span<const cplx> pnodes, std::span<const cplx> znodes);

/// Form 2 analogue: sum_i a_i pnodes_i^k = sum_j b_j sum_{l<=k} c_l znodes_j^{k-l}.
BarycentricForm2 bpta_form2(const FormalPowerSeries& c, std::span<const cplx> b,
                            std::span<const cplx> pnodes, std::span<const cplx> znodes);

/// Direct evaluation of the two sums. When t lies within 1e-13 (1 + |t|) of a
/// node: a pole-only hit yields pole_marker(), a zero-only hit yields 0, and a
/// node shared by both families yields the removable limit a_i / b_j.
cplx eval_form1(const BarycentricForm1& r, cplx t);
cplx eval_form2(const BarycentricForm2& r, cplx t);

/// Series coefficients d_0..d_n of R from the moment sequences of the
/// numerator and denominator sums. Throws DegenerateDenominator when the
/// denominator vanishes at t = 0.
FormalPowerSeries expand_form1(const BarycentricForm1& r, int n);
FormalPowerSeries expand_form2(const BarycentricForm2& r, int n);

/// a_i -> a_i / p_i, b_j -> b_j / z_j, nodes -> 1 / nodes. Throws ZeroNode.
BarycentricForm1 convert_form2_to_form1(const BarycentricForm2& r);
BarycentricForm2 convert_form1_to_form2(const BarycentricForm1& r);

/// Polynomial numerator and denominator obtained by clearing the partial
/// fraction denominators. Node products shared bitwise by both families are
/// cancelled, so pnodes == znodes with p == q gives degrees <= p. The result is
/// normalized to den(0) == 1 when den(0) != 0.
RationalFunction to_rational(const BarycentricForm1& r);
RationalFunction to_rational(const BarycentricForm2& r);

/// Rational interpolant a_i = w_i f_i, b_i = w_i on shared nodes; evaluates to
/// f_i at nodes_i for every choice of nonzero weights.
BarycentricForm1 interpolatory_form1(std::span<const cplx> nodes, std::span<const cplx> values,
                                     std::span<const cplx> weights);

/// Node set of size m + 1 for the diagonal approximant [m/m].
using NodeFamily = std::function<CVector(int m)>;

/// Diagonal engines backed by bpa_form1 / bpa_form2 with coincident node
/// families, converted to rational form.
DiagonalEngine barycentric_engine_form1(NodeFamily nodes);
DiagonalEngine barycentric_engine_form2(NodeFamily nodes);

}  // namespace padebary
