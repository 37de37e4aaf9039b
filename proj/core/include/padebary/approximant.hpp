#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "padebary/barycentric.hpp"
#include "padebary/pade.hpp"
#include "padebary/prony.hpp"
#include "padebary/series.hpp"

namespace padebary {

/// Any of the supported representations of an approximant.
using Approximant = std::variant<RationalFunction, BarycentricForm1, BarycentricForm2, PartialFraction>;

/// "rational", "bary1", "bary2" or "pfpa".
std::string_view kind_name(const Approximant& r);

cplx evaluate(const Approximant& r, cplx t);

FormalPowerSeries expand(const Approximant& r, int n);

/// Same function as num/den with den(0) = 1 where possible.
RationalFunction as_rational(const Approximant& r);

/// Pole of r closest to the origin whose nearest zero lies within
/// rel_sep * (1 + |pole|) of it (a near-cancelled pole-zero pair), if any.
/// Such a pair leaves r almost unchanged but amplifies rounding in its Taylor
/// coefficients by roughly |pole|^{-k}.
std::optional<cplx> near_cancelled_pole(const Approximant& r, double rel_sep = 1e-6);

/// Number of leading coefficients shared by `expansion` and `c`: the largest m
/// with |d_i - c_i| <= rel_tol * max|c| for every i < m. Bounded by the shorter
/// of the two.
int contact_order(const FormalPowerSeries& expansion, const FormalPowerSeries& c, double rel_tol = 1e-9);

/// Expands r as far as c reaches and returns contact_order.
int contact_order(const Approximant& r, const FormalPowerSeries& c, double rel_tol = 1e-9);

}  // namespace padebary
