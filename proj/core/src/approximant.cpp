#include "padebary/approximant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace padebary {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string_view kind_name(const Approximant& r) {
  return std::visit(overloaded{
                        [](const RationalFunction&) { return std::string_view{"rational"}; },
                        [](const BarycentricForm1&) { return std::string_view{"bary1"}; },
                        [](const BarycentricForm2&) { return std::string_view{"bary2"}; },
                        [](const PartialFraction&) { return std::string_view{"pfpa"}; },
                    },
                    r);
}

cplx evaluate(const Approximant& r, cplx t) {
  return std::visit(overloaded{
                        [t](const RationalFunction& f) { return f(t); },
                        [t](const BarycentricForm1& f) { return eval_form1(f, t); },
                        [t](const BarycentricForm2& f) { return eval_form2(f, t); },
                        [t](const PartialFraction& f) { return f(t); },
                    },
                    r);
}

FormalPowerSeries expand(const Approximant& r, int n) {
  return std::visit(overloaded{
                        [n](const RationalFunction& f) { return expand_rational(f, n); },
                        [n](const BarycentricForm1& f) { return expand_form1(f, n); },
                        [n](const BarycentricForm2& f) { return expand_form2(f, n); },
                        [n](const PartialFraction& f) { return f.expand(n); },
                    },
                    r);
}

RationalFunction as_rational(const Approximant& r) {
  return std::visit(overloaded{
                        [](const RationalFunction& f) { return f; },
                        [](const BarycentricForm1& f) { return to_rational(f); },
                        [](const BarycentricForm2& f) { return to_rational(f); },
                        [](const PartialFraction& f) { return f.to_rational(); },
                    },
                    r);
}

std::optional<cplx> near_cancelled_pole(const Approximant& r, double rel_sep) {
  const RationalFunction f = as_rational(r);
  if (f.den.degree() < 1 || f.num.degree() < 1) return std::nullopt;
  const CVector poles = poly_roots(f.den);
  const CVector zeros = poly_roots(f.num);
  std::optional<cplx> best;
  for (const cplx& p : poles) {
    double gap = std::numeric_limits<double>::infinity();
    for (const cplx& z : zeros) gap = std::min(gap, std::abs(p - z));
    if (gap <= rel_sep * (1.0 + std::abs(p)) && (!best || std::abs(p) < std::abs(*best))) best = p;
  }
  return best;
}

int contact_order(const FormalPowerSeries& expansion, const FormalPowerSeries& c, double rel_tol) {
  const int n = std::min(expansion.order(), c.order());
  const double tol = rel_tol * c.scale();
  int m = 0;
  while (m <= n && std::abs(expansion[m] - c[m]) <= tol) ++m;
  return m;
}

int contact_order(const Approximant& r, const FormalPowerSeries& c, double rel_tol) {
  return contact_order(expand(r, c.order()), c, rel_tol);
}

}  // namespace padebary
