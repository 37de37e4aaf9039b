#include "padebary/prony.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "padebary/errors.hpp"

namespace padebary {

namespace {

// Roots of a double zero computed in double precision split by about
// sqrt(eps) |p| ~ 1.5e-8 |p|, so the threshold sits well above that.
constexpr double kNodeSeparation = 1e-6;

}  // namespace

CVector PartialFraction::residues() const {
  CVector out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.a);
  return out;
}

CVector PartialFraction::nodes() const {
  CVector out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.p);
  return out;
}

cplx PartialFraction::operator()(cplx t) const {
  const double tol = 1e-13 * (1.0 + std::abs(t));
  cplx sum{0.0};
  for (const auto& term : terms) {
    if (term.a == cplx{0.0}) continue;
    if (term.p != cplx{0.0} && std::abs(t - cplx{1.0} / term.p) <= tol) return pole_marker();
    sum += term.a / (cplx{1.0} - term.p * t);
  }
  return sum;
}

FormalPowerSeries PartialFraction::expand(int n) const {
  if (n < 0) throw InvalidArgument("negative expansion order");
  CVector d(static_cast<std::size_t>(n) + 1, cplx{0.0});
  for (const auto& term : terms) {
    cplx w = term.a;
    for (int j = 0; j <= n; ++j) {
      d[j] += w;
      w *= term.p;
    }
  }
  return FormalPowerSeries(std::move(d));
}

RationalFunction PartialFraction::to_rational() const {
  Polynomial num;
  Polynomial den = Polynomial::constant(1.0);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Polynomial prod = Polynomial::constant(terms[i].a);
    for (std::size_t l = 0; l < terms.size(); ++l) {
      if (l != i) prod = prod * Polynomial{1.0, -terms[l].p};
    }
    num += prod;
    den = den * Polynomial{1.0, -terms[i].p};
  }
  return {num, den};
}

CMatrix prony_hankel_system(const FormalPowerSeries& c, int k) {
  if (k < 0) throw InvalidArgument("negative k");
  c.require_order(2 * k + 1, "prony_hankel_system");
  CMatrix h(static_cast<std::size_t>(k) + 1, static_cast<std::size_t>(k) + 2);
  for (int n = 0; n <= k; ++n) {
    for (int j = 0; j <= k + 1; ++j) h(n, j) = c[j + n];
  }
  return h;
}

PronyResult pfpa_detailed(const FormalPowerSeries& c, int k) {
  const CMatrix full = prony_hankel_system(c, k);
  const auto m = static_cast<std::size_t>(k) + 1;

  CMatrix h(m, m);
  CVector rhs(m);
  for (std::size_t n = 0; n < m; ++n) {
    rhs[n] = -full(n, 0);
    for (std::size_t j = 1; j <= m; ++j) h(n, j - 1) = full(n, j);
  }
  CVector b = solve_dense(h, rhs);
  b.insert(b.begin(), cplx{1.0});

  const Polynomial node_poly(b);
  if (node_poly.degree() != k + 1) {
    throw SingularMatrix("node polynomial has degree " + std::to_string(node_poly.degree()) +
                         ", expected " + std::to_string(k + 1));
  }
  const CVector nodes = poly_roots(node_poly);

  double scale = max_abs(nodes);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(nodes[i] - nodes[j]) <= kNodeSeparation * scale) {
        throw NonDistinctNodes("nodes " + std::to_string(j) + " and " + std::to_string(i) +
                               " coincide; no simple partial fraction form");
      }
    }
  }

  CMatrix vandermonde(m, m);
  CVector moments(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) vandermonde(j, i) = ipow(nodes[i], static_cast<int>(j));
    moments[j] = c[static_cast<int>(j)];
  }
  const CVector residues = solve_dense(vandermonde, moments);

  PronyResult out;
  out.hankel_solution = std::move(b);
  for (std::size_t i = 0; i < m; ++i) out.approximant.terms.push_back({residues[i], nodes[i]});
  return out;
}

PartialFraction pfpa(const FormalPowerSeries& c, int k) { return pfpa_detailed(c, k).approximant; }

CVector residues_via_derivative(const Polynomial& numerator, const Polynomial& denominator,
                                std::span<const cplx> nodes) {
  const Polynomial dq = poly_derivative(denominator);
  CVector out;
  out.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const cplx p = nodes[i];
    if (p == cplx{0.0}) throw ZeroNode("node " + std::to_string(i) + " is zero");
    const cplx x = cplx{1.0} / p;
    const cplx slope = dq(x);
    if (slope == cplx{0.0}) throw ZeroDerivative("Q'(1/p_" + std::to_string(i) + ") vanishes");
    out.push_back(-p * numerator(x) / slope);
  }
  return out;
}

CVector orthogonality_residuals(const FormalPowerSeries& c, std::span<const cplx> b, int k) {
  if (k < 0) throw InvalidArgument("negative k");
  if (b.size() != static_cast<std::size_t>(k) + 2) throw InvalidArgument("need b_0..b_{k+1}");
  c.require_order(2 * k + 1, "orthogonality_residuals");
  CVector r(static_cast<std::size_t>(k) + 1, cplx{0.0});
  for (int n = 0; n <= k; ++n) {
    for (int j = 0; j <= k + 1; ++j) r[n] += b[j] * c[j + n];
  }
  return r;
}

}  // namespace padebary
