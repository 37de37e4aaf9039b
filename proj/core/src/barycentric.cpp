#include "padebary/barycentric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "padebary/errors.hpp"

namespace padebary {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kNodeHit = 1e-13;

enum class Form { one, two };

// k-th moment of a single simple-pole term: the coefficient of t^k in
// 1 / (node - t) (form 1, node^{-(k+1)}) or in 1 / (1 - node t) (form 2, node^k).
cplx moment(Form form, cplx node, int k) {
  return form == Form::one ? ipow(node, -(k + 1)) : ipow(node, k);
}

// sum_i w_i * moment(node_i, k) for k = 0..n.
CVector moments(Form form, std::span<const cplx> w, std::span<const cplx> nodes, int n) {
  CVector m(static_cast<std::size_t>(n) + 1, cplx{0.0});
  for (int k = 0; k <= n; ++k) {
    for (std::size_t i = 0; i < w.size(); ++i) m[k] += w[i] * moment(form, nodes[i], k);
  }
  return m;
}

void check_nodes(Form form, std::span<const cplx> nodes, const char* family) {
  if (nodes.empty()) throw InvalidNodes(std::string(family) + " nodes are empty");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const cplx x = nodes[i];
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
      throw InvalidNodes(std::string(family) + " node is not finite");
    }
    if (form == Form::one && x == cplx{0.0}) {
      throw InvalidNodes(std::string(family) + " node " + std::to_string(i) + " is zero");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const cplx y = nodes[j];
      if (std::abs(x - y) <= 4.0 * kEps * std::max(std::abs(x), std::abs(y))) {
        throw InvalidNodes(std::string(family) + " nodes " + std::to_string(j) + " and " +
                           std::to_string(i) + " coincide");
      }
    }
  }
}

template <typename F>
void check_form(Form form, const F& r) {
  if (r.a.size() != r.pnodes.size() || r.b.size() != r.znodes.size()) {
    throw InvalidArgument("weight and node counts differ");
  }
  check_nodes(form, r.pnodes, "pole");
  check_nodes(form, r.znodes, "zero");
}

// Divides each row by its largest entry so the pivot threshold of solve_dense
// is measured against comparable rows.
void equilibrate(CMatrix& a, CVector& rhs) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
    if (m == 0.0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) /= m;
    rhs[i] /= m;
  }
}

template <typename F>
F solve_bpa(Form form, const FormalPowerSeries& c, std::span<const cplx> pnodes,
            std::span<const cplx> znodes) {
  check_nodes(form, pnodes, "pole");
  check_nodes(form, znodes, "zero");
  const int p = static_cast<int>(pnodes.size()) - 1;
  const int q = static_cast<int>(znodes.size()) - 1;
  c.require_order(p + q, "bpa");

  const std::size_t n = static_cast<std::size_t>(p + q + 2);
  CMatrix a(n, n);
  CVector rhs(n, cplx{0.0});
  const std::size_t b0 = static_cast<std::size_t>(p) + 1;

  for (int j = 0; j <= q; ++j) a(0, b0 + j) = moment(form, znodes[j], 0);
  rhs[0] = 1.0;
  for (int k = 0; k <= p + q; ++k) {
    const std::size_t row = static_cast<std::size_t>(k) + 1;
    for (int i = 0; i <= p; ++i) a(row, i) = moment(form, pnodes[i], k);
    for (int j = 0; j <= q; ++j) {
      cplx sigma{0.0};
      for (int l = 0; l < k; ++l) sigma += c[l] * moment(form, znodes[j], k - l);
      a(row, b0 + j) = -sigma;
    }
    rhs[row] = c[k];
  }
  equilibrate(a, rhs);
  const CVector x = solve_dense(a, rhs);

  F r;
  r.a.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(b0));
  r.b.assign(x.begin() + static_cast<std::ptrdiff_t>(b0), x.end());
  r.pnodes.assign(pnodes.begin(), pnodes.end());
  r.znodes.assign(znodes.begin(), znodes.end());
  return r;
}

bool denominator_vanishes_at_origin(Form form, std::span<const cplx> b, std::span<const cplx> znodes) {
  cplx beta0{0.0};
  double size = 0.0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    const cplx term = b[j] * moment(form, znodes[j], 0);
    beta0 += term;
    size += std::abs(term);
  }
  return size == 0.0 || std::abs(beta0) <= 16.0 * kEps * size;
}

template <typename F>
F solve_bpta(Form form, const FormalPowerSeries& c, std::span<const cplx> b,
             std::span<const cplx> pnodes, std::span<const cplx> znodes) {
  check_nodes(form, pnodes, "pole");
  check_nodes(form, znodes, "zero");
  if (b.size() != znodes.size()) throw InvalidArgument("need one denominator weight per zero node");
  if (denominator_vanishes_at_origin(form, b, znodes)) {
    throw DegenerateDenominator("prescribed denominator vanishes at t = 0");
  }
  const int p = static_cast<int>(pnodes.size()) - 1;
  c.require_order(p, "bpta");

  const CVector beta = moments(form, b, znodes, p);
  const std::size_t n = static_cast<std::size_t>(p) + 1;
  CMatrix a(n, n);
  CVector rhs(n, cplx{0.0});
  for (int k = 0; k <= p; ++k) {
    for (int i = 0; i <= p; ++i) a(k, i) = moment(form, pnodes[i], k);
    for (int l = 0; l <= k; ++l) rhs[k] += c[l] * beta[k - l];
  }
  equilibrate(a, rhs);

  F r;
  r.a = solve_dense(a, rhs);
  r.pnodes.assign(pnodes.begin(), pnodes.end());
  r.b.assign(b.begin(), b.end());
  r.znodes.assign(znodes.begin(), znodes.end());
  return r;
}

// Location in t of the singularity carried by a node.
std::optional<cplx> node_location(Form form, cplx node) {
  if (form == Form::one) return node;
  if (node == cplx{0.0}) return std::nullopt;
  return cplx{1.0} / node;
}

std::optional<std::size_t> hit(Form form, std::span<const cplx> w, std::span<const cplx> nodes, cplx t) {
  const double tol = kNodeHit * (1.0 + std::abs(t));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (w[i] == cplx{0.0}) continue;
    const auto loc = node_location(form, nodes[i]);
    if (loc && std::abs(t - *loc) <= tol) return i;
  }
  return std::nullopt;
}

cplx term(Form form, cplx node, cplx t) {
  return form == Form::one ? cplx{1.0} / (node - t) : cplx{1.0} / (cplx{1.0} - node * t);
}

template <typename F>
cplx eval_form(Form form, const F& r, cplx t) {
  const auto hp = hit(form, r.a, r.pnodes, t);
  const auto hz = hit(form, r.b, r.znodes, t);
  if (hp && hz) return r.a[*hp] / r.b[*hz];
  if (hp) return pole_marker();
  if (hz) return cplx{0.0};

  cplx num{0.0};
  cplx den{0.0};
  for (std::size_t i = 0; i < r.a.size(); ++i) {
    if (r.a[i] != cplx{0.0}) num += r.a[i] * term(form, r.pnodes[i], t);
  }
  for (std::size_t j = 0; j < r.b.size(); ++j) {
    if (r.b[j] != cplx{0.0}) den += r.b[j] * term(form, r.znodes[j], t);
  }
  if (den == cplx{0.0}) return pole_marker();
  return num / den;
}

template <typename F>
FormalPowerSeries expand_form(Form form, const F& r, int n) {
  if (n < 0) throw InvalidArgument("negative expansion order");
  if (r.a.size() != r.pnodes.size() || r.b.size() != r.znodes.size()) {
    throw InvalidArgument("weight and node counts differ");
  }
  if (denominator_vanishes_at_origin(form, r.b, r.znodes)) {
    throw DegenerateDenominator("denominator sum vanishes at t = 0");
  }
  const CVector alpha = moments(form, r.a, r.pnodes, n);
  const CVector beta = moments(form, r.b, r.znodes, n);
  CVector d(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    cplx acc = alpha[k];
    for (int l = 0; l < k; ++l) acc -= d[l] * beta[k - l];
    d[k] = acc / beta[0];
  }
  return FormalPowerSeries(std::move(d));
}

Polynomial linear_factor(Form form, cplx node) {
  return form == Form::one ? Polynomial{node, -1.0} : Polynomial{1.0, -node};
}

// sum_i w_i prod_{l != i} factor(node_l)
Polynomial cleared_sum(Form form, std::span<const cplx> w, std::span<const cplx> nodes) {
  Polynomial sum;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Polynomial prod = Polynomial::constant(w[i]);
    for (std::size_t l = 0; l < nodes.size(); ++l) {
      if (l != i) prod = prod * linear_factor(form, nodes[l]);
    }
    sum += prod;
  }
  return sum;
}

template <typename F>
RationalFunction to_rational_form(Form form, const F& r) {
  Polynomial num = cleared_sum(form, r.a, r.pnodes);
  Polynomial den = cleared_sum(form, r.b, r.znodes);
  for (const cplx& z : r.znodes) {
    if (std::find(r.pnodes.begin(), r.pnodes.end(), z) == r.pnodes.end()) {
      num = num * linear_factor(form, z);
    }
  }
  for (const cplx& p : r.pnodes) {
    if (std::find(r.znodes.begin(), r.znodes.end(), p) == r.znodes.end()) {
      den = den * linear_factor(form, p);
    }
  }
  RationalFunction out{num, den};
  if (den[0] != cplx{0.0}) out = out.normalized();
  return out;
}

CVector reciprocals(std::span<const cplx> nodes) {
  CVector out(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] == cplx{0.0}) throw ZeroNode("node " + std::to_string(i) + " has no reciprocal");
    out[i] = cplx{1.0} / nodes[i];
  }
  return out;
}

}  // namespace

BarycentricForm1 bpa_form1(const FormalPowerSeries& c, std::span<const cplx> pnodes,
                           std::span<const cplx> znodes) {
  return solve_bpa<BarycentricForm1>(Form::one, c, pnodes, znodes);
}

BarycentricForm2 bpa_form2(const FormalPowerSeries& c, std::span<const cplx> pnodes,
                           std::span<const cplx> znodes) {
  return solve_bpa<BarycentricForm2>(Form::two, c, pnodes, znodes);
}

BarycentricForm1 bpta_form1(const FormalPowerSeries& c, std::span<const cplx> b,
                            std::span<const cplx> pnodes, std::span<const cplx> znodes) {
  return solve_bpta<BarycentricForm1>(Form::one, c, b, pnodes, znodes);
}

BarycentricForm2 bpta_form2(const FormalPowerSeries& c, std::span<const cplx> b,
                            std::span<const cplx> pnodes, std::span<const cplx> znodes) {
  return solve_bpta<BarycentricForm2>(Form::two, c, b, pnodes, znodes);
}

cplx eval_form1(const BarycentricForm1& r, cplx t) { return eval_form(Form::one, r, t); }
cplx eval_form2(const BarycentricForm2& r, cplx t) { return eval_form(Form::two, r, t); }

FormalPowerSeries expand_form1(const BarycentricForm1& r, int n) { return expand_form(Form::one, r, n); }
FormalPowerSeries expand_form2(const BarycentricForm2& r, int n) { return expand_form(Form::two, r, n); }

BarycentricForm1 convert_form2_to_form1(const BarycentricForm2& r) {
  BarycentricForm1 out;
  out.pnodes = reciprocals(r.pnodes);
  out.znodes = reciprocals(r.znodes);
  out.a.resize(r.a.size());
  out.b.resize(r.b.size());
  for (std::size_t i = 0; i < r.a.size(); ++i) out.a[i] = r.a[i] / r.pnodes[i];
  for (std::size_t j = 0; j < r.b.size(); ++j) out.b[j] = r.b[j] / r.znodes[j];
  return out;
}

BarycentricForm2 convert_form1_to_form2(const BarycentricForm1& r) {
  BarycentricForm2 out;
  out.pnodes = reciprocals(r.pnodes);
  out.znodes = reciprocals(r.znodes);
  out.a.resize(r.a.size());
  out.b.resize(r.b.size());
  // Inverse of a_i -> a_i / p_i with p_i -> 1 / p_i.
  for (std::size_t i = 0; i < r.a.size(); ++i) out.a[i] = r.a[i] / r.pnodes[i];
  for (std::size_t j = 0; j < r.b.size(); ++j) out.b[j] = r.b[j] / r.znodes[j];
  return out;
}

RationalFunction to_rational(const BarycentricForm1& r) {
  check_form(Form::one, r);
  return to_rational_form(Form::one, r);
}

RationalFunction to_rational(const BarycentricForm2& r) {
  check_form(Form::two, r);
  return to_rational_form(Form::two, r);
}

BarycentricForm1 interpolatory_form1(std::span<const cplx> nodes, std::span<const cplx> values,
                                     std::span<const cplx> weights) {
  check_nodes(Form::one, nodes, "interpolation");
  if (values.size() != nodes.size() || weights.size() != nodes.size()) {
    throw InvalidArgument("need one value and one weight per node");
  }
  BarycentricForm1 r;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (weights[i] == cplx{0.0}) throw InvalidArgument("interpolation weights must be nonzero");
    r.a.push_back(weights[i] * values[i]);
  }
  r.b.assign(weights.begin(), weights.end());
  r.pnodes.assign(nodes.begin(), nodes.end());
  r.znodes.assign(nodes.begin(), nodes.end());
  return r;
}

DiagonalEngine barycentric_engine_form1(NodeFamily nodes) {
  return [nodes = std::move(nodes)](const FormalPowerSeries& c, int m) {
    const CVector x = nodes(m);
    return to_rational(bpa_form1(c, x, x));
  };
}

DiagonalEngine barycentric_engine_form2(NodeFamily nodes) {
  return [nodes = std::move(nodes)](const FormalPowerSeries& c, int m) {
    const CVector x = nodes(m);
    return to_rational(bpa_form2(c, x, x));
  };
}

}  // namespace padebary
