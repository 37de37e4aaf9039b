#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include <padebary/errors.hpp>
#include <padebary/io.hpp>

#include "experiments.hpp"
#include "parse.hpp"
#include "report.hpp"

namespace padebary::cli {

namespace {

struct GenOptions {
  std::string function;
  std::string omega = "4";
  std::string r;
  int order = 8;
  std::string input;
  std::string coeffs;
  std::string out;
};

struct ApproxOptions {
  std::string kind;
  std::string series;
  std::string coeffs;
  std::optional<int> p;
  std::optional<int> q;
  std::optional<int> k;
  std::string poles;
  std::string zeros;
  std::string b;
  std::string weights;
  std::string values;
  std::string out;
};

struct EvalOptions {
  std::string approx;
  std::string grid = kExample1Grid;
  std::string ref = "none";
  std::string out;
};

struct ExpandOptions {
  std::string approx;
  int order = 8;
};

struct PerturbOptions {
  double eps = 1e-4;
  std::uint64_t seed = kDefaultSeed;
  int count = 20;
  std::string seeds;
  double omega = 4.0;
  std::string grid = kExample1Grid;
  std::string out;
};

struct ReproduceOptions {
  std::string example;
  std::string out_dir = "padebary-out";
  std::uint64_t seed = kDefaultSeed;
  int count = 20;
};

double parse_real_arg(const std::string& text, const char* what) {
  const cplx v = parse_complex(text);
  if (v.imag() != 0.0) throw InvalidArgument(std::string(what) + " must be real");
  return v.real();
}

void emit_json(const nlohmann::json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot write " + path);
  f << j.dump(2) << '\n';
}

// Opens `path` for writing, or hands back `fallback` when path is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw InvalidArgument("cannot write " + path);
    stream_ = &file_;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
  if (o.order < 0) throw InvalidArgument("--order must be >= 0");
  const std::string& fn = o.function;
  std::optional<FormalPowerSeries> s;
  if (fn == "tan-over-t") {
    const double omega = parse_real_arg(o.omega, "--omega");
    if (omega == 0.0) throw InvalidArgument("--omega must be nonzero");
    s = tan_over_t_series(omega, o.order);
  } else if (fn == "log1p-over-t") {
    s = log1p_over_t_series(o.order);
  } else if (fn == "exp") {
    s = exp_series(o.order);
  } else if (fn == "geometric") {
    if (o.r.empty()) throw InvalidArgument("geometric needs --r");
    s = geometric_series(parse_complex(o.r), o.order);
  } else if (fn == "file") {
    if (o.input.empty() == o.coeffs.empty()) throw InvalidArgument("file needs exactly one of --input or --coeffs");
    s = o.input.empty() ? FormalPowerSeries(parse_complex_list(o.coeffs)) : read_series(o.input);
  } else {
    throw InvalidArgument("unknown function \"" + fn + "\"");
  }
  emit_json(to_json(*s), o.out, out);
  return kExitOk;
}

FormalPowerSeries load_series(const ApproxOptions& o) {
  if (o.series.empty() == o.coeffs.empty()) throw InvalidArgument("give exactly one of --series or --coeffs");
  return o.series.empty() ? FormalPowerSeries(parse_complex_list(o.coeffs)) : read_series(o.series);
}

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw InvalidArgument(std::string(flag) + " is required for this kind");
  if (*v < 0) throw InvalidArgument(std::string(flag) + " must be >= 0");
  return *v;
}

CVector require_list(const std::string& text, const char* flag) {
  const CVector v = parse_complex_list(text);
  if (v.empty()) throw InvalidArgument(std::string(flag) + " is required for this kind");
  return v;
}

void check_degree(const std::optional<int>& given, std::size_t nodes, const char* flag) {
  if (given && *given != static_cast<int>(nodes) - 1) {
    throw InvalidArgument(std::string(flag) + " disagrees with the number of nodes");
  }
}

int cmd_approx(const ApproxOptions& o, std::ostream& out, std::ostream& err) {
  const FormalPowerSeries c = load_series(o);
  const std::string& kind = o.kind;
  std::optional<Approximant> r;
  int contracted = 0;  // coefficients the construction promises to match

  if (kind == "pade") {
    const int p = require(o.p, "--p");
    const int q = require(o.q, "--q");
    r = pade(c, p, q);
    contracted = p + q + 1;
  } else if (kind == "pta") {
    const int p = require(o.p, "--p");
    r = pade_type(c, require_list(o.b, "--b"), p);
    contracted = p + 1;
  } else if (kind == "bpa1" || kind == "bpa2" || kind == "bpta1" || kind == "bpta2") {
    const CVector poles = require_list(o.poles, "--poles");
    const CVector zeros = require_list(o.zeros, "--zeros");
    check_degree(o.p, poles.size(), "--p");
    check_degree(o.q, zeros.size(), "--q");
    const int p = static_cast<int>(poles.size()) - 1;
    const int q = static_cast<int>(zeros.size()) - 1;
    if (kind == "bpa1") {
      r = bpa_form1(c, poles, zeros);
    } else if (kind == "bpa2") {
      r = bpa_form2(c, poles, zeros);
    } else {
      const CVector b = require_list(o.b, "--b");
      r = kind == "bpta1" ? Approximant(bpta_form1(c, b, poles, zeros)) : Approximant(bpta_form2(c, b, poles, zeros));
    }
    contracted = kind.starts_with("bpa") ? p + q + 1 : p + 1;
  } else if (kind == "pfpa") {
    const int k = require(o.k, "--k");
    r = pfpa(c, k);
    contracted = 2 * k + 2;
  } else if (kind == "interp1") {
    r = interpolatory_form1(require_list(o.poles, "--poles"), require_list(o.values, "--values"),
                            require_list(o.weights, "--weights"));
  } else {
    throw InvalidArgument("unknown kind \"" + kind + "\"");
  }

  emit_json(to_json(*r), o.out, out);
  const int achieved = contact_order(*r, c);
  std::ostream& log = o.out.empty() ? err : out;
  log << "contact order: " << achieved << " (contracted " << contracted << ")\n";
  if (achieved < contracted) {
    err << "error: approximant matches only " << achieved << " of " << contracted << " coefficients\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int cmd_eval(const EvalOptions& o, std::ostream& out) {
  const std::vector<double> grid = parse_grid(o.grid);
  const Reference ref = parse_reference(o.ref);
  const Approximant r = read_approximant(o.approx);
  Sink sink(o.out, out);
  write_csv(sink.get(), build_report(r, ref, grid));
  return kExitOk;
}

int cmd_expand(const ExpandOptions& o, std::ostream& out) {
  if (o.order < 0) throw InvalidArgument("--order must be >= 0");
  const FormalPowerSeries d = expand(read_approximant(o.approx), o.order);
  for (int k = 0; k <= o.order; ++k) {
    out << k << ' ' << format_number(d[k].real()) << ' ' << format_number(d[k].imag()) << '\n';
  }
  return kExitOk;
}

int cmd_perturb(const PerturbOptions& o, std::ostream& out, std::ostream& err) {
  PerturbConfig cfg;
  cfg.eps = o.eps;
  cfg.omega = o.omega;
  cfg.grid = o.grid;
  if (!o.seeds.empty()) {
    for (const cplx& s : parse_complex_list(o.seeds)) {
      if (s.imag() != 0.0 || s.real() < 0.0 || s.real() != std::floor(s.real())) {
        throw InvalidArgument("--seeds must be non-negative integers");
      }
      cfg.seeds.push_back(static_cast<std::uint64_t>(s.real()));
    }
  } else {
    if (o.count < 1) throw InvalidArgument("--count must be >= 1");
    for (int i = 0; i < o.count; ++i) cfg.seeds.push_back(o.seed + static_cast<std::uint64_t>(i));
  }
  const PerturbOutcome outcome = run_perturbation(cfg);
  Sink sink(o.out, out);
  write_perturbation_csv(sink.get(), cfg, outcome);
  if (outcome.all_ok()) return kExitOk;
  for (const PerturbRow& r : outcome.rows) {
    if (!r.ok) err << "error: seed " << r.seed << ' ' << r.method << ": " << r.error << '\n';
  }
  return kExitNumerical;
}

int cmd_reproduce(const ReproduceOptions& o, std::ostream& out, std::ostream& err) {
  ReproduceResult result;
  if (o.example == "example1") {
    result = reproduce_example1(o.out_dir, o.seed, o.count, out);
  } else if (o.example == "example2") {
    result = reproduce_example2(o.out_dir, out);
  } else {
    throw InvalidArgument("unknown example \"" + o.example + "\"");
  }
  for (const auto& f : result.files) out << "wrote " << f.string() << '\n';
  if (!result.ok) {
    err << "error: some approximant fell short of its contact order\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pade, barycentric Pade and partial-fraction Pade approximants from power series", "padebary"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Write the coefficients of a known series as JSON");
  g->add_option("function", gen.function, "tan-over-t | log1p-over-t | exp | geometric | file")->required();
  g->add_option("--omega", gen.omega, "frequency of tan-over-t")->capture_default_str();
  g->add_option("--r", gen.r, "ratio of the geometric series");
  g->add_option("--order", gen.order, "highest coefficient index N")->capture_default_str();
  g->add_option("--input", gen.input, "series JSON to copy (function=file)");
  g->add_option("--coeffs", gen.coeffs, "comma-separated coefficients (function=file)");
  g->add_option("--out", gen.out, "output path (default stdout)");

  ApproxOptions approx;
  auto* a = app.add_subcommand("approx", "Build an approximant and report its contact order");
  a->add_option("--kind", approx.kind, "pade | pta | bpa1 | bpa2 | bpta1 | bpta2 | pfpa | interp1")->required();
  a->add_option("--series", approx.series, "series JSON");
  a->add_option("--coeffs", approx.coeffs, "comma-separated coefficients instead of --series");
  a->add_option("--p", approx.p, "numerator degree");
  a->add_option("--q", approx.q, "denominator degree");
  a->add_option("--k", approx.k, "partial-fraction index (k+1 terms)");
  a->add_option("--poles", approx.poles, "numerator-side nodes, or interpolation nodes for interp1");
  a->add_option("--zeros", approx.zeros, "denominator-side nodes");
  a->add_option("--b", approx.b, "prescribed denominator coefficients or weights");
  a->add_option("--weights", approx.weights, "interpolation weights (interp1)");
  a->add_option("--values", approx.values, "interpolated values (interp1)");
  a->add_option("--out", approx.out, "output path (default stdout)");

  EvalOptions ev;
  auto* e = app.add_subcommand("eval", "Evaluate an approximant on a grid and write the error CSV");
  e->add_option("--approx", ev.approx, "approximant JSON")->required();
  e->add_option("--grid", ev.grid, "a:b:n")->capture_default_str();
  e->add_option("--ref", ev.ref, "tan-over-t[:w] | log1p-over-t | exp | geometric:r | const:v | none")
      ->capture_default_str();
  e->add_option("--out", ev.out, "CSV path (default stdout)");

  ExpandOptions ex;
  auto* x = app.add_subcommand("expand", "Print the Taylor coefficients d_0..d_N of an approximant");
  x->add_option("--approx", ex.approx, "approximant JSON")->required();
  x->add_option("--order", ex.order, "N")->capture_default_str();

  PerturbOptions pt;
  auto* pc = app.add_subcommand("perturb", "Perturbation study on tan(w t)/(w t) with p = q = 4");
  pc->add_option("--eps", pt.eps, "noise amplitude")->capture_default_str();
  pc->add_option("--seed", pt.seed, "first seed")->capture_default_str();
  pc->add_option("--count", pt.count, "number of consecutive seeds")->capture_default_str();
  pc->add_option("--seeds", pt.seeds, "explicit comma-separated seeds (overrides --seed/--count)");
  pc->add_option("--omega", pt.omega, "frequency")->capture_default_str();
  pc->add_option("--grid", pt.grid, "a:b:n")->capture_default_str();
  pc->add_option("--out", pt.out, "CSV path (default stdout)");

  ReproduceOptions rp;
  auto* r = app.add_subcommand("reproduce", "Write the plot data of example1 or example2");
  r->add_option("example", rp.example, "example1 | example2")->required();
  r->add_option("--out-dir", rp.out_dir, "output directory")->capture_default_str();
  r->add_option("--seed", rp.seed, "seed of the perturbed curve and first seed of the summary")
      ->capture_default_str();
  r->add_option("--count", rp.count, "seeds in the perturbation summary")->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& ex_) {
    const int code = app.exit(ex_, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*g) return cmd_gen(gen, out);
    if (*a) return cmd_approx(approx, out, err);
    if (*e) return cmd_eval(ev, out);
    if (*x) return cmd_expand(ex, out);
    if (*pc) return cmd_perturb(pt, out, err);
    return cmd_reproduce(rp, out, err);
  } catch (const Error& ex_) {
    err << "error: " << ex_.what() << '\n';
    return ex_.is_numerical() ? kExitNumerical : kExitInvalid;
  } catch (const std::exception& ex_) {
    err << "error: " << ex_.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace padebary::cli
