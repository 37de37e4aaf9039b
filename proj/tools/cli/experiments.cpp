#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>

#include <padebary/errors.hpp>
#include <padebary/io.hpp>

namespace padebary::cli {

namespace {

constexpr double kContactTol = 1e-9;

CVector odd_multiples(double unit) {
  return {unit, -unit, 3.0 * unit, -3.0 * unit, 5.0 * unit};
}

CVector equispaced(double a, double b, int n) {
  CVector out;
  for (int i = 0; i < n; ++i) out.emplace_back(a + (b - a) * i / (n - 1));
  out.back() = b;
  return out;
}

double median(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::filesystem::path write_report(const std::filesystem::path& path, const ApproxReport& rep) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  write_csv(out, rep);
  return path;
}

// Writes one CSV (and the approximant JSON) per method and logs its error range.
void emit_figure(const std::filesystem::path& dir, const std::string& stem, const std::vector<Method>& methods,
                 const Reference& ref, const std::vector<double>& grid, ReproduceResult& result, std::ostream& log) {
  for (const Method& m : methods) {
    const ApproxReport rep = build_report(m.approximant, ref, grid);
    result.files.push_back(write_report(dir / (stem + "_" + m.name + ".csv"), rep));
    const auto json_path = dir / (stem + "_" + m.name + ".json");
    write_approximant(json_path, m.approximant);
    result.files.push_back(json_path);
    const ErrorRange er = error_range(rep);
    log << stem << ' ' << m.name << ": contact order " << m.contact << ", abs_err in [" << format_number(er.min)
        << ", " << format_number(er.max) << "]\n";
  }
}

}  // namespace

CVector example1_poles(double omega) { return odd_multiples(std::numbers::pi / (2.0 * omega)); }
CVector example1_zeros(double omega) { return odd_multiples(std::numbers::pi / omega); }
CVector example2_poles() { return equispaced(-10.0, -1.0, 5); }
CVector example2_zeros() { return equispaced(-10.0, -2.0, 5); }

CVector reciprocals(const CVector& nodes) {
  CVector out;
  out.reserve(nodes.size());
  for (const cplx& x : nodes) out.push_back(cplx{1.0} / x);
  return out;
}

std::vector<Method> build_methods(const FormalPowerSeries& c, const CVector& poles, const CVector& zeros) {
  const int p = static_cast<int>(poles.size()) - 1;
  const int q = static_cast<int>(zeros.size()) - 1;
  std::vector<Method> out;
  out.push_back({"pade", pade(c, p, q)});
  out.push_back({"bpa1", bpa_form1(c, poles, zeros)});
  out.push_back({"bpa2", bpa_form2(c, reciprocals(poles), reciprocals(zeros))});
  for (Method& m : out) m.contact = contact_order(m.approximant, c, kContactTol);
  return out;
}

bool PerturbOutcome::all_ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const PerturbRow& r) { return r.ok; });
}

PerturbOutcome run_perturbation(const PerturbConfig& cfg) {
  if (!(cfg.eps >= 0.0)) throw InvalidArgument("eps must be >= 0");
  if (cfg.seeds.empty()) throw InvalidArgument("need at least one seed");
  const std::vector<double> grid = parse_grid(cfg.grid);
  const Reference ref = parse_reference("tan-over-t:" + format_number(cfg.omega));
  const CVector poles = example1_poles(cfg.omega);
  const CVector zeros = example1_zeros(cfg.omega);
  const int contracted = static_cast<int>(poles.size() + zeros.size()) - 1;
  const FormalPowerSeries exact = tan_over_t_series(cfg.omega, contracted - 1);
  const std::vector<std::string> names{"pade", "bpa1", "bpa2"};

  PerturbOutcome outcome;
  for (const std::uint64_t seed : cfg.seeds) {
    const FormalPowerSeries c = perturb(exact, cfg.eps, seed);
    std::vector<Method> methods;
    std::string failure;
    try {
      methods = build_methods(c, poles, zeros);
    } catch (const Error& e) {
      failure = e.what();
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      PerturbRow row;
      row.seed = seed;
      row.method = names[i];
      if (!failure.empty()) {
        row.error = failure;
        outcome.rows.push_back(row);
        continue;
      }
      row.contact = methods[i].contact;
      const ErrorRange er = error_range(build_report(methods[i].approximant, ref, grid));
      row.min_err = er.min;
      row.max_err = er.max;
      row.ok = row.contact >= contracted;
      if (!row.ok) {
        row.error = "contact order below " + std::to_string(contracted);
        if (const auto pole = near_cancelled_pole(methods[i].approximant)) {
          row.error += " (near-cancelled pole-zero pair at t = " + format_number(pole->real()) + ")";
        }
      }
      outcome.rows.push_back(row);
    }
  }

  for (const std::string& name : names) {
    PerturbSummary s;
    s.method = name;
    std::vector<double> maxima;
    s.overall_min = std::numeric_limits<double>::infinity();
    s.overall_max = -std::numeric_limits<double>::infinity();
    for (const PerturbRow& r : outcome.rows) {
      if (r.method != name) continue;
      ++s.total;
      if (!r.ok) continue;
      ++s.ok;
      maxima.push_back(r.max_err);
      s.overall_min = std::min(s.overall_min, r.min_err);
      s.overall_max = std::max(s.overall_max, r.max_err);
    }
    s.median_max = median(maxima);
    outcome.summary.push_back(s);
  }
  return outcome;
}

void write_perturbation_csv(std::ostream& out, const PerturbConfig& cfg, const PerturbOutcome& outcome) {
  out << "# perturbed tan(omega t)/(omega t): omega=" << format_number(cfg.omega) << " p=4 q=4 eps="
      << format_number(cfg.eps) << " grid=" << cfg.grid << " seeds=" << cfg.seeds.size() << '\n';
  // Published values are echoed as written, not at full precision.
  out << "# reference interval pade: [" << kPaperClassicMin << ", " << kPaperClassicMax << "]\n";
  out << "# reference interval barycentric: [" << kPaperBaryMin << ", " << kPaperBaryMax << "]\n";
  out << "seed,method,status,contact_order,min_abs_err,max_abs_err,median_max_abs_err,note\n";
  for (const PerturbRow& r : outcome.rows) {
    std::string note = r.error;
    std::replace(note.begin(), note.end(), ',', ';');
    out << r.seed << ',' << r.method << ',' << (r.ok ? "ok" : "failed") << ',' << r.contact << ','
        << format_number(r.min_err) << ',' << format_number(r.max_err) << ",," << note << '\n';
  }
  for (const PerturbSummary& s : outcome.summary) {
    out << "summary," << s.method << ',' << s.ok << '/' << s.total << ",," << format_number(s.overall_min) << ','
        << format_number(s.overall_max) << ',' << format_number(s.median_max) << ",\n";
  }
}

ReproduceResult reproduce_example1(const std::filesystem::path& dir, std::uint64_t seed, int count,
                                   std::ostream& log) {
  if (count < 1) throw InvalidArgument("need at least one seed");
  std::filesystem::create_directories(dir);
  constexpr double omega = 4.0;
  const CVector poles = example1_poles(omega);
  const CVector zeros = example1_zeros(omega);
  const std::vector<double> grid = parse_grid(kExample1Grid);
  const Reference ref = parse_reference("tan-over-t:4");
  const FormalPowerSeries c = tan_over_t_series(omega, 8);

  ReproduceResult result;
  const std::vector<Method> exact = build_methods(c, poles, zeros);
  emit_figure(dir, "example1_fig1", exact, ref, grid, result, log);

  const std::vector<Method> noisy = build_methods(perturb(c, 1e-4, seed), poles, zeros);
  emit_figure(dir, "example1_fig2", noisy, ref, grid, result, log);
  for (const auto& m : exact) result.ok = result.ok && m.contact >= 9;
  for (const auto& m : noisy) result.ok = result.ok && m.contact >= 9;

  PerturbConfig cfg;
  cfg.omega = omega;
  for (int i = 0; i < count; ++i) cfg.seeds.push_back(seed + static_cast<std::uint64_t>(i));
  const PerturbOutcome outcome = run_perturbation(cfg);
  const auto summary_path = dir / "example1_fig2_summary.csv";
  std::ofstream out(summary_path);
  if (!out) throw InvalidArgument("cannot write " + summary_path.string());
  write_perturbation_csv(out, cfg, outcome);
  result.files.push_back(summary_path);
  result.ok = result.ok && outcome.all_ok();
  for (const PerturbSummary& s : outcome.summary) {
    log << "example1_fig2_summary " << s.method << ": " << s.ok << '/' << s.total << " ok, abs_err in ["
        << format_number(s.overall_min) << ", " << format_number(s.overall_max) << "], median max "
        << format_number(s.median_max) << '\n';
  }
  return result;
}

ReproduceResult reproduce_example2(const std::filesystem::path& dir, std::ostream& log) {
  std::filesystem::create_directories(dir);
  const FormalPowerSeries c = log1p_over_t_series(8);
  const std::vector<Method> methods = build_methods(c, example2_poles(), example2_zeros());
  ReproduceResult result;
  emit_figure(dir, "example2_fig3", methods, parse_reference("log1p-over-t"), parse_grid(kExample2Grid), result, log);
  for (const auto& m : methods) result.ok = result.ok && m.contact >= 9;
  return result;
}

}  // namespace padebary::cli
