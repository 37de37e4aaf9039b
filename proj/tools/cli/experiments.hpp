#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <padebary/approximant.hpp>

#include "report.hpp"

namespace padebary::cli {

/// Error intervals reported for the perturbed tan(4t)/(4t) experiment on
/// [-1.5, 1.5]. They come from one unreported random draw, so they are echoed
/// for comparison only.
inline constexpr double kPaperClassicMin = 3.5528e-5;
inline constexpr double kPaperClassicMax = 2.8663e4;
inline constexpr double kPaperBaryMin = 4.8921e-8;
inline constexpr double kPaperBaryMax = 1.8136e3;

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr const char* kExample1Grid = "-1.5:1.5:601";
inline constexpr const char* kExample2Grid = "-0.9:4:601";

/// First five poles pi/(2w) {1, -1, 3, -3, 5} and zeros pi/w {1, -1, 3, -3, 5}
/// of tan(w t)/(w t); these are the form 1 nodes.
CVector example1_poles(double omega);
CVector example1_zeros(double omega);

/// Five equispaced poles in [-10, -1] and zeros in [-10, -2] (form 1 nodes).
CVector example2_poles();
CVector example2_zeros();

CVector reciprocals(const CVector& nodes);

/// One approximant of a comparison: "pade" is the classic [p/q], "bpa1" and
/// "bpa2" the barycentric forms on the given form 1 nodes (form 2 uses their
/// reciprocals).
struct Method {
  std::string name;
  Approximant approximant;
  int contact = 0;
};

/// Builds pade, bpa1 and bpa2 for the series, with p + 1 = poles.size(),
/// q + 1 = zeros.size(), and records each contact order against c.
std::vector<Method> build_methods(const FormalPowerSeries& c, const CVector& poles, const CVector& zeros);

struct PerturbConfig {
  double omega = 4.0;
  double eps = 1e-4;
  std::string grid = kExample1Grid;
  std::vector<std::uint64_t> seeds;
};

struct PerturbRow {
  std::uint64_t seed = 0;
  std::string method;
  bool ok = false;
  int contact = 0;
  double min_err = 0.0;
  double max_err = 0.0;
  std::string error;
};

struct PerturbSummary {
  std::string method;
  std::size_t ok = 0;
  std::size_t total = 0;
  double overall_min = 0.0;
  double overall_max = 0.0;
  double median_max = 0.0;
};

struct PerturbOutcome {
  std::vector<PerturbRow> rows;
  std::vector<PerturbSummary> summary;
  bool all_ok() const;
};

/// For each seed: perturbs c_0..c_8 of tan(w t)/(w t) by uniform noise in
/// [-eps, eps], rebuilds pade/bpa1/bpa2 on the example 1 nodes, checks that
/// each matches its perturbed series through t^8 and records the error range
/// against the exact function on the grid. A failing seed is recorded and the
/// run continues.
PerturbOutcome run_perturbation(const PerturbConfig& cfg);

/// Per-seed rows and one summary row per method, preceded by '#' comment lines
/// carrying the configuration and the published reference intervals. A failed
/// row says why in its last column.
void write_perturbation_csv(std::ostream& out, const PerturbConfig& cfg, const PerturbOutcome& outcome);

struct ReproduceResult {
  std::vector<std::filesystem::path> files;
  bool ok = true;
};

/// Figure 1 (exact coefficients), Figure 2 (seed-perturbed curve and a
/// `count`-seed summary) for tan(4t)/(4t) with p = q = 4.
ReproduceResult reproduce_example1(const std::filesystem::path& dir, std::uint64_t seed, int count,
                                   std::ostream& log);

/// Figure 3 for log(1+t)/t with p = q = 4.
ReproduceResult reproduce_example2(const std::filesystem::path& dir, std::ostream& log);

}  // namespace padebary::cli
