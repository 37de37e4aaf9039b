#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace padebary::cli {

ApproxReport build_report(const std::function<cplx(cplx)>& approximant, const Reference& ref,
                          const std::vector<double>& grid) {
  ApproxReport rep;
  rep.grid = grid;
  rep.ref.reserve(grid.size());
  rep.val.reserve(grid.size());
  rep.abs_err.reserve(grid.size());
  rep.pole_mask.reserve(grid.size());
  for (const double t : grid) {
    const cplx f = ref.eval(t);
    const cplx v = approximant(t);
    const bool pole = is_pole(v);
    rep.ref.push_back(f);
    rep.val.push_back(v);
    rep.pole_mask.push_back(pole);
    rep.abs_err.push_back(pole ? std::numeric_limits<double>::infinity() : std::abs(v - f));
  }
  return rep;
}

ApproxReport build_report(const Approximant& r, const Reference& ref, const std::vector<double>& grid) {
  return build_report([&r](cplx t) { return evaluate(r, t); }, ref, grid);
}

ErrorRange error_range(const ApproxReport& report) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (std::size_t i = 0; i < report.size(); ++i) {
    if (report.pole_mask[i] || std::isnan(report.abs_err[i])) continue;
    lo = std::min(lo, report.abs_err[i]);
    hi = std::max(hi, report.abs_err[i]);
    any = true;
  }
  if (!any) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan};
  }
  return {lo, hi};
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& out, const ApproxReport& report) {
  out << "t,ref_re,ref_im,val_re,val_im,abs_err,is_pole\n";
  for (std::size_t i = 0; i < report.size(); ++i) {
    out << format_number(report.grid[i]) << ',' << format_number(report.ref[i].real()) << ','
        << format_number(report.ref[i].imag()) << ',' << format_number(report.val[i].real()) << ','
        << format_number(report.val[i].imag()) << ',' << format_number(report.abs_err[i]) << ','
        << (report.pole_mask[i] ? 1 : 0) << '\n';
  }
}

}  // namespace padebary::cli
