#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <padebary/approximant.hpp>

#include "parse.hpp"

namespace padebary::cli {

/// Columns of an error curve; all vectors have the same length.
struct ApproxReport {
  std::vector<double> grid;
  CVector ref;
  CVector val;
  std::vector<double> abs_err;  // +inf on pole rows
  std::vector<bool> pole_mask;

  std::size_t size() const { return grid.size(); }
};

ApproxReport build_report(const std::function<cplx(cplx)>& approximant, const Reference& ref,
                          const std::vector<double>& grid);
ApproxReport build_report(const Approximant& r, const Reference& ref, const std::vector<double>& grid);

/// Min and max of abs_err over rows that are not poles (NaN when there are none).
struct ErrorRange {
  double min;
  double max;
};
ErrorRange error_range(const ApproxReport& report);

/// Header t,ref_re,ref_im,val_re,val_im,abs_err,is_pole then one row per grid
/// point, numbers printed with %.17g.
void write_csv(std::ostream& out, const ApproxReport& report);

/// %.17g formatting shared by every CSV writer.
std::string format_number(double x);

}  // namespace padebary::cli
