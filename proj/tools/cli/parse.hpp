#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <padebary/numkernel.hpp>

namespace padebary::cli {

/// Parses a complex expression such as "1.5", "-3*pi/8", "0.2-1.5i" or "2i".
/// Supports + - * / parentheses, the constant pi and the imaginary unit i.
/// Throws InvalidArgument on malformed input.
cplx parse_complex(std::string_view text);

/// Comma-separated list of complex expressions; empty text gives an empty list.
CVector parse_complex_list(std::string_view text);

/// "a:b:n" -> n equispaced points from a to b inclusive; requires n >= 2.
std::vector<double> parse_grid(std::string_view text);

/// Analytic reference f(t) used to compute errors.
struct Reference {
  std::string name;
  std::function<cplx(double)> eval;
};

/// One of "tan-over-t[:omega]" (default omega 4), "log1p-over-t", "exp",
/// "geometric:r", "const:v" or "none" (NaN reference).
Reference parse_reference(std::string_view text);

}  // namespace padebary::cli
