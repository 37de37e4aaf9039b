#include "parse.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <padebary/errors.hpp>

namespace padebary::cli {

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  cplx parse() {
    const cplx v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgument("cannot parse \"" + std::string(text_) + "\": " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  cplx expr() {
    cplx v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  cplx term() {
    cplx v = factor();
    for (;;) {
      if (accept('*')) {
        v *= factor();
      } else if (accept('/')) {
        v /= factor();
      } else {
        return v;
      }
    }
  }

  cplx factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    return primary();
  }

  cplx primary() {
    skip_ws();
    if (accept('(')) {
      const cplx v = expr();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    if (text_.substr(pos_, 2) == "pi") {
      pos_ += 2;
      return std::numbers::pi;
    }
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      return {0.0, 1.0};
    }
    const double x = number();
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      return {0.0, x};
    }
    return x;
  }

  double number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t s = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ > s;
    };
    bool any = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      any = digits() || any;
    }
    if (!any) fail("expected a number");
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (!digits()) fail("malformed exponent");
    }
    return std::stod(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(sep, start);
    out.push_back(text.substr(start, end == std::string_view::npos ? text.npos : end - start));
    if (end == std::string_view::npos) return out;
    start = end + 1;
  }
}

double parse_real(std::string_view text) {
  const cplx v = parse_complex(text);
  if (v.imag() != 0.0) throw InvalidArgument("expected a real number, got \"" + std::string(text) + "\"");
  return v.real();
}

cplx log1p_over_t(double t) {
  if (t == 0.0) return 1.0;
  if (t > -1.0) return std::log1p(t) / t;
  return std::log(cplx{1.0 + t, 0.0}) / t;
}

}  // namespace

cplx parse_complex(std::string_view text) {
  const cplx v = ExprParser(text).parse();
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw InvalidArgument("\"" + std::string(text) + "\" is not finite");
  }
  return v;
}

CVector parse_complex_list(std::string_view text) {
  CVector out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  for (std::string_view item : split(text, ',')) out.push_back(parse_complex(item));
  return out;
}

std::vector<double> parse_grid(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw InvalidArgument("grid must look like a:b:n, got \"" + std::string(text) + "\"");
  const double a = parse_real(parts[0]);
  const double b = parse_real(parts[1]);
  const double nf = parse_real(parts[2]);
  if (nf != std::floor(nf) || nf < 2 || nf > 1e7) throw InvalidArgument("grid needs an integer n >= 2");
  const auto n = static_cast<std::size_t>(nf);
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  t.back() = b;
  return t;
}

Reference parse_reference(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto need_arg = [&] {
    if (arg.empty()) throw InvalidArgument("reference \"" + std::string(name) + "\" needs a parameter");
  };

  if (name == "tan-over-t") {
    const double omega = arg.empty() ? 4.0 : parse_real(arg);
    if (omega == 0.0) throw InvalidArgument("omega must be nonzero");
    return {std::string(text), [omega](double t) -> cplx {
              if (t == 0.0) return 1.0;
              return std::tan(omega * t) / (omega * t);
            }};
  }
  if (name == "log1p-over-t") return {std::string(text), log1p_over_t};
  if (name == "exp") return {std::string(text), [](double t) -> cplx { return std::exp(t); }};
  if (name == "geometric") {
    need_arg();
    const cplx r = parse_complex(arg);
    return {std::string(text), [r](double t) -> cplx { return cplx{1.0} / (cplx{1.0} - r * t); }};
  }
  if (name == "const") {
    need_arg();
    const cplx v = parse_complex(arg);
    return {std::string(text), [v](double) { return v; }};
  }
  if (name == "none") {
    return {"none", [](double) {
              const double nan = std::numeric_limits<double>::quiet_NaN();
              return cplx{nan, nan};
            }};
  }
  throw InvalidArgument("unknown reference \"" + std::string(text) + "\"");
}

}  // namespace padebary::cli
