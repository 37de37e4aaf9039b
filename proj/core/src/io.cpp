#include "padebary/io.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "padebary/errors.hpp"

namespace padebary {

using nlohmann::json;

namespace {

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InvalidArgument("expected a [re, im] pair, got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json vector_to_json(const CVector& v) {
  json out = json::array();
  for (const cplx& z : v) out.push_back(complex_to_json(z));
  return out;
}

CVector vector_from_json(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array()) {
    throw InvalidArgument(std::string("missing array field \"") + field + "\"");
  }
  CVector out;
  for (const json& e : j[field]) out.push_back(complex_from_json(e));
  return out;
}

template <typename F>
json barycentric_to_json(const char* kind, const F& r) {
  return json{{"kind", kind},
              {"a", vector_to_json(r.a)},
              {"pnodes", vector_to_json(r.pnodes)},
              {"b", vector_to_json(r.b)},
              {"znodes", vector_to_json(r.znodes)}};
}

template <typename F>
F barycentric_from_json(const json& j) {
  F r;
  r.a = vector_from_json(j, "a");
  r.pnodes = vector_from_json(j, "pnodes");
  r.b = vector_from_json(j, "b");
  r.znodes = vector_from_json(j, "znodes");
  if (r.a.size() != r.pnodes.size() || r.b.size() != r.znodes.size() || r.a.empty() || r.b.empty()) {
    throw InvalidArgument("barycentric record needs one weight per node");
  }
  return r;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace

json to_json(const FormalPowerSeries& s) { return json{{"coeffs", vector_to_json(s.coeffs())}}; }

FormalPowerSeries series_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("series record must be an object");
  return FormalPowerSeries(vector_from_json(j, "coeffs"));
}

json to_json(const Approximant& r) {
  if (const auto* f = std::get_if<RationalFunction>(&r)) {
    return json{{"kind", "rational"}, {"num", vector_to_json(f->num.coeffs())}, {"den", vector_to_json(f->den.coeffs())}};
  }
  if (const auto* f = std::get_if<BarycentricForm1>(&r)) return barycentric_to_json("bary1", *f);
  if (const auto* f = std::get_if<BarycentricForm2>(&r)) return barycentric_to_json("bary2", *f);
  const auto& pf = std::get<PartialFraction>(r);
  json terms = json::array();
  for (const auto& t : pf.terms) terms.push_back(json{{"a", complex_to_json(t.a)}, {"p", complex_to_json(t.p)}});
  return json{{"kind", "pfpa"}, {"terms", terms}};
}

Approximant approximant_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
      throw InvalidArgument("approximant record needs a \"kind\" string");
    }
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "rational") {
      const CVector num = vector_from_json(j, "num");
      const CVector den = vector_from_json(j, "den");
      if (num.empty() || den.empty()) throw InvalidArgument("empty polynomial");
      return RationalFunction{Polynomial(num), Polynomial(den)};
    }
    if (kind == "bary1") return barycentric_from_json<BarycentricForm1>(j);
    if (kind == "bary2") return barycentric_from_json<BarycentricForm2>(j);
    if (kind == "pfpa") {
      if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].empty()) {
        throw InvalidArgument("pfpa record needs a non-empty \"terms\" array");
      }
      PartialFraction pf;
      for (const json& t : j["terms"]) {
        if (!t.is_object() || !t.contains("a") || !t.contains("p")) {
          throw InvalidArgument("pfpa term needs \"a\" and \"p\"");
        }
        pf.terms.push_back({complex_from_json(t["a"]), complex_from_json(t["p"])});
      }
      return pf;
    }
    throw InvalidArgument("unknown approximant kind \"" + kind + "\"");
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed approximant record: ") + e.what());
  }
}

FormalPowerSeries read_series(const std::filesystem::path& path) {
  try {
    return series_from_json(read_json(path));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed series record: ") + e.what());
  }
}

void write_series(const std::filesystem::path& path, const FormalPowerSeries& s) { write_json(path, to_json(s)); }

Approximant read_approximant(const std::filesystem::path& path) { return approximant_from_json(read_json(path)); }

void write_approximant(const std::filesystem::path& path, const Approximant& r) { write_json(path, to_json(r)); }

}  // namespace padebary
