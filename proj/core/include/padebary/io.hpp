#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "padebary/approximant.hpp"
#include "padebary/series.hpp"

namespace padebary {

// JSON records exchanged with the command-line tool. Complex numbers are
// [re, im] pairs throughout.
//
//   series:      {"coeffs": [[re, im], ...]}
//   rational:    {"kind": "rational", "num": [...], "den": [...]}
//   barycentric: {"kind": "bary1" | "bary2", "a": [...], "pnodes": [...],
//                 "b": [...], "znodes": [...]}
//   pfpa:        {"kind": "pfpa", "terms": [{"a": [re, im], "p": [re, im]}, ...]}
//
// Parsers throw InvalidArgument on malformed records.

nlohmann::json to_json(const FormalPowerSeries& s);
FormalPowerSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Approximant& r);
Approximant approximant_from_json(const nlohmann::json& j);

FormalPowerSeries read_series(const std::filesystem::path& path);
void write_series(const std::filesystem::path& path, const FormalPowerSeries& s);

Approximant read_approximant(const std::filesystem::path& path);
void write_approximant(const std::filesystem::path& path, const Approximant& r);

}  // namespace padebary
