#pragma once

// JSON (and CSV for profiles) formats. Objects are written with sorted keys, so
// writing a parsed document reproduces the original bytes.

#include "eccir/code.hpp"
#include "eccir/cyclic.hpp"
#include "eccir/eccir.hpp"
#include "eccir/sim.hpp"

#include "json.hpp"

#include <string>

namespace eccir::io {

using nlohmann::json;

json to_json(const cyclic::CyclicCodeSpec& spec);
cyclic::CyclicCodeSpec spec_from_json(const json& j);

// {"q", "rows"}
json to_json(const code::GeneratorMatrix& g);
code::GeneratorMatrix generator_from_json(const json& j);

json to_json(const code::DistanceResult& d);
code::DistanceResult distance_from_json(const json& j);

// Subsets are written as sorted 1-based index lists.
json subset_to_json(Subset s);
Subset subset_from_json(const json& j);

// {"L", "k", "n", "q", "components": [rows, ...], "provenance": {...}}
json to_json(const Eccir& e);
// Validates the collection and any cyclic descriptions against the matrices.
Eccir eccir_from_json(const json& j);

std::string dump(const json& j);  // two-space indent, trailing newline
json parse(const std::string& text);

json to_json(const DistanceProfile& p);
std::string profile_csv(const DistanceProfile& p);

json to_json(const sim::TrialReport& r);

}  // namespace eccir::io
