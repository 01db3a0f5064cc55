#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nedlib/compose.hpp"
#include "nedlib/edit_model.hpp"
#include "nedlib/metrics.hpp"
#include "nedlib/propcheck.hpp"

namespace nedlib {

// ordered_json keeps insertion order on parse and dump, which is what makes
// the emitted JSON round-trip byte for byte.
using Json = nlohmann::ordered_json;

Json path_to_json(const EditPath& path);
EditPath path_from_json(const Json& json);

Json result_to_json(const DistanceResult& result);
Json report_to_json(const PropertyReport& report);
Json reports_to_json(const std::vector<PropertyReport>& reports, std::uint64_t seed);

std::string csv_header();
std::string csv_row(const DistanceResult& result, const Word& a, const Word& b);

/// Six-significant-digit decimal rendering used everywhere a human-facing
/// approximation appears. The exact rational remains the contract.
std::string decimal_string(const Rational& value);

}  // namespace nedlib
