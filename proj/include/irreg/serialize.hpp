#pragma once

#include "irreg/measures.hpp"
#include "irreg/verifier.hpp"

#include <json.hpp>

#include <string>

namespace irreg {

using Json = nlohmann::ordered_json;

/// {"num": int, "den": int, "decimal": "..."}; numbers outside 64 bits are emitted as strings.
Json to_json(const Rational& r);
Json to_json(const MeasureSet& ms);
Json to_json(const BoundRecord& r);
Json to_json(const DegreeStats& st);
Json to_json(const Classification& c);
/// Timings are left out unless requested so that reruns are byte-identical.
Json to_json(const VerificationReport& report, bool include_timings = false);
Json to_json(const ExtremalResult& r);
Json to_json(const UniversalCensus& c);

std::string csv_header_measures();
std::string to_csv_row(const std::string& label, const MeasureSet& ms);
std::string csv_header_bounds();
std::string to_csv_row(const std::string& label, const BoundRecord& r);
std::string csv_header_report();
std::string to_csv_row(const VerificationReport& report);

}  // namespace irreg
