#pragma once

#include "radezero/ladders.hpp"
#include "radezero/profile.hpp"
#include "radezero/weight.hpp"
#include "radezero/zeros.hpp"

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace radezero {

using Json = nlohmann::json;

/// Rule-backed families store parameters only; explicit profiles store
/// [[log_mag, phase], ...] with null for a zero coefficient.
Json profile_to_json(const CoefficientProfile& profile);
/// Accepts the layout written by profile_to_json, plus "moduli": [...] for
/// explicit lists and "normalize": true to normalize after loading.
CoefficientProfile profile_from_json(const Json& j);
CoefficientProfile load_profile(const std::string& path);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Json zero_report_to_json(const ZeroReport& report);
Json ladder_to_json(const ExceptionalLadder& ladder);

/// {"cos": [...], "sin": [...]} or one of "constant", "raised_cosine", "off_axis".
AngularWeight weight_from_json(const Json& j);
Json weight_to_json(const AngularWeight& phi);

/// %.17g with "nan", "inf", "-inf" spelled out.
std::string format_double(double x);

/// Header row then one line per row, comma separated.
void write_csv(std::ostream& out, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);

/// Decimal or 0x-prefixed hexadecimal.
std::uint64_t parse_seed(const std::string& text);

/// FNV-1a of the compact dump, as 16 hex digits.
std::string json_hash(const Json& j);

}  // namespace radezero
