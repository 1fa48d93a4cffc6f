#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cpsq/bound_report.hpp"
#include "cpsq/bounds.hpp"
#include "cpsq/prime_bounds.hpp"
#include "cpsq/verify.hpp"
#include "cpsq/windows.hpp"

namespace cpsq {

enum class Format { text, json, csv };
enum class CountMode { distinct, multiplicity, both };

Format parse_format(std::string_view s);
CountMode parse_count_mode(std::string_view s);

/// Six significant digits in positional notation, trailing zeros dropped.
std::string format_real(double v);

void to_json(nlohmann::json& j, const Representation& r);
void from_json(const nlohmann::json& j, Representation& r);
void to_json(nlohmann::json& j, const CountReport& r);
void from_json(const nlohmann::json& j, CountReport& r);
void to_json(nlohmann::json& j, const BoundReport& r);
void from_json(const nlohmann::json& j, BoundReport& r);
void to_json(nlohmann::json& j, const WindowCap& c);
void from_json(const nlohmann::json& j, WindowCap& c);
void to_json(nlohmann::json& j, const DusartCheck& c);
void to_json(nlohmann::json& j, const FamilySummary& f);

// Text output has one record per line; CSV starts with a header row in
// field order; JSON is an array of objects keyed by field name.
std::string serialize(std::span<const Representation> reps, Format format);
std::string serialize(std::span<const CountReport> reports, Format format,
                      CountMode mode = CountMode::both);
std::string serialize(std::span<const BoundReport> reports, Format format);
std::string serialize(std::span<const WindowCap> caps, Format format);
std::string serialize_values(std::span<const std::uint64_t> values, Format format);
std::string serialize(const VerifyResult& result, Format format);

/// "2020 = 17^2 + 19^2 + 23^2 + 29^2"
std::string describe(const Representation& rep, const PrimeTable& table);

/// One human-readable line for a report.
std::string describe(const BoundReport& report);

template <class T>
std::vector<T> parse_json_array(std::string_view text) {
  return nlohmann::json::parse(text).get<std::vector<T>>();
}

}  // namespace cpsq
