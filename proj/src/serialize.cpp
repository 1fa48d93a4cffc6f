#include "cpsq/serialize.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace cpsq {

using nlohmann::json;

Format parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw std::invalid_argument(fmt::format("unknown format '{}'", s));
}

CountMode parse_count_mode(std::string_view s) {
  if (s == "distinct") return CountMode::distinct;
  if (s == "multiplicity") return CountMode::multiplicity;
  if (s == "both") return CountMode::both;
  throw std::invalid_argument(fmt::format("unknown count mode '{}'", s));
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  const int exponent = static_cast<int>(std::floor(std::log10(std::abs(v))));
  const int decimals = std::max(0, 5 - exponent);
  std::string s = fmt::format("{:.{}f}", v, decimals);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

// ---- JSON ------------------------------------------------------------------

void to_json(json& j, const Representation& r) {
  j = json{{"start_index", r.start_index}, {"length", r.length}, {"value", r.value}};
}

void from_json(const json& j, Representation& r) {
  j.at("start_index").get_to(r.start_index);
  j.at("length").get_to(r.length);
  j.at("value").get_to(r.value);
}

void to_json(json& j, const CountReport& r) {
  json per_length = json::object();
  for (const auto& [m, count] : r.per_length) per_length[std::to_string(m)] = count;
  j = json{{"x", r.x},
           {"distinct_count", r.distinct_count},
           {"multiplicity_count", r.multiplicity_count},
           {"per_length", per_length},
           {"max_length_seen", r.max_length_seen}};
}

void from_json(const json& j, CountReport& r) {
  j.at("x").get_to(r.x);
  j.at("distinct_count").get_to(r.distinct_count);
  j.at("multiplicity_count").get_to(r.multiplicity_count);
  r.per_length.clear();
  for (const auto& [key, count] : j.at("per_length").items()) {
    r.per_length.emplace(std::stoull(key), count.get<std::uint64_t>());
  }
  j.at("max_length_seen").get_to(r.max_length_seen);
}

void to_json(json& j, const BoundReport& r) {
  j = json{{"label", r.label},
           {"x_or_m", r.x_or_m},
           {"lhs", r.lhs},
           {"rhs", r.rhs},
           {"observed", r.observed ? json(*r.observed) : json(nullptr)},
           {"applicable", r.applicable},
           {"verdict", std::string(to_string(r.verdict))},
           {"relation", std::string(to_string(r.relation))},
           {"parameter", r.parameter ? json(*r.parameter) : json(nullptr)},
           {"asserted", r.asserted}};
}

void from_json(const json& j, BoundReport& r) {
  j.at("label").get_to(r.label);
  j.at("x_or_m").get_to(r.x_or_m);
  j.at("lhs").get_to(r.lhs);
  j.at("rhs").get_to(r.rhs);
  const auto& observed = j.at("observed");
  r.observed = observed.is_null() ? std::nullopt
                                  : std::optional<std::uint64_t>(observed.get<std::uint64_t>());
  j.at("applicable").get_to(r.applicable);
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  r.relation = parse_relation(j.at("relation").get<std::string>());
  const auto& parameter = j.at("parameter");
  r.parameter = parameter.is_null() ? std::nullopt
                                    : std::optional<double>(parameter.get<double>());
  j.at("asserted").get_to(r.asserted);
}

void to_json(json& j, const WindowCap& c) {
  j = json{{"x", c.x},
           {"analytic_M", c.analytic_M},
           {"exact_M", c.exact_M},
           {"alpha", c.alpha ? json(*c.alpha) : json(nullptr)}};
}

void from_json(const json& j, WindowCap& c) {
  j.at("x").get_to(c.x);
  j.at("analytic_M").get_to(c.analytic_M);
  j.at("exact_M").get_to(c.exact_M);
  const auto& alpha = j.at("alpha");
  c.alpha = alpha.is_null() ? std::nullopt : std::optional<double>(alpha.get<double>());
}

void to_json(json& j, const DusartCheck& c) {
  j = json{{"N", c.n},
           {"lower_value", c.lower_value},
           {"pi_value", c.pi_value},
           {"upper_value", c.upper_value},
           {"lower_applicable", c.lower_applicable},
           {"upper_applicable", c.upper_applicable},
           {"passed", c.passed}};
}

void to_json(json& j, const FamilySummary& f) {
  j = json{{"label", f.label},
           {"asserted", f.asserted},
           {"checked", f.checked},
           {"passed", f.passed},
           {"failed", f.failed},
           {"inconclusive", f.inconclusive},
           {"not_applicable", f.not_applicable},
           {"tightest", f.tightest ? json(*f.tightest) : json(nullptr)}};
}

// ---- text and CSV ----------------------------------------------------------

namespace {

template <class T>
std::string json_array(std::span<const T> items) {
  json j = json::array();
  for (const auto& item : items) j.push_back(item);
  return j.dump() + "\n";
}

std::string optional_field(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string optional_field(const std::optional<double>& v) {
  return v ? format_real(*v) : std::string();
}

std::string per_length_field(const CountReport& r, char sep) {
  std::string out;
  for (const auto& [m, count] : r.per_length) {
    if (!out.empty()) out += sep;
    out += fmt::format("{}:{}", m, count);
  }
  return out;
}

}  // namespace

std::string serialize(std::span<const Representation> reps, Format format) {
  switch (format) {
    case Format::json: return json_array(reps);
    case Format::csv: {
      std::string out = "start_index,length,value\n";
      for (const auto& r : reps) out += fmt::format("{},{},{}\n", r.start_index, r.length, r.value);
      return out;
    }
    case Format::text: break;
  }
  std::string out;
  for (const auto& r : reps) {
    out += fmt::format("value={} start_index={} length={}\n", r.value, r.start_index, r.length);
  }
  return out;
}

std::string serialize(std::span<const CountReport> reports, Format format, CountMode mode) {
  switch (format) {
    case Format::json: return json_array(reports);
    case Format::csv: {
      std::string out = "x,distinct_count,multiplicity_count,per_length,max_length_seen\n";
      for (const auto& r : reports) {
        out += fmt::format("{},{},{},{},{}\n", r.x, r.distinct_count, r.multiplicity_count,
                           per_length_field(r, ';'), r.max_length_seen);
      }
      return out;
    }
    case Format::text: break;
  }
  std::string out;
  for (const auto& r : reports) {
    out += fmt::format("x={}", r.x);
    if (mode != CountMode::multiplicity) out += fmt::format(" distinct_count={}", r.distinct_count);
    if (mode != CountMode::distinct) {
      out += fmt::format(" multiplicity_count={}", r.multiplicity_count);
    }
    out += fmt::format(" max_length_seen={}\n", r.max_length_seen);
  }
  return out;
}

std::string describe(const BoundReport& r) {
  std::string line = fmt::format("{:<12} {} at {}", to_string(r.verdict), r.label, r.x_or_m);
  if (r.parameter) line += fmt::format(" ({})", format_real(*r.parameter));
  line += fmt::format(": {} {} {}", format_real(r.lhs), to_string(r.relation), format_real(r.rhs));
  if (r.observed) line += fmt::format(" observed={}", *r.observed);
  if (!r.applicable) line += " [not applicable]";
  if (!r.asserted) line += " [recorded]";
  return line;
}

std::string serialize(std::span<const BoundReport> reports, Format format) {
  switch (format) {
    case Format::json: return json_array(reports);
    case Format::csv: {
      std::string out =
          "label,x_or_m,lhs,rhs,observed,applicable,verdict,relation,parameter,asserted\n";
      for (const auto& r : reports) {
        out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", r.label, r.x_or_m, format_real(r.lhs),
                           format_real(r.rhs), optional_field(r.observed), r.applicable,
                           to_string(r.verdict), to_string(r.relation),
                           optional_field(r.parameter), r.asserted);
      }
      return out;
    }
    case Format::text: break;
  }
  std::string out;
  for (const auto& r : reports) out += describe(r) + "\n";
  return out;
}

std::string serialize(std::span<const WindowCap> caps, Format format) {
  switch (format) {
    case Format::json: return json_array(caps);
    case Format::csv: {
      std::string out = "x,analytic_M,exact_M,alpha\n";
      for (const auto& c : caps) {
        out += fmt::format("{},{},{},{}\n", c.x, c.analytic_M, c.exact_M, optional_field(c.alpha));
      }
      return out;
    }
    case Format::text: break;
  }
  std::string out;
  for (const auto& c : caps) {
    out += fmt::format("x={} analytic_M={} exact_M={}\n", c.x, c.analytic_M, c.exact_M);
  }
  return out;
}

std::string serialize_values(std::span<const std::uint64_t> values, Format format) {
  switch (format) {
    case Format::json: return json(std::vector<std::uint64_t>(values.begin(), values.end())).dump() + "\n";
    case Format::csv: {
      std::string out = "value\n";
      for (auto v : values) out += fmt::format("{}\n", v);
      return out;
    }
    case Format::text: break;
  }
  std::string out;
  for (auto v : values) out += fmt::format("{}\n", v);
  return out;
}

std::string serialize(const VerifyResult& result, Format format) {
  switch (format) {
    case Format::json: {
      json j{{"all_pass", result.all_pass()},
             {"reports", result.reports},
             {"families", result.families}};
      return j.dump() + "\n";
    }
    case Format::csv: return serialize(std::span<const BoundReport>(result.reports), format);
    case Format::text: break;
  }
  std::string out = serialize(std::span<const BoundReport>(result.reports), format);
  for (const auto& f : result.families) {
    out += fmt::format("family {}: {} checked, {} pass, {} fail, {} inconclusive, {} not applicable{}\n",
                       f.label, f.checked, f.passed, f.failed, f.inconclusive, f.not_applicable,
                       f.asserted ? "" : " [recorded]");
    if (f.tightest) out += "  tightest: " + describe(*f.tightest) + "\n";
  }
  out += result.all_pass() ? "verify: pass\n" : "verify: FAIL\n";
  return out;
}

std::string describe(const Representation& rep, const PrimeTable& table) {
  std::string out = fmt::format("{} =", rep.value);
  for (std::uint64_t k = 0; k < rep.length; ++k) {
    out += fmt::format("{} {}^2", k == 0 ? "" : " +", table.prime(rep.start_index + k));
  }
  return out;
}

}  // namespace cpsq
