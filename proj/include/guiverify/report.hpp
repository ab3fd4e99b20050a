#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "guiverify/config.hpp"
#include "guiverify/error.hpp"
#include "guiverify/version.hpp"
#include "guiverify/violations.hpp"

namespace guiverify {

struct MatchStats {
  int matched = 0;
  int unmatched_mockup = 0;
  int unmatched_impl = 0;

  bool operator==(const MatchStats&) const = default;
};

// The full comparison outcome. Serialization is canonical — fixed key
// order, reals at 6 significant digits — so equal reports are byte-equal
// and diffable under version control.
struct ViolationReport {
  std::string tool_version = kToolVersion;
  std::int64_t timestamp = 0;  // unix seconds, UTC
  std::string mockup_image;
  std::string mockup_meta;
  std::string impl_image;
  std::string impl_meta;
  Config config;
  MatchStats match_stats;
  std::vector<Violation> violations;
  std::vector<std::string> warnings;

  // All reals pass through here so stored values equal serialized values.
  void add_violation(Violation v) {
    v.severity = round_sig6(v.severity);
    for (auto& [name, value] : v.metrics) value = round_sig6(value);
    violations.push_back(std::move(v));
  }

  bool operator==(const ViolationReport&) const = default;
};

// Honors SOURCE_DATE_EPOCH for reproducible runs.
inline std::int64_t current_timestamp() {
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0') return static_cast<std::int64_t>(v);
  }
  return static_cast<std::int64_t>(std::time(nullptr));
}

inline std::string format_timestamp(std::int64_t unix_seconds) {
  std::time_t t = static_cast<std::time_t>(unix_seconds);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[72];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
  return buf;
}

inline std::int64_t parse_timestamp(const std::string& iso) {
  std::tm tm{};
  int y, mo, d, h, mi, s;
  if (std::sscanf(iso.c_str(), "%d-%d-%dT%d:%d:%dZ", &y, &mo, &d, &h, &mi, &s) != 6)
    throw Error(ErrorCode::MalformedDocument, "bad timestamp '" + iso + "'");
  tm.tm_year = y - 1900;
  tm.tm_mon = mo - 1;
  tm.tm_mday = d;
  tm.tm_hour = h;
  tm.tm_min = mi;
  tm.tm_sec = s;
  return static_cast<std::int64_t>(timegm(&tm));
}

namespace detail {

inline nlohmann::ordered_json box_to_json(const BoundingBox& b) {
  return nlohmann::ordered_json::array({b.x, b.y, b.w, b.h});
}

inline BoundingBox box_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array() || j.size() != 4)
    throw Error(ErrorCode::MalformedDocument, "region must be [x,y,w,h]");
  return BoundingBox{j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>()};
}

inline nlohmann::ordered_json violation_to_json(const Violation& v) {
  nlohmann::ordered_json j;
  j["category"] = category_name(v.category);
  j["mockup_id"] = v.mockup_id ? nlohmann::ordered_json(*v.mockup_id)
                               : nlohmann::ordered_json(nullptr);
  j["impl_id"] =
      v.impl_id ? nlohmann::ordered_json(*v.impl_id) : nlohmann::ordered_json(nullptr);
  j["severity"] = round_sig6(v.severity);
  nlohmann::ordered_json metrics;
  for (const auto& [name, value] : v.metrics) metrics[name] = round_sig6(value);
  j["metrics"] = std::move(metrics);
  j["evidence"] = {{"mockup_region", box_to_json(v.mockup_region)},
                   {"impl_region", box_to_json(v.impl_region)}};
  return j;
}

// ordered parsing keeps metric insertion order, which is significant
inline Violation violation_from_json(const nlohmann::ordered_json& j) {
  Violation v;
  if (!j.is_object() || !j.contains("category") || !j["category"].is_string())
    throw Error(ErrorCode::MalformedDocument, "violation entry missing category");
  v.category = parse_category(j["category"].get<std::string>());
  if (j.contains("mockup_id") && j["mockup_id"].is_string())
    v.mockup_id = j["mockup_id"].get<std::string>();
  if (j.contains("impl_id") && j["impl_id"].is_string())
    v.impl_id = j["impl_id"].get<std::string>();
  if (!j.contains("severity") || !j["severity"].is_number())
    throw Error(ErrorCode::MalformedDocument, "violation entry missing severity");
  v.severity = j["severity"].get<double>();
  if (j.contains("metrics")) {
    for (const auto& item : j["metrics"].items()) {
      if (!item.value().is_number())
        throw Error(ErrorCode::MalformedDocument, "violation metric must be a number");
      v.metrics.emplace_back(item.key(), item.value().get<double>());
    }
  }
  if (!j.contains("evidence") || !j["evidence"].is_object())
    throw Error(ErrorCode::MalformedDocument, "violation entry missing evidence");
  v.mockup_region = box_from_json(j["evidence"]["mockup_region"]);
  v.impl_region = box_from_json(j["evidence"]["impl_region"]);
  return v;
}

}  // namespace detail

inline std::string to_json(const ViolationReport& r) {
  nlohmann::ordered_json j;
  j["tool"] = kToolName;
  j["tool_version"] = r.tool_version;
  j["timestamp"] = format_timestamp(r.timestamp);
  j["mockup_source"] = {{"image", r.mockup_image}, {"meta", r.mockup_meta}};
  j["impl_source"] = {{"image", r.impl_image}, {"meta", r.impl_meta}};
  j["config"] = config_to_json(r.config);
  j["match_stats"] = {{"matched", r.match_stats.matched},
                      {"unmatched_mockup", r.match_stats.unmatched_mockup},
                      {"unmatched_impl", r.match_stats.unmatched_impl}};
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const Violation& v : r.violations) violations.push_back(detail::violation_to_json(v));
  j["violations"] = std::move(violations);
  j["warnings"] = r.warnings;
  return j.dump(2) + "\n";
}

inline ViolationReport report_from_json(std::string_view text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::ordered_json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
  if (!doc.is_object() || !doc.contains("tool_version") ||
      !doc["tool_version"].is_string())
    throw Error(ErrorCode::MalformedDocument, "document is not a violation report");
  ViolationReport r;
  r.tool_version = doc["tool_version"].get<std::string>();
  const int major = std::atoi(r.tool_version.c_str());
  if (major != kVersionMajor)
    throw Error(ErrorCode::VersionMismatch,
                "report version " + r.tool_version + " is incompatible with tool version " +
                    kToolVersion);
  if (!doc.contains("timestamp") || !doc["timestamp"].is_string())
    throw Error(ErrorCode::MalformedDocument, "missing timestamp");
  r.timestamp = parse_timestamp(doc["timestamp"].get<std::string>());
  if (doc.contains("mockup_source") && doc["mockup_source"].is_object()) {
    r.mockup_image = doc["mockup_source"].value("image", "");
    r.mockup_meta = doc["mockup_source"].value("meta", "");
  }
  if (doc.contains("impl_source") && doc["impl_source"].is_object()) {
    r.impl_image = doc["impl_source"].value("image", "");
    r.impl_meta = doc["impl_source"].value("meta", "");
  }
  if (!doc.contains("config"))
    throw Error(ErrorCode::MalformedDocument, "missing config echo");
  r.config = config_from_json(doc["config"]);
  if (!doc.contains("match_stats") || !doc["match_stats"].is_object())
    throw Error(ErrorCode::MalformedDocument, "missing match_stats");
  r.match_stats.matched = doc["match_stats"].value("matched", 0);
  r.match_stats.unmatched_mockup = doc["match_stats"].value("unmatched_mockup", 0);
  r.match_stats.unmatched_impl = doc["match_stats"].value("unmatched_impl", 0);
  if (!doc.contains("violations") || !doc["violations"].is_array())
    throw Error(ErrorCode::MalformedDocument, "missing violations array");
  for (const auto& vj : doc["violations"])
    r.violations.push_back(detail::violation_from_json(vj));
  if (doc.contains("warnings"))
    for (const auto& w : doc["warnings"]) r.warnings.push_back(w.get<std::string>());
  return r;
}

}  // namespace guiverify
