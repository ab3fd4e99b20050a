#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "guiverify/error.hpp"

namespace guiverify {

// Rounds to 6 significant digits — the precision of every real in reports
// and configs, so serialized documents are diffable and round-trip exactly.
inline double round_sig6(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v == 0.0 ? 0.0 : v;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return std::strtod(buf, nullptr);
}

// Every tunable in the pipeline. Echoed verbatim into each report so any
// report is reproducible from its inputs alone.
struct Config {
  // matching
  double weight_spatial = 0.5;
  double weight_type = 0.3;
  double weight_text = 0.2;
  double match_threshold = 0.4;
  bool match_by_id = false;

  // detector tolerances
  double pos_tol = 5.0;           // px
  double size_tol = 5.0;          // px
  double text_color_tol = 10.0;   // delta E
  double color_tol = 10.0;        // delta E
  double image_tol = 0.2;         // differing-pixel fraction
  double text_size_tol = 0.1;     // height-ratio deviation
  double jnd = 2.3;               // delta E

  // severity ramps: severity = min(1, excess / scale)
  double severity_px_scale = 50.0;
  double severity_delta_e_scale = 50.0;
  double severity_ratio_scale = 0.5;
  double severity_fraction_scale = 0.8;

  // injection margin: magnitudes are margin_factor x detector tolerance
  double injection_margin = 2.0;

  bool operator==(const Config&) const = default;
};

namespace detail {

template <class Json>
void read_real(const Json& obj, const std::string& group, const char* key, double& out) {
  if (!obj.contains(key)) return;
  if (!obj[key].is_number())
    throw Error(ErrorCode::SchemaViolation,
                "config field " + group + "." + key + " must be a number");
  out = round_sig6(obj[key].template get<double>());
}

template <class Json>
void read_bool(const Json& obj, const std::string& group, const char* key, bool& out) {
  if (!obj.contains(key)) return;
  if (!obj[key].is_boolean())
    throw Error(ErrorCode::SchemaViolation,
                "config field " + group + "." + key + " must be a boolean");
  out = obj[key].template get<bool>();
}

template <class Json>
void reject_unknown_keys(const Json& obj, const std::string& group,
                         std::initializer_list<const char*> known) {
  for (const auto& item : obj.items()) {
    bool found = false;
    for (const char* k : known)
      if (item.key() == k) {
        found = true;
        break;
      }
    if (!found)
      throw Error(ErrorCode::SchemaViolation,
                  "unknown config field " + group + "." + item.key());
  }
}

}  // namespace detail

inline void validate_config(const Config& c) {
  if (c.weight_spatial < 0 || c.weight_type < 0 || c.weight_text < 0)
    throw Error(ErrorCode::SchemaViolation, "config field match.weight_*: weights must be non-negative");
  if (std::fabs(c.weight_spatial + c.weight_type + c.weight_text - 1.0) > 1e-9)
    throw Error(ErrorCode::SchemaViolation, "config field match.weight_*: weights must sum to 1");
  if (c.match_threshold < 0 || c.match_threshold > 1)
    throw Error(ErrorCode::SchemaViolation, "config field match.threshold: must be in [0,1]");
  const struct { const char* name; double v; } tols[] = {
      {"tolerance.pos_px", c.pos_tol},
      {"tolerance.size_px", c.size_tol},
      {"tolerance.text_color_delta_e", c.text_color_tol},
      {"tolerance.color_delta_e", c.color_tol},
      {"tolerance.image_fraction", c.image_tol},
      {"tolerance.text_size_ratio", c.text_size_tol},
      {"tolerance.jnd", c.jnd},
  };
  for (const auto& t : tols)
    if (!(t.v >= 0))
      throw Error(ErrorCode::SchemaViolation,
                  std::string("config field ") + t.name + ": must be >= 0");
  const struct { const char* name; double v; } scales[] = {
      {"severity.px_scale", c.severity_px_scale},
      {"severity.delta_e_scale", c.severity_delta_e_scale},
      {"severity.ratio_scale", c.severity_ratio_scale},
      {"severity.fraction_scale", c.severity_fraction_scale},
  };
  for (const auto& s : scales)
    if (!(s.v > 0))
      throw Error(ErrorCode::SchemaViolation,
                  std::string("config field ") + s.name + ": must be > 0");
  if (!(c.injection_margin >= 1))
    throw Error(ErrorCode::SchemaViolation, "config field injection.margin_factor: must be >= 1");
}

inline nlohmann::ordered_json config_to_json(const Config& c) {
  nlohmann::ordered_json j;
  j["match"] = {{"weight_spatial", c.weight_spatial},
                {"weight_type", c.weight_type},
                {"weight_text", c.weight_text},
                {"threshold", c.match_threshold},
                {"match_by_id", c.match_by_id}};
  j["tolerance"] = {{"pos_px", c.pos_tol},
                    {"size_px", c.size_tol},
                    {"text_color_delta_e", c.text_color_tol},
                    {"color_delta_e", c.color_tol},
                    {"image_fraction", c.image_tol},
                    {"text_size_ratio", c.text_size_tol},
                    {"jnd", c.jnd}};
  j["severity"] = {{"px_scale", c.severity_px_scale},
                   {"delta_e_scale", c.severity_delta_e_scale},
                   {"ratio_scale", c.severity_ratio_scale},
                   {"fraction_scale", c.severity_fraction_scale}};
  j["injection"] = {{"margin_factor", c.injection_margin}};
  return j;
}

// Missing fields keep their defaults; unknown fields are rejected so config
// typos fail loudly instead of silently using defaults.
template <class Json>
Config config_from_json(const Json& j) {
  if (!j.is_object())
    throw Error(ErrorCode::SchemaViolation, "config document must be an object");
  detail::reject_unknown_keys(j, "<root>", {"match", "tolerance", "severity", "injection"});
  Config c;
  if (j.contains("match")) {
    const auto& m = j["match"];
    detail::reject_unknown_keys(m, "match",
                                {"weight_spatial", "weight_type", "weight_text",
                                 "threshold", "match_by_id"});
    detail::read_real(m, "match", "weight_spatial", c.weight_spatial);
    detail::read_real(m, "match", "weight_type", c.weight_type);
    detail::read_real(m, "match", "weight_text", c.weight_text);
    detail::read_real(m, "match", "threshold", c.match_threshold);
    detail::read_bool(m, "match", "match_by_id", c.match_by_id);
  }
  if (j.contains("tolerance")) {
    const auto& t = j["tolerance"];
    detail::reject_unknown_keys(t, "tolerance",
                                {"pos_px", "size_px", "text_color_delta_e", "color_delta_e",
                                 "image_fraction", "text_size_ratio", "jnd"});
    detail::read_real(t, "tolerance", "pos_px", c.pos_tol);
    detail::read_real(t, "tolerance", "size_px", c.size_tol);
    detail::read_real(t, "tolerance", "text_color_delta_e", c.text_color_tol);
    detail::read_real(t, "tolerance", "color_delta_e", c.color_tol);
    detail::read_real(t, "tolerance", "image_fraction", c.image_tol);
    detail::read_real(t, "tolerance", "text_size_ratio", c.text_size_tol);
    detail::read_real(t, "tolerance", "jnd", c.jnd);
  }
  if (j.contains("severity")) {
    const auto& s = j["severity"];
    detail::reject_unknown_keys(s, "severity",
                                {"px_scale", "delta_e_scale", "ratio_scale", "fraction_scale"});
    detail::read_real(s, "severity", "px_scale", c.severity_px_scale);
    detail::read_real(s, "severity", "delta_e_scale", c.severity_delta_e_scale);
    detail::read_real(s, "severity", "ratio_scale", c.severity_ratio_scale);
    detail::read_real(s, "severity", "fraction_scale", c.severity_fraction_scale);
  }
  if (j.contains("injection")) {
    const auto& i = j["injection"];
    detail::reject_unknown_keys(i, "injection", {"margin_factor"});
    detail::read_real(i, "injection", "margin_factor", c.injection_margin);
  }
  validate_config(c);
  return c;
}

inline Config parse_config(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
  return config_from_json(doc);
}

inline Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace guiverify
