#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "guiverify/config.hpp"
#include "guiverify/error.hpp"
#include "guiverify/matching.hpp"
#include "guiverify/percept.hpp"
#include "guiverify/screen.hpp"
#include "guiverify/text_metrics.hpp"

namespace guiverify {

// Three families: layout (position/size of matched components), text
// (content, color, and size of text-bearing components), resource
// (presence, color, and pixel content of image-like components).
enum class ViolationCategory {
  LayoutTranslation,
  LayoutResize,
  TextContent,
  TextColor,
  TextSize,
  ResourceMissing,
  ResourceExtra,
  ResourceColor,
  ResourceImage,
};

inline constexpr ViolationCategory kAllCategories[] = {
    ViolationCategory::LayoutTranslation, ViolationCategory::LayoutResize,
    ViolationCategory::TextContent,       ViolationCategory::TextColor,
    ViolationCategory::TextSize,          ViolationCategory::ResourceMissing,
    ViolationCategory::ResourceExtra,     ViolationCategory::ResourceColor,
    ViolationCategory::ResourceImage,
};

inline const char* category_name(ViolationCategory c) {
  switch (c) {
    case ViolationCategory::LayoutTranslation: return "LAYOUT_TRANSLATION";
    case ViolationCategory::LayoutResize: return "LAYOUT_RESIZE";
    case ViolationCategory::TextContent: return "TEXT_CONTENT";
    case ViolationCategory::TextColor: return "TEXT_COLOR";
    case ViolationCategory::TextSize: return "TEXT_SIZE";
    case ViolationCategory::ResourceMissing: return "RESOURCE_MISSING";
    case ViolationCategory::ResourceExtra: return "RESOURCE_EXTRA";
    case ViolationCategory::ResourceColor: return "RESOURCE_COLOR";
    case ViolationCategory::ResourceImage: return "RESOURCE_IMAGE";
  }
  return "UNKNOWN";
}

inline ViolationCategory parse_category(std::string_view name) {
  for (ViolationCategory c : kAllCategories)
    if (name == category_name(c)) return c;
  throw Error(ErrorCode::UnknownCategory,
              "unknown violation category '" + std::string(name) + "'");
}

enum class ViolationFamily { Layout, Text, Resource };

inline ViolationFamily category_family(ViolationCategory c) {
  switch (c) {
    case ViolationCategory::LayoutTranslation:
    case ViolationCategory::LayoutResize:
      return ViolationFamily::Layout;
    case ViolationCategory::TextContent:
    case ViolationCategory::TextColor:
    case ViolationCategory::TextSize:
      return ViolationFamily::Text;
    default:
      return ViolationFamily::Resource;
  }
}

// One categorized discrepancy. RESOURCE_MISSING carries no impl_id and
// RESOURCE_EXTRA no mockup_id; every other category carries both. The
// evidence regions locate the discrepancy in each screenshot — for presence
// violations the absent side shows the expected location.
struct Violation {
  ViolationCategory category = ViolationCategory::LayoutTranslation;
  std::optional<std::string> mockup_id;
  std::optional<std::string> impl_id;
  double severity = 0.0;
  std::vector<std::pair<std::string, double>> metrics;
  BoundingBox mockup_region;
  BoundingBox impl_region;

  bool operator==(const Violation&) const = default;
};

namespace detail {

inline double ramp_severity(double excess, double scale) {
  return excess <= 0 ? 0.0 : std::min(1.0, excess / scale);
}

inline Violation make_pair_violation(ViolationCategory cat, const GuiComponent& m,
                                     const GuiComponent& i) {
  Violation v;
  v.category = cat;
  v.mockup_id = m.id;
  v.impl_id = i.id;
  v.mockup_region = m.bounds;
  v.impl_region = i.bounds;
  return v;
}

}  // namespace detail

// Position and size of a matched pair, compared against pixel tolerances.
inline std::vector<Violation> detect_layout(const GuiComponent& m, const GuiComponent& i,
                                            const Config& cfg) {
  std::vector<Violation> out;
  const double dx = i.bounds.x - m.bounds.x;
  const double dy = i.bounds.y - m.bounds.y;
  const double shift = std::max(std::fabs(dx), std::fabs(dy));
  if (shift > cfg.pos_tol) {
    Violation v = detail::make_pair_violation(ViolationCategory::LayoutTranslation, m, i);
    v.metrics = {{"dx", dx}, {"dy", dy}};
    v.severity = detail::ramp_severity(shift - cfg.pos_tol, cfg.severity_px_scale);
    out.push_back(std::move(v));
  }
  const double dw = i.bounds.w - m.bounds.w;
  const double dh = i.bounds.h - m.bounds.h;
  const double resize = std::max(std::fabs(dw), std::fabs(dh));
  if (resize > cfg.size_tol) {
    Violation v = detail::make_pair_violation(ViolationCategory::LayoutResize, m, i);
    v.metrics = {{"dw", dw}, {"dh", dh}};
    v.severity = detail::ramp_severity(resize - cfg.size_tol, cfg.severity_px_scale);
    out.push_back(std::move(v));
  }
  return out;
}

// Text content from metadata, text color via the second-dominant crop color
// (foreground proxy), and text size via bounding-box heights.
inline std::vector<Violation> detect_text(const GuiComponent& m, const GuiComponent& i,
                                          const ScreenImage& crop_m,
                                          const ScreenImage& crop_i, const Config& cfg) {
  std::vector<Violation> out;
  const double sim = text_similarity(m.text, i.text);
  if (sim < 1.0) {
    Violation v = detail::make_pair_violation(ViolationCategory::TextContent, m, i);
    v.metrics = {{"text_sim", sim}};
    v.severity = detail::ramp_severity(1.0 - sim, 1.0);
    out.push_back(std::move(v));
  }
  const Rgb fg_m = second_dominant_color(color_histogram(crop_m));
  const Rgb fg_i = second_dominant_color(color_histogram(crop_i));
  const double de = delta_e_rgb(fg_m, fg_i);
  if (de > cfg.text_color_tol) {
    Violation v = detail::make_pair_violation(ViolationCategory::TextColor, m, i);
    v.metrics = {{"delta_e", de}};
    v.severity = detail::ramp_severity(de - cfg.text_color_tol, cfg.severity_delta_e_scale);
    out.push_back(std::move(v));
  }
  const double ratio_dev =
      std::fabs(static_cast<double>(i.bounds.h) / static_cast<double>(m.bounds.h) - 1.0);
  if (ratio_dev > cfg.text_size_tol) {
    Violation v = detail::make_pair_violation(ViolationCategory::TextSize, m, i);
    v.metrics = {{"ratio_dev", ratio_dev}};
    v.severity = detail::ramp_severity(ratio_dev - cfg.text_size_tol, cfg.severity_ratio_scale);
    out.push_back(std::move(v));
  }
  return out;
}

// Dominant-color shift, falling back to per-pixel perceptual difference.
// A color violation subsumes the pixel diff: one root cause, one report.
inline std::vector<Violation> detect_resource(const GuiComponent& m, const GuiComponent& i,
                                              const ScreenImage& crop_m,
                                              const ScreenImage& crop_i, const Config& cfg) {
  std::vector<Violation> out;
  const Rgb dom_m = dominant_color(color_histogram(crop_m));
  const Rgb dom_i = dominant_color(color_histogram(crop_i));
  const double de = delta_e_rgb(dom_m, dom_i);
  bool color_fired = false;
  if (de > cfg.color_tol) {
    Violation v = detail::make_pair_violation(ViolationCategory::ResourceColor, m, i);
    v.metrics = {{"delta_e", de}};
    v.severity = detail::ramp_severity(de - cfg.color_tol, cfg.severity_delta_e_scale);
    out.push_back(std::move(v));
    color_fired = true;
  }
  if (!color_fired) {
    const PerceptualDiff diff = perceptual_region_diff(crop_m, crop_i, cfg.jnd);
    if (diff.differing_fraction > cfg.image_tol) {
      Violation v = detail::make_pair_violation(ViolationCategory::ResourceImage, m, i);
      v.metrics = {{"differing_fraction", diff.differing_fraction},
                   {"mean_delta_e", diff.mean_delta_e}};
      v.severity = detail::ramp_severity(diff.differing_fraction - cfg.image_tol,
                                         cfg.severity_fraction_scale);
      out.push_back(std::move(v));
    }
  }
  return out;
}

namespace detail {

inline BoundingBox clamp_to_screen(BoundingBox b, int screen_w, int screen_h) {
  BoundingBox c;
  c.x = std::clamp(b.x, 0, screen_w - 1);
  c.y = std::clamp(b.y, 0, screen_h - 1);
  c.w = std::max(1, std::min(b.right(), screen_w) - c.x);
  c.h = std::max(1, std::min(b.bottom(), screen_h) - c.y);
  return c;
}

inline const GuiComponent* find_leaf(const std::vector<const GuiComponent*>& leaves,
                                     const std::string& id) {
  for (const GuiComponent* leaf : leaves)
    if (leaf->id == id) return leaf;
  return nullptr;
}

}  // namespace detail

// Unmatched mock-up leaves were never implemented; unmatched implementation
// leaves have no specification. Severity is pinned to 1: a whole component
// is at stake.
inline std::vector<Violation> detect_presence(const MatchResult& match,
                                              const ScreenHierarchy& mockup,
                                              const ScreenHierarchy& impl) {
  std::vector<Violation> out;
  const auto mock_leaves = leaf_components(mockup);
  const auto impl_leaves = leaf_components(impl);
  for (const std::string& id : match.unmatched_mockup) {
    const GuiComponent* leaf = detail::find_leaf(mock_leaves, id);
    if (!leaf) continue;
    Violation v;
    v.category = ViolationCategory::ResourceMissing;
    v.mockup_id = id;
    v.severity = 1.0;
    v.mockup_region = leaf->bounds;
    v.impl_region = detail::clamp_to_screen(leaf->bounds, impl.screen_w, impl.screen_h);
    out.push_back(std::move(v));
  }
  for (const std::string& id : match.unmatched_impl) {
    const GuiComponent* leaf = detail::find_leaf(impl_leaves, id);
    if (!leaf) continue;
    Violation v;
    v.category = ViolationCategory::ResourceExtra;
    v.impl_id = id;
    v.severity = 1.0;
    v.impl_region = leaf->bounds;
    v.mockup_region = detail::clamp_to_screen(leaf->bounds, mockup.screen_w, mockup.screen_h);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace guiverify
