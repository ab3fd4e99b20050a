#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "guiverify/color.hpp"
#include "guiverify/config.hpp"
#include "guiverify/error.hpp"
#include "guiverify/fixture.hpp"
#include "guiverify/image.hpp"
#include "guiverify/percept.hpp"
#include "guiverify/screen.hpp"
#include "guiverify/violations.hpp"

namespace guiverify {

// A single planned mutation. magnitude units are category-specific:
// pixels for layout, delta E for color categories, height ratio for text
// size, differing-pixel fraction for image content; unused for presence
// and text content.
struct InjectionSpec {
  ViolationCategory category = ViolationCategory::LayoutTranslation;
  std::string target_id;
  double magnitude = 0.0;
};

struct GroundTruth {
  ViolationCategory category = ViolationCategory::LayoutTranslation;
  std::optional<std::string> mockup_id;
  std::optional<std::string> impl_id;
};

// Clean mock-up plus a mutated implementation with known ground truth.
// mutated_regions lists every implementation-image region the mutation
// touched; all pixels outside them are bit-identical to the clean screen.
struct InjectedCase {
  std::string name;
  ScreenPair mockup;
  ScreenPair impl;
  std::vector<GroundTruth> ground_truth;
  std::vector<BoundingBox> mutated_regions;
};

// Magnitudes sit margin_factor above the detector tolerance so recovery
// failures indicate genuine bugs rather than threshold flakiness.
inline double default_magnitude(ViolationCategory cat, const Config& cfg) {
  switch (cat) {
    case ViolationCategory::LayoutTranslation: return cfg.injection_margin * cfg.pos_tol;
    case ViolationCategory::LayoutResize: return cfg.injection_margin * cfg.size_tol;
    case ViolationCategory::TextColor: return cfg.injection_margin * cfg.text_color_tol;
    case ViolationCategory::TextSize: return cfg.injection_margin * cfg.text_size_tol;
    case ViolationCategory::ResourceColor: return cfg.injection_margin * cfg.color_tol;
    case ViolationCategory::ResourceImage: return cfg.injection_margin * cfg.image_tol;
    default: return 1.0;  // presence and text content have no scale
  }
}

namespace detail {

inline GuiComponent* find_mutable(GuiComponent& node, const std::string& id) {
  if (node.id == id) return &node;
  for (GuiComponent& child : node.children)
    if (GuiComponent* found = find_mutable(child, id)) return found;
  return nullptr;
}

inline const GuiComponent* find_parent(const GuiComponent& node, const std::string& id) {
  for (const GuiComponent& child : node.children) {
    if (child.id == id) return &node;
    if (const GuiComponent* p = find_parent(child, id)) return p;
  }
  return nullptr;
}

inline bool remove_by_id(GuiComponent& node, const std::string& id) {
  for (auto it = node.children.begin(); it != node.children.end(); ++it) {
    if (it->id == id) {
      node.children.erase(it);
      return true;
    }
    if (remove_by_id(*it, id)) return true;
  }
  return false;
}

// Snaps each channel to its 4-bit quantization-cell center, so the drawn
// color and the color the detectors recover are identical.
inline Rgb snap_to_bin_centroid(Rgb c) {
  return histogram_bin_centroid(histogram_bin_index(c));
}

inline int clamp_channel(int v) { return std::clamp(v, 0, 255); }

// Deterministic search for a centroid-aligned color at least `need` delta E
// away from `base`: progressively stronger darken/lighten steps, then a
// channel rotation as a last resort.
inline Rgb pick_shifted_color(Rgb base, double need) {
  for (int k = 3; k <= 15; ++k) {
    for (int sign : {-1, 1}) {
      const Rgb cand = snap_to_bin_centroid(
          Rgb{static_cast<std::uint8_t>(clamp_channel(base.r + sign * k * 16)),
              static_cast<std::uint8_t>(clamp_channel(base.g + sign * k * 16)),
              static_cast<std::uint8_t>(clamp_channel(base.b + sign * k * 16))});
      if (delta_e_rgb(base, cand) >= need) return cand;
    }
  }
  const Rgb rotated = snap_to_bin_centroid(Rgb{base.b, base.r, base.g});
  if (delta_e_rgb(base, rotated) >= need) return rotated;
  throw Error(ErrorCode::MutationOutOfBounds,
              "no color shift reaches delta E " + std::to_string(need));
}

inline std::vector<BoundingBox> leaf_bounds_except(const ScreenHierarchy& h,
                                                   const std::string& skip_id) {
  std::vector<BoundingBox> out;
  for (const GuiComponent* leaf : leaf_components(h))
    if (leaf->id != skip_id) out.push_back(leaf->bounds);
  return out;
}

inline bool overlaps_any(const BoundingBox& box, const std::vector<BoundingBox>& boxes) {
  for (const BoundingBox& b : boxes)
    if (box.intersects(b)) return true;
  return false;
}

inline BoundingBox inflate(const BoundingBox& b, int margin) {
  return BoundingBox{b.x - margin, b.y - margin, b.w + 2 * margin, b.h + 2 * margin};
}

// First on-screen spot (row-major 20 px grid, seed-rotated start) where a
// block of the given size plus margin clears every leaf.
inline std::optional<BoundingBox> find_free_region(const ScreenHierarchy& h, int w, int high,
                                                   std::uint64_t seed) {
  const std::vector<BoundingBox> leaves = leaf_bounds_except(h, "");
  constexpr int kStep = 20;
  constexpr int kMargin = 12;
  std::vector<BoundingBox> spots;
  for (int y = kMargin; y + high + kMargin <= h.screen_h; y += kStep)
    for (int x = kMargin; x + w + kMargin <= h.screen_w; x += kStep) {
      const BoundingBox cand{x, y, w, high};
      if (!overlaps_any(inflate(cand, kMargin), leaves)) spots.push_back(cand);
    }
  if (spots.empty()) return std::nullopt;
  return spots[seed % spots.size()];
}

// Printable-ASCII rotation; spaces survive so word structure stays visible.
inline std::string shift_text(const std::string& text, int amount) {
  std::string out = text;
  for (char& c : out) {
    if (c < 33 || c > 126) continue;
    c = static_cast<char>((c - 33 + amount) % 94 + 33);
  }
  return out;
}

inline Rgb screen_background_color(const ScreenImage& img) {
  return dominant_color(color_histogram(img));
}

}  // namespace detail

namespace detail {

// Applies one mutation in place, appending its ground truth and the image
// regions it touched.
inline void apply_mutation(InjectedCase& out, const InjectionSpec& spec, const Config& cfg,
                           std::uint64_t seed) {
  ScreenHierarchy& h = out.impl.hierarchy;
  ScreenImage& img = out.impl.image;
  const BoundingBox screen_rect{0, 0, h.screen_w, h.screen_h};

  if (spec.category != ViolationCategory::ResourceExtra) {
    const GuiComponent* probe = detail::find_mutable(h.root, spec.target_id);
    if (!probe)
      throw Error(ErrorCode::TargetNotFound, "no component '" + spec.target_id + "'");
    if (probe->is_container())
      throw Error(ErrorCode::TargetNotFound,
                  "component '" + spec.target_id + "' is a container, not a leaf");
  }

  switch (spec.category) {
    case ViolationCategory::LayoutTranslation: {
      GuiComponent* t = detail::find_mutable(h.root, spec.target_id);
      const int dx = static_cast<int>(std::lround(spec.magnitude));
      BoundingBox nb = t->bounds;
      nb.x += dx;
      if (!screen_rect.contains(nb))
        throw Error(ErrorCode::MutationOutOfBounds,
                    "shifting '" + spec.target_id + "' by " + std::to_string(dx) +
                        " px leaves the screen");
      const ScreenImage patch = crop(img, t->bounds);
      fill_rect(img, t->bounds, detail::screen_background_color(img));
      blit(img, patch, nb.x, nb.y);
      out.mutated_regions.push_back(t->bounds);
      out.mutated_regions.push_back(nb);
      t->bounds = nb;
      out.ground_truth.push_back({spec.category, spec.target_id, spec.target_id});
      break;
    }
    case ViolationCategory::LayoutResize: {
      GuiComponent* t = detail::find_mutable(h.root, spec.target_id);
      const int dw = static_cast<int>(std::lround(spec.magnitude));
      BoundingBox nb = t->bounds;
      nb.w += dw;
      if (nb.w < 1 || !screen_rect.contains(nb))
        throw Error(ErrorCode::MutationOutOfBounds,
                    "resizing '" + spec.target_id + "' by " + std::to_string(dw) +
                        " px leaves the screen");
      const ScreenImage patch = crop(img, t->bounds);
      fill_rect(img, t->bounds, detail::screen_background_color(img));
      blit(img, resample_nearest(patch, nb.w, nb.h), nb.x, nb.y);
      out.mutated_regions.push_back(t->bounds);
      out.mutated_regions.push_back(nb);
      t->bounds = nb;
      out.ground_truth.push_back({spec.category, spec.target_id, spec.target_id});
      break;
    }
    case ViolationCategory::TextContent: {
      GuiComponent* t = detail::find_mutable(h.root, spec.target_id);
      if (!t->text || t->text->empty())
        throw Error(ErrorCode::TargetNotFound,
                    "component '" + spec.target_id + "' has no text to rewrite");
      const ScreenImage old_crop = crop(img, t->bounds);
      const ColorHistogram hist = color_histogram(old_crop);
      const Rgb bg = dominant_color(hist);
      const Rgb fg = second_dominant_color(hist);
      std::mt19937_64 rng(seed);
      const int amount = 1 + static_cast<int>(rng() % 4);
      const std::string rewritten = detail::shift_text(*t->text, amount);
      t->text = rewritten;
      fill_rect(img, t->bounds, bg);
      render_glyph_blocks(img, t->bounds, rewritten, fg);
      out.mutated_regions.push_back(t->bounds);
      out.ground_truth.push_back({spec.category, spec.target_id, spec.target_id});
      break;
    }
    case ViolationCategory::TextColor: {
      GuiComponent* t = detail::find_mutable(h.root, spec.target_id);
      if (!t->text || t->text->empty())
        throw Error(ErrorCode::TargetNotFound,
                    "component '" + spec.target_id + "' has no text to recolor");
      const ScreenImage old_crop = crop(img, t->bounds);
      const ColorHistogram hist = color_histogram(old_crop);
      const Rgb bg = dominant_color(hist);
      const Rgb fg = second_dominant_color(hist);
      const Rgb shifted = detail::pick_shifted_color(fg, spec.magnitude);
      fill_rect(img, t->bounds, bg);
      render_glyph_blocks(img, t->bounds, *t->text, shifted);
      out.mutated_regions.push_back(t->bounds);
      out.ground_truth.push_back({spec.category, spec.target_id, spec.target_id});
      break;
    }
    case ViolationCategory::TextSize: {
      GuiComponent* t = detail::find_mutable(h.root, spec.target_id);
      if (!t->text || t->text->empty())
        throw Error(ErrorCode::TargetNotFound,
                    "component '" + spec.target_id + "' has no text to rescale");
      const int nh = static_cast<int>(std::lround(t->bounds.h * (1.0 + spec.magnitude)));
      BoundingBox nb = t->bounds;
      nb.h = nh;
      if (nh == t->bounds.h)
        throw Error(ErrorCode::MutationOutOfBounds,
                    "magnitude too small to change the height of '" + spec.target_id + "'");
      if (nh < 1 || !screen_rect.contains(nb))
        throw Error(ErrorCode::MutationOutOfBounds,
                    "rescaling '" + spec.target_id + "' leaves the screen");
      const ScreenImage old_crop = crop(img, t->bounds);
      const ColorHistogram hist = color_histogram(old_crop);
      const Rgb bg = dominant_color(hist);
      const Rgb fg = second_dominant_color(hist);
      fill_rect(img, t->bounds, bg);
      fill_rect(img, nb, bg);
      render_glyph_blocks(img, nb, *t->text, fg);
      out.mutated_regions.push_back(t->bounds);
      out.mutated_regions.push_back(nb);
      t->bounds = nb;
      out.ground_truth.push_back({spec.category, spec.target_id, spec.target_id});
      break;
    }
    case ViolationCategory::ResourceMissing: {
      const GuiComponent* t = detail::find_mutable(h.root, spec.target_id);
      const BoundingBox old_bounds = t->bounds;
      detail::remove_by_id(h.root, spec.target_id);
      fill_rect(img, old_bounds, detail::screen_background_color(img));
      out.mutated_regions.push_back(old_bounds);
      out.ground_truth.push_back({spec.category, spec.target_id, std::nullopt});
      break;
    }
    case ViolationCategory::ResourceExtra: {
      if (detail::find_mutable(h.root, spec.target_id))
        throw Error(ErrorCode::TargetNotFound,
                    "component '" + spec.target_id + "' already exists");
      const auto spot = detail::find_free_region(h, 120, 120, seed);
      if (!spot)
        throw Error(ErrorCode::MutationOutOfBounds,
                    "no free screen region for an extra component");
      const Rgb bg = detail::screen_background_color(img);
      Rgb fill = detail::pick_shifted_color(bg, 20.0);
      GuiComponent extra;
      extra.id = spec.target_id;
      extra.ctype = ComponentType::Image;
      extra.bounds = *spot;
      h.root.children.push_back(std::move(extra));
      fill_rect(img, *spot, fill);
      out.mutated_regions.push_back(*spot);
      out.ground_truth.push_back({spec.category, std::nullopt, spec.target_id});
      break;
    }
    case ViolationCategory::ResourceColor: {
      GuiComponent* t = detail::find_mutable(h.root, spec.target_id);
      const ScreenImage old_crop = crop(img, t->bounds);
      const Rgb dom = dominant_color(color_histogram(old_crop));
      const Rgb shifted = detail::pick_shifted_color(dom, spec.magnitude);
      const int dom_bin = histogram_bin_index(dom);
      for (int y = t->bounds.y; y < t->bounds.bottom(); ++y)
        for (int x = t->bounds.x; x < t->bounds.right(); ++x)
          if (histogram_bin_index(img.at(x, y)) == dom_bin) img.at(x, y) = shifted;
      out.mutated_regions.push_back(t->bounds);
      out.ground_truth.push_back({spec.category, spec.target_id, spec.target_id});
      break;
    }
    case ViolationCategory::ResourceImage: {
      GuiComponent* t = detail::find_mutable(h.root, spec.target_id);
      if (spec.magnitude >= 0.47)
        throw Error(ErrorCode::MutationOutOfBounds,
                    "image mutation fraction must stay below 0.47 to keep the "
                    "dominant color stable");
      const ScreenImage old_crop = crop(img, t->bounds);
      const Rgb dom = dominant_color(color_histogram(old_crop));
      const Rgb stripe = detail::pick_shifted_color(dom, std::max(10.0, 4.0 * cfg.jnd));
      constexpr int kPeriod = 17;
      const int duty = static_cast<int>(std::ceil(spec.magnitude * kPeriod));
      std::mt19937_64 rng(seed);
      const int phase = static_cast<int>(rng() % kPeriod);
      std::int64_t painted = 0;
      for (int x = t->bounds.x; x < t->bounds.right(); ++x) {
        if ((x - t->bounds.x + phase) % kPeriod >= duty) continue;
        for (int y = t->bounds.y; y < t->bounds.bottom(); ++y) img.at(x, y) = stripe;
        painted += t->bounds.h;
      }
      const double fraction = static_cast<double>(painted) / static_cast<double>(t->bounds.area());
      if (fraction < spec.magnitude || fraction >= 0.5)
        throw Error(ErrorCode::MutationOutOfBounds,
                    "stripe pattern cannot reach fraction " + std::to_string(spec.magnitude) +
                        " on '" + spec.target_id + "'");
      out.mutated_regions.push_back(t->bounds);
      out.ground_truth.push_back({spec.category, spec.target_id, spec.target_id});
      break;
    }
  }
}

}  // namespace detail

// Multi-violation mode for integration stress: mutations applied in order to
// one implementation copy, each on a distinct target.
inline InjectedCase inject_many(const ScreenPair& clean,
                                const std::vector<InjectionSpec>& specs, const Config& cfg,
                                std::uint64_t seed) {
  InjectedCase out;
  out.mockup = clean;
  out.mockup.origin = ScreenOrigin::Mockup;
  out.impl = clean;
  out.impl.origin = ScreenOrigin::Implementation;

  std::set<std::string> targets;
  for (const InjectionSpec& spec : specs)
    if (!targets.insert(spec.target_id).second)
      throw Error(ErrorCode::InsufficientTargets,
                  "duplicate target '" + spec.target_id + "' in a multi-violation case");
  std::mt19937_64 rng(seed);
  for (const InjectionSpec& spec : specs) detail::apply_mutation(out, spec, cfg, rng());
  return out;
}

// The default: exactly one mutation per case.
inline InjectedCase inject(const ScreenPair& clean, const InjectionSpec& spec,
                           const Config& cfg, std::uint64_t seed) {
  return inject_many(clean, {spec}, cfg, seed);
}

namespace detail {

// Targets on which the default-magnitude mutation provokes its own category
// and nothing else: shifts stay on-screen and clear of neighbors, text-size
// growth stays inside the layout tolerance, image stripes keep the dominant
// color in the majority.
inline std::vector<std::string> eligible_targets(const ScreenPair& clean,
                                                 ViolationCategory cat, const Config& cfg) {
  const ScreenHierarchy& h = clean.hierarchy;
  const BoundingBox screen_rect{0, 0, h.screen_w, h.screen_h};
  const double magnitude = default_magnitude(cat, cfg);
  std::vector<std::string> out;
  for (const GuiComponent* leaf : leaf_components(h)) {
    const std::vector<BoundingBox> others = leaf_bounds_except(h, leaf->id);
    const bool text_target = is_text_like(leaf->ctype) && leaf->text && !leaf->text->empty();
    const bool image_target =
        leaf->ctype == ComponentType::Image || leaf->ctype == ComponentType::Other;
    switch (cat) {
      case ViolationCategory::LayoutTranslation: {
        BoundingBox nb = leaf->bounds;
        nb.x += static_cast<int>(std::lround(magnitude));
        if (screen_rect.contains(nb) && !overlaps_any(nb, others)) out.push_back(leaf->id);
        break;
      }
      case ViolationCategory::LayoutResize: {
        BoundingBox nb = leaf->bounds;
        nb.w += static_cast<int>(std::lround(magnitude));
        if (screen_rect.contains(nb) && !overlaps_any(nb, others)) out.push_back(leaf->id);
        break;
      }
      case ViolationCategory::TextContent:
        if (text_target) out.push_back(leaf->id);
        break;
      case ViolationCategory::TextColor:
        if (text_target) out.push_back(leaf->id);
        break;
      case ViolationCategory::TextSize: {
        if (!text_target) break;
        const int nh = static_cast<int>(std::lround(leaf->bounds.h * (1.0 + magnitude)));
        BoundingBox nb = leaf->bounds;
        nb.h = nh;
        if (nh != leaf->bounds.h && std::abs(nh - leaf->bounds.h) <= cfg.size_tol &&
            screen_rect.contains(nb) && !overlaps_any(nb, others))
          out.push_back(leaf->id);
        break;
      }
      case ViolationCategory::ResourceMissing: {
        // Deleting a container's only child would expose the container as a
        // new leaf on the implementation side.
        const GuiComponent* parent = find_parent(h.root, leaf->id);
        if (parent && (parent == &h.root || parent->children.size() >= 2))
          out.push_back(leaf->id);
        break;
      }
      case ViolationCategory::ResourceColor:
        if (image_target) out.push_back(leaf->id);
        break;
      case ViolationCategory::ResourceImage:
        if (image_target && leaf->bounds.w >= 34) out.push_back(leaf->id);
        break;
      case ViolationCategory::ResourceExtra:
        break;  // handled separately: target is synthesized
    }
  }
  return out;
}

}  // namespace detail

// One mutated case per count, targets drawn per-case from the eligible set.
// Deterministic under (clean, counts, seed).
inline std::vector<InjectedCase> generate_suite(const ScreenPair& clean,
                                                const std::map<ViolationCategory, int>& counts,
                                                std::uint64_t seed, const Config& cfg) {
  std::mt19937_64 rng(seed);
  std::vector<InjectedCase> suite;
  for (ViolationCategory cat : kAllCategories) {
    const auto it = counts.find(cat);
    const int n = it == counts.end() ? 0 : it->second;
    if (n <= 0) continue;
    std::vector<std::string> eligible;
    if (cat != ViolationCategory::ResourceExtra) {
      eligible = detail::eligible_targets(clean, cat, cfg);
      if (eligible.empty())
        throw Error(ErrorCode::InsufficientTargets,
                    std::string("no eligible targets for ") + category_name(cat));
    }
    for (int k = 0; k < n; ++k) {
      InjectionSpec spec;
      spec.category = cat;
      spec.magnitude = default_magnitude(cat, cfg);
      if (cat == ViolationCategory::ResourceExtra)
        spec.target_id = "injected_extra_" + std::to_string(k);
      else
        spec.target_id = eligible[rng() % eligible.size()];
      InjectedCase c = inject(clean, spec, cfg, rng());
      std::string label(category_name(cat));
      for (char& ch : label)
        if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
      c.name = label + "_" + std::to_string(k);
      suite.push_back(std::move(c));
    }
  }
  return suite;
}

}  // namespace guiverify
