#pragma once

// Randomized inputs for property tests: screens with drawn images, bare
// leaf lists for the matcher, and reports for serialization round-trips.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "guiverify/config.hpp"
#include "guiverify/fixture.hpp"
#include "guiverify/image.hpp"
#include "guiverify/report.hpp"
#include "guiverify/screen.hpp"
#include "guiverify/violations.hpp"

namespace testsupport {

using namespace guiverify;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int int_in(int lo, int hi) {  // inclusive
    return static_cast<int>(lo + engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double real(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(engine_() >> 11) / 9007199254740992.0);
  }
  bool chance(double p) { return real(0.0, 1.0) < p; }
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline Rgb random_color(Rng& rng) {
  return Rgb{static_cast<std::uint8_t>(rng.int_in(0, 255)),
             static_cast<std::uint8_t>(rng.int_in(0, 255)),
             static_cast<std::uint8_t>(rng.int_in(0, 255))};
}

inline std::string random_word(Rng& rng) {
  const int len = rng.int_in(1, 10);
  std::string s;
  for (int i = 0; i < len; ++i) s += static_cast<char>('a' + rng.int_in(0, 25));
  return s;
}

inline ComponentType random_type(Rng& rng) {
  constexpr ComponentType kTypes[] = {ComponentType::Text,  ComponentType::Button,
                                      ComponentType::Image, ComponentType::Input,
                                      ComponentType::Other, ComponentType::Container};
  return kTypes[rng.int_in(0, 5)];
}

inline GuiComponent random_leaf(Rng& rng, int screen_w, int screen_h,
                                const std::string& id) {
  GuiComponent c;
  c.id = id;
  c.ctype = random_type(rng);
  c.bounds.x = rng.int_in(0, screen_w - 1);
  c.bounds.y = rng.int_in(0, screen_h - 1);
  c.bounds.w = rng.int_in(1, std::min(screen_w - c.bounds.x, 200));
  c.bounds.h = rng.int_in(1, std::min(screen_h - c.bounds.y, 140));
  if (is_text_like(c.ctype) && rng.chance(0.7)) c.text = random_word(rng);
  return c;
}

// Owning list of random leaves with unique ids; duplicates in geometry and
// text are deliberately possible.
inline std::vector<GuiComponent> random_leaf_list(Rng& rng, int count,
                                                  const std::string& prefix,
                                                  int screen_w = 600, int screen_h = 900) {
  std::vector<GuiComponent> out;
  for (int k = 0; k < count; ++k)
    out.push_back(random_leaf(rng, screen_w, screen_h, prefix + std::to_string(k)));
  return out;
}

inline std::vector<const GuiComponent*> leaf_ptrs(const std::vector<GuiComponent>& leaves) {
  std::vector<const GuiComponent*> out;
  out.reserve(leaves.size());
  for (const GuiComponent& c : leaves) out.push_back(&c);
  return out;
}

// A validated screen with a drawn image: background fill, one fill per
// leaf, glyph blocks on text-bearing components, occasional nesting.
inline ScreenPair random_screen_pair(std::uint64_t seed,
                                     ScreenOrigin origin = ScreenOrigin::Mockup) {
  Rng rng(seed);
  ScreenHierarchy h;
  h.screen_w = rng.int_in(240, 640);
  h.screen_h = rng.int_in(320, 900);
  h.root.id = "root";
  h.root.ctype = ComponentType::Container;
  h.root.bounds = BoundingBox{0, 0, h.screen_w, h.screen_h};

  const int leaf_count = rng.int_in(0, 16);
  int next_id = 0;
  int group_idx = -1;  // index into root children; pointers would dangle on growth
  for (int k = 0; k < leaf_count; ++k) {
    if (group_idx < 0 && rng.chance(0.15)) {
      GuiComponent container;
      container.id = "g" + std::to_string(next_id++);
      container.ctype = ComponentType::Container;
      container.bounds = BoundingBox{0, 0, h.screen_w, h.screen_h};
      h.root.children.push_back(std::move(container));
      group_idx = static_cast<int>(h.root.children.size()) - 1;
    } else if (group_idx >= 0 && rng.chance(0.5)) {
      group_idx = -1;
    }
    GuiComponent leaf =
        random_leaf(rng, h.screen_w, h.screen_h, "c" + std::to_string(next_id++));
    auto& target =
        group_idx >= 0 ? h.root.children[group_idx].children : h.root.children;
    target.push_back(std::move(leaf));
  }
  ScreenImage img(h.screen_w, h.screen_h, random_color(rng));
  for (const GuiComponent* leaf : leaf_components(h)) {
    fill_rect(img, leaf->bounds, random_color(rng));
    if (leaf->text) render_glyph_blocks(img, leaf->bounds, *leaf->text, random_color(rng));
  }
  return ScreenPair{std::move(h), std::move(img), origin};
}

inline Config random_config(Rng& rng) {
  Config c;
  const double weight_sets[][3] = {
      {0.5, 0.3, 0.2}, {0.25, 0.25, 0.5}, {1.0, 0.0, 0.0}, {0.4, 0.4, 0.2}, {0.6, 0.2, 0.2}};
  const auto& w = weight_sets[rng.int_in(0, 4)];
  c.weight_spatial = w[0];
  c.weight_type = w[1];
  c.weight_text = w[2];
  c.match_threshold = round_sig6(rng.real(0.0, 1.0));
  c.match_by_id = rng.chance(0.2);
  c.pos_tol = round_sig6(rng.real(0.0, 20.0));
  c.size_tol = round_sig6(rng.real(0.0, 20.0));
  c.text_color_tol = round_sig6(rng.real(1.0, 30.0));
  c.color_tol = round_sig6(rng.real(1.0, 30.0));
  c.image_tol = round_sig6(rng.real(0.05, 0.45));
  c.text_size_tol = round_sig6(rng.real(0.01, 0.3));
  c.jnd = round_sig6(rng.real(0.5, 5.0));
  return c;
}

inline Violation random_violation(Rng& rng) {
  Violation v;
  v.category = kAllCategories[rng.int_in(0, 8)];
  if (v.category != ViolationCategory::ResourceExtra)
    v.mockup_id = "m" + std::to_string(rng.int_in(0, 30));
  if (v.category != ViolationCategory::ResourceMissing)
    v.impl_id = "i" + std::to_string(rng.int_in(0, 30));
  v.severity = rng.real(0.0, 1.0);
  const int metric_count = rng.int_in(0, 3);
  const char* names[] = {"dx", "dy", "delta_e", "text_sim", "ratio_dev", "differing_fraction"};
  for (int k = 0; k < metric_count; ++k)
    v.metrics.emplace_back(names[rng.int_in(0, 5)] + std::to_string(k),
                           rng.real(-100.0, 100.0));
  v.mockup_region = BoundingBox{rng.int_in(0, 100), rng.int_in(0, 100), rng.int_in(1, 200),
                                rng.int_in(1, 200)};
  v.impl_region = BoundingBox{rng.int_in(0, 100), rng.int_in(0, 100), rng.int_in(1, 200),
                              rng.int_in(1, 200)};
  return v;
}

inline ViolationReport random_report(Rng& rng) {
  ViolationReport r;
  r.timestamp = 1500000000 + static_cast<std::int64_t>(rng.raw() % 400000000);
  r.mockup_image = random_word(rng) + ".png";
  r.mockup_meta = random_word(rng) + ".json";
  r.impl_image = random_word(rng) + ".png";
  r.impl_meta = random_word(rng) + ".json";
  r.config = random_config(rng);
  r.match_stats.matched = rng.int_in(0, 40);
  r.match_stats.unmatched_mockup = rng.int_in(0, 10);
  r.match_stats.unmatched_impl = rng.int_in(0, 10);
  const int violation_count = rng.int_in(0, 8);
  for (int k = 0; k < violation_count; ++k) r.add_violation(random_violation(rng));
  const int warning_count = rng.int_in(0, 3);
  for (int k = 0; k < warning_count; ++k) r.warnings.push_back(random_word(rng));
  return r;
}

}  // namespace testsupport
