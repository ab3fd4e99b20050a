#pragma once

#include <string>
#include <string_view>

#include "guiverify/image.hpp"
#include "guiverify/screen.hpp"

namespace guiverify {

// Deterministic placeholder glyphs: one solid block per character, with a
// width keyed to the character value. No font stack involved, so renders
// are bit-identical everywhere, yet different strings produce different
// pixels.
inline void render_glyph_blocks(ScreenImage& img, const BoundingBox& bounds,
                                std::string_view text, Rgb fg) {
  const int pad = std::max(1, bounds.h / 6);
  const int glyph_h = std::max(1, bounds.h - 2 * pad);
  const int unit = std::max(1, glyph_h / 8);
  const int gap = std::max(2, glyph_h / 5);
  const int y0 = bounds.y + pad;
  int x = bounds.x + pad;
  const int x_end = bounds.right() - pad;
  for (char c : text) {
    if (c == ' ') {
      x += 2 * gap;
      continue;
    }
    const int glyph_w = 2 + (static_cast<unsigned char>(c) % 5) * unit;
    if (x + glyph_w > x_end) break;
    fill_rect(img, BoundingBox{x, y0, glyph_w, glyph_h}, fg);
    x += glyph_w + gap;
  }
}

namespace fixture_palette {
// All fixture colors sit on 4-bit histogram-bin centroids (channel = 16k+8),
// so dominant-color extraction recovers fill colors exactly.
inline constexpr Rgb kBackground{248, 248, 248};
inline constexpr Rgb kPrimary{56, 88, 168};
inline constexpr Rgb kOnPrimary{248, 248, 248};
inline constexpr Rgb kAccent{8, 152, 136};
inline constexpr Rgb kInputFill{232, 232, 232};
inline constexpr Rgb kBodyText{104, 104, 104};
inline constexpr Rgb kFaintText{152, 152, 152};
inline constexpr Rgb kIconBlue{56, 88, 152};
inline constexpr Rgb kIconSky{88, 168, 232};
inline constexpr Rgb kIconRed{216, 72, 56};
}  // namespace fixture_palette

namespace detail {

inline GuiComponent make_leaf(std::string id, ComponentType t, BoundingBox b,
                              const char* text = nullptr) {
  GuiComponent c;
  c.id = std::move(id);
  c.ctype = t;
  c.bounds = b;
  if (text) c.text = text;
  return c;
}

}  // namespace detail

// The bundled clean screen: a procedurally drawn 1080x1920 login screen
// with 15 leaves, used by selftest and the test corpora. Leaves are spaced
// so injected mutations never touch a neighboring component.
inline ScreenPair build_fixture_pair(ScreenOrigin origin = ScreenOrigin::Mockup) {
  namespace pal = fixture_palette;
  constexpr int kW = 1080;
  constexpr int kH = 1920;

  ScreenHierarchy h;
  h.screen_w = kW;
  h.screen_h = kH;
  h.root = detail::make_leaf("root", ComponentType::Container, {0, 0, kW, kH});

  GuiComponent header =
      detail::make_leaf("header", ComponentType::Container, {0, 0, kW, 168});
  header.children.push_back(
      detail::make_leaf("title", ComponentType::Text, {72, 56, 320, 56}, "Welcome"));
  h.root.children.push_back(std::move(header));

  h.root.children.push_back(
      detail::make_leaf("logo", ComponentType::Image, {440, 240, 200, 200}));
  h.root.children.push_back(detail::make_leaf(
      "subtitle", ComponentType::Text, {360, 520, 360, 40}, "Sign in to continue"));
  h.root.children.push_back(detail::make_leaf("user_label", ComponentType::Text,
                                              {96, 616, 200, 32}, "Username"));
  h.root.children.push_back(detail::make_leaf(
      "user_input", ComponentType::Input, {96, 664, 888, 88}, "user@example.com"));
  h.root.children.push_back(detail::make_leaf("pass_label", ComponentType::Text,
                                              {96, 792, 200, 32}, "Password"));
  h.root.children.push_back(detail::make_leaf("pass_input", ComponentType::Input,
                                              {96, 840, 888, 88}, "secret123"));
  h.root.children.push_back(detail::make_leaf("login_btn", ComponentType::Button,
                                              {96, 992, 888, 120}, "LOG IN"));
  h.root.children.push_back(detail::make_leaf(
      "forgot_link", ComponentType::Text, {384, 1160, 312, 36}, "Forgot password?"));
  h.root.children.push_back(
      detail::make_leaf("fb_icon", ComponentType::Image, {248, 1400, 120, 120}));
  h.root.children.push_back(
      detail::make_leaf("tw_icon", ComponentType::Image, {480, 1400, 120, 120}));
  h.root.children.push_back(
      detail::make_leaf("gp_icon", ComponentType::Image, {712, 1400, 120, 120}));
  h.root.children.push_back(detail::make_leaf("version_tag", ComponentType::Text,
                                              {24, 1868, 180, 20}, "v2.4.1"));
  h.root.children.push_back(detail::make_leaf("copyright", ComponentType::Text,
                                              {440, 1868, 240, 20}, "(c) 2024 Example"));
  h.root.children.push_back(detail::make_leaf("build_tag", ComponentType::Text,
                                              {876, 1868, 180, 20}, "build 1142"));

  ScreenImage img(kW, kH, pal::kBackground);
  fill_rect(img, {0, 0, kW, 168}, pal::kPrimary);
  render_glyph_blocks(img, {72, 56, 320, 56}, "Welcome", pal::kOnPrimary);
  fill_rect(img, {440, 240, 200, 200}, pal::kAccent);
  render_glyph_blocks(img, {360, 520, 360, 40}, "Sign in to continue", pal::kBodyText);
  render_glyph_blocks(img, {96, 616, 200, 32}, "Username", pal::kBodyText);
  fill_rect(img, {96, 664, 888, 88}, pal::kInputFill);
  render_glyph_blocks(img, {96, 664, 888, 88}, "user@example.com", pal::kBodyText);
  render_glyph_blocks(img, {96, 792, 200, 32}, "Password", pal::kBodyText);
  fill_rect(img, {96, 840, 888, 88}, pal::kInputFill);
  render_glyph_blocks(img, {96, 840, 888, 88}, "secret123", pal::kBodyText);
  fill_rect(img, {96, 992, 888, 120}, pal::kPrimary);
  render_glyph_blocks(img, {96, 992, 888, 120}, "LOG IN", pal::kOnPrimary);
  render_glyph_blocks(img, {384, 1160, 312, 36}, "Forgot password?", pal::kPrimary);
  fill_rect(img, {248, 1400, 120, 120}, pal::kIconBlue);
  fill_rect(img, {480, 1400, 120, 120}, pal::kIconSky);
  fill_rect(img, {712, 1400, 120, 120}, pal::kIconRed);
  render_glyph_blocks(img, {24, 1868, 180, 20}, "v2.4.1", pal::kFaintText);
  render_glyph_blocks(img, {440, 1868, 240, 20}, "(c) 2024 Example", pal::kFaintText);
  render_glyph_blocks(img, {876, 1868, 180, 20}, "build 1142", pal::kFaintText);

  return ScreenPair{std::move(h), std::move(img), origin};
}

}  // namespace guiverify
