#include <catch2/catch_amalgamated.hpp>

#include "guiverify/detection.hpp"
#include "guiverify/fixture.hpp"
#include "guiverify/injector.hpp"
#include "guiverify/violations.hpp"

#include "support/generators.hpp"

using namespace guiverify;

namespace {

GuiComponent leaf(std::string id, ComponentType t, BoundingBox b,
                  std::optional<std::string> text = std::nullopt) {
  GuiComponent c;
  c.id = std::move(id);
  c.ctype = t;
  c.bounds = b;
  c.text = std::move(text);
  return c;
}

// flat fill with a contrasting glyph band, as detect_text expects
ScreenImage text_crop(int w, int h, Rgb bg, Rgb fg, int fg_rows) {
  ScreenImage img(w, h, bg);
  fill_rect(img, {1, 1, w - 2, fg_rows}, fg);
  return img;
}

}  // namespace

TEST_CASE("layout translation past the tolerance") {
  const Config cfg;
  const GuiComponent m = leaf("m", ComponentType::Image, {100, 200, 300, 80});
  const GuiComponent i = leaf("i", ComponentType::Image, {112, 200, 300, 80});
  const auto out = detect_layout(m, i, cfg);
  REQUIRE(out.size() == 1);
  CHECK(out[0].category == ViolationCategory::LayoutTranslation);
  CHECK(out[0].metrics == std::vector<std::pair<std::string, double>>{{"dx", 12.0}, {"dy", 0.0}});
  CHECK(out[0].severity == Catch::Approx(0.14).margin(1e-12));
  CHECK(out[0].mockup_region == m.bounds);
  CHECK(out[0].impl_region == i.bounds);

  CHECK(detect_layout(m, m, cfg).empty());
}

TEST_CASE("layout resize fires alone when the shift stays inside tolerance") {
  const Config cfg;
  const GuiComponent m = leaf("m", ComponentType::Image, {0, 0, 300, 80});
  const GuiComponent i = leaf("i", ComponentType::Image, {3, 0, 280, 80});
  const auto out = detect_layout(m, i, cfg);
  REQUIRE(out.size() == 1);
  CHECK(out[0].category == ViolationCategory::LayoutResize);
  CHECK(out[0].metrics ==
        std::vector<std::pair<std::string, double>>{{"dw", -20.0}, {"dh", 0.0}});
  CHECK(out[0].severity == Catch::Approx((20.0 - 5.0) / 50.0).margin(1e-12));
}

TEST_CASE("both layout violations can fire on one pair") {
  const Config cfg;
  const GuiComponent m = leaf("m", ComponentType::Image, {0, 0, 300, 80});
  const GuiComponent i = leaf("i", ComponentType::Image, {20, 0, 340, 80});
  const auto out = detect_layout(m, i, cfg);
  REQUIRE(out.size() == 2);
  CHECK(out[0].category == ViolationCategory::LayoutTranslation);
  CHECK(out[1].category == ViolationCategory::LayoutResize);
}

TEST_CASE("text content violation carries the similarity metric") {
  const Config cfg;
  const GuiComponent m = leaf("m", ComponentType::Text, {0, 0, 60, 20}, "Login");
  const GuiComponent i = leaf("i", ComponentType::Text, {0, 0, 60, 20}, "Log in");
  const ScreenImage same = text_crop(60, 20, Rgb{248, 248, 248}, Rgb{104, 104, 104}, 8);
  const auto out = detect_text(m, i, same, same, cfg);
  REQUIRE(out.size() == 1);
  CHECK(out[0].category == ViolationCategory::TextContent);
  REQUIRE(out[0].metrics.size() == 1);
  CHECK(out[0].metrics[0].first == "text_sim");
  CHECK(out[0].metrics[0].second == Catch::Approx(1.0 - 1.0 / 6.0).margin(1e-9));

  CHECK(detect_text(m, m, same, same, cfg).empty());
}

TEST_CASE("text color violation uses the second-dominant crop color") {
  const Config cfg;
  const GuiComponent m = leaf("m", ComponentType::Text, {0, 0, 60, 20}, "Hi");
  const GuiComponent i = leaf("i", ComponentType::Text, {0, 0, 60, 20}, "Hi");
  const ScreenImage crop_m = text_crop(60, 20, Rgb{248, 248, 248}, Rgb{8, 8, 200}, 8);
  const ScreenImage crop_i = text_crop(60, 20, Rgb{248, 248, 248}, Rgb{200, 8, 8}, 8);
  const auto out = detect_text(m, i, crop_m, crop_i, cfg);
  REQUIRE(out.size() == 1);
  CHECK(out[0].category == ViolationCategory::TextColor);
  CHECK(out[0].metrics[0].first == "delta_e");
  CHECK(out[0].metrics[0].second ==
        Catch::Approx(delta_e_rgb(Rgb{8, 8, 200}, Rgb{200, 8, 8})).margin(1e-9));
}

TEST_CASE("text size violation from bounding-box heights") {
  const Config cfg;
  const GuiComponent m = leaf("m", ComponentType::Text, {0, 0, 60, 48}, "Hi");
  const GuiComponent i = leaf("i", ComponentType::Text, {0, 0, 60, 56}, "Hi");
  const ScreenImage crop_m = text_crop(60, 48, Rgb{248, 248, 248}, Rgb{104, 104, 104}, 20);
  const ScreenImage crop_i = text_crop(60, 56, Rgb{248, 248, 248}, Rgb{104, 104, 104}, 24);
  const auto out = detect_text(m, i, crop_m, crop_i, cfg);
  REQUIRE(out.size() == 1);
  CHECK(out[0].category == ViolationCategory::TextSize);
  CHECK(out[0].metrics[0].first == "ratio_dev");
  CHECK(out[0].metrics[0].second == Catch::Approx(56.0 / 48.0 - 1.0).margin(1e-9));
}

TEST_CASE("resource color shift subsumes the pixel diff") {
  const Config cfg;
  const GuiComponent m = leaf("m", ComponentType::Image, {0, 0, 40, 40});
  const GuiComponent i = leaf("i", ComponentType::Image, {0, 0, 40, 40});
  const ScreenImage blue(40, 40, Rgb{8, 8, 200});
  const ScreenImage red(40, 40, Rgb{200, 8, 8});
  const auto out = detect_resource(m, i, blue, red, cfg);
  REQUIRE(out.size() == 1);
  CHECK(out[0].category == ViolationCategory::ResourceColor);
  CHECK(out[0].metrics[0].second ==
        Catch::Approx(delta_e_rgb(Rgb{8, 8, 200}, Rgb{200, 8, 8})).margin(1e-9));

  CHECK(detect_resource(m, i, blue, blue, cfg).empty());
}

TEST_CASE("resource image fires on altered pixels with a stable dominant color") {
  const Config cfg;
  const GuiComponent m = leaf("m", ComponentType::Image, {0, 0, 10, 10});
  const GuiComponent i = leaf("i", ComponentType::Image, {0, 0, 10, 10});
  const ScreenImage clean(10, 10, Rgb{8, 152, 136});
  ScreenImage altered = clean;
  fill_rect(altered, {0, 0, 10, 3}, Rgb{216, 72, 56});  // 30 of 100 pixels
  const auto out = detect_resource(m, i, clean, altered, cfg);
  REQUIRE(out.size() == 1);
  CHECK(out[0].category == ViolationCategory::ResourceImage);
  CHECK(out[0].metrics[0].first == "differing_fraction");
  CHECK(out[0].metrics[0].second == Catch::Approx(0.3).margin(1e-12));
}

TEST_CASE("presence violations from the unmatched sets") {
  ScreenHierarchy mock;
  mock.screen_w = mock.screen_h = 100;
  mock.root = leaf("root", ComponentType::Container, {0, 0, 100, 100});
  mock.root.children.push_back(leaf("m7", ComponentType::Image, {10, 10, 20, 20}));
  ScreenHierarchy impl;
  impl.screen_w = impl.screen_h = 100;
  impl.root = leaf("root", ComponentType::Container, {0, 0, 100, 100});
  impl.root.children.push_back(leaf("i2", ComponentType::Image, {10, 10, 20, 20}));
  impl.root.children.push_back(leaf("i9", ComponentType::Image, {50, 50, 20, 20}));

  MatchResult none;
  CHECK(detect_presence(none, mock, impl).empty());

  MatchResult r;
  r.unmatched_mockup = {"m7"};
  r.unmatched_impl = {"i2", "i9"};
  const auto out = detect_presence(r, mock, impl);
  REQUIRE(out.size() == 3);
  CHECK(out[0].category == ViolationCategory::ResourceMissing);
  CHECK(out[0].mockup_id == "m7");
  CHECK(!out[0].impl_id.has_value());
  CHECK(out[0].severity == 1.0);
  CHECK(out[1].category == ViolationCategory::ResourceExtra);
  CHECK(out[1].impl_id == "i2");
  CHECK(!out[1].mockup_id.has_value());
  CHECK(out[2].impl_id == "i9");
}

TEST_CASE("self-comparison of the fixture yields a clean report") {
  const ScreenPair pair = build_fixture_pair();
  const Config cfg;
  const ViolationReport report = run_detection(pair, pair, cfg);
  CHECK(report.violations.empty());
  CHECK(report.match_stats.matched == 15);
  CHECK(report.match_stats.unmatched_mockup == 0);
  CHECK(report.match_stats.unmatched_impl == 0);
  // the effective config is echoed verbatim
  CHECK(report.config == cfg);
}

TEST_CASE("self-comparison of random screens yields zero violations") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const ScreenPair pair = testsupport::random_screen_pair(seed);
    const ViolationReport report = run_detection(pair, pair, Config{});
    INFO("seed " << seed);
    CHECK(report.violations.empty());
  }
}

TEST_CASE("single mock-up leaf against an empty implementation") {
  ScreenPair mock;
  mock.hierarchy.screen_w = mock.hierarchy.screen_h = 100;
  mock.hierarchy.root = leaf("root", ComponentType::Container, {0, 0, 100, 100});
  mock.hierarchy.root.children.push_back(leaf("only", ComponentType::Text, {10, 10, 30, 20}, "x"));
  mock.image = ScreenImage(100, 100, Rgb{255, 255, 255});

  ScreenPair impl;
  impl.hierarchy.screen_w = impl.hierarchy.screen_h = 100;
  impl.hierarchy.root = leaf("root", ComponentType::Container, {0, 0, 100, 100});
  impl.image = ScreenImage(100, 100, Rgb{255, 255, 255});

  const ViolationReport report = run_detection(mock, impl, Config{});
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].category == ViolationCategory::ResourceMissing);
  CHECK(report.violations[0].mockup_id == "only");
}

TEST_CASE("violations order by severity, then mock-up pre-order") {
  const Config cfg;
  const ScreenPair clean = build_fixture_pair();
  // nudge two components: logo by a lot, forgot_link by a little
  ScreenPair impl = clean;
  auto move_leaf = [&](const std::string& id, int dx) {
    for (GuiComponent& c : impl.hierarchy.root.children)
      if (c.id == id) c.bounds.x += dx;
  };
  move_leaf("forgot_link", 8);
  move_leaf("logo", 36);
  const ViolationReport report = run_detection(clean, impl, cfg);
  REQUIRE(report.violations.size() == 2);
  CHECK(report.violations[0].mockup_id == "logo");         // severity 0.62
  CHECK(report.violations[1].mockup_id == "forgot_link");  // severity 0.06
  CHECK(report.violations[0].severity > report.violations[1].severity);

  // determinism: identical inputs give identical reports
  const ViolationReport again = run_detection(clean, impl, cfg);
  CHECK(again.violations == report.violations);
}

TEST_CASE("raising tolerances never adds violations") {
  const ScreenPair clean = build_fixture_pair();
  Config cfg;
  std::map<ViolationCategory, int> counts;
  for (ViolationCategory c : kAllCategories) counts[c] = 1;
  const auto suite = generate_suite(clean, counts, 5, cfg);
  for (const InjectedCase& cs : suite) {
    const std::size_t base = run_detection(cs.mockup, cs.impl, cfg).violations.size();
    Config loose = cfg;
    loose.pos_tol *= 3;
    loose.size_tol *= 3;
    loose.text_color_tol *= 3;
    loose.color_tol *= 3;
    loose.image_tol = std::min(1.0, loose.image_tol * 3);
    loose.text_size_tol *= 3;
    const std::size_t relaxed = run_detection(cs.mockup, cs.impl, loose).violations.size();
    CHECK(relaxed <= base);
  }
}

TEST_CASE("category id-presence invariant holds on generated cases") {
  const ScreenPair clean = build_fixture_pair();
  Config cfg;
  std::map<ViolationCategory, int> counts;
  for (ViolationCategory c : kAllCategories) counts[c] = 2;
  for (const InjectedCase& cs : generate_suite(clean, counts, 77, cfg)) {
    const ViolationReport report = run_detection(cs.mockup, cs.impl, cfg);
    for (const Violation& v : report.violations) {
      if (v.category == ViolationCategory::ResourceMissing) {
        CHECK(v.mockup_id.has_value());
        CHECK(!v.impl_id.has_value());
      } else if (v.category == ViolationCategory::ResourceExtra) {
        CHECK(!v.mockup_id.has_value());
        CHECK(v.impl_id.has_value());
      } else {
        CHECK(v.mockup_id.has_value());
        CHECK(v.impl_id.has_value());
      }
      // evidence regions stay on their screens
      CHECK(BoundingBox{0, 0, cs.mockup.hierarchy.screen_w, cs.mockup.hierarchy.screen_h}
                .contains(v.mockup_region));
      CHECK(BoundingBox{0, 0, cs.impl.hierarchy.screen_w, cs.impl.hierarchy.screen_h}
                .contains(v.impl_region));
    }
  }
}
