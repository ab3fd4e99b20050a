#include <catch2/catch_amalgamated.hpp>

#include "guiverify/error.hpp"
#include "guiverify/image.hpp"
#include "guiverify/meta.hpp"
#include "guiverify/png_io.hpp"
#include "guiverify/screen.hpp"

#include "support/generators.hpp"

using namespace guiverify;

namespace {

const char* kMinimalDoc = R"({
  "screen": {"width": 1080, "height": 1920, "root": {
    "id": "root", "type": "CONTAINER", "bounds": [0, 0, 1080, 1920],
    "children": [
      {"id": "t1", "type": "TEXT", "bounds": [40, 80, 200, 48], "text": "hello"}
    ]
  }}
})";

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a guiverify::Error");
  return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("minimal metadata document parses to a two-node hierarchy") {
  ScreenHierarchy h = parse_screen_meta(kMinimalDoc);
  CHECK(h.screen_w == 1080);
  CHECK(h.screen_h == 1920);
  CHECK(count_nodes(h.root) == 2);
  auto leaves = leaf_components(h);
  REQUIRE(leaves.size() == 1);
  CHECK(leaves[0]->id == "t1");
  CHECK(leaves[0]->ctype == ComponentType::Text);
  CHECK(leaves[0]->bounds == BoundingBox{40, 80, 200, 48});
  REQUIRE(leaves[0]->text);
  CHECK(*leaves[0]->text == "hello");
}

TEST_CASE("duplicate component ids are a schema violation") {
  const std::string doc = R"({"screen": {"width": 100, "height": 100, "root": {
    "id": "root", "type": "CONTAINER", "bounds": [0,0,100,100], "children": [
      {"id": "t1", "type": "TEXT", "bounds": [0,0,10,10]},
      {"id": "t1", "type": "TEXT", "bounds": [20,20,10,10]}
    ]}}})";
  CHECK(code_of([&] { parse_screen_meta(doc); }) == ErrorCode::SchemaViolation);
}

TEST_CASE("out-of-screen bounds clamp to the screen and record a warning") {
  const std::string doc = R"({"screen": {"width": 1080, "height": 1920, "root": {
    "id": "root", "type": "CONTAINER", "bounds": [0,0,1080,1920], "children": [
      {"id": "c1", "type": "IMAGE", "bounds": [1000,1900,200,100]}
    ]}}})";
  std::vector<std::string> warnings;
  ScreenHierarchy h = parse_screen_meta(doc, &warnings);
  auto leaves = leaf_components(h);
  REQUIRE(leaves.size() == 1);
  CHECK(leaves[0]->bounds == BoundingBox{1000, 1900, 80, 20});
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("clamped") != std::string::npos);
}

TEST_CASE("negative origins clamp to the screen edge") {
  const std::string doc = R"({"screen": {"width": 100, "height": 100, "root": {
    "id": "root", "type": "CONTAINER", "bounds": [0,0,100,100], "children": [
      {"id": "c1", "type": "IMAGE", "bounds": [-5,-10,50,50]}
    ]}}})";
  std::vector<std::string> warnings;
  ScreenHierarchy h = parse_screen_meta(doc, &warnings);
  CHECK(leaf_components(h)[0]->bounds == BoundingBox{0, 0, 45, 40});
  CHECK(warnings.size() == 1);
}

TEST_CASE("a component entirely off-screen is rejected") {
  const std::string doc = R"({"screen": {"width": 100, "height": 100, "root": {
    "id": "root", "type": "CONTAINER", "bounds": [0,0,100,100], "children": [
      {"id": "c1", "type": "IMAGE", "bounds": [100,0,50,50]}
    ]}}})";
  CHECK(code_of([&] { parse_screen_meta(doc); }) == ErrorCode::SchemaViolation);
}

TEST_CASE("metadata error taxonomy") {
  CHECK(code_of([] { parse_screen_meta("{not json"); }) == ErrorCode::MalformedDocument);
  CHECK(code_of([] {
          parse_screen_meta(R"({"screen": {"width": 10, "height": 10}})");
        }) == ErrorCode::EmptyScreen);
  // nonpositive document width
  CHECK(code_of([] {
          parse_screen_meta(R"({"screen": {"width": 10, "height": 10, "root":
            {"id": "r", "type": "CONTAINER", "bounds": [0,0,10,0]}}})");
        }) == ErrorCode::SchemaViolation);
  // missing id
  CHECK(code_of([] {
          parse_screen_meta(R"({"screen": {"width": 10, "height": 10, "root":
            {"type": "CONTAINER", "bounds": [0,0,10,10]}}})");
        }) == ErrorCode::SchemaViolation);
  // root must cover the screen
  CHECK(code_of([] {
          parse_screen_meta(R"({"screen": {"width": 10, "height": 10, "root":
            {"id": "r", "type": "CONTAINER", "bounds": [0,0,5,10]}}})");
        }) == ErrorCode::SchemaViolation);
  // invisible root leaves nothing
  CHECK(code_of([] {
          parse_screen_meta(R"({"screen": {"width": 10, "height": 10, "root":
            {"id": "r", "type": "CONTAINER", "bounds": [0,0,10,10], "visible": false}}})");
        }) == ErrorCode::EmptyScreen);
}

TEST_CASE("unknown type labels map to OTHER and invisible nodes are dropped") {
  const std::string doc = R"({"screen": {"width": 100, "height": 100, "root": {
    "id": "root", "type": "CONTAINER", "bounds": [0,0,100,100], "children": [
      {"id": "a", "type": "android.widget.RatingBar", "bounds": [0,0,10,10]},
      {"id": "b", "type": "TEXT", "bounds": [20,0,10,10], "visible": false},
      {"id": "c", "type": "button", "bounds": [40,0,10,10]}
    ]}}})";
  ScreenHierarchy h = parse_screen_meta(doc);
  auto leaves = leaf_components(h);
  REQUIRE(leaves.size() == 2);
  CHECK(leaves[0]->ctype == ComponentType::Other);
  CHECK(leaves[1]->id == "c");
  CHECK(leaves[1]->ctype == ComponentType::Button);
}

TEST_CASE("parsing is deterministic and round-trips through write_screen_meta") {
  for (std::uint64_t seed : {7u, 19u, 101u}) {
    ScreenPair pair = testsupport::random_screen_pair(seed);
    const std::string doc = write_screen_meta(pair.hierarchy);
    ScreenHierarchy again = parse_screen_meta(doc);
    CHECK(again == pair.hierarchy);
    CHECK(parse_screen_meta(doc) == again);
  }
}

TEST_CASE("leaf_components walks pre-order and skips containers") {
  ScreenHierarchy h = parse_screen_meta(R"({"screen": {"width": 100, "height": 100,
    "root": {"id": "root", "type": "CONTAINER", "bounds": [0,0,100,100], "children": [
      {"id": "t1", "type": "TEXT", "bounds": [0,0,10,10]},
      {"id": "group", "type": "CONTAINER", "bounds": [0,20,100,40], "children": [
        {"id": "t2", "type": "TEXT", "bounds": [0,20,10,10]}
      ]},
      {"id": "img1", "type": "IMAGE", "bounds": [0,60,10,10]}
    ]}}})");
  auto leaves = leaf_components(h);
  REQUIRE(leaves.size() == 3);
  CHECK(leaves[0]->id == "t1");
  CHECK(leaves[1]->id == "t2");
  CHECK(leaves[2]->id == "img1");
  // leaves + containers account for every node
  CHECK(leaves.size() + 2 == count_nodes(h.root));
}

TEST_CASE("bare root yields no leaves") {
  ScreenHierarchy h = parse_screen_meta(R"({"screen": {"width": 10, "height": 10,
    "root": {"id": "root", "type": "CONTAINER", "bounds": [0,0,10,10]}}})");
  CHECK(leaf_components(h).empty());
}

TEST_CASE("validate_pair enforces matching dimensions") {
  ScreenHierarchy h;
  h.screen_w = 1080;
  h.screen_h = 1920;
  h.root = GuiComponent{"root", ComponentType::Container, {0, 0, 1080, 1920}, {}, {}};
  CHECK_NOTHROW(validate_pair(h, ScreenImage(1080, 1920), ScreenOrigin::Mockup));
  CHECK(code_of([&] {
          validate_pair(h, ScreenImage(1080, 1921), ScreenOrigin::Mockup);
        }) == ErrorCode::DimensionMismatch);

  ScreenHierarchy tiny;
  tiny.screen_w = tiny.screen_h = 1;
  tiny.root = GuiComponent{"root", ComponentType::Container, {0, 0, 1, 1}, {}, {}};
  CHECK_NOTHROW(validate_pair(tiny, ScreenImage(1, 1), ScreenOrigin::Mockup));
}

TEST_CASE("crop copies exact pixels") {
  // identity crop
  ScreenPair pair = testsupport::random_screen_pair(3);
  CHECK(crop(pair.image, pair.image.bounds()) == pair.image);

  // single pixel of a white image
  ScreenImage white(3, 3, Rgb{255, 255, 255});
  ScreenImage px = crop(white, {0, 0, 1, 1});
  CHECK(px.width() == 1);
  CHECK(px.at(0, 0) == Rgb{255, 255, 255});

  // interior of a hand-laid 4x4 gradient: pixel (x,y) = (x*10, y*10, x+y)
  ScreenImage grad(4, 4);
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x)
      grad.at(x, y) = Rgb{static_cast<std::uint8_t>(x * 10),
                          static_cast<std::uint8_t>(y * 10),
                          static_cast<std::uint8_t>(x + y)};
  ScreenImage inner = crop(grad, {1, 1, 2, 2});
  REQUIRE(inner.width() == 2);
  REQUIRE(inner.height() == 2);
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 2; ++x)
      CHECK(inner.at(x, y) == Rgb{static_cast<std::uint8_t>((x + 1) * 10),
                                  static_cast<std::uint8_t>((y + 1) * 10),
                                  static_cast<std::uint8_t>(x + y + 2)});

  CHECK(code_of([&] { crop(grad, {2, 2, 4, 4}); }) == ErrorCode::OutOfBounds);
}

TEST_CASE("png round-trip preserves every pixel") {
  ScreenImage white(2, 2, Rgb{255, 255, 255});
  ScreenImage back = load_png_bytes(encode_png(white));
  REQUIRE(back.pixel_count() == 4);
  for (const Rgb& p : back.pixels()) CHECK(p == Rgb{255, 255, 255});

  ScreenPair pair = testsupport::random_screen_pair(11);
  CHECK(load_png_bytes(encode_png(pair.image)) == pair.image);
}

TEST_CASE("truncated png bytes fail to decode") {
  std::vector<std::uint8_t> bytes = encode_png(ScreenImage(8, 8, Rgb{1, 2, 3}));
  bytes.resize(bytes.size() / 2);
  CHECK(code_of([&] { load_png_bytes(bytes); }) == ErrorCode::DecodeError);
  CHECK(code_of([] {
          std::vector<std::uint8_t> junk{'n', 'o', 't', 'p', 'n', 'g'};
          load_png_bytes(junk);
        }) == ErrorCode::DecodeError);
}

TEST_CASE("alpha composites over white with round-half-up") {
  // one RGBA pixel (255,0,0,128) must come back as (255,127,127)
  std::vector<std::uint8_t> rgba = {255, 0, 0, 128};
  ScreenImage img = load_png_bytes(detail::encode_png_rgba(rgba, 1, 1));
  REQUIRE(img.pixel_count() == 1);
  CHECK(img.at(0, 0) == Rgb{255, 127, 127});

  // fully transparent pixel becomes pure white
  std::vector<std::uint8_t> clear = {10, 20, 30, 0};
  CHECK(load_png_bytes(detail::encode_png_rgba(clear, 1, 1)).at(0, 0) == Rgb{255, 255, 255});

  // opaque alpha is untouched
  std::vector<std::uint8_t> opaque = {10, 20, 30, 255};
  CHECK(load_png_bytes(detail::encode_png_rgba(opaque, 1, 1)).at(0, 0) == Rgb{10, 20, 30});
}
