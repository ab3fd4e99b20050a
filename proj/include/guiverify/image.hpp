#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "guiverify/error.hpp"
#include "guiverify/geometry.hpp"

namespace guiverify {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  bool operator==(const Rgb&) const = default;
};

// Row-major 8-bit RGB raster. Immutable in pipeline use; the mutating
// accessors exist for construction (fixture drawing, injection, annotation).
class ScreenImage {
 public:
  ScreenImage() = default;

  ScreenImage(int width, int height, Rgb fill = Rgb{0, 0, 0})
      : width_(width), height_(height) {
    if (width <= 0 || height <= 0)
      throw Error(ErrorCode::ZeroDimension,
                  "image dimensions must be positive, got " +
                      std::to_string(width) + "x" + std::to_string(height));
    pixels_.assign(static_cast<std::size_t>(width) * height, fill);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return pixels_.empty(); }
  std::size_t pixel_count() const { return pixels_.size(); }

  const Rgb& at(int x, int y) const {
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }
  Rgb& at(int x, int y) {
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }

  const std::vector<Rgb>& pixels() const { return pixels_; }
  std::vector<Rgb>& pixels() { return pixels_; }

  BoundingBox bounds() const { return BoundingBox{0, 0, width_, height_}; }

  bool operator==(const ScreenImage&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<Rgb> pixels_;
};

// Exact pixel copy of the region. The public pipeline only calls this with
// validated in-screen boxes; the bounds check is kept for direct callers.
inline ScreenImage crop(const ScreenImage& img, const BoundingBox& box) {
  if (box.w < 1 || box.h < 1 || box.x < 0 || box.y < 0 ||
      box.right() > img.width() || box.bottom() > img.height())
    throw Error(ErrorCode::OutOfBounds,
                "crop region [" + std::to_string(box.x) + "," +
                    std::to_string(box.y) + "," + std::to_string(box.w) + "," +
                    std::to_string(box.h) + "] outside " +
                    std::to_string(img.width()) + "x" +
                    std::to_string(img.height()) + " image");
  ScreenImage out(box.w, box.h);
  for (int y = 0; y < box.h; ++y)
    for (int x = 0; x < box.w; ++x)
      out.at(x, y) = img.at(box.x + x, box.y + y);
  return out;
}

// Fills the region clipped to the image.
inline void fill_rect(ScreenImage& img, const BoundingBox& box, Rgb color) {
  const int x0 = std::max(0, box.x);
  const int y0 = std::max(0, box.y);
  const int x1 = std::min(img.width(), box.right());
  const int y1 = std::min(img.height(), box.bottom());
  for (int y = y0; y < y1; ++y)
    for (int x = x0; x < x1; ++x) img.at(x, y) = color;
}

// Copies src into dst with its top-left corner at (x, y), clipped to dst.
inline void blit(ScreenImage& dst, const ScreenImage& src, int x, int y) {
  const int x0 = std::max(0, x);
  const int y0 = std::max(0, y);
  const int x1 = std::min(dst.width(), x + src.width());
  const int y1 = std::min(dst.height(), y + src.height());
  for (int dy = y0; dy < y1; ++dy)
    for (int dx = x0; dx < x1; ++dx) dst.at(dx, dy) = src.at(dx - x, dy - y);
}

// Nearest-neighbor resample to the requested size.
inline ScreenImage resample_nearest(const ScreenImage& src, int width, int height) {
  if (src.empty()) throw Error(ErrorCode::EmptyRegion, "cannot resample an empty image");
  ScreenImage out(width, height);
  for (int y = 0; y < height; ++y) {
    const int sy = static_cast<int>(static_cast<std::int64_t>(y) * src.height() / height);
    for (int x = 0; x < width; ++x) {
      const int sx = static_cast<int>(static_cast<std::int64_t>(x) * src.width() / width);
      out.at(x, y) = src.at(sx, sy);
    }
  }
  return out;
}

}  // namespace guiverify
