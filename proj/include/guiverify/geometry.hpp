#pragma once

#include <algorithm>
#include <cstdint>

namespace guiverify {

// Pixel rectangle. x/y are offsets from the screen's top-left corner;
// a valid box has w >= 1 and h >= 1.
struct BoundingBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  int right() const { return x + w; }
  int bottom() const { return y + h; }
  std::int64_t area() const {
    return static_cast<std::int64_t>(w) * static_cast<std::int64_t>(h);
  }

  bool contains(const BoundingBox& other) const {
    return other.x >= x && other.y >= y && other.right() <= right() &&
           other.bottom() <= bottom();
  }

  bool intersects(const BoundingBox& other) const {
    return x < other.right() && other.x < right() && y < other.bottom() &&
           other.y < bottom();
  }

  bool operator==(const BoundingBox&) const = default;
};

inline std::int64_t intersection_area(const BoundingBox& a, const BoundingBox& b) {
  const int ix = std::max(a.x, b.x);
  const int iy = std::max(a.y, b.y);
  const int ir = std::min(a.right(), b.right());
  const int ib = std::min(a.bottom(), b.bottom());
  if (ir <= ix || ib <= iy) return 0;
  return static_cast<std::int64_t>(ir - ix) * static_cast<std::int64_t>(ib - iy);
}

// Intersection over union; 0 for disjoint boxes.
inline double iou(const BoundingBox& a, const BoundingBox& b) {
  const std::int64_t inter = intersection_area(a, b);
  if (inter == 0) return 0.0;
  const std::int64_t uni = a.area() + b.area() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace guiverify
