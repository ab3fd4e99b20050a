#pragma once

#include <array>
#include <cmath>

#include "guiverify/image.hpp"

namespace guiverify {

// CIE L*a*b* under D65. The reference white is taken as the row sums of the
// sRGB matrix so that neutral grays land exactly on a = b = 0.
struct LabColor {
  double L = 0.0;
  double a = 0.0;
  double b = 0.0;
};

namespace detail {

inline const std::array<double, 256>& srgb_linear_table() {
  static const std::array<double, 256> table = [] {
    std::array<double, 256> t{};
    for (int i = 0; i < 256; ++i) {
      const double u = i / 255.0;
      t[i] = u <= 0.04045 ? u / 12.92 : std::pow((u + 0.055) / 1.055, 2.4);
    }
    return t;
  }();
  return table;
}

// IEC 61966-2-1 sRGB -> XYZ (D65)
inline constexpr double kXr = 0.4124564, kXg = 0.3575761, kXb = 0.1804375;
inline constexpr double kYr = 0.2126729, kYg = 0.7151522, kYb = 0.0721750;
inline constexpr double kZr = 0.0193339, kZg = 0.1191920, kZb = 0.9503041;
inline constexpr double kWhiteX = kXr + kXg + kXb;
inline constexpr double kWhiteY = kYr + kYg + kYb;
inline constexpr double kWhiteZ = kZr + kZg + kZb;

inline double lab_f(double t) {
  constexpr double kDelta = 6.0 / 29.0;
  constexpr double kDelta3 = kDelta * kDelta * kDelta;
  return t > kDelta3 ? std::cbrt(t) : t / (3.0 * kDelta * kDelta) + 4.0 / 29.0;
}

}  // namespace detail

inline LabColor srgb_to_lab(Rgb c) {
  const auto& lin = detail::srgb_linear_table();
  const double r = lin[c.r], g = lin[c.g], b = lin[c.b];
  const double fx = detail::lab_f((detail::kXr * r + detail::kXg * g + detail::kXb * b) / detail::kWhiteX);
  const double fy = detail::lab_f((detail::kYr * r + detail::kYg * g + detail::kYb * b) / detail::kWhiteY);
  const double fz = detail::lab_f((detail::kZr * r + detail::kZg * g + detail::kZb * b) / detail::kWhiteZ);
  return LabColor{116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

// CIE76 color difference: Euclidean distance in L*a*b*.
inline double delta_e(const LabColor& c1, const LabColor& c2) {
  const double dL = c1.L - c2.L;
  const double da = c1.a - c2.a;
  const double db = c1.b - c2.b;
  return std::sqrt(dL * dL + da * da + db * db);
}

inline double delta_e_rgb(Rgb c1, Rgb c2) {
  return delta_e(srgb_to_lab(c1), srgb_to_lab(c2));
}

}  // namespace guiverify
