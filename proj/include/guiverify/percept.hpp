#pragma once

#include <cstdint>
#include <vector>

#include "guiverify/color.hpp"
#include "guiverify/error.hpp"
#include "guiverify/image.hpp"

namespace guiverify {

// Per-pixel perceptual comparison of two regions. The mask marks pixels
// whose CIE76 distance exceeds the just-noticeable-difference threshold;
// mean_delta_e averages over all pixels.
struct PerceptualDiff {
  double differing_fraction = 0.0;
  double mean_delta_e = 0.0;
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> mask;  // row-major, 1 = above threshold
  bool resampled = false;          // b was resampled to a's dimensions
};

inline constexpr double kDefaultJnd = 2.3;

inline PerceptualDiff perceptual_region_diff(const ScreenImage& a, const ScreenImage& b,
                                             double jnd = kDefaultJnd) {
  if (a.empty() || b.empty())
    throw Error(ErrorCode::EmptyRegion, "perceptual diff needs non-empty regions");
  PerceptualDiff out;
  out.width = a.width();
  out.height = a.height();
  out.mask.assign(a.pixel_count(), 0);

  const ScreenImage* other = &b;
  ScreenImage scaled;
  if (b.width() != a.width() || b.height() != a.height()) {
    scaled = resample_nearest(b, a.width(), a.height());
    other = &scaled;
    out.resampled = true;
  }

  double sum = 0.0;
  std::size_t differing = 0;
  const std::vector<Rgb>& pa = a.pixels();
  const std::vector<Rgb>& pb = other->pixels();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    double de = 0.0;
    if (pa[i] != pb[i]) de = delta_e(srgb_to_lab(pa[i]), srgb_to_lab(pb[i]));
    sum += de;
    if (de > jnd) {
      out.mask[i] = 1;
      ++differing;
    }
  }
  out.differing_fraction = static_cast<double>(differing) / static_cast<double>(pa.size());
  out.mean_delta_e = sum / static_cast<double>(pa.size());
  return out;
}

// Counts over 4-bit-per-channel quantized RGB space: coarse enough to absorb
// antialiasing noise, fine enough to separate palette colors.
struct ColorHistogram {
  static constexpr int kBins = 4096;
  std::vector<std::uint32_t> bins = std::vector<std::uint32_t>(kBins, 0);
  std::uint64_t total = 0;
};

inline int histogram_bin_index(Rgb c) {
  return ((c.r >> 4) << 8) | ((c.g >> 4) << 4) | (c.b >> 4);
}

// Center of the bin's RGB cell.
inline Rgb histogram_bin_centroid(int bin) {
  return Rgb{static_cast<std::uint8_t>(((bin >> 8) & 0xF) * 16 + 8),
             static_cast<std::uint8_t>(((bin >> 4) & 0xF) * 16 + 8),
             static_cast<std::uint8_t>((bin & 0xF) * 16 + 8)};
}

inline ColorHistogram color_histogram(const ScreenImage& img) {
  if (img.empty()) throw Error(ErrorCode::EmptyRegion, "histogram needs a non-empty image");
  ColorHistogram h;
  for (const Rgb& p : img.pixels()) ++h.bins[histogram_bin_index(p)];
  h.total = img.pixel_count();
  return h;
}

namespace detail {

// Highest-count bin, ties to the lowest index; `skip` excludes one bin.
inline int max_count_bin(const ColorHistogram& h, int skip = -1) {
  int best = -1;
  std::uint32_t best_count = 0;
  for (int i = 0; i < ColorHistogram::kBins; ++i) {
    if (i == skip) continue;
    if (h.bins[i] > best_count) {
      best = i;
      best_count = h.bins[i];
    }
  }
  return best;
}

}  // namespace detail

inline Rgb dominant_color(const ColorHistogram& h) {
  if (h.total == 0) throw Error(ErrorCode::EmptyHistogram, "histogram is empty");
  return histogram_bin_centroid(detail::max_count_bin(h));
}

// Foreground proxy: the runner-up bin, on the assumption that the dominant
// bin is background. Falls back to the dominant bin when the region is a
// single flat color.
inline Rgb second_dominant_color(const ColorHistogram& h) {
  if (h.total == 0) throw Error(ErrorCode::EmptyHistogram, "histogram is empty");
  const int top = detail::max_count_bin(h);
  const int second = detail::max_count_bin(h, top);
  return histogram_bin_centroid(second >= 0 ? second : top);
}

inline double histogram_intersection(const ColorHistogram& h1, const ColorHistogram& h2) {
  if (h1.total == 0 || h2.total == 0)
    throw Error(ErrorCode::EmptyHistogram, "histogram is empty");
  double sum = 0.0;
  for (int i = 0; i < ColorHistogram::kBins; ++i) {
    const double f1 = static_cast<double>(h1.bins[i]) / static_cast<double>(h1.total);
    const double f2 = static_cast<double>(h2.bins[i]) / static_cast<double>(h2.total);
    sum += f1 < f2 ? f1 : f2;
  }
  return sum;
}

}  // namespace guiverify
