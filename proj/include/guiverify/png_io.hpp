#pragma once

#include <png.h>

#include <csetjmp>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "guiverify/error.hpp"
#include "guiverify/image.hpp"

namespace guiverify {

namespace detail {

// alpha over white, rounded to nearest (255 is odd, so exact halves cannot
// occur and round-half-up equals round-nearest here)
inline std::uint8_t composite_over_white(std::uint8_t channel, std::uint8_t alpha) {
  const int num = alpha * channel + (255 - alpha) * 255;
  return static_cast<std::uint8_t>((num + 127) / 255);
}

struct PngWriteSink {
  std::vector<std::uint8_t> bytes;
};

inline void png_sink_write(png_structp png, png_bytep data, png_size_t length) {
  auto* sink = static_cast<PngWriteSink*>(png_get_io_ptr(png));
  sink->bytes.insert(sink->bytes.end(), data, data + length);
}

inline void png_sink_flush(png_structp) {}

// 8-bit interleaved channel buffer -> PNG bytes. channels is 3 (RGB) or
// 4 (RGBA); the RGBA path exists for building test corpora.
inline std::vector<std::uint8_t> encode_png_channels(const std::uint8_t* data,
                                                     int width, int height,
                                                     int channels) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw Error(ErrorCode::IoError, "png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw Error(ErrorCode::IoError, "png_create_info_struct failed");
  }
  PngWriteSink sink;
  std::vector<png_bytep> rows(static_cast<std::size_t>(height));
  for (int y = 0; y < height; ++y)
    rows[y] = const_cast<png_bytep>(data + static_cast<std::size_t>(y) * width * channels);

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error(ErrorCode::IoError, "png encode failed");
  }
  png_set_write_fn(png, &sink, png_sink_write, png_sink_flush);
  // UI rasters are dominated by flat fills; a light compression level with
  // no row filtering keeps encode time low without bloating output.
  png_set_compression_level(png, 1);
  png_set_filter(png, 0, PNG_FILTER_NONE);
  png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8,
               channels == 4 ? PNG_COLOR_TYPE_RGBA : PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return std::move(sink.bytes);
}

inline std::vector<std::uint8_t> encode_png_rgba(const std::vector<std::uint8_t>& rgba,
                                                 int width, int height) {
  return encode_png_channels(rgba.data(), width, height, 4);
}

}  // namespace detail

inline std::vector<std::uint8_t> encode_png(const ScreenImage& img) {
  if (img.empty()) throw Error(ErrorCode::ZeroDimension, "cannot encode an empty image");
  std::vector<std::uint8_t> interleaved;
  interleaved.reserve(img.pixel_count() * 3);
  for (const Rgb& p : img.pixels()) {
    interleaved.push_back(p.r);
    interleaved.push_back(p.g);
    interleaved.push_back(p.b);
  }
  return detail::encode_png_channels(interleaved.data(), img.width(), img.height(), 3);
}

// Decodes any 8-bit RGB/RGBA PNG; alpha is composited over white.
inline ScreenImage load_png_bytes(const std::uint8_t* data, std::size_t size) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, data, size))
    throw Error(ErrorCode::DecodeError, image.message);
  image.format = PNG_FORMAT_RGBA;
  std::vector<std::uint8_t> buf(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, buf.data(), 0, nullptr)) {
    png_image_free(&image);
    throw Error(ErrorCode::DecodeError, image.message);
  }
  const int w = static_cast<int>(image.width);
  const int h = static_cast<int>(image.height);
  if (w < 1 || h < 1)
    throw Error(ErrorCode::ZeroDimension, "decoded image has a zero dimension");
  ScreenImage out(w, h);
  const std::uint8_t* p = buf.data();
  for (Rgb& px : out.pixels()) {
    const std::uint8_t a = p[3];
    if (a == 255) {
      px = Rgb{p[0], p[1], p[2]};
    } else {
      px = Rgb{detail::composite_over_white(p[0], a),
               detail::composite_over_white(p[1], a),
               detail::composite_over_white(p[2], a)};
    }
    p += 4;
  }
  return out;
}

inline ScreenImage load_png_bytes(const std::vector<std::uint8_t>& bytes) {
  return load_png_bytes(bytes.data(), bytes.size());
}

inline std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::IoError, "read failed for '" + path + "'");
  return bytes;
}

inline void write_file_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
}

inline ScreenImage load_png(const std::string& path) {
  return load_png_bytes(read_file_bytes(path));
}

inline void save_png(const ScreenImage& img, const std::string& path) {
  write_file_bytes(path, encode_png(img));
}

}  // namespace guiverify
