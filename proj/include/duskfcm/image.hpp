#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "duskfcm/errors.hpp"

namespace duskfcm {

/// 8-bit RGB image, row-major interleaved (R,G,B per pixel).
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  RgbImage() = default;
  RgbImage(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, 0) {}

  std::uint8_t& at(int x, int y, int ch) {
    return data[(static_cast<std::size_t>(y) * width + x) * 3 + ch];
  }
  std::uint8_t at(int x, int y, int ch) const {
    return data[(static_cast<std::size_t>(y) * width + x) * 3 + ch];
  }
  std::size_t pixels() const { return static_cast<std::size_t>(width) * height; }
};

/// 8-bit luminance image.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  GrayImage() = default;
  GrayImage(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h, 0) {}

  std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
  std::size_t pixels() const { return static_cast<std::size_t>(width) * height; }
};

/// Gray image reduced to `levels` discrete values in [0, levels).
struct QuantizedImage {
  int width = 0;
  int height = 0;
  int levels = 0;
  std::vector<std::uint8_t> data;

  std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
  std::size_t pixels() const { return static_cast<std::size_t>(width) * height; }
};

/// Binary labeling of an image; nonzero = lesion.
struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  BinaryMask() = default;
  BinaryMask(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h, 0) {}

  bool at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x] != 0; }
  void set(int x, int y, bool v) { data[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
  std::size_t pixels() const { return static_cast<std::size_t>(width) * height; }

  std::size_t count_true() const {
    std::size_t n = 0;
    for (auto v : data) n += (v != 0);
    return n;
  }
  bool operator==(const BinaryMask& o) const {
    return width == o.width && height == o.height && data == o.data;
  }
};

/// ITU-R 601 luminance, rounded to nearest.
inline std::uint8_t luminance601(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  const double y = 0.299 * r + 0.587 * g + 0.114 * b;
  long v = std::lround(y);
  if (v < 0) v = 0;
  if (v > 255) v = 255;
  return static_cast<std::uint8_t>(v);
}

inline GrayImage to_grayscale(const RgbImage& img) {
  GrayImage out(img.width, img.height);
  const std::size_t n = img.pixels();
  for (std::size_t i = 0; i < n; ++i)
    out.data[i] = luminance601(img.data[3 * i], img.data[3 * i + 1], img.data[3 * i + 2]);
  return out;
}

/// Maps v -> floor(v * levels / 256). Surjective onto [0, levels) when the
/// input covers [0, 255].
inline QuantizedImage quantize(const GrayImage& img, int levels) {
  if (levels < 2 || levels > 256) throw BadLevelCount("quantize: levels must be in [2, 256]");
  QuantizedImage out;
  out.width = img.width;
  out.height = img.height;
  out.levels = levels;
  out.data.resize(img.data.size());
  for (std::size_t i = 0; i < img.data.size(); ++i)
    out.data[i] = static_cast<std::uint8_t>((static_cast<int>(img.data[i]) * levels) / 256);
  return out;
}

/// Kvasir masks are white-on-black; pixel is lesion iff luminance > 127.
inline BinaryMask binarize_mask(const RgbImage& img) {
  BinaryMask out(img.width, img.height);
  const std::size_t n = img.pixels();
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t y =
        luminance601(img.data[3 * i], img.data[3 * i + 1], img.data[3 * i + 2]);
    out.data[i] = y > 127 ? 1 : 0;
  }
  return out;
}

}  // namespace duskfcm
