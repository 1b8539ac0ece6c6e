#pragma once

#include <filesystem>

#include "duskfcm/image.hpp"

namespace duskfcm {

/// Decodes a PNG or JPEG file (sniffed by magic bytes) to 8-bit RGB.
/// Throws DecodeError on unreadable or unsupported input.
RgbImage load_image(const std::filesystem::path& path);

/// Decodes a mask image and thresholds it at luminance > 127.
BinaryMask load_mask(const std::filesystem::path& path);

void save_png(const std::filesystem::path& path, const RgbImage& img);
void save_png(const std::filesystem::path& path, const GrayImage& img);

/// Writes a mask as an 8-bit gray PNG, true = 255.
void save_png(const std::filesystem::path& path, const BinaryMask& mask);

}  // namespace duskfcm
