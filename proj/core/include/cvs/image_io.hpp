#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "cvs/image.hpp"

namespace cvs {

/// Loads a PNG or JPEG file (sniffed by magic bytes) as 8-bit RGB.
/// Grayscale and palette sources are expanded; alpha is dropped.
RgbImage load_image(const std::filesystem::path& path);

/// Writes an 8-bit RGB PNG (lossless).
void save_png(const RgbImage& img, const std::filesystem::path& path);

/// Writes a baseline JPEG at the given quality (1-100).
void save_jpeg(const RgbImage& img, const std::filesystem::path& path, int quality);

/// In-memory JPEG round trip, used to measure compression robustness.
std::vector<std::uint8_t> encode_jpeg(const RgbImage& img, int quality);
RgbImage decode_jpeg(std::span<const std::uint8_t> bytes);

} // namespace cvs
