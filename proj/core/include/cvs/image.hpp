#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cvs {

/// 8-bit RGB image, row-major, interleaved r,g,b.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels; // size = 3 * width * height

    static RgbImage create(int width, int height, std::uint8_t fill = 0);

    std::uint8_t* at(int x, int y) { return pixels.data() + 3 * (std::size_t(y) * width + x); }
    const std::uint8_t* at(int x, int y) const {
        return pixels.data() + 3 * (std::size_t(y) * width + x);
    }
    bool same_pixels(const RgbImage& other) const {
        return width == other.width && height == other.height && pixels == other.pixels;
    }
};

/// 8-bit single-channel image, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels; // size = width * height

    static GrayImage create(int width, int height, std::uint8_t fill = 0);

    std::uint8_t& at(int x, int y) { return pixels[std::size_t(y) * width + x]; }
    std::uint8_t at(int x, int y) const { return pixels[std::size_t(y) * width + x]; }
    bool same_pixels(const GrayImage& other) const {
        return width == other.width && height == other.height && pixels == other.pixels;
    }
};

struct Dims {
    int width = 0;
    int height = 0;
    bool operator==(const Dims&) const = default;
};

/// Rounds half away from zero. Used everywhere a real value becomes a pixel.
long round_half_away(double v);

/// round_half_away clamped to [0,255].
std::uint8_t quantize_u8(double v);

/// BT.601 luma: round(0.299 R + 0.587 G + 0.114 B) per pixel.
GrayImage to_grayscale(const RgbImage& img);

/// The fixed list of supported target dimensions (deduplicated, constant order).
std::span<const Dims> canonical_dims();

/// Picks the canonical entry minimizing |ln(w/h) - ln(wc/hc)|; ties broken by
/// minimal |w*h - wc*hc|, then lexicographic (wc, hc). Total and deterministic.
Dims recalibrate_dimensions(int width, int height);

/// Bilinear resampling with half-pixel-center mapping
/// src = (dst + 0.5) * scale - 0.5, edge-clamped, channels rounded half away
/// from zero. Resizing to the source dimensions returns the image unchanged.
RgbImage resize_bilinear(const RgbImage& img, int width, int height);
GrayImage resize_bilinear(const GrayImage& img, int width, int height);

/// Per-channel clamp(round(v * factor), 0, 255). factor must be finite, >= 0.
RgbImage adjust_brightness(const RgbImage& img, double factor);
GrayImage adjust_brightness(const GrayImage& img, double factor);

} // namespace cvs
