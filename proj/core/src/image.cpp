#include "cvs/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace cvs {

namespace {

// Deduplicated union of the supported platform dimensions.
constexpr Dims kCanonicalDims[] = {
    {320, 320},  {170, 170},  {400, 400},   {1080, 566}, {1200, 630},
    {1600, 900}, {1200, 627}, {1080, 1350}, {630, 1200}, {627, 1200},
    {1080, 1080}, {1200, 1200}, {1080, 1920}, {851, 315}, {1500, 1500},
    {1128, 191},
};

void check_dims(int width, int height) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("image dimensions must be >= 1");
    }
}

struct BilinearTap {
    int lo = 0;
    int hi = 0;
    double frac = 0.0;
};

std::vector<BilinearTap> make_taps(int src_n, int dst_n) {
    std::vector<BilinearTap> taps(dst_n);
    const double scale = double(src_n) / double(dst_n);
    for (int d = 0; d < dst_n; ++d) {
        double s = (d + 0.5) * scale - 0.5;
        double lo = std::floor(s);
        double frac = s - lo;
        int i0 = int(lo);
        int i1 = i0 + 1;
        taps[d].lo = std::clamp(i0, 0, src_n - 1);
        taps[d].hi = std::clamp(i1, 0, src_n - 1);
        taps[d].frac = frac;
    }
    return taps;
}

template <int Channels, typename Image>
Image resize_impl(const Image& img, int width, int height) {
    check_dims(width, height);
    if (width == img.width && height == img.height) {
        return img;
    }
    const auto xt = make_taps(img.width, width);
    const auto yt = make_taps(img.height, height);

    Image out;
    out.width = width;
    out.height = height;
    out.pixels.resize(std::size_t(Channels) * width * height);
    const std::uint8_t* src = img.pixels.data();
    std::uint8_t* dst = out.pixels.data();
    for (int y = 0; y < height; ++y) {
        const auto& ty = yt[y];
        const std::uint8_t* row0 = src + std::size_t(Channels) * img.width * ty.lo;
        const std::uint8_t* row1 = src + std::size_t(Channels) * img.width * ty.hi;
        for (int x = 0; x < width; ++x) {
            const auto& tx = xt[x];
            for (int c = 0; c < Channels; ++c) {
                const double v00 = row0[Channels * tx.lo + c];
                const double v01 = row0[Channels * tx.hi + c];
                const double v10 = row1[Channels * tx.lo + c];
                const double v11 = row1[Channels * tx.hi + c];
                const double top = v00 + (v01 - v00) * tx.frac;
                const double bot = v10 + (v11 - v10) * tx.frac;
                *dst++ = quantize_u8(top + (bot - top) * ty.frac);
            }
        }
    }
    return out;
}

template <typename Image>
Image brightness_impl(const Image& img, double factor) {
    if (!std::isfinite(factor) || factor < 0.0) {
        throw std::invalid_argument("brightness factor must be finite and >= 0");
    }
    Image out = img;
    for (auto& v : out.pixels) {
        v = quantize_u8(v * factor);
    }
    return out;
}

} // namespace

RgbImage RgbImage::create(int width, int height, std::uint8_t fill) {
    check_dims(width, height);
    RgbImage img;
    img.width = width;
    img.height = height;
    img.pixels.assign(std::size_t(3) * width * height, fill);
    return img;
}

GrayImage GrayImage::create(int width, int height, std::uint8_t fill) {
    check_dims(width, height);
    GrayImage img;
    img.width = width;
    img.height = height;
    img.pixels.assign(std::size_t(width) * height, fill);
    return img;
}

long round_half_away(double v) {
    return std::lround(v);
}

std::uint8_t quantize_u8(double v) {
    return static_cast<std::uint8_t>(std::clamp(round_half_away(v), 0L, 255L));
}

GrayImage to_grayscale(const RgbImage& img) {
    GrayImage out;
    out.width = img.width;
    out.height = img.height;
    out.pixels.resize(std::size_t(img.width) * img.height);
    const std::uint8_t* p = img.pixels.data();
    for (auto& v : out.pixels) {
        const double luma = 0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2];
        v = quantize_u8(luma);
        p += 3;
    }
    return out;
}

std::span<const Dims> canonical_dims() {
    return kCanonicalDims;
}

Dims recalibrate_dimensions(int width, int height) {
    check_dims(width, height);
    const double target = std::log(double(width) / double(height));
    const long long area = 1LL * width * height;

    Dims best{};
    double best_dist = 0.0;
    long long best_area_diff = 0;
    bool first = true;
    for (const Dims& cand : kCanonicalDims) {
        const double dist =
            std::abs(target - std::log(double(cand.width) / double(cand.height)));
        const long long area_diff = std::llabs(1LL * cand.width * cand.height - area);
        const bool better =
            first || dist < best_dist ||
            (dist == best_dist &&
             (area_diff < best_area_diff ||
              (area_diff == best_area_diff &&
               (cand.width < best.width ||
                (cand.width == best.width && cand.height < best.height)))));
        if (better) {
            best = cand;
            best_dist = dist;
            best_area_diff = area_diff;
            first = false;
        }
    }
    return best;
}

RgbImage resize_bilinear(const RgbImage& img, int width, int height) {
    return resize_impl<3>(img, width, height);
}

GrayImage resize_bilinear(const GrayImage& img, int width, int height) {
    return resize_impl<1>(img, width, height);
}

RgbImage adjust_brightness(const RgbImage& img, double factor) {
    return brightness_impl(img, factor);
}

GrayImage adjust_brightness(const GrayImage& img, double factor) {
    return brightness_impl(img, factor);
}

} // namespace cvs
