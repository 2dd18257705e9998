#include "cvs/dct_signature.hpp"

#include <bit>
#include <cmath>
#include <cstring>

#include "cvs/errors.hpp"

namespace cvs {

namespace {

constexpr int kB = FeatureSignature::kBlockSize;
constexpr double kMidGray = 128.0;

struct DctBasis {
    // basis[u][x] = a(u) * cos((2x+1) u pi / 16)
    double m[kB][kB];
    DctBasis() {
        const double pi = std::acos(-1.0);
        for (int u = 0; u < kB; ++u) {
            const double a = u == 0 ? std::sqrt(1.0 / kB) : std::sqrt(2.0 / kB);
            for (int x = 0; x < kB; ++x) {
                m[u][x] = a * std::cos((2 * x + 1) * u * pi / (2 * kB));
            }
        }
    }
};

const DctBasis& basis() {
    static const DctBasis b;
    return b;
}

int pad_up(int n) {
    return (n + kB - 1) / kB * kB;
}

} // namespace

FeatureSignature FeatureSignature::quantized() const {
    FeatureSignature out = *this;
    for (double& c : out.coeffs) {
        c = double(float(c));
    }
    return out;
}

FeatureSignature block_dct_signature(const GrayImage& gray) {
    if (gray.width < 1 || gray.height < 1 ||
        gray.pixels.size() != std::size_t(gray.width) * gray.height) {
        throw std::invalid_argument("malformed grayscale image");
    }
    const int pw = pad_up(gray.width);
    const int ph = pad_up(gray.height);

    FeatureSignature sig;
    sig.width = pw;
    sig.height = ph;
    sig.coeffs.resize(std::size_t(pw) * ph);

    const DctBasis& b = basis();
    double block[kB][kB];
    double tmp[kB][kB];
    for (int by = 0; by < ph; by += kB) {
        for (int bx = 0; bx < pw; bx += kB) {
            for (int y = 0; y < kB; ++y) {
                for (int x = 0; x < kB; ++x) {
                    const int sx = bx + x;
                    const int sy = by + y;
                    const double v = (sx < gray.width && sy < gray.height)
                                         ? double(gray.at(sx, sy))
                                         : kMidGray;
                    block[y][x] = v - kMidGray;
                }
            }
            // Separable transform: rows, then columns.
            for (int y = 0; y < kB; ++y) {
                for (int u = 0; u < kB; ++u) {
                    double s = 0.0;
                    for (int x = 0; x < kB; ++x) s += block[y][x] * b.m[u][x];
                    tmp[y][u] = s;
                }
            }
            for (int u = 0; u < kB; ++u) {
                for (int v = 0; v < kB; ++v) {
                    double s = 0.0;
                    for (int y = 0; y < kB; ++y) s += tmp[y][u] * b.m[v][y];
                    sig.coeffs[std::size_t(by + v) * pw + (bx + u)] = s;
                }
            }
        }
    }
    return sig;
}

std::vector<std::uint8_t> encode_signature(const FeatureSignature& sig) {
    static_assert(std::endian::native == std::endian::little,
                  "blob writer assumes little-endian floats");
    std::vector<std::uint8_t> blob(sig.coeffs.size() * 4);
    std::uint8_t* out = blob.data();
    for (double c : sig.coeffs) {
        const float f = float(c);
        std::memcpy(out, &f, 4);
        out += 4;
    }
    return blob;
}

FeatureSignature decode_signature(std::span<const std::uint8_t> blob, int width,
                                  int height) {
    if (width < kB || height < kB || width % kB != 0 || height % kB != 0) {
        throw CorruptionError("signature dimensions must be positive multiples of 8");
    }
    const std::size_t expected = std::size_t(width) * height * 4;
    if (blob.size() != expected) {
        throw CorruptionError("signature blob length mismatch: expected " +
                              std::to_string(expected) + " bytes, got " +
                              std::to_string(blob.size()));
    }
    FeatureSignature sig;
    sig.width = width;
    sig.height = height;
    sig.coeffs.resize(std::size_t(width) * height);
    const std::uint8_t* in = blob.data();
    for (double& c : sig.coeffs) {
        float f;
        std::memcpy(&f, in, 4);
        if (!std::isfinite(f)) {
            throw CorruptionError("signature blob contains non-finite coefficient");
        }
        c = double(f);
        in += 4;
    }
    return sig;
}

} // namespace cvs
