#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cvs/image.hpp"

namespace cvs {

/// Per-8x8-block orthonormal DCT-II coefficients of a mid-gray-adjusted
/// grayscale image. Dimensions are the source dimensions padded up to
/// multiples of the block size with value 128, so padded blocks contribute
/// all-zero coefficients.
struct FeatureSignature {
    static constexpr int kBlockSize = 8;

    int width = 0;  // padded, multiple of kBlockSize
    int height = 0; // padded, multiple of kBlockSize
    std::vector<double> coeffs; // row-major, width * height

    double at(int x, int y) const { return coeffs[std::size_t(y) * width + x]; }

    /// Copy with every coefficient rounded to its 32-bit float storage value.
    /// Records persist coefficients as f32; comparisons against a stored
    /// signature happen at this precision.
    FeatureSignature quantized() const;
};

/// Computes the signature: pad right/bottom with 128 to block multiples,
/// subtract 128 from every pixel, apply the orthonormal 2D DCT-II per block,
/// and tile the coefficient blocks in place.
FeatureSignature block_dct_signature(const GrayImage& gray);

/// Serializes coefficients as 32-bit little-endian floats, row-major.
std::vector<std::uint8_t> encode_signature(const FeatureSignature& sig);

/// Inverse of encode_signature for the given padded dimensions. Throws
/// CorruptionError if the blob length does not equal width*height*4 or the
/// dimensions are not positive block multiples.
FeatureSignature decode_signature(std::span<const std::uint8_t> blob, int width,
                                  int height);

} // namespace cvs
