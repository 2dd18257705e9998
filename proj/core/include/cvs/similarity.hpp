#pragma once

#include <span>

#include "cvs/dct_signature.hpp"

namespace cvs {

struct SimilarityResult {
    double mse = 0.0;
    double psnr_db = 0.0; // +infinity when mse == 0
    double confidence = 0.0;
};

/// Mean squared elementwise difference, accumulated in double precision.
/// Throws DimensionError when the inputs differ in length.
double mse(std::span<const double> a, std::span<const double> b);

/// +infinity when mse == 0, otherwise 10*log10(peak^2 / mse).
/// Throws std::domain_error for negative mse.
double psnr_from_mse(double mse, double peak = 255.0);

/// Clamped linear ramp: +infinity -> 1, otherwise
/// clamp((psnr - floor) / (ceiling - floor), 0, 1). Requires floor < ceiling.
double confidence_score(double psnr_db, double floor_db = 15.0,
                        double ceiling_db = 35.0);

/// MSE over coefficient matrices, then PSNR with peak 255, then confidence.
/// Throws DimensionError on any shape or block-size mismatch.
SimilarityResult compare_signatures(const FeatureSignature& a,
                                    const FeatureSignature& b,
                                    double confidence_floor_db = 15.0,
                                    double confidence_ceiling_db = 35.0);

} // namespace cvs
