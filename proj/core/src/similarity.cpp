#include "cvs/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cvs/errors.hpp"

namespace cvs {

double mse(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.empty()) {
        throw DimensionError("mse requires equal, nonempty shapes");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc / double(a.size());
}

double psnr_from_mse(double mse, double peak) {
    if (mse < 0.0 || !std::isfinite(mse)) {
        throw std::domain_error("mse must be finite and non-negative");
    }
    if (mse == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 10.0 * std::log10(peak * peak / mse);
}

double confidence_score(double psnr_db, double floor_db, double ceiling_db) {
    if (!(floor_db < ceiling_db)) {
        throw std::invalid_argument("confidence floor must be below ceiling");
    }
    if (std::isinf(psnr_db) && psnr_db > 0.0) {
        return 1.0;
    }
    return std::clamp((psnr_db - floor_db) / (ceiling_db - floor_db), 0.0, 1.0);
}

SimilarityResult compare_signatures(const FeatureSignature& a,
                                    const FeatureSignature& b,
                                    double confidence_floor_db,
                                    double confidence_ceiling_db) {
    if (a.width != b.width || a.height != b.height) {
        throw DimensionError("signature dimensions differ: " +
                             std::to_string(a.width) + "x" + std::to_string(a.height) +
                             " vs " + std::to_string(b.width) + "x" +
                             std::to_string(b.height));
    }
    SimilarityResult r;
    r.mse = mse(a.coeffs, b.coeffs);
    r.psnr_db = psnr_from_mse(r.mse, 255.0);
    r.confidence = confidence_score(r.psnr_db, confidence_floor_db, confidence_ceiling_db);
    return r;
}

} // namespace cvs
