#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "cvs/cleanup.hpp"
#include "cvs/errors.hpp"
#include "cvs/qr.hpp"
#include "qr_common.hpp"
#include "qr_tables.hpp"

namespace cvs {

using namespace qr_detail;

namespace {

struct FinderCandidate {
    double x = 0.0;
    double y = 0.0;
    double module = 0.0;
    int hits = 0;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

double dist(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// 1:1:3:1:1 ratio test over five runs; returns the module size on success.
std::optional<double> ratio_check(const int runs[5]) {
    int total = 0;
    for (int i = 0; i < 5; ++i) {
        if (runs[i] == 0) return std::nullopt;
        total += runs[i];
    }
    if (total < 7) return std::nullopt;
    const double unit = total / 7.0;
    const double max_var = unit / 2.0;
    if (std::abs(unit - runs[0]) >= max_var) return std::nullopt;
    if (std::abs(unit - runs[1]) >= max_var) return std::nullopt;
    if (std::abs(3 * unit - runs[2]) >= 3 * max_var) return std::nullopt;
    if (std::abs(unit - runs[3]) >= max_var) return std::nullopt;
    if (std::abs(unit - runs[4]) >= max_var) return std::nullopt;
    return unit;
}

class Bitmap {
public:
    explicit Bitmap(const GrayImage& img) : width_(img.width), height_(img.height) {
        // Bilevel inputs pass through; anything else gets a global threshold.
        std::uint8_t lo = 255;
        std::uint8_t hi = 0;
        for (std::uint8_t v : img.pixels) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        std::uint8_t threshold = 128;
        if (lo != hi) {
            threshold = std::uint8_t(
                std::clamp(int(otsu_threshold(img)) + 1, 1, 255));
        }
        dark_.resize(img.pixels.size());
        for (std::size_t i = 0; i < img.pixels.size(); ++i) {
            dark_[i] = img.pixels[i] < threshold ? 1 : 0;
        }
        if (lo == hi) {
            std::fill(dark_.begin(), dark_.end(), std::uint8_t(0));
        }
    }

    int width() const { return width_; }
    int height() const { return height_; }
    bool dark(int x, int y) const { return dark_[std::size_t(y) * width_ + x] != 0; }

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> dark_;
};

/// Walks up and down from (x, y) collecting the five-run vertical profile
/// centered on the dark run containing y. Returns the refined center row.
std::optional<double> cross_check_vertical(const Bitmap& bm, int x, int y,
                                           double expected_module) {
    if (!bm.dark(x, y)) return std::nullopt;
    const int h = bm.height();
    int runs[5] = {0, 0, 0, 0, 0};

    int i = y;
    while (i >= 0 && bm.dark(x, i)) {
        ++runs[2];
        --i;
    }
    while (i >= 0 && !bm.dark(x, i) && runs[1] < 3 * expected_module) {
        ++runs[1];
        --i;
    }
    while (i >= 0 && bm.dark(x, i) && runs[0] < 3 * expected_module) {
        ++runs[0];
        --i;
    }
    const int top = i;
    i = y + 1;
    while (i < h && bm.dark(x, i)) {
        ++runs[2];
        ++i;
    }
    while (i < h && !bm.dark(x, i) && runs[3] < 3 * expected_module) {
        ++runs[3];
        ++i;
    }
    while (i < h && bm.dark(x, i) && runs[4] < 3 * expected_module) {
        ++runs[4];
        ++i;
    }
    if (!ratio_check(runs)) return std::nullopt;
    // Center of the middle run.
    return top + runs[0] + runs[1] + runs[2] / 2.0 + 0.5;
}

std::vector<FinderCandidate> find_finder_patterns(const Bitmap& bm) {
    std::vector<FinderCandidate> candidates;
    const int w = bm.width();
    const int h = bm.height();
    for (int y = 0; y < h; ++y) {
        // Run-length sweep keeping the last five runs.
        int runs[5] = {0, 0, 0, 0, 0};
        bool cur = bm.dark(0, y);
        int run_len = 0;
        auto consider = [&](int end_x) {
            // runs[] holds d,l,d,l,d with runs[4] ending just before end_x.
            const auto unit = ratio_check(runs);
            if (!unit) return;
            const double cx = end_x - runs[4] - runs[3] - runs[2] / 2.0 - 0.5;
            const auto cy = cross_check_vertical(bm, int(std::lround(cx)), y, *unit);
            if (!cy) return;
            bool merged = false;
            for (auto& c : candidates) {
                if (std::abs(c.x - cx) < 3 * *unit && std::abs(c.y - *cy) < 3 * *unit) {
                    c.x = (c.x * c.hits + cx) / (c.hits + 1);
                    c.y = (c.y * c.hits + *cy) / (c.hits + 1);
                    c.module = (c.module * c.hits + *unit) / (c.hits + 1);
                    ++c.hits;
                    merged = true;
                    break;
                }
            }
            if (!merged) {
                candidates.push_back({cx, *cy, *unit, 1});
            }
        };
        for (int x = 0; x <= w; ++x) {
            const bool dark = x < w && bm.dark(x, y);
            if (x < w && dark == cur) {
                ++run_len;
                continue;
            }
            // Close the current run; after a dark run the window holds the
            // d,l,d,l,d shape the ratio test expects.
            std::rotate(std::begin(runs), std::begin(runs) + 1, std::end(runs));
            runs[4] = run_len;
            if (cur) {
                consider(x);
            }
            cur = dark;
            run_len = 1;
        }
    }
    return candidates;
}

QrMatrix sample_grid(const Bitmap& bm, const Point& tl, const Point& tr,
                     const Point& bl, double module, int dim) {
    const double span = dim - 7;
    const Point u1{(tr.x - tl.x) / span / module, (tr.y - tl.y) / span / module};
    const Point u2{(bl.x - tl.x) / span / module, (bl.y - tl.y) / span / module};

    QrMatrix m;
    m.version = (dim - 17) / 4;
    m.size = dim;
    m.modules.assign(std::size_t(dim) * dim, 0);
    const int w = std::max(1, int(module / 3.0));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const double px = tl.x + (u1.x * (j - 3) + u2.x * (i - 3)) * module;
            const double py = tl.y + (u1.y * (j - 3) + u2.y * (i - 3)) * module;
            const int cx = int(std::lround(px));
            const int cy = int(std::lround(py));
            long dark = 0;
            long count = 0;
            for (int sy = cy - w; sy <= cy + w; ++sy) {
                for (int sx = cx - w; sx <= cx + w; ++sx) {
                    if (sx < 0 || sy < 0 || sx >= bm.width() || sy >= bm.height()) {
                        continue;
                    }
                    dark += bm.dark(sx, sy) ? 1 : 0;
                    ++count;
                }
            }
            if (count > 0 && 2 * dark > count) {
                m.modules[std::size_t(i) * dim + j] = 1;
            }
        }
    }
    return m;
}

QrMatrix rotate_cw(const QrMatrix& m) {
    QrMatrix out;
    out.version = m.version;
    out.size = m.size;
    out.modules.assign(m.modules.size(), 0);
    for (int y = 0; y < m.size; ++y) {
        for (int x = 0; x < m.size; ++x) {
            out.modules[std::size_t(y) * m.size + x] =
                m.modules[std::size_t(m.size - 1 - x) * m.size + y];
        }
    }
    return out;
}

std::pair<std::uint32_t, std::uint32_t> read_format_copies(const QrMatrix& m) {
    const int size = m.size;
    auto get = [&](int x, int y) -> std::uint32_t { return m.dark(x, y) ? 1 : 0; };
    std::uint32_t copy1 = 0;
    for (int i = 0; i <= 5; ++i) copy1 |= get(8, i) << i;
    copy1 |= get(8, 7) << 6;
    copy1 |= get(8, 8) << 7;
    copy1 |= get(7, 8) << 8;
    for (int i = 9; i <= 14; ++i) copy1 |= get(14 - i, 8) << i;
    std::uint32_t copy2 = 0;
    for (int i = 0; i <= 7; ++i) copy2 |= get(size - 1 - i, 8) << i;
    for (int i = 8; i <= 14; ++i) copy2 |= get(8, size - 15 + i) << i;
    return {copy1, copy2};
}

std::vector<std::uint8_t> parse_byte_stream(const std::vector<std::uint8_t>& data,
                                            int version) {
    std::size_t pos = 0;
    const std::size_t total_bits = data.size() * 8;
    auto read_bits = [&](int n) -> std::uint32_t {
        std::uint32_t v = 0;
        for (int i = 0; i < n; ++i, ++pos) {
            v = v << 1 | ((data[pos / 8] >> (7 - pos % 8)) & 1);
        }
        return v;
    };

    std::vector<std::uint8_t> payload;
    while (pos + 4 <= total_bits) {
        const std::uint32_t mode = read_bits(4);
        if (mode == 0) break; // terminator
        if (mode != 4) {
            throw DecodeError("unsupported segment mode " + std::to_string(mode));
        }
        const int count_bits = version <= 9 ? 8 : 16;
        if (pos + count_bits > total_bits) {
            throw DecodeError("truncated segment header");
        }
        const std::uint32_t count = read_bits(count_bits);
        if (pos + std::size_t(count) * 8 > total_bits) {
            throw DecodeError("truncated segment data");
        }
        for (std::uint32_t i = 0; i < count; ++i) {
            payload.push_back(std::uint8_t(read_bits(8)));
        }
    }
    return payload;
}

std::vector<std::uint8_t> decode_oriented(const QrMatrix& m) {
    const int size = m.size;
    const int version = (size - 17) / 4;
    if (size != 17 + 4 * version || version < kMinVersion || version > kMaxVersion) {
        throw DecodeError("unsupported symbol size " + std::to_string(size));
    }

    const auto [copy1, copy2] = read_format_copies(m);
    int best_level = -1;
    int best_mask = -1;
    int best_dist = 15;
    for (int lvl = 0; lvl < 4; ++lvl) {
        for (int mask = 0; mask < 8; ++mask) {
            const std::uint32_t fmt = format_bits(lvl, mask);
            const int d = std::min(std::popcount(fmt ^ copy1),
                                   std::popcount(fmt ^ copy2));
            if (d < best_dist) {
                best_dist = d;
                best_level = lvl;
                best_mask = mask;
            }
        }
    }
    if (best_dist > 3) {
        throw DecodeError("format information unreadable");
    }

    // Read data bits in placement order, undoing the mask.
    const std::vector<std::pair<int, int>> order = data_module_order(version);
    const int total = total_codewords(version);
    std::vector<std::uint8_t> codewords(total, 0);
    for (std::size_t i = 0; i < std::size_t(total) * 8 && i < order.size(); ++i) {
        const auto [x, y] = order[i];
        bool bit = m.dark(x, y);
        if (mask_bit(best_mask, x, y)) bit = !bit;
        if (bit) codewords[i / 8] |= std::uint8_t(0x80 >> (i % 8));
    }

    // De-interleave into blocks and correct each one.
    const EcSpec& spec = kEcTable[version - 1][best_level];
    const int num_blocks = spec.num_blocks;
    const int data_len = data_codewords(version, best_level);
    const int short_len = data_len / num_blocks;
    const int num_long = data_len % num_blocks;

    std::vector<std::vector<std::uint8_t>> blocks(num_blocks);
    std::size_t pos = 0;
    const int max_len = short_len + (num_long > 0 ? 1 : 0);
    for (int i = 0; i < max_len; ++i) {
        for (int b = 0; b < num_blocks; ++b) {
            const int len = short_len + (b >= num_blocks - num_long ? 1 : 0);
            if (i < len) blocks[b].push_back(codewords[pos++]);
        }
    }
    std::vector<std::vector<std::uint8_t>> ec(num_blocks);
    for (int i = 0; i < spec.ec_per_block; ++i) {
        for (int b = 0; b < num_blocks; ++b) {
            ec[b].push_back(codewords[pos++]);
        }
    }

    const ReedSolomon rs(spec.ec_per_block);
    std::vector<std::uint8_t> data;
    for (int b = 0; b < num_blocks; ++b) {
        std::vector<std::uint8_t> codeword = blocks[b];
        codeword.insert(codeword.end(), ec[b].begin(), ec[b].end());
        try {
            const auto corrected = rs.decode(codeword);
            data.insert(data.end(), corrected.begin(), corrected.end());
        } catch (const UncorrectableError& e) {
            throw DecodeError(std::string("block correction failed: ") + e.what());
        }
    }
    return parse_byte_stream(data, version);
}

} // namespace

std::vector<std::uint8_t> qr_decode_matrix(const QrMatrix& matrix) {
    if (matrix.size < 21 || matrix.modules.size() != std::size_t(matrix.size) * matrix.size) {
        throw DecodeError("malformed module grid");
    }
    QrMatrix m = matrix;
    std::string last_error;
    for (int rot = 0; rot < 4; ++rot) {
        try {
            return decode_oriented(m);
        } catch (const DecodeError& e) {
            last_error = e.what();
        }
        m = rotate_cw(m);
    }
    throw DecodeError("no orientation decodes: " + last_error);
}

std::vector<std::uint8_t> qr_decode(const GrayImage& img) {
    if (img.width < 21 || img.height < 21) {
        throw DecodeError("image too small to hold a symbol");
    }
    const Bitmap bm(img);
    std::vector<FinderCandidate> candidates = find_finder_patterns(bm);
    // Drop weak one-off detections when stronger ones exist.
    if (candidates.size() > 3) {
        std::sort(candidates.begin(), candidates.end(),
                  [](const FinderCandidate& a, const FinderCandidate& b) {
                      return a.hits > b.hits;
                  });
        candidates.resize(3);
    }
    if (candidates.size() != 3) {
        throw DecodeError("expected 3 finder patterns, found " +
                          std::to_string(candidates.size()));
    }

    // The right-angle vertex is the one not on the longest side.
    const Point p0{candidates[0].x, candidates[0].y};
    const Point p1{candidates[1].x, candidates[1].y};
    const Point p2{candidates[2].x, candidates[2].y};
    const double d01 = dist(p0, p1);
    const double d02 = dist(p0, p2);
    const double d12 = dist(p1, p2);
    Point tl, a, b;
    double side;
    if (d12 >= d01 && d12 >= d02) {
        tl = p0; a = p1; b = p2; side = (d01 + d02) / 2;
    } else if (d02 >= d01 && d02 >= d12) {
        tl = p1; a = p0; b = p2; side = (d01 + d12) / 2;
    } else {
        tl = p2; a = p0; b = p1; side = (d02 + d12) / 2;
    }
    // Orient: cross product positive means (a, b) == (top-right, bottom-left).
    const double cross = (a.x - tl.x) * (b.y - tl.y) - (a.y - tl.y) * (b.x - tl.x);
    const Point tr = cross >= 0 ? a : b;
    const Point bl = cross >= 0 ? b : a;

    const double module_est =
        (candidates[0].module + candidates[1].module + candidates[2].module) / 3.0;
    const int dim_est = int(std::lround(side / module_est)) + 7;
    int version = (dim_est - 17 + 2) / 4; // nearest multiple-of-4 size
    version = std::clamp(version, kMinVersion, kMaxVersion);
    const int dim = 17 + 4 * version;
    if (std::abs(dim - dim_est) > 4) {
        throw DecodeError("finder geometry does not match a supported version");
    }
    const double module = side / double(dim - 7);

    const QrMatrix grid = sample_grid(bm, tl, tr, bl, module, dim);
    return qr_decode_matrix(grid);
}

} // namespace cvs
