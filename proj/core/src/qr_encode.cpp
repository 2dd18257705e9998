#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "cvs/errors.hpp"
#include "cvs/qr.hpp"
#include "qr_common.hpp"
#include "qr_tables.hpp"

namespace cvs {

using namespace qr_detail;

namespace {

int level_index(QrEcLevel level) {
    return int(level);
}

/// Mode indicator + length field + data must fit the data codewords.
bool payload_fits(std::size_t payload_len, int version, int level_idx) {
    const int count_bits = version <= 9 ? 8 : 16;
    const std::size_t needed_bits = 4 + count_bits + payload_len * 8;
    return needed_bits <= std::size_t(data_codewords(version, level_idx)) * 8;
}

class BitWriter {
public:
    void append(std::uint32_t value, int bits) {
        for (int i = bits - 1; i >= 0; --i) {
            bits_.push_back((value >> i) & 1);
        }
    }
    std::size_t size() const { return bits_.size(); }
    std::vector<std::uint8_t> to_bytes() const {
        std::vector<std::uint8_t> out((bits_.size() + 7) / 8, 0);
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i]) out[i / 8] |= std::uint8_t(0x80 >> (i % 8));
        }
        return out;
    }

private:
    std::vector<std::uint8_t> bits_;
};

std::vector<std::uint8_t> build_codewords(std::span<const std::uint8_t> payload,
                                          int version, int level_idx) {
    const int data_len = data_codewords(version, level_idx);
    BitWriter bits;
    bits.append(0b0100, 4); // byte mode
    bits.append(std::uint32_t(payload.size()), version <= 9 ? 8 : 16);
    for (std::uint8_t b : payload) {
        bits.append(b, 8);
    }
    // Terminator (up to 4 zero bits), then pad to a byte boundary.
    const std::size_t capacity_bits = std::size_t(data_len) * 8;
    const int terminator = int(std::min<std::size_t>(4, capacity_bits - bits.size()));
    bits.append(0, terminator);
    if (bits.size() % 8 != 0) {
        bits.append(0, int(8 - bits.size() % 8));
    }
    std::vector<std::uint8_t> data = bits.to_bytes();
    // Alternating pad codewords.
    for (bool flip = false; int(data.size()) < data_len; flip = !flip) {
        data.push_back(flip ? 0x11 : 0xEC);
    }

    // Split into blocks (shorter blocks first), attach parity, interleave.
    const EcSpec& spec = kEcTable[version - 1][level_idx];
    const int num_blocks = spec.num_blocks;
    const int short_len = data_len / num_blocks;
    const int num_long = data_len % num_blocks;

    const ReedSolomon rs(spec.ec_per_block);
    std::vector<std::vector<std::uint8_t>> blocks;
    std::vector<std::vector<std::uint8_t>> parities;
    std::size_t offset = 0;
    for (int b = 0; b < num_blocks; ++b) {
        const int len = short_len + (b >= num_blocks - num_long ? 1 : 0);
        std::vector<std::uint8_t> block(data.begin() + offset,
                                        data.begin() + offset + len);
        offset += len;
        parities.push_back(rs.parity(block));
        blocks.push_back(std::move(block));
    }

    std::vector<std::uint8_t> out;
    out.reserve(std::size_t(total_codewords(version)));
    const int max_len = short_len + (num_long > 0 ? 1 : 0);
    for (int i = 0; i < max_len; ++i) {
        for (const auto& block : blocks) {
            if (i < int(block.size())) out.push_back(block[i]);
        }
    }
    for (int i = 0; i < spec.ec_per_block; ++i) {
        for (const auto& parity : parities) {
            out.push_back(parity[i]);
        }
    }
    return out;
}

void apply_format(QrMatrix& m, int level_idx, int mask) {
    const std::uint32_t fmt = format_bits(level_idx, mask);
    const int size = m.size;
    auto set = [&](int x, int y, bool dark) {
        m.modules[std::size_t(y) * size + x] = dark ? 1 : 0;
    };
    // Copy around the top-left finder: bits 0..5 down column 8, bit 6..8
    // around the corner, bits 9..14 along row 8 toward the left edge.
    for (int i = 0; i <= 5; ++i) set(8, i, (fmt >> i) & 1);
    set(8, 7, (fmt >> 6) & 1);
    set(8, 8, (fmt >> 7) & 1);
    set(7, 8, (fmt >> 8) & 1);
    for (int i = 9; i <= 14; ++i) set(14 - i, 8, (fmt >> i) & 1);
    // Second copy: bits 0..7 along row 8 from the right edge, bits 8..14
    // down column 8 above the bottom edge.
    for (int i = 0; i <= 7; ++i) set(size - 1 - i, 8, (fmt >> i) & 1);
    for (int i = 8; i <= 14; ++i) set(8, size - 15 + i, (fmt >> i) & 1);
}

void apply_version_info(QrMatrix& m) {
    if (m.version < 7) return;
    const std::uint32_t bits = version_bits(m.version);
    const int size = m.size;
    for (int i = 0; i < 18; ++i) {
        const std::uint8_t dark = (bits >> i) & 1;
        const int a = i / 3;
        const int b = size - 11 + i % 3;
        m.modules[std::size_t(b) * size + a] = dark; // bottom-left copy
        m.modules[std::size_t(a) * size + b] = dark; // top-right copy
    }
}

long penalty_score(const QrMatrix& m) {
    const int size = m.size;
    long score = 0;

    // Same-color runs of length >= 5, rows and columns.
    for (int axis = 0; axis < 2; ++axis) {
        for (int a = 0; a < size; ++a) {
            int run = 1;
            bool prev = axis == 0 ? m.dark(0, a) : m.dark(a, 0);
            for (int b = 1; b < size; ++b) {
                const bool cur = axis == 0 ? m.dark(b, a) : m.dark(a, b);
                if (cur == prev) {
                    ++run;
                    if (run == 5) score += 3;
                    else if (run > 5) score += 1;
                } else {
                    run = 1;
                    prev = cur;
                }
            }
        }
    }

    // 2x2 blocks of one color.
    for (int y = 0; y + 1 < size; ++y) {
        for (int x = 0; x + 1 < size; ++x) {
            const bool c = m.dark(x, y);
            if (c == m.dark(x + 1, y) && c == m.dark(x, y + 1) &&
                c == m.dark(x + 1, y + 1)) {
                score += 3;
            }
        }
    }

    // Finder-like 1:1:3:1:1 pattern with 4 light modules on either side.
    static constexpr std::array<bool, 11> pat_a = {1, 0, 1, 1, 1, 0, 1, 0, 0, 0, 0};
    static constexpr std::array<bool, 11> pat_b = {0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1};
    auto module_at = [&](int axis, int a, int b) {
        return axis == 0 ? m.dark(b, a) : m.dark(a, b);
    };
    for (int axis = 0; axis < 2; ++axis) {
        for (int a = 0; a < size; ++a) {
            for (int b = 0; b + 11 <= size; ++b) {
                bool match_a = true;
                bool match_b = true;
                for (int i = 0; i < 11 && (match_a || match_b); ++i) {
                    const bool dark = module_at(axis, a, b + i);
                    match_a = match_a && dark == pat_a[i];
                    match_b = match_b && dark == pat_b[i];
                }
                if (match_a) score += 40;
                if (match_b) score += 40;
            }
        }
    }

    // Dark-module balance: 10 points per 5% step away from 50%.
    long dark_count = 0;
    for (std::uint8_t v : m.modules) dark_count += v;
    const long total = long(size) * size;
    const long k = (std::labs(dark_count * 20 - total * 10) + total - 1) / total - 1;
    score += k * 10;
    return score;
}

} // namespace

void QrConfig::validate() const {
    if (box_size < 1) throw std::invalid_argument("box_size must be >= 1");
    if (border < 4) throw std::invalid_argument("border must be >= 4 modules");
    if (min_version < kMinVersion || min_version > kMaxVersion) {
        throw std::invalid_argument("min_version out of range");
    }
}

QrMatrix qr_encode_matrix(std::span<const std::uint8_t> payload, QrEcLevel level,
                          int min_version) {
    if (min_version < kMinVersion || min_version > kMaxVersion) {
        throw std::invalid_argument("min_version out of range");
    }
    const int lvl = level_index(level);
    int version = 0;
    for (int v = min_version; v <= kMaxVersion; ++v) {
        if (payload_fits(payload.size(), v, lvl)) {
            version = v;
            break;
        }
    }
    if (version == 0) {
        throw CapacityError("payload of " + std::to_string(payload.size()) +
                            " bytes does not fit any supported symbol version");
    }

    const int size = matrix_size(version);
    QrMatrix m;
    m.version = version;
    m.size = size;
    m.modules.assign(std::size_t(size) * size, 0);

    auto draw_finder = [&](int cx, int cy) {
        for (int dy = -4; dy <= 4; ++dy) {
            for (int dx = -4; dx <= 4; ++dx) {
                const int x = cx + dx;
                const int y = cy + dy;
                if (x < 0 || y < 0 || x >= size || y >= size) continue;
                const int d = std::max(std::abs(dx), std::abs(dy));
                m.modules[std::size_t(y) * size + x] = (d <= 1 || d == 3) ? 1 : 0;
            }
        }
    };
    draw_finder(3, 3);
    draw_finder(size - 4, 3);
    draw_finder(3, size - 4);

    for (int i = 8; i < size - 8; ++i) {
        const std::uint8_t dark = (i % 2 == 0) ? 1 : 0;
        m.modules[std::size_t(6) * size + i] = dark;
        m.modules[std::size_t(i) * size + 6] = dark;
    }

    const std::vector<int> align = alignment_positions(version);
    for (int cy : align) {
        for (int cx : align) {
            const bool in_finder = (cx <= 8 && cy <= 8) ||
                                   (cx >= size - 9 && cy <= 8) ||
                                   (cx <= 8 && cy >= size - 9);
            if (in_finder) continue;
            for (int dy = -2; dy <= 2; ++dy) {
                for (int dx = -2; dx <= 2; ++dx) {
                    const int d = std::max(std::abs(dx), std::abs(dy));
                    m.modules[std::size_t(cy + dy) * size + (cx + dx)] =
                        (d != 1) ? 1 : 0;
                }
            }
        }
    }

    m.modules[std::size_t(size - 8) * size + 8] = 1; // dark module
    apply_version_info(m);

    const std::vector<std::uint8_t> codewords = build_codewords(payload, version, lvl);
    const std::vector<std::pair<int, int>> order = data_module_order(version);
    const std::size_t data_bits =
        codewords.size() * 8 + std::size_t(remainder_bits(version));
    if (order.size() != data_bits) {
        throw std::logic_error("data module count mismatch");
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        const bool bit = i < codewords.size() * 8 &&
                         ((codewords[i / 8] >> (7 - i % 8)) & 1) != 0;
        const auto [x, y] = order[i];
        m.modules[std::size_t(y) * size + x] = bit ? 1 : 0;
    }

    // Lowest-penalty mask, lowest index winning ties.
    long best_score = 0;
    QrMatrix best;
    for (int mask = 0; mask < 8; ++mask) {
        QrMatrix candidate = m;
        for (const auto& [x, y] : order) {
            if (mask_bit(mask, x, y)) {
                candidate.modules[std::size_t(y) * size + x] ^= 1;
            }
        }
        apply_format(candidate, lvl, mask);
        const long score = penalty_score(candidate);
        if (mask == 0 || score < best_score) {
            best_score = score;
            best = std::move(candidate);
        }
    }
    return best;
}

GrayImage qr_render_matrix(const QrMatrix& matrix, int box_size, int border) {
    if (box_size < 1 || border < 0) {
        throw std::invalid_argument("invalid render parameters");
    }
    const int side = (matrix.size + 2 * border) * box_size;
    GrayImage img = GrayImage::create(side, side, 255);
    for (int my = 0; my < matrix.size; ++my) {
        for (int mx = 0; mx < matrix.size; ++mx) {
            if (!matrix.dark(mx, my)) continue;
            const int x0 = (mx + border) * box_size;
            const int y0 = (my + border) * box_size;
            for (int y = y0; y < y0 + box_size; ++y) {
                for (int x = x0; x < x0 + box_size; ++x) {
                    img.at(x, y) = 0;
                }
            }
        }
    }
    return img;
}

GrayImage qr_render(const FramedPayload& payload, const QrConfig& cfg) {
    cfg.validate();
    const QrMatrix m =
        qr_encode_matrix(payload.bytes, cfg.ecc_level, cfg.min_version);
    return qr_render_matrix(m, cfg.box_size, cfg.border);
}

int qr_side_for_payload(std::size_t payload_len, const QrConfig& cfg) {
    cfg.validate();
    const int lvl = level_index(cfg.ecc_level);
    for (int v = cfg.min_version; v <= kMaxVersion; ++v) {
        if (payload_fits(payload_len, v, lvl)) {
            return (matrix_size(v) + 2 * cfg.border) * cfg.box_size;
        }
    }
    throw CapacityError("payload of " + std::to_string(payload_len) +
                        " bytes does not fit any supported symbol version");
}

} // namespace cvs
