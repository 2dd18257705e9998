#include "qr_tables.hpp"

#include <stdexcept>

namespace cvs::qr_detail {

// Block structure from the symbol specification, levels L, M, Q, H.
const EcSpec kEcTable[kMaxVersion][4] = {
    /* v1  */ {{7, 1}, {10, 1}, {13, 1}, {17, 1}},
    /* v2  */ {{10, 1}, {16, 1}, {22, 1}, {28, 1}},
    /* v3  */ {{15, 1}, {26, 1}, {18, 2}, {22, 2}},
    /* v4  */ {{20, 1}, {18, 2}, {26, 2}, {16, 4}},
    /* v5  */ {{26, 1}, {24, 2}, {18, 4}, {22, 4}},
    /* v6  */ {{18, 2}, {16, 4}, {24, 4}, {28, 4}},
    /* v7  */ {{20, 2}, {18, 4}, {18, 6}, {26, 5}},
    /* v8  */ {{24, 2}, {22, 4}, {22, 6}, {26, 6}},
    /* v9  */ {{30, 2}, {22, 5}, {20, 8}, {24, 8}},
    /* v10 */ {{18, 4}, {26, 5}, {24, 8}, {28, 8}},
};

namespace {

void check_version(int version) {
    if (version < kMinVersion || version > kMaxVersion) {
        throw std::invalid_argument("unsupported symbol version");
    }
}

int raw_data_modules(int version) {
    int result = (16 * version + 128) * version + 64;
    if (version >= 2) {
        const int num_align = version / 7 + 2;
        result -= (25 * num_align - 10) * num_align - 55;
        if (version >= 7) result -= 36;
    }
    return result;
}

// Remainder of value * x^degree(generator) mod generator, over GF(2).
std::uint32_t bch_remainder(std::uint32_t value, std::uint32_t generator,
                            int gen_degree) {
    std::uint32_t rem = value << gen_degree;
    for (int bit = 31 - gen_degree; bit >= 0; --bit) {
        if (rem & (1u << (bit + gen_degree))) {
            rem ^= generator << bit;
        }
    }
    return rem;
}

} // namespace

int matrix_size(int version) {
    check_version(version);
    return 17 + 4 * version;
}

int total_codewords(int version) {
    check_version(version);
    return raw_data_modules(version) / 8;
}

int remainder_bits(int version) {
    check_version(version);
    return raw_data_modules(version) % 8;
}

int data_codewords(int version, int level_index) {
    check_version(version);
    const EcSpec& spec = kEcTable[version - 1][level_index];
    return total_codewords(version) - spec.ec_per_block * spec.num_blocks;
}

std::vector<int> alignment_positions(int version) {
    check_version(version);
    if (version == 1) return {};
    const int num_align = version / 7 + 2;
    const int size = matrix_size(version);
    const int step = (version * 4 + num_align * 2 + 1) / (num_align * 2 - 2) * 2;
    std::vector<int> positions;
    for (int pos = size - 7; int(positions.size()) < num_align - 1; pos -= step) {
        positions.insert(positions.begin(), pos);
    }
    positions.insert(positions.begin(), 6);
    return positions;
}

std::uint32_t format_bits(int level_index, int mask) {
    // Level indicator bits per the standard: L=01, M=00, Q=11, H=10.
    static constexpr std::uint32_t level_code[4] = {1, 0, 3, 2};
    const std::uint32_t data = level_code[level_index] << 3 | std::uint32_t(mask);
    const std::uint32_t rem = bch_remainder(data, 0x537, 10);
    return ((data << 10) | rem) ^ 0x5412;
}

std::uint32_t version_bits(int version) {
    if (version < 7) {
        throw std::invalid_argument("version information exists for version >= 7");
    }
    const std::uint32_t rem = bch_remainder(std::uint32_t(version), 0x1F25, 12);
    return (std::uint32_t(version) << 12) | rem;
}

} // namespace cvs::qr_detail
