#pragma once

#include <cstdint>
#include <vector>

namespace cvs::qr_detail {

constexpr int kMinVersion = 1;
constexpr int kMaxVersion = 10;

struct EcSpec {
    int ec_per_block;
    int num_blocks;
};

/// Error-correction block structure, indexed [version-1][level] with
/// level order L, M, Q, H.
extern const EcSpec kEcTable[kMaxVersion][4];

int matrix_size(int version);
int total_codewords(int version);
int remainder_bits(int version);
int data_codewords(int version, int level_index);

/// Center coordinates of alignment patterns (both axes share the list).
std::vector<int> alignment_positions(int version);

/// 15-bit format sequence (already masked) for the level/mask pair.
std::uint32_t format_bits(int level_index, int mask);

/// 18-bit version information sequence, valid for version >= 7.
std::uint32_t version_bits(int version);

} // namespace cvs::qr_detail
