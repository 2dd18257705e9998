#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cvs/image.hpp"
#include "cvs/reed_solomon.hpp"

namespace cvs {

enum class QrEcLevel : std::uint8_t { L, M, Q, H };

struct QrConfig {
    QrEcLevel ecc_level = QrEcLevel::Q;
    int box_size = 10;   // pixels per module
    int border = 4;      // quiet zone, modules
    int min_version = 1; // auto-fit upward from here

    void validate() const;
};

/// Decoded/encoded module grid. modules[y*size + x] is 1 for dark.
struct QrMatrix {
    int version = 0;
    int size = 0;
    std::vector<std::uint8_t> modules;

    bool dark(int x, int y) const { return modules[std::size_t(y) * size + x] != 0; }
};

/// Byte-mode encoding at the smallest version >= min_version that fits the
/// payload at the requested level (versions 1-10 supported; larger payloads
/// raise CapacityError). Mask is chosen by the standard penalty rules.
QrMatrix qr_encode_matrix(std::span<const std::uint8_t> payload, QrEcLevel level,
                          int min_version = 1);

/// Renders a module grid as a bilevel image: dark = 0, light = 255,
/// side = (size + 2 * border) * box_size.
GrayImage qr_render_matrix(const QrMatrix& matrix, int box_size, int border);

/// qr_encode_matrix + qr_render_matrix for the watermark frame.
GrayImage qr_render(const FramedPayload& payload, const QrConfig& cfg);

/// Image side in pixels for a payload of the given length at level Q,
/// without rendering. Used for capacity planning.
int qr_side_for_payload(std::size_t payload_len, const QrConfig& cfg);

/// Locates and decodes one upright, axis-aligned byte-mode symbol.
/// Accepts any grayscale image (binarized internally); throws DecodeError
/// when no decodable symbol is found.
std::vector<std::uint8_t> qr_decode(const GrayImage& img);

/// Decodes an already-sampled module grid (all four rotations are tried).
std::vector<std::uint8_t> qr_decode_matrix(const QrMatrix& matrix);

} // namespace cvs
