#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "cvs/content_id.hpp"

namespace cvs {

/// Systematic Reed-Solomon code over GF(256), primitive polynomial 0x11D,
/// generator roots alpha^0 .. alpha^(parity-1). With p parity bytes it
/// corrects floor(p/2) byte errors.
class ReedSolomon {
public:
    explicit ReedSolomon(int parity_len);

    int parity_len() const { return parity_len_; }

    /// Parity bytes for the message (message is not modified).
    std::vector<std::uint8_t> parity(std::span<const std::uint8_t> message) const;

    /// message || parity.
    std::vector<std::uint8_t> encode(std::span<const std::uint8_t> message) const;

    /// Corrects the codeword in place and returns the message part.
    /// Throws UncorrectableError when more than floor(parity/2) byte errors
    /// are present or the correction does not produce a valid codeword.
    std::vector<std::uint8_t> decode(std::span<const std::uint8_t> codeword) const;

private:
    int parity_len_;
    std::vector<std::uint8_t> generator_; // degree parity_len_, leading coeff first
};

/// '<' + content id + '>' followed by 10 Reed-Solomon parity bytes.
struct FramedPayload {
    static constexpr std::size_t kMessageLen = 18;
    static constexpr std::size_t kParityLen = 10;
    static constexpr std::size_t kTotalLen = kMessageLen + kParityLen;

    std::array<std::uint8_t, kTotalLen> bytes{};

    bool operator==(const FramedPayload&) const = default;
};

FramedPayload rs_frame_encode(const ContentId& id);

/// Corrects up to 5 byte errors, validates the '<'...'>' delimiters and the
/// id alphabet, and returns the id. Throws UncorrectableError beyond the
/// correction bound and FramingError when the corrected text is not a frame.
ContentId rs_frame_decode(std::span<const std::uint8_t> bytes);

} // namespace cvs
