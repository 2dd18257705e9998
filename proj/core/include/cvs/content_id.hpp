#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace cvs {

/// 16 lowercase hex characters (64 bits); the watermark payload and the
/// registry key.
struct ContentId {
    std::string value;

    /// Validates length and alphabet; throws std::invalid_argument otherwise.
    static ContentId parse(const std::string& text);

    bool operator==(const ContentId&) const = default;
};

/// SHA-256 over (image bytes || who || 8-byte little-endian when || nonce),
/// truncated to the first 8 bytes, hex-encoded lowercase.
ContentId derive_content_id(std::span<const std::uint8_t> canonical_image_bytes,
                            const std::string& who, std::int64_t when_unix_seconds,
                            const std::array<std::uint8_t, 8>& nonce);

} // namespace cvs
