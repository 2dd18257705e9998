#include "cvs/content_id.hpp"

#include <stdexcept>
#include <vector>

#include "cvs/encoding.hpp"
#include "cvs/sha256.hpp"

namespace cvs {

ContentId ContentId::parse(const std::string& text) {
    if (text.size() != 16) {
        throw std::invalid_argument("content id must be 16 characters");
    }
    for (char c : text) {
        const bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
        if (!ok) {
            throw std::invalid_argument("content id must be lowercase hex");
        }
    }
    return ContentId{text};
}

ContentId derive_content_id(std::span<const std::uint8_t> canonical_image_bytes,
                            const std::string& who, std::int64_t when_unix_seconds,
                            const std::array<std::uint8_t, 8>& nonce) {
    if (canonical_image_bytes.empty()) {
        throw std::invalid_argument("image bytes must be nonempty");
    }
    std::vector<std::uint8_t> msg;
    msg.reserve(canonical_image_bytes.size() + who.size() + 16);
    msg.insert(msg.end(), canonical_image_bytes.begin(), canonical_image_bytes.end());
    msg.insert(msg.end(), who.begin(), who.end());
    const auto when = static_cast<std::uint64_t>(when_unix_seconds);
    for (int i = 0; i < 8; ++i) {
        msg.push_back(static_cast<std::uint8_t>(when >> (8 * i)));
    }
    msg.insert(msg.end(), nonce.begin(), nonce.end());

    const Sha256Digest digest = sha256(msg);
    return ContentId{hex_encode(std::span(digest).first(8))};
}

} // namespace cvs
