#include "cvs/sha256.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace cvs {

Sha256Digest sha256(std::span<const std::uint8_t> data) {
    Sha256Digest digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len,
                   EVP_sha256(), nullptr) != 1 ||
        len != digest.size()) {
        throw std::runtime_error("SHA-256 computation failed");
    }
    return digest;
}

} // namespace cvs
