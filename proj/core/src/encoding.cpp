#include "cvs/encoding.hpp"

#include <array>
#include <stdexcept>

namespace cvs {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";
constexpr char kBase64Alphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("invalid hex character");
}

std::array<int, 256> base64_reverse_table() {
    std::array<int, 256> table{};
    table.fill(-1);
    for (int i = 0; i < 64; ++i) {
        table[static_cast<unsigned char>(kBase64Alphabet[i])] = i;
    }
    return table;
}

} // namespace

std::string hex_encode(std::span<const std::uint8_t> data) {
    std::string out;
    out.reserve(data.size() * 2);
    for (std::uint8_t b : data) {
        out.push_back(kHexDigits[b >> 4]);
        out.push_back(kHexDigits[b & 0x0F]);
    }
    return out;
}

std::vector<std::uint8_t> hex_decode(const std::string& hex) {
    if (hex.size() % 2 != 0) {
        throw std::invalid_argument("hex string has odd length");
    }
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>(hex_value(hex[2 * i]) << 4 |
                                           hex_value(hex[2 * i + 1]));
    }
    return out;
}

std::string base64_encode(std::span<const std::uint8_t> data) {
    std::string out;
    out.reserve((data.size() + 2) / 3 * 4);
    std::size_t i = 0;
    for (; i + 3 <= data.size(); i += 3) {
        std::uint32_t n = std::uint32_t(data[i]) << 16 |
                          std::uint32_t(data[i + 1]) << 8 | data[i + 2];
        out.push_back(kBase64Alphabet[n >> 18]);
        out.push_back(kBase64Alphabet[(n >> 12) & 63]);
        out.push_back(kBase64Alphabet[(n >> 6) & 63]);
        out.push_back(kBase64Alphabet[n & 63]);
    }
    const std::size_t rest = data.size() - i;
    if (rest == 1) {
        std::uint32_t n = std::uint32_t(data[i]) << 16;
        out.push_back(kBase64Alphabet[n >> 18]);
        out.push_back(kBase64Alphabet[(n >> 12) & 63]);
        out.push_back('=');
        out.push_back('=');
    } else if (rest == 2) {
        std::uint32_t n = std::uint32_t(data[i]) << 16 |
                          std::uint32_t(data[i + 1]) << 8;
        out.push_back(kBase64Alphabet[n >> 18]);
        out.push_back(kBase64Alphabet[(n >> 12) & 63]);
        out.push_back(kBase64Alphabet[(n >> 6) & 63]);
        out.push_back('=');
    }
    return out;
}

std::vector<std::uint8_t> base64_decode(const std::string& text) {
    static const std::array<int, 256> reverse = base64_reverse_table();

    std::vector<int> sextets;
    sextets.reserve(text.size());
    std::size_t padding = 0;
    for (char c : text) {
        if (c == '\n' || c == '\r') continue;
        if (c == '=') {
            ++padding;
            continue;
        }
        if (padding > 0) {
            throw std::invalid_argument("base64 data after padding");
        }
        const int v = reverse[static_cast<unsigned char>(c)];
        if (v < 0) {
            throw std::invalid_argument("invalid base64 character");
        }
        sextets.push_back(v);
    }
    if (padding > 2 || (sextets.size() + padding) % 4 != 0) {
        throw std::invalid_argument("invalid base64 length");
    }

    std::vector<std::uint8_t> out;
    out.reserve(sextets.size() * 3 / 4);
    std::size_t i = 0;
    for (; i + 4 <= sextets.size(); i += 4) {
        std::uint32_t n = std::uint32_t(sextets[i]) << 18 |
                          std::uint32_t(sextets[i + 1]) << 12 |
                          std::uint32_t(sextets[i + 2]) << 6 |
                          std::uint32_t(sextets[i + 3]);
        out.push_back(static_cast<std::uint8_t>(n >> 16));
        out.push_back(static_cast<std::uint8_t>(n >> 8));
        out.push_back(static_cast<std::uint8_t>(n));
    }
    const std::size_t rest = sextets.size() - i;
    if (rest == 1) {
        throw std::invalid_argument("invalid base64 length");
    }
    if (rest == 2) {
        std::uint32_t n = std::uint32_t(sextets[i]) << 18 |
                          std::uint32_t(sextets[i + 1]) << 12;
        out.push_back(static_cast<std::uint8_t>(n >> 16));
    } else if (rest == 3) {
        std::uint32_t n = std::uint32_t(sextets[i]) << 18 |
                          std::uint32_t(sextets[i + 1]) << 12 |
                          std::uint32_t(sextets[i + 2]) << 6;
        out.push_back(static_cast<std::uint8_t>(n >> 16));
        out.push_back(static_cast<std::uint8_t>(n >> 8));
    }
    return out;
}

} // namespace cvs
