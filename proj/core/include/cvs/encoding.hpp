#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cvs {

std::string hex_encode(std::span<const std::uint8_t> data);

/// Decodes a lowercase/uppercase hex string. Throws std::invalid_argument
/// on odd length or non-hex characters.
std::vector<std::uint8_t> hex_decode(const std::string& hex);

/// Standard base64 with padding, as one unbroken string.
std::string base64_encode(std::span<const std::uint8_t> data);

/// Accepts embedded line breaks; throws std::invalid_argument on any other
/// non-alphabet character or bad padding.
std::vector<std::uint8_t> base64_decode(const std::string& text);

} // namespace cvs
