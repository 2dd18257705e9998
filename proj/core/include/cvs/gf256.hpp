#pragma once

#include <cstdint>

namespace cvs::gf256 {

/// GF(2^8) arithmetic with primitive polynomial 0x11D and generator 2.

std::uint8_t mul(std::uint8_t a, std::uint8_t b);
std::uint8_t div(std::uint8_t a, std::uint8_t b); // b != 0
std::uint8_t inv(std::uint8_t a);                 // a != 0
std::uint8_t pow_of_alpha(int e);                 // alpha^e, e may be negative
int log_of(std::uint8_t a);                       // a != 0

} // namespace cvs::gf256
