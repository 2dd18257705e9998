#include "cvs/gf256.hpp"

#include <array>
#include <stdexcept>

namespace cvs::gf256 {

namespace {

struct Tables {
    std::array<std::uint8_t, 512> exp{};
    std::array<int, 256> log{};
    Tables() {
        int x = 1;
        for (int i = 0; i < 255; ++i) {
            exp[i] = std::uint8_t(x);
            log[x] = i;
            x <<= 1;
            if (x & 0x100) x ^= 0x11D;
        }
        for (int i = 255; i < 512; ++i) {
            exp[i] = exp[i - 255];
        }
        log[0] = -1;
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

} // namespace

std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
    if (a == 0 || b == 0) return 0;
    const Tables& t = tables();
    return t.exp[t.log[a] + t.log[b]];
}

std::uint8_t div(std::uint8_t a, std::uint8_t b) {
    if (b == 0) throw std::domain_error("GF(256) division by zero");
    if (a == 0) return 0;
    const Tables& t = tables();
    return t.exp[t.log[a] - t.log[b] + 255];
}

std::uint8_t inv(std::uint8_t a) {
    return div(1, a);
}

std::uint8_t pow_of_alpha(int e) {
    e %= 255;
    if (e < 0) e += 255;
    return tables().exp[e];
}

int log_of(std::uint8_t a) {
    if (a == 0) throw std::domain_error("log of zero in GF(256)");
    return tables().log[a];
}

} // namespace cvs::gf256
