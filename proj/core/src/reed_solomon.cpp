#include "cvs/reed_solomon.hpp"

#include <algorithm>
#include <stdexcept>

#include "cvs/errors.hpp"
#include "cvs/gf256.hpp"

namespace cvs {

namespace {

using Poly = std::vector<std::uint8_t>; // coefficients, highest degree first

// Evaluates p at x with Horner's rule.
std::uint8_t poly_eval(const Poly& p, std::uint8_t x) {
    std::uint8_t y = 0;
    for (std::uint8_t c : p) {
        y = std::uint8_t(gf256::mul(y, x) ^ c);
    }
    return y;
}

} // namespace

ReedSolomon::ReedSolomon(int parity_len) : parity_len_(parity_len) {
    if (parity_len < 1 || parity_len > 254) {
        throw std::invalid_argument("parity length must be in [1,254]");
    }
    // generator = prod_{i=0}^{parity-1} (x - alpha^i)
    generator_ = {1};
    for (int i = 0; i < parity_len; ++i) {
        const std::uint8_t root = gf256::pow_of_alpha(i);
        Poly next(generator_.size() + 1, 0);
        for (std::size_t j = 0; j < generator_.size(); ++j) {
            next[j] ^= generator_[j];
            next[j + 1] ^= gf256::mul(generator_[j], root);
        }
        generator_ = std::move(next);
    }
}

std::vector<std::uint8_t> ReedSolomon::parity(
    std::span<const std::uint8_t> message) const {
    if (message.empty() || message.size() + parity_len_ > 255) {
        throw std::invalid_argument("message length out of range for RS(255)");
    }
    // Systematic encoding: remainder of message * x^parity divided by generator.
    std::vector<std::uint8_t> rem(parity_len_, 0);
    for (std::uint8_t byte : message) {
        const std::uint8_t factor = std::uint8_t(byte ^ rem.front());
        rem.erase(rem.begin());
        rem.push_back(0);
        for (int i = 0; i < parity_len_; ++i) {
            rem[i] ^= gf256::mul(generator_[i + 1], factor);
        }
    }
    return rem;
}

std::vector<std::uint8_t> ReedSolomon::encode(
    std::span<const std::uint8_t> message) const {
    std::vector<std::uint8_t> out(message.begin(), message.end());
    const auto p = parity(message);
    out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::vector<std::uint8_t> ReedSolomon::decode(
    std::span<const std::uint8_t> codeword) const {
    const int n = int(codeword.size());
    if (n <= parity_len_ || n > 255) {
        throw std::invalid_argument("codeword length out of range");
    }
    std::vector<std::uint8_t> cw(codeword.begin(), codeword.end());

    // Syndromes S_i = C(alpha^i), i = 0..parity-1.
    std::vector<std::uint8_t> synd(parity_len_);
    bool clean = true;
    for (int i = 0; i < parity_len_; ++i) {
        synd[i] = poly_eval(cw, gf256::pow_of_alpha(i));
        clean = clean && synd[i] == 0;
    }
    if (clean) {
        return {cw.begin(), cw.end() - parity_len_};
    }

    // Berlekamp-Massey: error locator sigma (lowest degree first).
    std::vector<std::uint8_t> sigma = {1};
    std::vector<std::uint8_t> prev = {1};
    int L = 0;
    int m = 1;
    std::uint8_t b = 1;
    for (int step = 0; step < parity_len_; ++step) {
        std::uint8_t delta = synd[step];
        for (int i = 1; i <= L; ++i) {
            if (i < int(sigma.size())) {
                delta ^= gf256::mul(sigma[i], synd[step - i]);
            }
        }
        if (delta == 0) {
            ++m;
        } else if (2 * L <= step) {
            const std::vector<std::uint8_t> tmp = sigma;
            const std::uint8_t scale = gf256::div(delta, b);
            if (int(sigma.size()) < int(prev.size()) + m) {
                sigma.resize(prev.size() + m, 0);
            }
            for (std::size_t i = 0; i < prev.size(); ++i) {
                sigma[i + m] ^= gf256::mul(prev[i], scale);
            }
            L = step + 1 - L;
            prev = tmp;
            b = delta;
            m = 1;
        } else {
            const std::uint8_t scale = gf256::div(delta, b);
            if (int(sigma.size()) < int(prev.size()) + m) {
                sigma.resize(prev.size() + m, 0);
            }
            for (std::size_t i = 0; i < prev.size(); ++i) {
                sigma[i + m] ^= gf256::mul(prev[i], scale);
            }
            ++m;
        }
    }
    while (!sigma.empty() && sigma.back() == 0) sigma.pop_back();
    const int num_errors = int(sigma.size()) - 1;
    if (num_errors <= 0 || 2 * num_errors > parity_len_) {
        throw UncorrectableError("error count exceeds Reed-Solomon correction bound");
    }

    // Chien search: error positions j where sigma(alpha^-j) == 0.
    // Position j counts from the end of the codeword (degree of the term).
    std::vector<int> positions;
    for (int j = 0; j < n; ++j) {
        std::uint8_t x = gf256::pow_of_alpha(-j);
        std::uint8_t acc = 0;
        std::uint8_t xp = 1;
        for (std::uint8_t c : sigma) {
            acc ^= gf256::mul(c, xp);
            xp = gf256::mul(xp, x);
        }
        if (acc == 0) {
            positions.push_back(n - 1 - j);
        }
    }
    if (int(positions.size()) != num_errors) {
        throw UncorrectableError("error locator roots do not match error count");
    }

    // Forney: omega = (synd * sigma) mod x^parity, both lowest degree first.
    std::vector<std::uint8_t> omega(parity_len_, 0);
    for (int i = 0; i < parity_len_; ++i) {
        for (std::size_t j = 0; j < sigma.size(); ++j) {
            if (i + int(j) < parity_len_) {
                omega[i + j] ^= gf256::mul(synd[i], sigma[j]);
            }
        }
    }
    for (int pos : positions) {
        const int j = n - 1 - pos;
        const std::uint8_t x_inv = gf256::pow_of_alpha(-j);
        std::uint8_t num = 0;
        std::uint8_t xp = 1;
        for (int i = 0; i < parity_len_; ++i) {
            num ^= gf256::mul(omega[i], xp);
            xp = gf256::mul(xp, x_inv);
        }
        // sigma'(x) keeps only odd-degree terms of sigma.
        std::uint8_t den = 0;
        xp = 1; // x_inv^0, multiplied twice per loop step
        for (std::size_t i = 1; i < sigma.size(); i += 2) {
            std::uint8_t term = gf256::mul(sigma[i], xp);
            den ^= term;
            xp = gf256::mul(xp, gf256::mul(x_inv, x_inv));
        }
        if (den == 0) {
            throw UncorrectableError("Forney denominator vanished");
        }
        // magnitude = x^(1-fcr) * omega(x_inv) / sigma'(x_inv), fcr = 0.
        const std::uint8_t magnitude =
            gf256::mul(gf256::pow_of_alpha(j), gf256::div(num, den));
        cw[pos] ^= magnitude;
    }

    // The corrected word must be a codeword; anything else means the error
    // pattern was beyond the correction bound.
    for (int i = 0; i < parity_len_; ++i) {
        if (poly_eval(cw, gf256::pow_of_alpha(i)) != 0) {
            throw UncorrectableError("correction failed to produce a valid codeword");
        }
    }
    return {cw.begin(), cw.end() - parity_len_};
}

FramedPayload rs_frame_encode(const ContentId& id) {
    ContentId::parse(id.value); // re-validate
    std::array<std::uint8_t, FramedPayload::kMessageLen> msg{};
    msg[0] = '<';
    std::copy(id.value.begin(), id.value.end(), msg.begin() + 1);
    msg[17] = '>';

    static const ReedSolomon rs(int(FramedPayload::kParityLen));
    const auto parity = rs.parity(msg);

    FramedPayload out;
    std::copy(msg.begin(), msg.end(), out.bytes.begin());
    std::copy(parity.begin(), parity.end(),
              out.bytes.begin() + FramedPayload::kMessageLen);
    return out;
}

ContentId rs_frame_decode(std::span<const std::uint8_t> bytes) {
    if (bytes.size() != FramedPayload::kTotalLen) {
        throw FramingError("framed payload must be 28 bytes, got " +
                           std::to_string(bytes.size()));
    }
    static const ReedSolomon rs(int(FramedPayload::kParityLen));
    const auto msg = rs.decode(bytes);
    if (msg.front() != '<' || msg.back() != '>') {
        throw FramingError("frame delimiters missing after correction");
    }
    const std::string text(msg.begin() + 1, msg.end() - 1);
    try {
        return ContentId::parse(text);
    } catch (const std::invalid_argument& e) {
        throw FramingError(std::string("frame content is not a content id: ") +
                           e.what());
    }
}

} // namespace cvs
