#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pbwt {

//! Symbols are dense integer codes. Code 0 is the sentinel; the remaining
//! static symbols occupy [1, sigma) in lexicographic order and the parameter
//! symbols occupy [sigma, sigma + pi). Textual symbols are mapped to codes at
//! the I/O boundary only, so the core never sees characters.
using symbol_t = std::uint32_t;

//! A text over the two alphabets; the position convention everywhere in this
//! library is 1-based, matching the sequence interfaces.
using pstring = std::vector<symbol_t>;

class alphabet {
public:
    static constexpr symbol_t sentinel = 0;

    //! num_static counts the sentinel, so it is at least 1.
    alphabet(std::uint32_t num_static, std::uint32_t num_param)
        : sigma_(num_static), pi_(num_param) {
        if (num_static == 0) {
            throw std::invalid_argument("alphabet: static alphabet must contain the sentinel");
        }
    }

    std::uint32_t sigma() const { return sigma_; }
    std::uint32_t pi() const { return pi_; }
    std::uint32_t size() const { return sigma_ + pi_; }

    bool contains(symbol_t c) const { return c < size(); }

    bool is_static(symbol_t c) const {
        require(c);
        return c < sigma_;
    }

    bool is_param(symbol_t c) const { return !is_static(c); }

    //! Throws std::invalid_argument if c is not a symbol of this alphabet.
    void require(symbol_t c) const {
        if (!contains(c)) {
            throw std::invalid_argument("alphabet: symbol code out of range");
        }
    }

    // Entries of the count encoding (and of the L/F sequences built from it)
    // are either a static code < sigma or a distinct-parameter count in
    // [1, pi], stored densely as sigma + count - 1.

    symbol_t enc_of_count(std::uint32_t count) const {
        if (count == 0 || count > pi_) {
            throw std::invalid_argument("alphabet: parameter count out of range");
        }
        return sigma_ + count - 1;
    }

    std::uint32_t count_of_enc(symbol_t e) const { return e - sigma_ + 1; }

    bool enc_is_static(symbol_t e) const { return e < sigma_; }

private:
    std::uint32_t sigma_;
    std::uint32_t pi_;
};

} // namespace pbwt
