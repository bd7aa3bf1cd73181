#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "alphabet.hpp"

namespace pbwt {

//! One entry of a prev-encoding: a static symbol, a positive distance to the
//! previous occurrence of the same parameter, or the infinity mark used for
//! first occurrences. Packed into a single tagged integer so that the total
//! order required by rotation sorting (sentinel < other statics < distances
//! in numeric order < infinity) is plain integer comparison.
class pv_symbol {
public:
    static pv_symbol from_static(symbol_t c) { return pv_symbol(c); }

    static pv_symbol from_distance(std::uint64_t d) {
        if (d == 0) throw std::invalid_argument("pv_symbol: distance must be positive");
        return pv_symbol(dist_tag | d);
    }

    static pv_symbol infinity() { return pv_symbol(inf_tag); }

    bool is_static() const { return v_ < dist_tag; }
    bool is_distance() const { return v_ >= dist_tag && v_ < inf_tag; }
    bool is_infinity() const { return v_ == inf_tag; }

    symbol_t static_code() const { return static_cast<symbol_t>(v_); }
    std::uint64_t distance() const { return v_ & ~dist_tag; }

    friend std::strong_ordering operator<=>(pv_symbol, pv_symbol) = default;
    friend bool operator==(pv_symbol, pv_symbol) = default;

private:
    explicit pv_symbol(std::uint64_t v) : v_(v) {}

    static constexpr std::uint64_t dist_tag = std::uint64_t{1} << 62;
    static constexpr std::uint64_t inf_tag = std::uint64_t{2} << 62;

    std::uint64_t v_;
};

using pv_string = std::vector<pv_symbol>;

//! The count encoding of a text: statics verbatim, parameters replaced by
//! distinct-parameter counts, stored as dense codes (see alphabet).
using enc_string = std::vector<symbol_t>;

inline std::strong_ordering pv_compare(pv_symbol a, pv_symbol b) { return a <=> b; }

//! Prev-encoding: statics map to themselves; a parameter maps to the distance
//! to its previous occurrence, or infinity if there is none.
inline pv_string prev_encode(const pstring& t, const alphabet& ab) {
    pv_string out;
    out.reserve(t.size());
    std::vector<std::size_t> last(ab.size(), 0); // 1-based positions, 0 = unseen
    std::size_t pos = 0;
    for (symbol_t c : t) {
        ++pos;
        if (ab.is_static(c)) {
            out.push_back(pv_symbol::from_static(c));
        } else {
            std::size_t prev = last[c];
            out.push_back(prev == 0 ? pv_symbol::infinity()
                                    : pv_symbol::from_distance(pos - prev));
            last[c] = pos;
        }
    }
    return out;
}

//! Right rotation by i: the last i symbols move to the front.
inline pstring rotate(const pstring& t, std::size_t i) {
    const std::size_t n = t.size();
    if (n == 0) return {};
    i %= n;
    pstring out;
    out.reserve(n);
    out.insert(out.end(), t.end() - static_cast<std::ptrdiff_t>(i), t.end());
    out.insert(out.end(), t.begin(), t.end() - static_cast<std::ptrdiff_t>(i));
    return out;
}

//! Count encoding: a parameter at position i becomes the number of distinct
//! parameters seen when scanning cyclically from position i+1 up to (and
//! including) the next occurrence of the same parameter. Statics map to
//! themselves. Rotation lookups use wraparound index arithmetic; no rotation
//! is materialized. Intended for reference-style use; the scan is quadratic
//! in the worst case.
inline enc_string rot_encode(const pstring& t, const alphabet& ab) {
    const std::size_t n = t.size();
    enc_string out(n);
    // generation-stamped "seen" marks avoid clearing per position
    std::vector<std::size_t> seen(ab.size(), 0);
    std::size_t gen = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const symbol_t c = t[i];
        if (ab.is_static(c)) {
            out[i] = c;
            continue;
        }
        ++gen;
        std::uint32_t distinct = 0;
        for (std::size_t off = 1; off <= n; ++off) {
            const symbol_t d = t[(i + off) % n];
            if (ab.is_static(d)) continue;
            if (seen[d] != gen) {
                seen[d] = gen;
                ++distinct;
            }
            if (d == c) break;
        }
        out[i] = ab.enc_of_count(distinct);
    }
    return out;
}

//! Number of infinity marks in the longest common prefix of two prev-encodings.
inline std::size_t lcp_inf(const pv_string& a, const pv_string& b) {
    const std::size_t m = a.size() < b.size() ? a.size() : b.size();
    std::size_t count = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] != b[i]) break;
        if (a[i].is_infinity()) ++count;
    }
    return count;
}

//! Parameterized match: equal length, statics equal position-wise, and the
//! parameter positions related by a bijection. Checked directly by growing
//! forward and backward parameter maps, independent of any encoding.
inline bool p_match(const pstring& s, const pstring& t, const alphabet& ab) {
    if (s.size() != t.size()) return false;
    std::vector<symbol_t> fwd(ab.size(), 0), bwd(ab.size(), 0); // 0 = unmapped
    for (std::size_t i = 0; i < s.size(); ++i) {
        const symbol_t a = s[i], b = t[i];
        const bool sa = ab.is_static(a), sb = ab.is_static(b);
        if (sa != sb) return false;
        if (sa) {
            if (a != b) return false;
            continue;
        }
        if (fwd[a] == 0 && bwd[b] == 0) {
            fwd[a] = b + 1;
            bwd[b] = a + 1;
        } else if (fwd[a] != b + 1 || bwd[b] != a + 1) {
            return false;
        }
    }
    return true;
}

} // namespace pbwt
