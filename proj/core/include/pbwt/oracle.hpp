#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "alphabet.hpp"
#include "encoding.hpp"

namespace pbwt::oracle {

//! Definition-level tables for a complete text, built in quadratic time by
//! materializing and sorting all rotations. Ground truth for tests and for
//! the CLI verify mode; never the fast path.
//!
//! Vectors are 0-based; the values stored in ra, ra_inv, and lf are 1-based
//! ranks and rotation amounts, matching the sequence interfaces.
struct tables {
    std::size_t n = 0;
    std::vector<std::size_t> ra;     // ra[i-1]: rotation amount of the i-th smallest row
    std::vector<std::size_t> ra_inv; // ra_inv[p-1]: rank of the rotation with amount p
    std::vector<symbol_t> f;         // first column of the count-encoded sorted rows
    std::vector<symbol_t> l;         // last column (the transform itself)
    std::vector<std::size_t> lcp;    // lcp[i-1]: infinity-lcp of rows i and i+1; lcp[n-1] = 0
    std::vector<std::size_t> lf;     // lf[i-1]: rank of row i's right-rotation successor
};

namespace detail {

//! Count encoding of a single position: distinct parameters seen scanning
//! cyclically from i+1 up to and including the next occurrence of t[i].
//! i is 1-based; t[i] must be a parameter.
inline symbol_t count_at(const pstring& t, const alphabet& ab, std::size_t i) {
    const std::size_t n = t.size();
    const symbol_t c = t[i - 1];
    std::vector<bool> seen(ab.size(), false);
    std::uint32_t distinct = 0;
    for (std::size_t off = 1; off <= n; ++off) {
        const symbol_t d = t[(i - 1 + off) % n];
        if (ab.is_static(d)) continue;
        if (!seen[d]) {
            seen[d] = true;
            ++distinct;
        }
        if (d == c) break;
    }
    return ab.enc_of_count(distinct);
}

inline void check_text(const pstring& t, const alphabet& ab) {
    if (t.empty() || t.back() != alphabet::sentinel) {
        throw std::invalid_argument("oracle: text must end with the sentinel");
    }
    std::size_t sentinels = 0;
    for (symbol_t c : t) {
        ab.require(c);
        if (c == alphabet::sentinel) ++sentinels;
    }
    if (sentinels != 1) {
        throw std::invalid_argument("oracle: sentinel must occur exactly once");
    }
}

} // namespace detail

inline tables build_tables(const pstring& t, const alphabet& ab) {
    detail::check_text(t, ab);
    const std::size_t n = t.size();

    // keys[p-1] = prev-encoding of the right rotation by p
    std::vector<pv_string> keys(n);
    for (std::size_t p = 1; p <= n; ++p) {
        keys[p - 1] = prev_encode(rotate(t, p), ab);
    }

    tables tb;
    tb.n = n;
    tb.ra.resize(n);
    std::iota(tb.ra.begin(), tb.ra.end(), std::size_t{1});
    std::sort(tb.ra.begin(), tb.ra.end(), [&](std::size_t a, std::size_t b) {
        return keys[a - 1] < keys[b - 1];
    });

    tb.ra_inv.resize(n);
    for (std::size_t i = 0; i < n; ++i) tb.ra_inv[tb.ra[i] - 1] = i + 1;

    tb.f.resize(n);
    tb.l.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const pstring rot = rotate(t, tb.ra[i]);
        tb.f[i] = ab.is_static(rot.front()) ? rot.front() : detail::count_at(rot, ab, 1);
        tb.l[i] = ab.is_static(rot.back()) ? rot.back() : detail::count_at(rot, ab, n);
    }

    tb.lcp.assign(n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        tb.lcp[i] = lcp_inf(keys[tb.ra[i] - 1], keys[tb.ra[i + 1] - 1]);
    }

    tb.lf.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        tb.lf[i] = tb.ra_inv[tb.ra[i] % n]; // successor rotation amount is ra[i] mod n + 1
    }
    return tb;
}

//! Infinity-lcp of the rows ranked i and j, recomputed from the encodings.
//! The range-minimum property says this equals min(lcp[i..j-1]).
inline std::size_t lcp_pair(const tables& tb, const pstring& t, const alphabet& ab,
                            std::size_t i, std::size_t j) {
    if (i == 0 || !(i < j) || j > tb.n) {
        throw std::out_of_range("oracle::lcp_pair: ranks out of range");
    }
    const pv_string a = prev_encode(rotate(t, tb.ra[i - 1]), ab);
    const pv_string b = prev_encode(rotate(t, tb.ra[j - 1]), ab);
    return lcp_inf(a, b);
}

//! Exhaustive check of the LF order characterization: for ranks i < j whose
//! last symbols are both parameter counts,
//!   LF(i) < LF(j)  iff  min(L[i] - 1, lcp_inf(row_i, row_j)) < L[j],
//! plus the equal-symbol corollary: L[i] = L[j] implies LF(i) < LF(j).
inline bool lf_order_check(const tables& tb, const pstring& t, const alphabet& ab) {
    const std::size_t n = tb.n;
    std::vector<pv_string> keys(n);
    for (std::size_t i = 0; i < n; ++i) {
        keys[i] = prev_encode(rotate(t, tb.ra[i]), ab);
    }
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            if (tb.l[i - 1] == tb.l[j - 1] && !(tb.lf[i - 1] < tb.lf[j - 1])) {
                return false;
            }
            if (ab.enc_is_static(tb.l[i - 1]) || ab.enc_is_static(tb.l[j - 1])) {
                continue;
            }
            const std::size_t vi = ab.count_of_enc(tb.l[i - 1]);
            const std::size_t vj = ab.count_of_enc(tb.l[j - 1]);
            const std::size_t ell = lcp_inf(keys[i - 1], keys[j - 1]);
            const bool expect = std::min(vi - 1, ell) < vj;
            if ((tb.lf[i - 1] < tb.lf[j - 1]) != expect) return false;
        }
    }
    return true;
}

} // namespace pbwt::oracle
