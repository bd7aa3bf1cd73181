#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "alphabet.hpp"
#include "dynseq.hpp"
#include "encoding.hpp"

namespace pbwt {

//! Online construction of the transform by prepending one character at a
//! time. The state is the transform column L, the first column F, the lcp
//! column, per-parameter occurrence bookkeeping, and a run-length column C
//! of static counts. Rotation ranks and the LF permutation are never stored;
//! LF is answered with rank/select on L and F.
//!
//! Positions and ranks are 1-based throughout.
class builder {
public:
    explicit builder(const alphabet& ab)
        : ab_(ab),
          n_(1),
          l_(ab.size()),
          f_(ab.size()),
          c_(ab.sigma()),
          lcp_(ab.pi() + 1),
          left_(ab.pi(), 0),
          right_(ab.pi(), 0),
          rm_(ab.pi(), 0) {
        l_.insert(alphabet::sentinel, 1);
        f_.insert(alphabet::sentinel, 1);
        // C holds count+1 copies of each static; the empty text has one
        // sentinel, so two sentinel copies and one copy of everything else.
        c_.insert(alphabet::sentinel, 1);
        c_.insert(alphabet::sentinel, 2);
        for (symbol_t a = 1; a < ab_.sigma(); ++a) {
            c_.insert(a, c_.size() + 1);
        }
        lcp_.insert(0, 1);
    }

    const alphabet& alpha() const { return ab_; }

    //! Length of the current text, sentinel included.
    std::size_t size() const { return n_; }

    //! Extend the text to c + current text. c must not be the sentinel.
    void prepend(symbol_t c) {
        ab_.require(c);
        if (c == alphabet::sentinel) {
            throw std::invalid_argument("builder: cannot prepend the sentinel");
        }
        const std::size_t k = l_.select(alphabet::sentinel, 1);
        update_lf(c, k);
        const std::size_t kp = insert_row(k);
        for (std::size_t& r : rm_) {
            if (r >= kp) ++r;
        }
        // Both lcp entries are computed against the pre-insertion lcp column,
        // then applied together.
        const symbol_t at_kp = update_lcp(kp, kp);
        const symbol_t before_kp = update_lcp(kp - 1, kp);
        lcp_.set(kp - 1, before_kp);
        lcp_.insert(at_kp, kp);
        ++n_;
    }

    //! Rank of the row reached by rotating row i right once.
    std::size_t lf(std::size_t i) const {
        check_rank(i);
        const symbol_t x = l_.access(i);
        return f_.select(x, l_.rank(x, i));
    }

    //! Inverse of lf.
    std::size_t lf_inv(std::size_t j) const {
        check_rank(j);
        const symbol_t y = f_.access(j);
        return l_.select(y, f_.rank(y, j));
    }

    //! The transform of the current text (a copy of L).
    enc_string pbwt() const { return l_.to_vector(); }

    //! The count encoding of the current text, recovered from L alone by
    //! walking the inverse LF chain from the sentinel row.
    enc_string recover_encoding() const {
        enc_string out(n_);
        std::size_t cur = l_.select(alphabet::sentinel, 1);
        for (std::size_t p = 0; p < n_; ++p) {
            cur = lf_inv(cur);
            out[p] = l_.access(cur);
        }
        return out;
    }

    struct snapshot_t {
        std::size_t n = 0;
        enc_string l;
        enc_string f;
        std::vector<std::size_t> lcp;
    };

    //! Plain-array view of the maintained columns, for comparison against
    //! definition-level construction.
    snapshot_t snapshot() const {
        snapshot_t s;
        s.n = n_;
        s.l = l_.to_vector();
        s.f = f_.to_vector();
        for (symbol_t v : lcp_.to_vector()) s.lcp.push_back(v);
        return s;
    }

private:
    void check_rank(std::size_t i) const {
        if (i == 0 || i > n_) {
            throw std::out_of_range("builder: rank out of range");
        }
    }

    std::size_t pidx(symbol_t a) const { return a - ab_.sigma(); }

    //! Rewrite L and F so they hold the columns of the extended text's
    //! rotations that already existed, still in old rank space. For a static
    //! c only the sentinel row of L changes. For a parameter c, the row of
    //! each parameter's rightmost occurrence and that row's LF image are
    //! recomputed from the occurrence bookkeeping; all reads happen against
    //! the untouched columns before any write is applied.
    void update_lf(symbol_t c, std::size_t k) {
        if (ab_.is_static(c)) {
            l_.set(k, c);
            return;
        }
        const std::size_t pc = pidx(c);
        const std::uint32_t pi = ab_.pi();

        struct rewrite {
            std::size_t lrow;
            std::size_t frow;
            symbol_t enc;
        };
        std::vector<rewrite> writes;
        writes.reserve(pi);

        for (std::size_t a = 0; a < pi; ++a) {
            if (left_[a] == 0) continue;
            const std::size_t i = rm_[a];
            const symbol_t xi = l_.access(i);
            const std::size_t j = f_.select(xi, l_.rank(xi, i)); // LF on the old columns
            std::uint32_t cnt;
            if (a == pc) {
                cnt = 0;
                for (std::size_t b = 0; b < pi; ++b) {
                    if (right_[b] != 0 && right_[a] >= right_[b]) ++cnt;
                }
            } else {
                cnt = ab_.count_of_enc(xi);
                const bool bumps =
                    left_[pc] == 0 ||
                    (left_[a] > left_[pc] && left_[pc] >= right_[pc] && right_[pc] > right_[a]);
                if (bumps) ++cnt;
            }
            writes.push_back({i, j, ab_.enc_of_count(cnt)});
        }
        for (const rewrite& w : writes) {
            l_.set(w.lrow, w.enc);
            f_.set(w.frow, w.enc);
        }

        // First symbol of the extended text, parked in the sentinel row of L
        // until insert_row moves it into F.
        std::uint32_t first;
        if (left_[pc] == 0) {
            std::uint32_t occurring = 0;
            for (std::size_t a = 0; a < pi; ++a) {
                if (left_[a] != 0) ++occurring;
            }
            first = 1 + occurring;
            left_[pc] = right_[pc] = n_ + 1;
            rm_[pc] = k;
        } else {
            std::uint32_t closer = 0;
            for (std::size_t a = 0; a < pi; ++a) {
                if (left_[a] > left_[pc]) ++closer;
            }
            first = 1 + closer;
            left_[pc] = n_ + 1;
        }
        l_.set(k, ab_.enc_of_count(first));
    }

    //! Insert the extended text's own row: sentinel into L, its first symbol
    //! into F, both at the row's rank, which is returned. For a static first
    //! symbol the rank comes from the static prefix counts in C (which gains
    //! one copy); for a parameter count x it is assembled from three rank
    //! sums over L, the middle two bounded by positions found in the lcp
    //! column.
    std::size_t insert_row(std::size_t k) {
        const symbol_t x = l_.access(k);
        std::size_t kp;
        if (ab_.enc_is_static(x)) {
            // 1 + (statics smaller than x, sentinel run included) + (rows at
            // most k whose last symbol is x); select on C folds the first
            // two terms together.
            kp = c_.select(x, 1) - x - 1 + l_.rank(x, k);
            c_.insert(x, c_.select(x, 1));
        } else {
            const std::uint32_t xv = ab_.count_of_enc(x);
            const std::uint32_t pi = ab_.pi();
            const std::size_t n = n_;
            kp = 1 + (c_.size() - ab_.sigma()); // static occurrences in the text

            // rows before the sentinel row with a smaller-or-equal count
            for (std::uint32_t v = 1; v <= xv; ++v) {
                kp += l_.rank(ab_.enc_of_count(v), k - 1);
            }

            // rows up to the last position before k where the lcp drops
            // below x, counting larger counts
            std::size_t jstar = 0;
            for (std::uint32_t v = 0; v < xv; ++v) {
                const std::size_t cnt = lcp_.rank(v, k - 1);
                if (cnt != 0) jstar = std::max(jstar, lcp_.select(v, cnt));
            }
            if (jstar != 0) {
                for (std::uint32_t v = xv + 1; v <= pi; ++v) {
                    kp += l_.rank(ab_.enc_of_count(v), jstar);
                }
            }

            // rows after k that still share a long enough lcp run, one
            // shrinking window per smaller count value; the window end j is
            // inclusive
            std::size_t j = n;
            for (std::uint32_t y = 1; y < xv; ++y) {
                const std::size_t before = lcp_.rank(y - 1, k - 1);
                if (lcp_.rank(y - 1, n) > before) {
                    j = std::min(j, lcp_.select(y - 1, before + 1));
                }
                kp += l_.rank(ab_.enc_of_count(y), j) - l_.rank(ab_.enc_of_count(y), k);
            }
        }
        l_.insert(alphabet::sentinel, kp);
        f_.insert(x, kp);
        return kp;
    }

    //! Value for the lcp column at position i against its successor row,
    //! computed over the freshly updated L and F while the lcp column still
    //! describes the previous text. kp is the rank the new row was inserted
    //! at; ranks above it are shifted by one relative to the old lcp column.
    symbol_t update_lcp(std::size_t i, std::size_t kp) const {
        if (i == 0 || i >= l_.size()) return 0;
        const std::size_t j = i + 1;
        const symbol_t fi = f_.access(i);
        const symbol_t fj = f_.access(j);
        const bool ni = !ab_.enc_is_static(fi);
        const bool nj = !ab_.enc_is_static(fj);
        if (fi != fj && !(ni && nj)) return 0;

        const std::size_t i2 = l_.select(fi, f_.rank(fi, i));
        const std::size_t j2 = l_.select(fj, f_.rank(fj, j));
        const std::size_t bi = i2 - 1 - (i2 > kp ? 1 : 0);
        const std::size_t bj = j2 - 1 - (j2 > kp ? 1 : 0);

        // smallest value whose count differs between the two prefixes, which
        // is the minimum lcp value strictly between the predecessor rows
        std::uint32_t ell = 0;
        for (std::uint32_t y = 0; y <= ab_.pi(); ++y) {
            if (lcp_.rank(y, bi) != lcp_.rank(y, bj)) {
                ell = y;
                break;
            }
        }

        if (ni && nj) {
            const std::uint32_t vi = ab_.count_of_enc(fi);
            const std::uint32_t vj = ab_.count_of_enc(fj);
            if (ell < std::min(vi, vj)) return ell + 1;
            if (fi == fj) return ell;
            return std::min(vi, vj);
        }
        return ell; // equal statics
    }

    alphabet ab_;
    std::size_t n_;
    dyn_seq l_;
    dyn_seq f_;
    dyn_seq c_;
    dyn_seq lcp_;
    std::vector<std::size_t> left_;  // leftmost occurrence, counted from the right end; 0 = absent
    std::vector<std::size_t> right_; // rightmost occurrence, counted from the right end; 0 = absent
    std::vector<std::size_t> rm_;    // L-row of the rightmost occurrence
};

} // namespace pbwt
