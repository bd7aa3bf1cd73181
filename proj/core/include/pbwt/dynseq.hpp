#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "alphabet.hpp"

namespace pbwt {

//! Dynamic sequence over a small dense alphabet [0, sigma) supporting
//! access / rank / select / set / insert / erase. Positions are 1-based.
//!
//! Layout: a balanced tree whose leaves hold fixed-capacity chunks of symbols
//! and whose nodes cache the subtree length plus one occurrence count per
//! symbol. Queries cost O(log m), updates O(sigma + log m) (the count vectors
//! of split nodes are rebuilt). Structures with O(log m / log log m) amortized
//! bounds exist for this problem; this tree is deliberately simpler and is
//! fast enough for the builder on top of it.
//!
//! Erase removes emptied leaves but never rebalances, so the height is
//! bounded by the largest size the sequence has reached, not the current one.
class dyn_seq {
public:
    explicit dyn_seq(std::uint32_t sigma) : sigma_(sigma) {
        if (sigma == 0) {
            throw std::invalid_argument("dyn_seq: alphabet must be non-empty");
        }
        root_ = make_node();
    }

    std::uint32_t sigma() const { return sigma_; }

    std::size_t size() const { return root_->size; }

    //! Symbol at position i, 1 <= i <= size().
    symbol_t access(std::size_t i) const {
        if (i == 0 || i > root_->size) {
            throw std::out_of_range("dyn_seq::access: position out of range");
        }
        const node* p = root_.get();
        while (!p->is_leaf()) {
            for (const auto& kid : p->kids) {
                if (i <= kid->size) {
                    p = kid.get();
                    break;
                }
                i -= kid->size;
            }
        }
        return p->data[i - 1];
    }

    //! Occurrences of a in positions [1, i]; rank(a, 0) == 0.
    std::size_t rank(symbol_t a, std::size_t i) const {
        check_symbol(a);
        if (i > root_->size) {
            throw std::out_of_range("dyn_seq::rank: position out of range");
        }
        if (i == 0) return 0;
        std::size_t res = 0;
        const node* p = root_.get();
        while (!p->is_leaf()) {
            for (const auto& kid : p->kids) {
                if (i <= kid->size) {
                    p = kid.get();
                    break;
                }
                res += kid->counts[a];
                i -= kid->size;
            }
        }
        for (std::size_t idx = 0; idx < i; ++idx) {
            if (p->data[idx] == a) ++res;
        }
        return res;
    }

    //! Position of the k-th occurrence of a, 1 <= k <= rank(a, size()).
    std::size_t select(symbol_t a, std::size_t k) const {
        check_symbol(a);
        if (k == 0 || k > root_->counts[a]) {
            throw std::out_of_range("dyn_seq::select: occurrence out of range");
        }
        std::size_t pos = 0;
        const node* p = root_.get();
        while (!p->is_leaf()) {
            for (const auto& kid : p->kids) {
                if (k <= kid->counts[a]) {
                    p = kid.get();
                    break;
                }
                k -= kid->counts[a];
                pos += kid->size;
            }
        }
        for (std::size_t idx = 0;; ++idx) {
            if (p->data[idx] == a && --k == 0) {
                return pos + idx + 1;
            }
        }
    }

    //! Overwrite position i with a.
    void set(std::size_t i, symbol_t a) {
        check_symbol(a);
        if (i == 0 || i > root_->size) {
            throw std::out_of_range("dyn_seq::set: position out of range");
        }
        set_rec(*root_, i, a);
    }

    //! Insert a so that it ends up at position i, 1 <= i <= size() + 1.
    void insert(symbol_t a, std::size_t i) {
        check_symbol(a);
        if (i == 0 || i > root_->size + 1) {
            throw std::out_of_range("dyn_seq::insert: position out of range");
        }
        auto sib = insert_rec(*root_, a, i);
        if (sib) {
            auto old = std::move(root_);
            root_ = make_node();
            root_->kids.push_back(std::move(old));
            root_->kids.push_back(std::move(sib));
            pull_up(*root_);
        }
    }

    //! Remove the symbol at position i.
    void erase(std::size_t i) {
        if (i == 0 || i > root_->size) {
            throw std::out_of_range("dyn_seq::erase: position out of range");
        }
        erase_rec(*root_, i);
        while (!root_->is_leaf() && root_->kids.size() == 1) {
            auto kid = std::move(root_->kids[0]);
            root_ = std::move(kid);
        }
    }

    //! Contents as a plain vector, in order.
    std::vector<symbol_t> to_vector() const {
        std::vector<symbol_t> out;
        out.reserve(root_->size);
        collect(*root_, out);
        return out;
    }

private:
    static constexpr std::size_t leaf_cap = 128;
    static constexpr std::size_t max_kids = 16;

    struct node {
        std::uint64_t size = 0;
        std::vector<std::uint64_t> counts;
        std::vector<symbol_t> data;
        std::vector<std::unique_ptr<node>> kids;
        bool is_leaf() const { return kids.empty(); }
    };

    std::unique_ptr<node> make_node() const {
        auto nd = std::make_unique<node>();
        nd->counts.assign(sigma_, 0);
        return nd;
    }

    void check_symbol(symbol_t a) const {
        if (a >= sigma_) {
            throw std::invalid_argument("dyn_seq: symbol code out of range");
        }
    }

    static void recount_leaf(node& nd) {
        nd.size = nd.data.size();
        nd.counts.assign(nd.counts.size(), 0);
        for (symbol_t s : nd.data) ++nd.counts[s];
    }

    static void pull_up(node& nd) {
        nd.size = 0;
        nd.counts.assign(nd.counts.size(), 0);
        for (const auto& kid : nd.kids) {
            nd.size += kid->size;
            for (std::size_t s = 0; s < nd.counts.size(); ++s) {
                nd.counts[s] += kid->counts[s];
            }
        }
    }

    //! Overwrite within nd's subtree; returns the symbol that was replaced.
    symbol_t set_rec(node& nd, std::size_t i, symbol_t a) {
        if (nd.is_leaf()) {
            symbol_t& slot = nd.data[i - 1];
            const symbol_t old = slot;
            --nd.counts[old];
            ++nd.counts[a];
            slot = a;
            return old;
        }
        std::size_t t = 0;
        for (; t + 1 < nd.kids.size(); ++t) {
            if (i <= nd.kids[t]->size) break;
            i -= nd.kids[t]->size;
        }
        const symbol_t old = set_rec(*nd.kids[t], i, a);
        --nd.counts[old];
        ++nd.counts[a];
        return old;
    }

    std::unique_ptr<node> insert_rec(node& nd, symbol_t a, std::size_t i) {
        nd.size += 1;
        nd.counts[a] += 1;
        if (nd.is_leaf()) {
            nd.data.insert(nd.data.begin() + static_cast<std::ptrdiff_t>(i - 1), a);
            if (nd.data.size() <= leaf_cap) return nullptr;
            auto sib = make_node();
            const std::size_t half = nd.data.size() / 2;
            sib->data.assign(nd.data.begin() + static_cast<std::ptrdiff_t>(half), nd.data.end());
            nd.data.resize(half);
            recount_leaf(nd);
            recount_leaf(*sib);
            return sib;
        }
        std::size_t t = 0;
        for (; t + 1 < nd.kids.size(); ++t) {
            if (i <= nd.kids[t]->size) break;
            i -= nd.kids[t]->size;
        }
        auto sib = insert_rec(*nd.kids[t], a, i);
        if (sib) {
            nd.kids.insert(nd.kids.begin() + static_cast<std::ptrdiff_t>(t + 1), std::move(sib));
            if (nd.kids.size() > max_kids) {
                auto up = make_node();
                const std::size_t half = nd.kids.size() / 2;
                for (std::size_t s = half; s < nd.kids.size(); ++s) {
                    up->kids.push_back(std::move(nd.kids[s]));
                }
                nd.kids.resize(half);
                pull_up(nd);
                pull_up(*up);
                return up;
            }
        }
        return nullptr;
    }

    symbol_t erase_rec(node& nd, std::size_t i) {
        if (nd.is_leaf()) {
            const symbol_t a = nd.data[i - 1];
            nd.data.erase(nd.data.begin() + static_cast<std::ptrdiff_t>(i - 1));
            nd.size -= 1;
            nd.counts[a] -= 1;
            return a;
        }
        std::size_t t = 0;
        for (; t + 1 < nd.kids.size(); ++t) {
            if (i <= nd.kids[t]->size) break;
            i -= nd.kids[t]->size;
        }
        const symbol_t a = erase_rec(*nd.kids[t], i);
        nd.size -= 1;
        nd.counts[a] -= 1;
        if (nd.kids[t]->size == 0) {
            nd.kids.erase(nd.kids.begin() + static_cast<std::ptrdiff_t>(t));
        }
        return a;
    }

    static void collect(const node& nd, std::vector<symbol_t>& out) {
        if (nd.is_leaf()) {
            out.insert(out.end(), nd.data.begin(), nd.data.end());
            return;
        }
        for (const auto& kid : nd.kids) collect(*kid, out);
    }

    std::uint32_t sigma_;
    std::unique_ptr<node> root_;
};

} // namespace pbwt
