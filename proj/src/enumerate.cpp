#include "wcs/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

namespace wcs {

namespace {

// Backtracking over positions 1..k with bitset domains and forward checking.
//
// The search rests on the progression characterization of weak consecutiveness: for
// every m, the positions of the multiples of m form a single full arithmetic
// progression of step m. Hence
//   - a value v may sit at position s only if, for every divisor m of v, the residue
//     class of s mod m has exactly floor(k/m) members (classes with residue
//     <= k mod m have one too many) -- this and the per-value position bound are
//     static, precomputed per slot;
//   - the first multiple of m to be placed must open its class (position <= m), and
//     every later multiple of m must stay on that class;
//   - once the class of m is fixed, its remaining slots can hold only multiples of m,
//     and slots off the class can hold none -- applied eagerly to the slot domains.
// Eager class reservation is what makes conflicts surface early: every unused value
// keeps a count of live future slots, and a value with none kills the branch.
class Backtracker {
  public:
    Backtracker(uint32_t k, const EnumerateOptions& opts)
        : k_(k), opts_(opts), nw_((k + 1 + 63) / 64) {
        divisors_.resize(k + 1);
        for (uint32_t v = 1; v <= k; ++v) divisors_[v] = divisors(v);

        mult_mask_.assign((size_t)(k + 1) * nw_, 0);
        for (uint32_t m = 1; m <= k; ++m)
            for (uint32_t v = m; v <= k; v += m) set_bit(&mult_mask_[(size_t)m * nw_], v);

        dom_.assign((size_t)(k + 1) * nw_, 0);
        for (uint32_t s = 1; s <= k; ++s) {
            uint64_t* d = dom(s);
            for (uint32_t v = 1; v <= k; ++v) {
                if (opts_.use_position_bound_prune) {
                    uint32_t r = k % v;
                    if (s < r + 1 || s > k - r) continue;
                }
                bool ok = true;
                for (uint32_t m : divisors_[v]) {
                    if (m > 1 && (s - 1) % m + 1 <= k % m) { ok = false; break; }
                }
                if (ok) set_bit(d, v);
            }
        }

        cnt_.assign(k + 1, 0);
        for (uint32_t s = 1; s <= k; ++s)
            for (uint32_t v = 1; v <= k; ++v)
                if (get_bit(dom(s), v)) ++cnt_[v];

        used_.assign(nw_, 0);
        sigma_.assign(k + 1, 0);
        anchor_setter_.assign(k + 1, 0);
    }

    std::vector<Permutation> run() {
        results_.clear();
        if (k_ >= 1) place(1);
        std::sort(results_.begin(), results_.end());
        return std::move(results_);
    }

  private:
    uint64_t* dom(uint32_t s) { return &dom_[(size_t)s * nw_]; }
    const uint64_t* mult(uint32_t m) const { return &mult_mask_[(size_t)m * nw_]; }
    static void set_bit(uint64_t* w, uint32_t b) { w[b >> 6] |= 1ull << (b & 63); }
    static bool get_bit(const uint64_t* w, uint32_t b) { return (w[b >> 6] >> (b & 63)) & 1; }

    // dom[s] &= mask (or its complement); records undo info and updates counts.
    void shrink(uint32_t s, const uint64_t* mask, bool complement) {
        uint64_t* d = dom(s);
        for (uint32_t w = 0; w < nw_; ++w) {
            uint64_t nv = complement ? (d[w] & ~mask[w]) : (d[w] & mask[w]);
            uint64_t diff = d[w] ^ nv;
            if (!diff) continue;
            trail_.push_back({s, w, d[w]});
            d[w] = nv;
            while (diff) {
                uint32_t b = (uint32_t)std::countr_zero(diff);
                diff &= diff - 1;
                --cnt_[(w << 6) + b];
            }
        }
    }

    void undo_to(size_t mark) {
        while (trail_.size() > mark) {
            auto [s, w, old] = trail_.back();
            trail_.pop_back();
            uint64_t* d = dom(s);
            uint64_t diff = d[w] ^ old;
            while (diff) {
                uint32_t b = (uint32_t)std::countr_zero(diff);
                diff &= diff - 1;
                ++cnt_[(w << 6) + b];
            }
            d[w] = old;
        }
    }

    bool all_unused_alive() const {
        for (uint32_t w = 0; w < nw_; ++w) {
            uint64_t free = ~used_[w];
            if (w == 0) free &= ~1ull;  // bit 0 unused
            while (free) {
                uint32_t b = (uint32_t)std::countr_zero(free);
                free &= free - 1;
                uint32_t v = (w << 6) + b;
                if (v > k_) return true;
                if (cnt_[v] == 0) return false;
            }
        }
        return true;
    }

    void place(uint32_t i) {
        if (i > k_) {
            std::vector<uint32_t> vals(sigma_.begin() + 1, sigma_.end());
            results_.emplace_back(std::move(vals));
            return;
        }
        // Some multiple of i-1 must already have opened its class.
        if (i >= 3 && anchor_setter_[i - 1] == 0) return;

        // Consume slot i for the frontier advance.
        const uint64_t* di = dom(i);
        for (uint32_t w = 0; w < nw_; ++w) {
            uint64_t bits = di[w];
            while (bits) {
                uint32_t b = (uint32_t)std::countr_zero(bits);
                bits &= bits - 1;
                --cnt_[(w << 6) + b];
            }
        }

        for (uint32_t w = 0; w < nw_; ++w) {
            uint64_t cand = di[w] & ~used_[w];
            while (cand) {
                uint32_t b = (uint32_t)std::countr_zero(cand);
                cand &= cand - 1;
                uint32_t v = (w << 6) + b;
                try_value(i, v);
            }
        }

        for (uint32_t w = 0; w < nw_; ++w) {
            uint64_t bits = di[w];
            while (bits) {
                uint32_t b = (uint32_t)std::countr_zero(bits);
                bits &= bits - 1;
                ++cnt_[(w << 6) + b];
            }
        }
    }

    void try_value(uint32_t i, uint32_t v) {
        if (opts_.assume_one_first_or_last) {
            if (v == 1 && i != 1 && i != k_) return;
            if (i == k_ && v != 1 && !get_bit(used_.data(), 1)) return;
        }
        for (uint32_t m : divisors_[v])
            if (m > 1 && anchor_setter_[m] == 0 && i > m) return;  // class must open by m

        size_t mark = trail_.size();
        sigma_[i] = v;
        set_bit(used_.data(), v);
        std::vector<uint32_t> anchored;
        for (uint32_t m : divisors_[v]) {
            if (m == 1 || anchor_setter_[m] != 0) continue;
            anchor_setter_[m] = i;
            anchored.push_back(m);
            // Future slots on m's class keep only multiples of m; all others lose them.
            uint32_t next_on_class = i + m;
            for (uint32_t s = i + 1; s <= k_; ++s) {
                if (s == next_on_class) {
                    shrink(s, mult(m), false);
                    next_on_class += m;
                } else {
                    shrink(s, mult(m), true);
                }
            }
        }
        if (all_unused_alive()) place(i + 1);
        undo_to(mark);
        for (uint32_t m : anchored) anchor_setter_[m] = 0;
        used_[v >> 6] &= ~(1ull << (v & 63));
    }

    uint32_t k_;
    EnumerateOptions opts_;
    uint32_t nw_;
    std::vector<std::vector<uint32_t>> divisors_;
    std::vector<uint64_t> mult_mask_;
    std::vector<uint64_t> dom_;
    std::vector<uint32_t> cnt_;
    std::vector<uint64_t> used_;
    std::vector<uint32_t> sigma_;
    std::vector<uint32_t> anchor_setter_;
    std::vector<std::tuple<uint32_t, uint32_t, uint64_t>> trail_;
    std::vector<Permutation> results_;
};

}  // namespace

std::vector<Permutation> enumerate_wcs(uint32_t k, const EnumerateOptions& opts) {
    if (k < 1 || k > opts.ceiling)
        throw std::out_of_range("enumerate_wcs: k out of [1, " + std::to_string(opts.ceiling) + "]");
    Backtracker bt(k, opts);
    return bt.run();
}

uint64_t count_wcs(uint32_t k, const EnumerateOptions& opts) {
    return enumerate_wcs(k, opts).size();
}

std::vector<std::pair<uint32_t, uint64_t>> count_range(uint32_t k_lo, uint32_t k_hi,
                                                       const EnumerateOptions& opts) {
    if (k_lo < 1 || k_lo > k_hi || k_hi > opts.ceiling)
        throw std::out_of_range("count_range: invalid range");
    std::vector<std::pair<uint32_t, uint64_t>> out;
    out.reserve(k_hi - k_lo + 1);
    for (uint32_t k = k_lo; k <= k_hi; ++k) out.emplace_back(k, count_wcs(k, opts));
    return out;
}

}  // namespace wcs
