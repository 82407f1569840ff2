#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wcs {

// A pair (p, c) with k in I_{p,c} = [p^c, p^c + p^(c-1)).
struct IntervalHit {
    uint64_t p;
    uint32_t c;
    bool operator==(const IntervalHit& o) const { return p == o.p && c == o.c; }
};

// All interval memberships of k, one per exponent c (for each c there is at most one
// eligible prime, namely floor(k^(1/c))). Includes c = 1, which hits exactly when k is
// prime. Ordered by increasing c.
std::vector<IntervalHit> interval_hits(uint64_t k);

// #I(k) = |interval_hits(k)|; always <= lg k.
uint32_t count_intervals(uint64_t k);

// Number of hits with c >= 2, i.e. swaps between two proper prime powers. The
// published least-k table counts these (the p <-> 1 swap at c = 1 is excluded there;
// including it would put the least k for one swap at 2 rather than 4).
uint32_t count_proper_intervals(uint64_t k);

struct SwapSearchRecord {
    uint32_t n = 0;
    bool found = false;
    uint64_t least_k = 0;
    bool exhaustive = false;
    std::vector<IntervalHit> hits;  // proper hits at least_k
};

// Minimal k <= bound with count_proper_intervals(k) >= n, by sweep-line over the
// O(pi(sqrt(bound))) intervals with c >= 2.
SwapSearchRecord least_k_with_swaps(uint32_t n, uint64_t bound);

struct DirichletWitness {
    uint32_t n = 0;
    bool found = false;
    std::vector<uint64_t> primes;  // the first 2n primes
    double epsilon = 0;
    uint64_t c_bound = 0;          // scan bound ceil(1/eps^(2n-1))
    uint64_t C = 0;
    // Lower side: 0 <= C*x_i - z_i <= eps for the chosen indices, k = p^C.
    // Upper side: 0 <= z_i - C*x_i <= eps, k = p^C + p^(C-1).
    bool upper_side = false;
    std::vector<uint64_t> chosen_primes;  // the >= n primes p_i certified
    std::vector<int64_t> z;               // exponents z_i, parallel to chosen_primes
    std::string k_decimal;                // decimal expansion when of manageable size
    uint64_t k_log2_floor = 0;            // floor(lg k)
    uint32_t verified_count = 0;          // memberships certified
    bool exact = false;                    // certified by exact integer arithmetic
    uint32_t precision_bits = 0;           // final precision of the log certification
};

// Constructive witness for the unboundedness of #I: finds C such that at least n of
// the numbers C * log(p)/log(p_i) land within eps of an integer, all on the same side,
// and certifies the implied interval memberships. n <= 3 (the scan bound grows like
// (1/eps)^(2n-1)); larger n is rejected with a size estimate in the exception text.
DirichletWitness dirichlet_witness(uint32_t n);

}  // namespace wcs
