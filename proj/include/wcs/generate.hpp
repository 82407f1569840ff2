#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wcs/enumerate.hpp"
#include "wcs/permutation.hpp"

namespace wcs {

enum class StartKind {
    Consecutive,
    OneInversion,
    TwiceTwinPrime,
    TwiceTwinPrimeShifted,
    TwinSophieGermain,
};

std::string to_string(StartKind kind);

struct StartingSeq {
    StartKind kind;
    std::optional<uint64_t> p;  // prime parameter, absent for Consecutive
    uint32_t k;
};

enum class RuleKind { TwinPrimeSwap, PrimePowerSwap, Reversal };

struct RuleStep {
    RuleKind kind;
    uint64_t q = 0;  // TwinPrimeSwap
    uint64_t p = 0;  // PrimePowerSwap
    uint32_t c = 0;  // PrimePowerSwap
};

struct Derivation {
    StartingSeq start;
    std::vector<RuleStep> steps;
    Permutation result;
};

// Every starting sequence whose side condition holds at k. Consecutive is always
// present; coinciding materializations are kept (closure deduplicates by value).
std::vector<std::pair<StartingSeq, Permutation>> applicable_starts(uint32_t k);

// (2, 3, ..., k, 1); requires k + 1 prime.
Permutation make_one_inversion(uint32_t k);

// Identity with the values 2 <-> 2p and p <-> p+2 exchanged; requires k = 2p or
// k = 2p + 1 with p, p+2 prime.
Permutation make_twice_twin_prime(uint32_t k);

// The same two value swaps applied to the 1-inversion base (2, ..., k, 1) instead of
// the identity; requires k = 2p with p, p+2, 2p+1 all prime. Equivalently, k prepended
// to the Twin Sophie Germain sequence of length k - 1.
Permutation make_twice_twin_prime_shifted(uint32_t k);

// sigma(i) = i+2 except sigma(k) = 1, sigma(k-1) = 2, sigma(p) = p, sigma(p-2) = p+2;
// requires k = 2p - 1 with p, 2p+1, p+2 all prime.
Permutation make_twin_sophie_germain(uint32_t k);

// Exchange the values p^c and p^(c-1); requires sigma weakly consecutive, p prime,
// c >= 1 and p^c <= k < p^c + p^(c-1).
Permutation apply_prime_power_swap(const Permutation& sigma, uint64_t p, uint32_t c);

// Exchange positions q-2 and q (holding q and q+2); requires q, q+2 prime,
// ceil(k/2) < q <= k, sigma(q-2) = q and sigma(q) = q+2.
Permutation apply_twin_prime_swap(const Permutation& sigma, uint64_t q);

// Replay a derivation from its materialized start.
Permutation replay(const Derivation& d);

struct Closure {
    std::vector<Permutation> sequences;    // sorted
    std::vector<Derivation> derivations;   // parallel to sequences; shortest via BFS
};

// Breadth-first closure of the starting sequences under the three rules.
Closure closure(uint32_t k);

struct ConjectureMainReport {
    uint32_t k = 0;
    uint64_t n_enumerated = 0;
    uint64_t n_generated = 0;
    bool equal = false;
    std::vector<Permutation> missing;  // enumerated but not generated
    std::vector<Permutation> extra;    // generated but not enumerated (soundness breach)
};

ConjectureMainReport check_conjecture_main(uint32_t k, const EnumerateOptions& opts = {});

enum class PowerOfTwoClass { PowerOfTwo, GermainSum, Violation };

std::string to_string(PowerOfTwoClass cls);

// N(k) should be a power of two, except at Twin Sophie Germain lengths where it is a
// sum of two distinct powers of two.
PowerOfTwoClass check_power_of_two(uint32_t k, uint64_t n);

// Every WCS of length k begins or ends with 1.
bool check_one_at_end(uint32_t k, const EnumerateOptions& opts = {});

// Every value m < k/2 sits among the first m or last m positions.
bool check_m_near_end(uint32_t k, const EnumerateOptions& opts = {});

// Pairs of applicable swap steps commute on every closure member, and the prime power
// swaps commute with reversal. (A twin prime swap's positional precondition is not
// reversal-invariant, so that pair is only exercised swap-first.)
bool check_commutation(uint32_t k);

}  // namespace wcs
