#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wcs/permutation.hpp"

namespace wcs {

struct EnumerateOptions {
    // Hard cap on k; mirrors the range the counts have been verified over.
    uint32_t ceiling = 500;
    // Prune positions violating the per-value position bound. Sound (it is a proven
    // property of every weakly consecutive sequence), kept toggleable so tests can
    // cross-check enumerations with it disabled.
    bool use_position_bound_prune = true;
    // Unsound fast mode: assumes every WCS begins or ends with 1 (an open conjecture).
    // Results are complete only if that conjecture is true. Never used for ground truth.
    bool assume_one_first_or_last = false;
};

// All weakly consecutive sequences of length k, lexicographically sorted.
std::vector<Permutation> enumerate_wcs(uint32_t k, const EnumerateOptions& opts = {});

uint64_t count_wcs(uint32_t k, const EnumerateOptions& opts = {});

std::vector<std::pair<uint32_t, uint64_t>> count_range(uint32_t k_lo, uint32_t k_hi,
                                                       const EnumerateOptions& opts = {});

}  // namespace wcs
