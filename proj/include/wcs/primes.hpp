#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace wcs {

// Bit-array sieve of Eratosthenes over [0, limit]. Read-only after construction.
class PrimeSieve {
  public:
    explicit PrimeSieve(uint64_t limit);

    uint64_t limit() const { return limit_; }

    bool is_prime(uint64_t n) const;

    // All primes q in (lo, hi] with q and q+2 both prime. Requires hi + 2 <= limit.
    std::vector<uint64_t> twin_primes_in(uint64_t lo, uint64_t hi) const;

    const std::vector<uint64_t>& primes() const;

  private:
    uint64_t limit_;
    std::vector<uint64_t> bits_;
    std::vector<uint64_t> prime_list_;

    bool bit(uint64_t n) const { return (bits_[n >> 6] >> (n & 63)) & 1; }
};

// Shared sieve with the default limit of 1e7. Built on first use, read-only after.
const PrimeSieve& default_sieve();

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(uint64_t n);

// floor(n^(1/c)), exact: the result r satisfies r^c <= n < (r+1)^c.
uint64_t integer_root(uint64_t n, unsigned c);

// p = (k+1)/2 when k is odd and p, 2p+1, p+2 are all prime; nullopt otherwise.
std::optional<uint64_t> germain_k_params(uint64_t k);

// Twice Twin Prime parameter: p with k = 2p or k = 2p+1 and p, p+2 both prime.
std::optional<uint64_t> twice_twin_prime_params(uint64_t k);

}  // namespace wcs
