#include "wcs/primes.hpp"

#include <cmath>
#include <stdexcept>

namespace wcs {

PrimeSieve::PrimeSieve(uint64_t limit) : limit_(limit), bits_((limit >> 6) + 1, ~0ull) {
    auto clear = [&](uint64_t n) { bits_[n >> 6] &= ~(1ull << (n & 63)); };
    clear(0);
    if (limit >= 1) clear(1);
    for (uint64_t i = 2; i * i <= limit; ++i) {
        if (!bit(i)) continue;
        for (uint64_t j = i * i; j <= limit; j += i) clear(j);
    }
    // Materialized here so the object is read-only afterwards.
    for (uint64_t n = 2; n <= limit_; ++n)
        if (bit(n)) prime_list_.push_back(n);
}

bool PrimeSieve::is_prime(uint64_t n) const {
    if (n > limit_) throw std::out_of_range("PrimeSieve: query beyond sieve limit");
    return bit(n);
}

std::vector<uint64_t> PrimeSieve::twin_primes_in(uint64_t lo, uint64_t hi) const {
    if (hi + 2 > limit_) throw std::out_of_range("PrimeSieve: twin query beyond sieve limit");
    std::vector<uint64_t> out;
    for (uint64_t q = lo + 1; q <= hi; ++q)
        if (bit(q) && bit(q + 2)) out.push_back(q);
    return out;
}

const std::vector<uint64_t>& PrimeSieve::primes() const { return prime_list_; }

const PrimeSieve& default_sieve() {
    static const PrimeSieve sieve(10'000'000);
    return sieve;
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((__uint128_t)a * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This witness set is deterministic for all n < 3.3e24, which covers uint64.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

// r^c <= n, evaluated without overflow.
bool pow_at_most(uint64_t r, unsigned c, uint64_t n) {
    __uint128_t acc = 1;
    for (unsigned i = 0; i < c; ++i) {
        acc *= r;
        if (acc > n) return false;
    }
    return true;
}

}  // namespace

uint64_t integer_root(uint64_t n, unsigned c) {
    if (n == 0) return 0;
    if (c == 0) throw std::invalid_argument("integer_root: c must be >= 1");
    if (c == 1) return n;
    if (c >= 64) return 1;
    // Floating-point guess, then exact adjustment; immune to rounding at the 2^63 boundary.
    uint64_t r = static_cast<uint64_t>(std::pow(static_cast<double>(n), 1.0 / c));
    while (r > 1 && !pow_at_most(r, c, n)) --r;
    while (pow_at_most(r + 1, c, n)) ++r;
    return r;
}

std::optional<uint64_t> germain_k_params(uint64_t k) {
    if (k % 2 == 0) return std::nullopt;
    uint64_t p = (k + 1) / 2;
    if (is_prime(p) && is_prime(2 * p + 1) && is_prime(p + 2)) return p;
    return std::nullopt;
}

std::optional<uint64_t> twice_twin_prime_params(uint64_t k) {
    uint64_t p = k / 2;  // k = 2p or k = 2p+1
    if (p >= 2 && is_prime(p) && is_prime(p + 2)) return p;
    return std::nullopt;
}

}  // namespace wcs
