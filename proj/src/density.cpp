#include "wcs/density.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "wcs/intervals.hpp"
#include "wcs/primes.hpp"

namespace wcs {

namespace {

constexpr double kMertens = 0.2614972128476428;
constexpr double kSumInversePLogP = 1.636616323;  // sum over all primes of 1/(p log p)

// Uniform in [0, 1) from the top 53 bits; identical across platforms for a given seed.
double uniform01(std::mt19937_64& rng) {
    return (rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SampleRResult sample_R(double a, double b, uint64_t samples, uint64_t seed) {
    if (!(a < b)) throw std::invalid_argument("sample_R: need a < b");
    if (samples < 1) throw std::invalid_argument("sample_R: need samples >= 1");
    if (std::exp(b) >= 9.2e18) throw std::invalid_argument("sample_R: exp(b) exceeds 64-bit range");
    std::mt19937_64 rng(seed);
    uint64_t total_r = 0, total_rp = 0;
    for (uint64_t s = 0; s < samples; ++s) {
        double x = a + (b - a) * uniform01(rng);
        uint64_t k = (uint64_t)std::floor(std::exp(x));
        for (const auto& h : interval_hits(k)) {
            ++total_r;
            if (h.p >= 3) ++total_rp;
        }
    }
    SampleRResult r;
    r.mean_r = (double)total_r / (double)samples;
    r.mean_r_prime = (double)total_rp / (double)samples;
    r.samples = samples;
    r.seed = seed;
    return r;
}

double rp_upper_bound(uint64_t p, double a, double b) {
    if (p < 2) throw std::invalid_argument("rp_upper_bound: p must be >= 2");
    if (!(a < b)) throw std::invalid_argument("rp_upper_bound: need a < b");
    double l = std::log1p(1.0 / (double)p);
    return l / std::log((double)p) + 2.0 * l / (b - a);
}

RPrimeBound expected_rprime_bound(double N) {
    if (!(N >= 4)) throw std::invalid_argument("expected_rprime_bound: need N >= 4");
    if (N <= 9e15) {
        double r = std::round(std::sqrt(N));
        if (r * r != N) throw std::invalid_argument("expected_rprime_bound: N must be a perfect square");
    }
    RPrimeBound out;
    out.n = N;
    const double logN = std::log(N);
    const PrimeSieve& sieve = default_sieve();
    if (N <= (double)sieve.limit()) {
        double s1 = 0, s2 = 0;
        for (uint64_t p : sieve.primes()) {
            if (p < 3) continue;
            if ((double)p > N) break;
            s1 += 1.0 / ((double)p * std::log((double)p));
            s2 += 1.0 / (double)p;
        }
        out.first_sum = s1;
        out.second_sum = 4.0 / logN * s2;
    } else {
        out.beyond_sieve = true;
        out.first_sum = kSumInversePLogP - 1.0 / (2.0 * std::log(2.0));
        // Mertens-type upper bound for sum 1/p over p <= N, minus the p = 2 term.
        double sum_inv_p = std::log(logN) + kMertens + 1.0 / (logN * logN) - 0.5;
        out.second_sum = 4.0 / logN * sum_inv_p;
    }
    out.value = out.first_sum + out.second_sum;
    return out;
}

DensityReport delta_product(uint64_t prime_limit) {
    if (prime_limit < 3) throw std::invalid_argument("delta_product: prime_limit must be >= 3");
    const PrimeSieve& sieve = default_sieve();
    if (prime_limit > sieve.limit())
        throw std::out_of_range("delta_product: prime_limit beyond sieve");
    DensityReport rep;
    rep.prime_limit = prime_limit;
    double prod = 1.0;
    for (uint64_t p : sieve.primes()) {
        if (p > prime_limit) break;
        prod *= 1.0 - std::log1p(1.0 / (double)p) / std::log((double)p);
    }
    rep.partial_product = prod;
    // Tail: sum_{p > limit} log(1+1/p)/log p ~ sum 1/(p log p) ~ 1/log(limit).
    rep.tail_correction = std::exp(-1.0 / std::log((double)prime_limit));
    rep.delta_estimate = prod * rep.tail_correction;
    return rep;
}

ZeroIntervalDensity empirical_zero_interval_density(uint64_t k_max) {
    if (k_max < 100) throw std::invalid_argument("empirical_zero_interval_density: k_max too small");
    ZeroIntervalDensity out;
    out.k_max = k_max;
    for (uint64_t k = 2; k <= k_max; ++k) {
        if (count_intervals(k) != 0) continue;
        if (is_prime(k + 1)) continue;                       // 1-inversion start
        if (twice_twin_prime_params(k)) continue;            // twice twin prime start
        if (k % 2 == 1 && germain_k_params(k)) continue;     // twin sophie germain start
        ++out.count;
    }
    out.fraction = (double)out.count / (double)(k_max - 1);
    return out;
}

MeasureLemmaResult measure_lemma_check(double x, double y, double a, double b, uint64_t samples,
                                       uint64_t seed) {
    if (!(x > y) || y < 0) throw std::invalid_argument("measure_lemma_check: need x > y >= 0");
    if (!(a < b)) throw std::invalid_argument("measure_lemma_check: need a < b");
    if (samples < 1) throw std::invalid_argument("measure_lemma_check: need samples >= 1");
    std::mt19937_64 rng(seed);
    uint64_t in = 0;
    for (uint64_t s = 0; s < samples; ++s) {
        double v = a + (b - a) * uniform01(rng);
        double frac = v - x * std::floor(v / x);
        if (frac < y) ++in;
    }
    MeasureLemmaResult r;
    r.estimate = (double)in / (double)samples;
    r.bound = y / x + 2.0 * y / (b - a);
    r.standard_error = std::sqrt(r.estimate * (1.0 - r.estimate) / (double)samples);
    r.pass = r.estimate <= r.bound + 3.0 * r.standard_error;
    return r;
}

}  // namespace wcs
