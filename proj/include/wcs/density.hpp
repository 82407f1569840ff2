#pragma once

#include <cstdint>

namespace wcs {

struct SampleRResult {
    double mean_r = 0;        // E[R] estimate: all interval memberships of K = floor(exp(X))
    double mean_r_prime = 0;  // E[R'] estimate: memberships with p >= 3
    uint64_t samples = 0;
    uint64_t seed = 0;
};

// Monte Carlo estimate of E[R] and E[R'] under X ~ U(a, b), K = floor(exp(X)).
// Deterministic for a fixed seed (mt19937_64 with a fixed 53-bit uniform mapping).
SampleRResult sample_R(double a, double b, uint64_t samples, uint64_t seed);

// log(1 + 1/p)/log(p) + 2 log(1 + 1/p)/(b - a).
double rp_upper_bound(uint64_t p, double a, double b);

struct RPrimeBound {
    double n = 0;
    double first_sum = 0;   // sum over odd primes <= N of 1/(p log p), or its constant cap
    double second_sum = 0;  // (4 / log N) * sum over odd primes <= N of 1/p
    double value = 0;       // first_sum + second_sum
    bool beyond_sieve = false;
};

// The analytic upper bound on E[R'] with a = log(N)/2, b = log(N). For N within the
// sieve the partial sums are exact; beyond it the first sum is capped by the full
// series constant 1.636616323... - 1/(2 log 2) and the second uses the Mertens
// upper bound log log N + M - 1/2 + 1/log^2 N.
RPrimeBound expected_rprime_bound(double N);

struct DensityReport {
    uint64_t prime_limit = 0;
    double partial_product = 0;  // product over primes <= limit of (1 - log(1+1/p)/log p)
    double tail_correction = 0;  // exp(-1/log(limit))
    double delta_estimate = 0;   // partial_product * tail_correction
};

DensityReport delta_product(uint64_t prime_limit);

struct ZeroIntervalDensity {
    uint64_t k_max = 0;
    uint64_t count = 0;   // k in [2, k_max] with #I(k) = 0 and no starting-sequence condition
    double fraction = 0;  // count / (k_max - 1)
};

// Fraction of lengths where the generative model predicts the minimal N(k) = 2.
ZeroIntervalDensity empirical_zero_interval_density(uint64_t k_max);

struct MeasureLemmaResult {
    double estimate = 0;      // Monte Carlo Pr[X in union of [cx, cx+y)]
    double bound = 0;         // y/x + 2y/(b-a)
    double standard_error = 0;
    bool pass = false;        // estimate <= bound + 3 standard errors
};

MeasureLemmaResult measure_lemma_check(double x, double y, double a, double b, uint64_t samples,
                                       uint64_t seed);

}  // namespace wcs
