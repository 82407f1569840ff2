#include "wcs/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <mpfr.h>
#include <boost/multiprecision/cpp_int.hpp>

#include "wcs/primes.hpp"

namespace wcs {

using boost::multiprecision::cpp_int;

namespace {

bool is_prime_fast(uint64_t p) {
    const PrimeSieve& sieve = default_sieve();
    return p <= sieve.limit() ? sieve.is_prime(p) : is_prime(p);
}

}  // namespace

std::vector<IntervalHit> interval_hits(uint64_t k) {
    std::vector<IntervalHit> hits;
    if (k < 2) return hits;
    for (uint32_t c = 1; (k >> c) > 0; ++c) {
        uint64_t p = integer_root(k, c);
        if (p < 2 || !is_prime_fast(p)) continue;
        // p^c <= k by construction; membership needs k < p^c + p^(c-1).
        __uint128_t pc1 = 1;
        for (uint32_t i = 0; i + 1 < c; ++i) pc1 *= p;
        __uint128_t end = pc1 * p + pc1;
        if ((__uint128_t)k < end) hits.push_back({p, c});
    }
    return hits;
}

uint32_t count_intervals(uint64_t k) { return static_cast<uint32_t>(interval_hits(k).size()); }

uint32_t count_proper_intervals(uint64_t k) {
    uint32_t n = 0;
    for (const auto& h : interval_hits(k))
        if (h.c >= 2) ++n;
    return n;
}

SwapSearchRecord least_k_with_swaps(uint32_t n, uint64_t bound) {
    if (n < 1) throw std::invalid_argument("least_k_with_swaps: n must be >= 1");
    if (bound < 1) throw std::invalid_argument("least_k_with_swaps: bound must be >= 1");
    SwapSearchRecord rec;
    rec.n = n;

    // Endpoint events of every I_{p,c} with c >= 2 and p^c <= bound, clamped to bound.
    // +1 at p^c, -1 at min(p^c + p^(c-1), bound + 1).
    std::vector<std::pair<uint64_t, int>> events;
    uint64_t sqrt_bound = integer_root(bound, 2);
    const PrimeSieve& sieve = default_sieve();
    if (sqrt_bound > sieve.limit())
        throw std::out_of_range("least_k_with_swaps: bound beyond sieve reach");
    for (uint64_t p : sieve.primes()) {
        if (p > sqrt_bound) break;
        __uint128_t pc1 = p;  // p^(c-1) for c starting at 2
        while (pc1 * p <= bound) {
            __uint128_t start = pc1 * p;
            __uint128_t end = start + pc1;
            events.emplace_back((uint64_t)start, +1);
            events.emplace_back(end > bound ? bound + 1 : (uint64_t)end, -1);
            pc1 *= p;
        }
    }
    std::sort(events.begin(), events.end());

    int depth = 0;
    for (size_t i = 0; i < events.size();) {
        uint64_t pos = events[i].first;
        while (i < events.size() && events[i].first == pos) depth += events[i++].second;
        if (pos <= bound && depth >= (int)n) {
            rec.found = true;
            rec.least_k = pos;
            rec.exhaustive = true;
            for (const auto& h : interval_hits(pos))
                if (h.c >= 2) rec.hits.push_back(h);
            return rec;
        }
    }
    rec.exhaustive = true;  // the sweep covered [1, bound] and found nothing
    return rec;
}

namespace {

// [lo, hi] enclosure of a real value, maintained with outward rounding.
class MpfrInterval {
  public:
    MpfrInterval(mpfr_prec_t prec) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
    }
    ~MpfrInterval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }
    MpfrInterval(const MpfrInterval&) = delete;
    MpfrInterval& operator=(const MpfrInterval&) = delete;

    void set_log_ui(uint64_t x) {
        mpfr_set_ui(lo_, x, MPFR_RNDD);
        mpfr_log(lo_, lo_, MPFR_RNDD);
        mpfr_set_ui(hi_, x, MPFR_RNDU);
        mpfr_log(hi_, hi_, MPFR_RNDU);
    }
    // log(1 + 1/x) = log(x+1) - log(x)
    void set_log1p_inv_ui(uint64_t x) {
        MpfrInterval a(mpfr_get_prec(lo_)), b(mpfr_get_prec(lo_));
        a.set_log_ui(x + 1);
        b.set_log_ui(x);
        mpfr_sub(lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(hi_, a.hi_, b.lo_, MPFR_RNDU);
    }
    void mul_ui(uint64_t m) {
        mpfr_mul_ui(lo_, lo_, m, MPFR_RNDD);
        mpfr_mul_ui(hi_, hi_, m, MPFR_RNDU);
    }
    void add(const MpfrInterval& o) {
        mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
    }
    // -1 if *this < o certainly, +1 if *this > o certainly, 0 if enclosures overlap.
    int compare(const MpfrInterval& o) const {
        if (mpfr_less_p(hi_, o.lo_)) return -1;
        if (mpfr_greater_p(lo_, o.hi_)) return +1;
        return 0;
    }

  private:
    mpfr_t lo_, hi_;
};

// log of p^e * f as an interval: e*log(p) + log(f) (f = 1 encodes no extra factor).
void log_of_power_times(MpfrInterval& out, uint64_t p, uint64_t e, uint64_t f, mpfr_prec_t prec) {
    out.set_log_ui(p);
    out.mul_ui(e);
    if (f > 1) {
        MpfrInterval lf(prec);
        lf.set_log_ui(f);
        out.add(lf);
    }
}

// Exact equality of p^e1 * f1 and q^e2 * f2 (f's small), via factorization.
bool products_equal(uint64_t p, uint64_t e1, uint64_t f1, uint64_t q, uint64_t e2, uint64_t f2) {
    std::map<uint64_t, uint64_t> fa, fb;
    auto add_factors = [](std::map<uint64_t, uint64_t>& m, uint64_t base, uint64_t e) {
        if (e == 0 || base <= 1) return;
        for (uint64_t d = 2; d * d <= base; ++d)
            while (base % d == 0) { m[d] += e; base /= d; }
        if (base > 1) m[base] += e;
    };
    add_factors(fa, p, e1);
    add_factors(fa, f1, 1);
    add_factors(fb, q, e2);
    add_factors(fb, f2, 1);
    return fa == fb;
}

// Certify A < B or A <= B where A = p^e1 * f1, B = q^e2 * f2, by escalating-precision
// log comparison; equality (possible only for boundary coincidences) is decided exactly.
bool certify_less(uint64_t p, uint64_t e1, uint64_t f1, uint64_t q, uint64_t e2, uint64_t f2,
                  bool allow_equal, uint32_t* precision_used) {
    if (products_equal(p, e1, f1, q, e2, f2)) return allow_equal;
    for (mpfr_prec_t prec = 256; prec <= 16384; prec *= 2) {
        MpfrInterval a(prec), b(prec);
        log_of_power_times(a, p, e1, f1, prec);
        log_of_power_times(b, q, e2, f2, prec);
        int cmp = a.compare(b);
        if (cmp != 0) {
            if (precision_used) *precision_used = std::max<uint32_t>(*precision_used, (uint32_t)prec);
            return cmp < 0;
        }
    }
    throw std::runtime_error("certify_less: comparison still ambiguous at 16384 bits");
}

cpp_int cpp_pow(uint64_t base, uint64_t exp) {
    cpp_int r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

}  // namespace

DirichletWitness dirichlet_witness(uint32_t n) {
    if (n < 1) throw std::invalid_argument("dirichlet_witness: n must be >= 1");
    DirichletWitness w;
    w.n = n;

    std::vector<uint64_t> primes;
    for (uint64_t v = 2; primes.size() < 2 * (size_t)n; ++v)
        if (is_prime(v)) primes.push_back(v);
    w.primes = primes;
    const uint64_t p = primes.back();

    const long double log_p = std::log((long double)p);
    const long double eps = std::log1p(1.0L / p) / log_p;
    w.epsilon = (double)eps;
    const long double bound_ld = std::ceil(std::pow(1.0L / eps, (long double)(2 * n - 1)));
    if (n > 3) {
        throw std::invalid_argument(
            "dirichlet_witness: n > 3 rejected; the C scan bound is about " +
            std::to_string((double)bound_ld) + " for n = " + std::to_string(n));
    }
    const uint64_t c_bound = (uint64_t)bound_ld;
    w.c_bound = c_bound;

    std::vector<long double> x(2 * n - 1);
    for (uint32_t i = 0; i + 1 < 2 * n; ++i)
        x[i] = log_p / std::log((long double)primes[i]);

    // First C where at least n of the x_i sit within eps of an integer, same side.
    // The scan uses long doubles with a small buffer; each candidate is then certified
    // rigorously, so a float wobble can only cost us a retry.
    const long double buffered_eps = eps + 1e-12L;
    for (uint64_t C = 1; C <= c_bound && !w.found; ++C) {
        std::vector<uint64_t> below, above;
        std::vector<int64_t> below_z, above_z;
        for (uint32_t i = 0; i + 1 < 2 * n; ++i) {
            long double cx = C * x[i];
            long double z = std::round(cx);
            long double diff = cx - z;
            if (diff >= 0 && diff <= buffered_eps) {
                below.push_back(primes[i]);
                below_z.push_back((int64_t)z);
            } else if (diff < 0 && -diff <= buffered_eps) {
                above.push_back(primes[i]);
                above_z.push_back((int64_t)z);
            }
        }
        for (int side = 0; side < 2 && !w.found; ++side) {
            const auto& ps = side == 0 ? below : above;
            const auto& zs = side == 0 ? below_z : above_z;
            if (ps.size() < n) continue;
            bool upper = side == 1;
            // k = p^C (lower) or p^C + p^(C-1) = p^(C-1) * (p+1) (upper).
            uint64_t k_base_exp = upper ? C - 1 : C;
            uint64_t k_factor = upper ? p + 1 : 1;
            uint32_t prec_used = 0;
            uint32_t ok = 0;
            std::vector<uint64_t> cert_p;
            std::vector<int64_t> cert_z;
            for (size_t i = 0; i < ps.size(); ++i) {
                if (zs[i] < 1) continue;
                uint64_t pi = ps[i], zi = (uint64_t)zs[i];
                // p_i^z_i <= k  and  k < p_i^z_i + p_i^(z_i - 1) = p_i^(z_i-1) * (p_i + 1)
                bool lo_ok = certify_less(pi, zi, 1, p, k_base_exp, k_factor, true, &prec_used);
                bool hi_ok = certify_less(p, k_base_exp, k_factor, pi, zi - 1, pi + 1, false, &prec_used);
                if (lo_ok && hi_ok) {
                    ++ok;
                    cert_p.push_back(pi);
                    cert_z.push_back((int64_t)zi);
                }
            }
            if (ok >= n) {
                w.found = true;
                w.C = C;
                w.upper_side = upper;
                w.chosen_primes = cert_p;
                w.z = cert_z;
                w.verified_count = ok;
                w.precision_bits = prec_used == 0 ? 256 : prec_used;
                long double log2k = (long double)k_base_exp * std::log2((long double)p) +
                                    std::log2((long double)k_factor);
                w.k_log2_floor = (uint64_t)log2k;
                // Decimal expansion and, when small enough, an exact recheck.
                if (log2k < 400000.0L) {
                    cpp_int k = cpp_pow(p, k_base_exp) * k_factor;
                    w.k_decimal = k.str();
                    if (log2k < 512.0L) {
                        bool all_exact = true;
                        for (size_t i = 0; i < cert_p.size(); ++i) {
                            cpp_int lo = cpp_pow(cert_p[i], (uint64_t)cert_z[i]);
                            cpp_int hi = lo + lo / cert_p[i];
                            if (!(lo <= k && k < hi)) all_exact = false;
                        }
                        w.exact = all_exact;
                        if (!all_exact)
                            throw std::runtime_error(
                                "dirichlet_witness: exact recheck contradicts log certification");
                    }
                }
            }
        }
        if (!w.found) w.C = C;  // best scanned so far, reported on failure
    }
    return w;
}

}  // namespace wcs
