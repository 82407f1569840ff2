#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wcs {

// A permutation of [k] = {1, ..., k}. Storage is 0-based, every interface is 1-based.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<uint32_t> values);

    static Permutation identity(uint32_t k);

    // Validates bijectivity; returns an error message instead of a permutation on failure.
    static std::optional<Permutation> parse_checked(const std::vector<uint32_t>& values,
                                                    std::string* error = nullptr);

    uint32_t size() const { return static_cast<uint32_t>(values_.size()); }
    uint32_t at(uint32_t i) const { return values_[i - 1]; }            // sigma(i)
    uint32_t position_of(uint32_t v) const { return inverse_[v - 1]; }  // sigma^-1(v)

    const std::vector<uint32_t>& values() const { return values_; }

    Permutation with_values_swapped(uint32_t a, uint32_t b) const;
    Permutation reversed() const;

    bool operator==(const Permutation& o) const { return values_ == o.values_; }
    bool operator<(const Permutation& o) const { return values_ < o.values_; }

  private:
    std::vector<uint32_t> values_;
    std::vector<uint32_t> inverse_;
};

// Witness for a failed weak-consecutiveness check: m | sigma(i), m | (i - j), m does not divide sigma(j).
struct WcsViolation {
    uint32_t m = 0;
    uint32_t i = 0;
    uint32_t j = 0;
};

// Definition-based verifier. Checks, for every i and every divisor m of sigma(i), the
// adjacent positions i-m and i+m; adjacency in both directions is equivalent to the
// full quantifier over all j (the multiples of m must fill a full arithmetic progression).
bool is_wcs_definition(const Permutation& sigma);
std::optional<WcsViolation> find_wcs_violation(const Permutation& sigma);

// Division-slice verifier: S_m = T_m for every m in [k].
bool is_wcs_slices(const Permutation& sigma);

// S_m = { i : i = sigma^-1(m) mod m } and T_m = { i : m | sigma(i) }, sorted ascending.
std::vector<uint32_t> s_set(const Permutation& sigma, uint32_t m);
std::vector<uint32_t> t_set(const Permutation& sigma, uint32_t m);

// The d-th division slice: multiples of d read in order, each divided by d.
// Defined only for weakly consecutive input; throws std::invalid_argument otherwise.
Permutation division_slice(const Permutation& sigma, uint32_t d);

Permutation reverse(const Permutation& sigma);

// Position bound: sigma^-1(x) in [(k mod x) + 1, k - (k mod x)] for every value x.
bool position_bound_holds(const Permutation& sigma);

// Sorted divisors of v.
std::vector<uint32_t> divisors(uint32_t v);

std::string to_string(const Permutation& sigma);

}  // namespace wcs
