#include "wcs/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace wcs {

Permutation::Permutation(std::vector<uint32_t> values) : values_(std::move(values)) {
    std::string err;
    inverse_.assign(values_.size(), 0);
    std::vector<bool> seen(values_.size() + 1, false);
    for (uint32_t i = 0; i < values_.size(); ++i) {
        uint32_t v = values_[i];
        if (v < 1 || v > values_.size() || seen[v])
            throw std::invalid_argument("Permutation: values are not a bijection on [k]");
        seen[v] = true;
        inverse_[v - 1] = i + 1;
    }
}

Permutation Permutation::identity(uint32_t k) {
    std::vector<uint32_t> v(k);
    for (uint32_t i = 0; i < k; ++i) v[i] = i + 1;
    return Permutation(std::move(v));
}

std::optional<Permutation> Permutation::parse_checked(const std::vector<uint32_t>& values,
                                                      std::string* error) {
    if (values.empty()) {
        if (error) *error = "empty sequence";
        return std::nullopt;
    }
    std::vector<bool> seen(values.size() + 1, false);
    for (uint32_t v : values) {
        if (v < 1 || v > values.size()) {
            if (error) *error = "value " + std::to_string(v) + " out of range [1, " +
                                std::to_string(values.size()) + "]";
            return std::nullopt;
        }
        if (seen[v]) {
            if (error) *error = "duplicate value " + std::to_string(v);
            return std::nullopt;
        }
        seen[v] = true;
    }
    return Permutation(values);
}

Permutation Permutation::with_values_swapped(uint32_t a, uint32_t b) const {
    std::vector<uint32_t> v = values_;
    std::swap(v[inverse_[a - 1] - 1], v[inverse_[b - 1] - 1]);
    return Permutation(std::move(v));
}

Permutation Permutation::reversed() const {
    std::vector<uint32_t> v(values_.rbegin(), values_.rend());
    return Permutation(std::move(v));
}

std::vector<uint32_t> divisors(uint32_t v) {
    std::vector<uint32_t> small, large;
    for (uint32_t d = 1; (uint64_t)d * d <= v; ++d) {
        if (v % d) continue;
        small.push_back(d);
        if (d != v / d) large.push_back(v / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::optional<WcsViolation> find_wcs_violation(const Permutation& sigma) {
    const uint32_t k = sigma.size();
    for (uint32_t i = 1; i <= k; ++i) {
        uint32_t v = sigma.at(i);
        for (uint32_t m : divisors(v)) {
            if (m == 1) continue;
            if (i + m <= k && sigma.at(i + m) % m != 0) return WcsViolation{m, i, i + m};
            if (i > m && sigma.at(i - m) % m != 0) return WcsViolation{m, i, i - m};
        }
    }
    return std::nullopt;
}

bool is_wcs_definition(const Permutation& sigma) {
    return !find_wcs_violation(sigma).has_value();
}

std::vector<uint32_t> s_set(const Permutation& sigma, uint32_t m) {
    const uint32_t k = sigma.size();
    if (m < 1 || m > k) throw std::out_of_range("s_set: m out of [1, k]");
    uint32_t r = sigma.position_of(m) % m;  // residue class of sigma^-1(m)
    std::vector<uint32_t> out;
    for (uint32_t i = (r == 0 ? m : r); i <= k; i += m) out.push_back(i);
    return out;
}

std::vector<uint32_t> t_set(const Permutation& sigma, uint32_t m) {
    const uint32_t k = sigma.size();
    if (m < 1 || m > k) throw std::out_of_range("t_set: m out of [1, k]");
    std::vector<uint32_t> out;
    for (uint32_t i = 1; i <= k; ++i)
        if (sigma.at(i) % m == 0) out.push_back(i);
    return out;
}

bool is_wcs_slices(const Permutation& sigma) {
    const uint32_t k = sigma.size();
    for (uint32_t m = 1; m <= k; ++m)
        if (s_set(sigma, m) != t_set(sigma, m)) return false;
    return true;
}

Permutation division_slice(const Permutation& sigma, uint32_t d) {
    const uint32_t k = sigma.size();
    if (d < 1 || d > k) throw std::out_of_range("division_slice: d out of [1, k]");
    if (!is_wcs_definition(sigma))
        throw std::invalid_argument("division_slice: input is not weakly consecutive");
    uint32_t ell = 0;
    for (uint32_t i = 1; i <= k; ++i)
        if (sigma.at(i) % d == 0) { ell = i; break; }
    std::vector<uint32_t> out;
    out.reserve(k / d);
    for (uint32_t i = ell; i <= k; i += d) out.push_back(sigma.at(i) / d);
    return Permutation(std::move(out));
}

Permutation reverse(const Permutation& sigma) { return sigma.reversed(); }

bool position_bound_holds(const Permutation& sigma) {
    const uint32_t k = sigma.size();
    for (uint32_t x = 1; x <= k; ++x) {
        uint32_t r = k % x;
        uint32_t pos = sigma.position_of(x);
        if (pos < r + 1 || pos > k - r) return false;
    }
    return true;
}

std::string to_string(const Permutation& sigma) {
    std::string s;
    for (uint32_t i = 1; i <= sigma.size(); ++i) {
        if (i > 1) s += ',';
        s += std::to_string(sigma.at(i));
    }
    return s;
}

}  // namespace wcs
