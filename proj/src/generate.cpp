#include "wcs/generate.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <iterator>
#include <map>
#include <stdexcept>

#include "wcs/intervals.hpp"
#include "wcs/primes.hpp"

namespace wcs {

std::string to_string(StartKind kind) {
    switch (kind) {
        case StartKind::Consecutive: return "consecutive";
        case StartKind::OneInversion: return "one_inversion";
        case StartKind::TwiceTwinPrime: return "twice_twin_prime";
        case StartKind::TwiceTwinPrimeShifted: return "twice_twin_prime_shifted";
        case StartKind::TwinSophieGermain: return "twin_sophie_germain";
    }
    return "?";
}

Permutation make_one_inversion(uint32_t k) {
    if (!is_prime(k + 1)) throw std::invalid_argument("make_one_inversion: k + 1 must be prime");
    std::vector<uint32_t> v(k);
    for (uint32_t i = 0; i + 1 < k; ++i) v[i] = i + 2;
    v[k - 1] = 1;
    return Permutation(std::move(v));
}

Permutation make_twice_twin_prime(uint32_t k) {
    auto p = twice_twin_prime_params(k);
    if (!p) throw std::invalid_argument("make_twice_twin_prime: need k = 2p or 2p+1 with p, p+2 prime");
    return Permutation::identity(k)
        .with_values_swapped(2, (uint32_t)(2 * *p))
        .with_values_swapped((uint32_t)*p, (uint32_t)(*p + 2));
}

Permutation make_twice_twin_prime_shifted(uint32_t k) {
    auto p = twice_twin_prime_params(k);
    if (!p || k != 2 * *p || !is_prime(k + 1))
        throw std::invalid_argument(
            "make_twice_twin_prime_shifted: need k = 2p with p, p+2, 2p+1 all prime");
    return make_one_inversion(k)
        .with_values_swapped(2, (uint32_t)(2 * *p))
        .with_values_swapped((uint32_t)*p, (uint32_t)(*p + 2));
}

Permutation make_twin_sophie_germain(uint32_t k) {
    auto p = germain_k_params(k);
    if (!p) throw std::invalid_argument(
        "make_twin_sophie_germain: need k = 2p-1 with p, 2p+1, p+2 all prime");
    std::vector<uint32_t> v(k);
    for (uint32_t i = 1; i <= k; ++i) v[i - 1] = i + 2;
    v[k - 1] = 1;
    v[k - 2] = 2;
    v[*p - 1] = (uint32_t)*p;
    v[*p - 3] = (uint32_t)(*p + 2);
    return Permutation(std::move(v));
}

std::vector<std::pair<StartingSeq, Permutation>> applicable_starts(uint32_t k) {
    std::vector<std::pair<StartingSeq, Permutation>> out;
    out.push_back({{StartKind::Consecutive, std::nullopt, k}, Permutation::identity(k)});
    if (is_prime(k + 1))
        out.push_back({{StartKind::OneInversion, k + 1, k}, make_one_inversion(k)});
    if (auto p = twice_twin_prime_params(k)) {
        out.push_back({{StartKind::TwiceTwinPrime, *p, k}, make_twice_twin_prime(k)});
        if (k == 2 * *p && is_prime(k + 1))
            out.push_back(
                {{StartKind::TwiceTwinPrimeShifted, *p, k}, make_twice_twin_prime_shifted(k)});
    }
    if (auto p = germain_k_params(k))
        out.push_back({{StartKind::TwinSophieGermain, *p, k}, make_twin_sophie_germain(k)});
    return out;
}

Permutation apply_prime_power_swap(const Permutation& sigma, uint64_t p, uint32_t c) {
    const uint32_t k = sigma.size();
    if (c < 1 || !is_prime(p))
        throw std::invalid_argument("apply_prime_power_swap: need prime p and c >= 1");
    __uint128_t pc1 = 1;
    for (uint32_t i = 0; i + 1 < c; ++i) pc1 *= p;
    __uint128_t pc = pc1 * p;
    if (!(pc <= k && (__uint128_t)k < pc + pc1))
        throw std::invalid_argument("apply_prime_power_swap: p^c <= k < p^c + p^(c-1) fails");
    if (!is_wcs_definition(sigma))
        throw std::invalid_argument("apply_prime_power_swap: input is not weakly consecutive");
    return sigma.with_values_swapped((uint32_t)pc, (uint32_t)pc1);
}

Permutation apply_twin_prime_swap(const Permutation& sigma, uint64_t q) {
    const uint32_t k = sigma.size();
    if (!is_prime(q) || !is_prime(q + 2))
        throw std::invalid_argument("apply_twin_prime_swap: q and q+2 must be prime");
    if (q <= (k + 1) / 2 || q > k)
        throw std::invalid_argument("apply_twin_prime_swap: need ceil(k/2) < q <= k");
    if (q + 2 > k || sigma.at((uint32_t)q - 2) != q || sigma.at((uint32_t)q) != q + 2)
        throw std::invalid_argument("apply_twin_prime_swap: q, q+2 not in their home positions");
    std::vector<uint32_t> v = sigma.values();
    v[(uint32_t)q - 3] = (uint32_t)q + 2;
    v[(uint32_t)q - 1] = (uint32_t)q;
    return Permutation(std::move(v));
}

Permutation replay(const Derivation& d) {
    Permutation cur = [&] {
        switch (d.start.kind) {
            case StartKind::Consecutive: return Permutation::identity(d.start.k);
            case StartKind::OneInversion: return make_one_inversion(d.start.k);
            case StartKind::TwiceTwinPrime: return make_twice_twin_prime(d.start.k);
            case StartKind::TwiceTwinPrimeShifted: return make_twice_twin_prime_shifted(d.start.k);
            case StartKind::TwinSophieGermain: return make_twin_sophie_germain(d.start.k);
        }
        throw std::logic_error("replay: bad start kind");
    }();
    for (const RuleStep& s : d.steps) {
        switch (s.kind) {
            case RuleKind::Reversal: cur = cur.reversed(); break;
            case RuleKind::PrimePowerSwap: cur = apply_prime_power_swap(cur, s.p, s.c); break;
            case RuleKind::TwinPrimeSwap: cur = apply_twin_prime_swap(cur, s.q); break;
        }
    }
    return cur;
}

Closure closure(uint32_t k) {
    struct Node {
        Permutation perm;
        int parent;      // -1 for a start
        int start_index; // into starts when parent == -1
        RuleStep step;   // valid when parent >= 0
    };
    auto starts = applicable_starts(k);
    std::vector<Node> nodes;
    std::map<std::vector<uint32_t>, int> index;
    std::deque<int> queue;

    auto visit = [&](Permutation perm, int parent, int start_index, RuleStep step) {
        auto it = index.find(perm.values());
        if (it != index.end()) return;
        if (!is_wcs_definition(perm))
            throw std::logic_error("closure: produced a non-WCS sequence");  // soundness guard
        int id = (int)nodes.size();
        index.emplace(perm.values(), id);
        nodes.push_back(Node{std::move(perm), parent, start_index, step});
        queue.push_back(id);
    };

    for (size_t s = 0; s < starts.size(); ++s)
        visit(starts[s].second, -1, (int)s, RuleStep{});

    const auto hits = interval_hits(k);
    std::vector<uint64_t> twins;  // q > ceil(k/2) with q, q+2 prime and q+2 <= k
    for (uint64_t q = (uint64_t)(k + 1) / 2 + 1; q + 2 <= k; ++q)
        if (is_prime(q) && is_prime(q + 2)) twins.push_back(q);

    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        Permutation cur = nodes[id].perm;  // copy: nodes may reallocate
        visit(cur.reversed(), id, -1, RuleStep{RuleKind::Reversal});
        for (const auto& h : hits) {
            uint64_t pc1 = 1;
            for (uint32_t i = 0; i + 1 < h.c; ++i) pc1 *= h.p;
            visit(cur.with_values_swapped((uint32_t)(pc1 * h.p), (uint32_t)pc1), id, -1,
                  RuleStep{RuleKind::PrimePowerSwap, 0, h.p, h.c});
        }
        for (uint64_t q : twins) {
            if (cur.at((uint32_t)q - 2) == q && cur.at((uint32_t)q) == q + 2)
                visit(apply_twin_prime_swap(cur, q), id, -1, RuleStep{RuleKind::TwinPrimeSwap, q});
        }
    }

    // Assemble sorted sequences with their (BFS-shortest) derivations.
    std::vector<int> order(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return nodes[a].perm < nodes[b].perm; });

    Closure out;
    for (int id : order) {
        std::vector<RuleStep> steps;
        int cur = id;
        while (nodes[cur].parent >= 0) {
            steps.push_back(nodes[cur].step);
            cur = nodes[cur].parent;
        }
        std::reverse(steps.begin(), steps.end());
        Derivation d{starts[nodes[cur].start_index].first, std::move(steps), nodes[id].perm};
        out.sequences.push_back(nodes[id].perm);
        out.derivations.push_back(std::move(d));
    }
    return out;
}

ConjectureMainReport check_conjecture_main(uint32_t k, const EnumerateOptions& opts) {
    ConjectureMainReport rep;
    rep.k = k;
    auto enumerated = enumerate_wcs(k, opts);
    auto generated = closure(k).sequences;
    rep.n_enumerated = enumerated.size();
    rep.n_generated = generated.size();
    std::set_difference(enumerated.begin(), enumerated.end(), generated.begin(), generated.end(),
                        std::back_inserter(rep.missing));
    std::set_difference(generated.begin(), generated.end(), enumerated.begin(), enumerated.end(),
                        std::back_inserter(rep.extra));
    rep.equal = rep.missing.empty() && rep.extra.empty();
    return rep;
}

std::string to_string(PowerOfTwoClass cls) {
    switch (cls) {
        case PowerOfTwoClass::PowerOfTwo: return "power-of-two";
        case PowerOfTwoClass::GermainSum: return "sum-of-two-powers-with-germain-k";
        case PowerOfTwoClass::Violation: return "violation";
    }
    return "?";
}

PowerOfTwoClass check_power_of_two(uint32_t k, uint64_t n) {
    if (std::popcount(n) == 1) return PowerOfTwoClass::PowerOfTwo;
    if (std::popcount(n) == 2 && germain_k_params(k)) return PowerOfTwoClass::GermainSum;
    return PowerOfTwoClass::Violation;
}

bool check_one_at_end(uint32_t k, const EnumerateOptions& opts) {
    for (const auto& s : enumerate_wcs(k, opts))
        if (s.at(1) != 1 && s.at(k) != 1) return false;
    return true;
}

bool check_m_near_end(uint32_t k, const EnumerateOptions& opts) {
    for (const auto& s : enumerate_wcs(k, opts)) {
        for (uint32_t m = 1; 2 * m < k; ++m) {
            uint32_t pos = s.position_of(m);
            if (pos > m && pos < k - m + 1) return false;
        }
    }
    return true;
}

namespace {

struct SwapStep {
    bool twin;   // twin prime swap vs prime power swap
    uint64_t q;  // twin
    uint64_t p;  // prime power
    uint32_t c;
};

std::optional<Permutation> apply_step(const Permutation& s, const SwapStep& st) {
    if (!st.twin) return apply_prime_power_swap(s, st.p, st.c);
    uint32_t k = s.size();
    if (st.q + 2 <= k && s.at((uint32_t)st.q - 2) == st.q && s.at((uint32_t)st.q) == st.q + 2)
        return apply_twin_prime_swap(s, st.q);
    return std::nullopt;
}

}  // namespace

bool check_commutation(uint32_t k) {
    auto cl = closure(k);
    auto hits = interval_hits(k);
    for (const auto& s : cl.sequences) {
        std::vector<SwapStep> steps;
        for (const auto& h : hits) steps.push_back({false, 0, h.p, h.c});
        for (uint64_t q = (uint64_t)(k + 1) / 2 + 1; q + 2 <= k; ++q)
            if (is_prime(q) && is_prime(q + 2) && s.at((uint32_t)q - 2) == q &&
                s.at((uint32_t)q) == q + 2)
                steps.push_back({true, q, 0, 0});
        for (size_t a = 0; a < steps.size(); ++a) {
            auto xa = apply_step(s, steps[a]);
            if (!xa) continue;
            for (size_t b = 0; b < steps.size(); ++b) {
                if (a == b) continue;
                auto xab = apply_step(*xa, steps[b]);
                if (!xab) continue;
                auto xb = apply_step(s, steps[b]);
                auto xba = xb ? apply_step(*xb, steps[a]) : std::nullopt;
                if (!xba || !(*xab == *xba)) return false;
            }
            if (!steps[a].twin) {
                auto xr = apply_step(s.reversed(), steps[a]);
                if (!xr || !(xa->reversed() == *xr)) return false;
            }
        }
    }
    return true;
}

}  // namespace wcs
