#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "wcs/enumerate.hpp"
#include "wcs/permutation.hpp"

using namespace wcs;

namespace {

Permutation perm(std::initializer_list<uint32_t> v) { return Permutation(std::vector<uint32_t>(v)); }

// N(k) for 1 <= k <= 100.
const uint64_t kTable2[100] = {
    1,  2,  2,  4,  4,  4,  4,  4,  8,  16,  //
    16, 4,  4,  2,  2,  8,  8,  8,  8,  4,   //
    12, 16, 16, 2,  4,  4,  8,  16, 16, 8,   //
    8,  8,  8,  16, 16, 8,  8,  4,  4,  8,   //
    8,  8,  8,  4,  4,  8,  8,  2,  4,  4,   //
    4,  8,  8,  4,  4,  2,  6,  8,  8,  4,   //
    4,  2,  2,  4,  4,  8,  8,  4,  4,  8,   //
    8,  8,  8,  4,  4,  4,  4,  8,  8,  4,   //
    40, 32, 32, 8,  8,  8,  8,  16, 16, 8,   //
    8,  8,  8,  8,  8,  8,  8,  4,  4,  8};

bool is_wcs_triple_loop(const Permutation& sigma) {
    uint32_t k = sigma.size();
    for (uint32_t m = 1; m <= k; ++m)
        for (uint32_t i = 1; i <= k; ++i) {
            if (sigma.at(i) % m != 0) continue;
            for (uint32_t j = 1; j <= k; ++j)
                if ((i >= j ? i - j : j - i) % m == 0 && sigma.at(j) % m != 0) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("enumerate_wcs matches filtering all k! permutations for k <= 8") {
    for (uint32_t k = 1; k <= 8; ++k) {
        std::vector<uint32_t> v(k);
        for (uint32_t i = 0; i < k; ++i) v[i] = i + 1;
        std::vector<Permutation> expected;
        do {
            Permutation p(v);
            if (is_wcs_triple_loop(p)) expected.push_back(p);
        } while (std::next_permutation(v.begin(), v.end()));
        CHECK(enumerate_wcs(k) == expected);
    }
}

TEST_CASE("enumerate_wcs small examples") {
    CHECK(enumerate_wcs(1) == std::vector<Permutation>{perm({1})});
    std::vector<Permutation> k4 = {perm({1, 2, 3, 4}), perm({1, 4, 3, 2}), perm({2, 3, 4, 1}),
                                   perm({4, 3, 2, 1})};
    CHECK(enumerate_wcs(4) == k4);
    std::vector<Permutation> k8 = {perm({1, 2, 3, 4, 5, 6, 7, 8}), perm({1, 2, 3, 8, 5, 6, 7, 4}),
                                   perm({4, 7, 6, 5, 8, 3, 2, 1}), perm({8, 7, 6, 5, 4, 3, 2, 1})};
    CHECK(enumerate_wcs(8) == k8);
}

TEST_CASE("count_wcs matches the published values for 1 <= k <= 100") {
    for (uint32_t k = 1; k <= 100; ++k) {
        CAPTURE(k);
        REQUIRE(count_wcs(k) == kTable2[k - 1]);
    }
}

TEST_CASE("count_range") {
    auto r = count_range(1, 8);
    std::vector<std::pair<uint32_t, uint64_t>> expected = {{1, 1}, {2, 2}, {3, 2}, {4, 4},
                                                           {5, 4}, {6, 4}, {7, 4}, {8, 4}};
    CHECK(r == expected);
    auto tail = count_range(97, 100);
    CHECK(tail == std::vector<std::pair<uint32_t, uint64_t>>{{97, 8}, {98, 4}, {99, 4}, {100, 8}});
    CHECK(count_range(1, 1) == std::vector<std::pair<uint32_t, uint64_t>>{{1, 1}});
    CHECK_THROWS_AS(count_range(5, 3), std::out_of_range);
}

TEST_CASE("ceiling is enforced and overridable") {
    EnumerateOptions opts;
    opts.ceiling = 10;
    CHECK_THROWS_AS(enumerate_wcs(11, opts), std::out_of_range);
    CHECK(enumerate_wcs(10, opts).size() == 16);
}

TEST_CASE("identity and reversal always present") {
    for (uint32_t k = 2; k <= 80; ++k) {
        auto seqs = enumerate_wcs(k);
        auto id = Permutation::identity(k);
        REQUIRE(std::find(seqs.begin(), seqs.end(), id) != seqs.end());
        REQUIRE(std::find(seqs.begin(), seqs.end(), id.reversed()) != seqs.end());
    }
}

TEST_CASE("results are sorted, duplicate-free, closed under reversal, all verified") {
    for (uint32_t k : {10u, 21u, 22u, 57u, 81u}) {
        auto seqs = enumerate_wcs(k);
        REQUIRE(std::is_sorted(seqs.begin(), seqs.end()));
        REQUIRE(std::adjacent_find(seqs.begin(), seqs.end()) == seqs.end());
        for (const auto& s : seqs) {
            REQUIRE(is_wcs_definition(s));
            REQUIRE(std::binary_search(seqs.begin(), seqs.end(), s.reversed()));
        }
    }
}

TEST_CASE("position-bound prune does not change results") {
    EnumerateOptions no_bound;
    no_bound.use_position_bound_prune = false;
    for (uint32_t k = 1; k <= 40; ++k) {
        CAPTURE(k);
        REQUIRE(enumerate_wcs(k) == enumerate_wcs(k, no_bound));
    }
}

TEST_CASE("conjecture-assisted fast mode agrees where the conjecture is verified") {
    EnumerateOptions fast;
    fast.assume_one_first_or_last = true;
    for (uint32_t k = 1; k <= 60; ++k) {
        CAPTURE(k);
        REQUIRE(enumerate_wcs(k) == enumerate_wcs(k, fast));
    }
}
