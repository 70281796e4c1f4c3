#include <doctest.h>

#include "odun/partition.hpp"
#include "odun/rim_hook.hpp"
#include "oracles.hpp"

using namespace odun;

TEST_CASE("partition normalizes its parts") {
    const Partition p{1, 3, 0, 2};
    CHECK(p.parts() == std::vector<int>{3, 2, 1});
    CHECK(p.weight() == 6);
    CHECK(p.part(5) == 0);
    CHECK(Partition{2, 2, 1}.multiplicity(2) == 2);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("partitions_of counts match the pentagonal recurrence") {
    const auto p = oracle::partition_counts(24);
    for (int n = 0; n <= 24; ++n) CHECK(static_cast<std::int64_t>(partitions_of(n).size()) == p[n]);
}

TEST_CASE("partitions_of is reverse lexicographic") {
    const std::vector<Partition> five = partitions_of(5);
    CHECK(five.front() == Partition{5});
    CHECK(five.back() == Partition{1, 1, 1, 1, 1});
    for (std::size_t i = 1; i < five.size(); ++i) CHECK(five[i] < five[i - 1]);
}

TEST_CASE("conjugation is an involution that swaps rows and columns") {
    for (int n = 0; n <= 10; ++n) {
        for (const Partition& p : partitions_of(n)) {
            CHECK(conjugate(conjugate(p)) == p);
            CHECK(conjugate(p).weight() == n);
            CHECK(static_cast<int>(conjugate(p).length()) == p.part(0));
        }
    }
    CHECK(conjugate(Partition{4, 2, 1}) == Partition{3, 2, 1, 1});
}

TEST_CASE("class sizes sum to n!") {
    for (int n = 0; n <= 9; ++n) {
        BigInt total = 0;
        for (const Partition& mu : partitions_of(n)) total += factorial(n) / centralizer_order(mu);
        CHECK(total == factorial(n));
    }
    CHECK(centralizer_order(Partition{2, 2, 1}) == 8);
}

TEST_CASE("helpers") {
    CHECK(is_even(Partition{4, 2, 2}));
    CHECK_FALSE(is_even(Partition{3, 1}));
    CHECK(contains(Partition{3, 2}, Partition{2, 2}));
    CHECK_FALSE(contains(Partition{3, 1}, Partition{2, 2}));
    CHECK(hook_length(Partition{3, 2}, 0, 0) == 4);
    CHECK(from_multiplicities({2, 0, 1}) == Partition{3, 1, 1});
    CHECK(rectangle(2, 3) == Partition{2, 2, 2});
    CHECK(join(Partition{3, 1}, Partition{2}) == Partition{3, 2, 1});
    CHECK(scale(Partition{2, 1}, 3) == Partition{6, 3});
}

TEST_CASE("parsing and printing") {
    CHECK(parse_partition("4,2,1") == Partition{4, 2, 1});
    CHECK(parse_partition("(3, 3)") == Partition{3, 3});
    CHECK(parse_partition("") == Partition{});
    CHECK(to_string(Partition{4, 2}) == "4,2");
    const SkewShape s = parse_skew("4,3,2,2/2,2,1");
    CHECK(s.outer == Partition{4, 3, 2, 2});
    CHECK(s.inner == Partition{2, 2, 1});
    CHECK(s.size() == 6);
    CHECK_THROWS_AS(parse_partition("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_skew("2,1/3"), std::invalid_argument);
}

TEST_CASE("rim hooks: one per cell of the given hook length") {
    for (int n = 1; n <= 9; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for (int k = 1; k <= n; ++k) {
                int cells = 0;
                for (std::size_t r = 0; r < lambda.length(); ++r) {
                    for (int c = 0; c < lambda[r]; ++c) cells += hook_length(lambda, static_cast<int>(r), c) == k;
                }
                const auto hooks = removable_rim_hooks(lambda, k);
                CHECK(static_cast<int>(hooks.size()) == cells);
                for (const RimHook& h : hooks) {
                    CHECK(h.size() == k);
                    CHECK(h.outer == lambda);
                    CHECK(h.inner.weight() == n - k);
                    CHECK(contains(lambda, h.inner));
                }
            }
        }
    }
}

TEST_CASE("addable and removable rim hooks are dual") {
    for (int n = 0; n <= 7; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            for (int k = 1; k <= 4; ++k) {
                for (const RimHook& h : addable_rim_hooks(mu, k)) {
                    const auto back = removable_rim_hooks(h.outer, k);
                    const bool found = std::any_of(back.begin(), back.end(), [&](const RimHook& r) {
                        return r.inner == mu && r.cells == h.cells && r.sign() == h.sign();
                    });
                    CHECK(found);
                }
            }
        }
    }
}

TEST_CASE("rim hook sign and flags") {
    const auto hooks = removable_rim_hooks(Partition{3, 3}, 4);
    REQUIRE(hooks.size() == 1);
    CHECK(hooks[0].inner == Partition{2});
    CHECK(hooks[0].rows_spanned == 2);
    CHECK(hooks[0].sign() == -1);
    CHECK(hooks[0].transposed_special);
    CHECK(hooks[0].special);
}
