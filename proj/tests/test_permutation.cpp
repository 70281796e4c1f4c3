#include <doctest.h>

#include <map>

#include "odun/permutation.hpp"

using namespace odun;

TEST_CASE("composition applies the right factor first") {
    const Permutation a = Permutation::transposition(3, 1, 2);
    const Permutation b = Permutation::transposition(3, 2, 3);
    const Permutation ab = a * b;
    CHECK(ab(3) == 1);
    CHECK(ab(1) == 2);
    CHECK(to_cycle_string(ab) == "(1,2,3)");
    CHECK(ab * ab.inverse() == Permutation::identity(3));
    CHECK(to_cycle_string(Permutation::identity(4)) == "()");
}

TEST_CASE("cycle types") {
    const Permutation p = Permutation::with_cycle_type({3, 2, 1});
    CHECK(p.cycle_type() == Partition{3, 2, 1});
    CHECK(p.cycles() == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5}});
    CHECK_THROWS(Permutation({1, 1}));
}

TEST_CASE("all permutations") {
    const auto all = all_permutations(4);
    CHECK(all.size() == 24);
    CHECK(std::is_sorted(all.begin(), all.end()));
    std::map<Partition, int> classes;
    for (const Permutation& p : all) ++classes[p.cycle_type()];
    for (const auto& [mu, count] : classes) CHECK(count * centralizer_order(mu) == 24);
}
