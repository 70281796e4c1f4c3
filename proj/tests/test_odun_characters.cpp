#include <doctest.h>

#include "odun/forest.hpp"
#include "odun/odun_characters.hpp"
#include "odun/orbit_oracle.hpp"
#include "odun/schur.hpp"
#include "odun/serialize.hpp"
#include "odun/transformation.hpp"

using namespace odun;

namespace {

SchurPolynomial s(const Partition& p, long c = 1) { return SchurPolynomial::schur(p, c); }

}  // namespace

TEST_CASE("modes parse and print") {
    CHECK(parse_mode("paper") == CharacterMode::paper);
    CHECK(to_string(CharacterMode::exact) == "exact");
    CHECK_THROWS_AS(parse_mode("other"), std::invalid_argument);
}

TEST_CASE("small forest characters") {
    CHECK(frobenius_forest(RootedForest()) == SchurPolynomial::one());
    CHECK(frobenius_forest(parse_forest("()")) == s({1}));
    CHECK(frobenius_forest(parse_forest("()()")) == s({2}));
    CHECK(frobenius_forest(parse_forest("(())")) == s({2}) + s({1, 1}));
    CHECK(frobenius_tree(parse_tree("(()())")) == s({3}) + s({2, 1}));
}

TEST_CASE("forest characters match the orbit oracle") {
    for (int n = 1; n <= 7; ++n) {
        for (const RootedForest& f : enumerate_forests(n)) {
            const SchurPolynomial c = frobenius_forest(f);
            CHECK(c == perm_character_decompose(nilpotent_from_forest(f)));
            CHECK(dim_rep(c, n) == dim_odun(f));
        }
    }
}

TEST_CASE("centralizer characters") {
    CHECK(centralizer_induced_char({1, 1}) == s({2}));
    CHECK(centralizer_induced_char({2}) == s({2}));
    CHECK(centralizer_induced_char({3}) == s({3}) + s({1, 1, 1}));
    for (int k = 1; k <= 6; ++k) {
        for (const Partition& nu : partitions_of(k)) {
            CHECK(dim_rep(centralizer_induced_char(nu), k) * centralizer_order(nu) == factorial(k));
        }
    }
}

TEST_CASE("loop-augmented characters in both modes") {
    const auto two_loops = LoopAugmentedForest::with_loops(2, RootedForest());
    CHECK(frobenius_loop(two_loops, CharacterMode::paper).character == s({1, 1}));
    CHECK(frobenius_loop(two_loops, CharacterMode::exact).character == s({2}));
    const auto f = LoopAugmentedForest::with_loops(1, parse_forest("()"));
    const OdunCharacter c = frobenius_loop(f, CharacterMode::exact);
    CHECK(c.character == s({2}) + s({1, 1}));
    CHECK(c.dim == 2);
}

TEST_CASE("dimensions of loop-augmented forests") {
    const auto f = LoopAugmentedForest::block_form({2}, parse_forest("()"));
    CHECK(dim_loop(f) == 3);
    CHECK(dim_loop_as_published(f) == 6);
    const auto trivial = LoopAugmentedForest::with_loops(4, RootedForest());
    CHECK(dim_loop(trivial) == 1);
    for (int n = 1; n <= 6; ++n) {
        for (const LoopAugmentedForest& g : enumerate_loop_augmented(n, false)) {
            CHECK(g.is_loop_augmented());
            CHECK(dim_loop(g) == orbit(from_block_form(g)).size());
        }
    }
}

TEST_CASE("sign multiplicity fast path agrees with full characters") {
    for (int n = 1; n <= 7; ++n) {
        for (const LoopAugmentedForest& g : enumerate_loop_augmented(n, true)) {
            for (CharacterMode mode : {CharacterMode::paper, CharacterMode::exact}) {
                const SchurPolynomial full = frobenius_loop(g, mode).character;
                CHECK(sign_multiplicity(g, mode) == full.coefficient(rectangle(1, n)));
            }
        }
        for (const RootedForest& f : enumerate_forests(n)) {
            CHECK(forest_sign_multiplicity(f) == frobenius_forest(f).coefficient(rectangle(1, n)));
        }
    }
}

TEST_CASE("paper-mode census") {
    for (int n = 2; n <= 6; ++n) {
        const SignCensus census = sign_census(n, CharacterMode::paper);
        REQUIRE(census.per_k.size() == static_cast<std::size_t>(n - 1));
        for (int k = 0; k <= n - 2; ++k) CHECK(census.per_k[k] == ipow(2, n - k - 2));
        CHECK(census.total == ipow(2, n - 1) - 1);
    }
    const SignCensus seven = sign_census(7, CharacterMode::paper);
    CHECK(seven.per_k[0] == 34);
    CHECK(seven.total == 65);
}

TEST_CASE("exact-mode census and discrepancies") {
    const SignCensus census = sign_census(5, CharacterMode::exact);
    CHECK(census.total == 12);
    CHECK(census.other_total == 15);
    CHECK(census.discrepancies.size() == 5);
    const Json j = to_json(census);
    CHECK(j["n"] == 5);
    CHECK(j["mode"] == "exact");
    CHECK(j["per_k"].size() == 4);
    CHECK(j["discrepancies"].size() == 5);
}

TEST_CASE("mode discrepancies are confirmed by the oracle") {
    const auto found = mode_discrepancies(5);
    REQUIRE_FALSE(found.empty());
    for (const ModeDiscrepancy& d : found) {
        CHECK(d.paper != d.exact);
        CHECK(perm_character_decompose(from_block_form(d.source)) == d.exact);
    }
}
