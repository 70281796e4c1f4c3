#include <doctest.h>

#include "odun/orbit_oracle.hpp"
#include "odun/serialize.hpp"
#include "odun/transformation.hpp"
#include "oracles.hpp"

using namespace odun;

TEST_CASE("parsing and basic maps") {
    const PartialTransformation f = parse_map("1,1,0");
    CHECK(f(2) == 1);
    CHECK(f(3) == 0);
    CHECK(to_string(f) == "1,1,0");
    CHECK(f.is_idempotent());
    CHECK_FALSE(f.is_nilpotent());
    CHECK(PartialTransformation::zero(3).is_nilpotent());
    CHECK(PartialTransformation::constant(3) == parse_map("1,1,1"));
    CHECK_THROWS_AS(parse_map("1,4,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_map("1,a"), std::invalid_argument);
}

TEST_CASE("composition, powers and sums") {
    const PartialTransformation f = parse_map("2,3,0");
    CHECK(compose(f, f) == parse_map("3,0,0"));
    CHECK(power(f, 3) == PartialTransformation::zero(3));
    CHECK(power(f, 0) == PartialTransformation::identity(3));
    CHECK(direct_sum(parse_map("1"), parse_map("0,1")) == parse_map("1,0,2"));
}

TEST_CASE("conjugation relabels points") {
    const PartialTransformation f = parse_map("2,3,0");
    const Permutation pi = Permutation::transposition(3, 1, 3);
    const PartialTransformation g = conjugate(f, pi);
    for (int i = 1; i <= 3; ++i) {
        const int image = f(i) == 0 ? 0 : pi(f(i));
        CHECK(g(pi(i)) == image);
    }
}

TEST_CASE("classification") {
    CHECK(classify(PartialTransformation::zero(3)).kind == TransformationKind::nilpotent);
    const Classification diag = classify(parse_map("1,0,3"));
    CHECK(diag.kind == TransformationKind::idempotent_diagonal);
    CHECK(diag.k == 2);
    CHECK(classify(parse_map("1,1,0")).kind == TransformationKind::idempotent_general);
    const Classification block = classify(parse_map("2,1,0,3"));
    CHECK(block.kind == TransformationKind::in_n);
    CHECK(block.k == 2);
    CHECK(classify(parse_map("2,1,2")).kind == TransformationKind::other);
}

TEST_CASE("forest bridge") {
    for (int n = 0; n <= 7; ++n) {
        for (const RootedForest& f : enumerate_forests(n)) {
            const PartialTransformation map = nilpotent_from_forest(f);
            CHECK(map.is_nilpotent());
            CHECK(forest_from_nilpotent(map) == f);
        }
    }
    CHECK_THROWS_AS(forest_from_nilpotent(parse_map("1,0")), std::invalid_argument);
}

TEST_CASE("block forms round trip") {
    const auto f = LoopAugmentedForest::block_form({2, 1}, parse_forest("(())()"));
    const PartialTransformation map = from_block_form(f);
    CHECK(map.size() == 6);
    const auto [nu, tau] = split_block(map);
    CHECK(nu == Partition{2, 1});
    CHECK(tau == f.forest);
    CHECK_THROWS_AS(split_block(parse_map("2,1,2")), std::invalid_argument);
}

TEST_CASE("standardization examples") {
    const StandardForm small = standardize_idempotent(parse_map("3,0,3"));
    CHECK(block_descriptor(small.blocks, small.zero_rank) == "c2+z1");
    CHECK(transposition_product(small.transpositions) == "(2,3)(1,3)");

    const StandardForm big = standardize_idempotent(parse_map("7,2,0,2,5,2,7"));
    CHECK(block_descriptor(big.sweep_blocks, big.zero_rank) == "c3+c1+c2+z1");
    CHECK(block_descriptor(big.blocks, big.zero_rank) == "c3+c2+c1+z1");
    const std::vector<std::pair<int, int>> sweep = {{1, 2}, {2, 4}, {3, 6}, {4, 5}, {5, 7}, {6, 7}};
    REQUIRE(big.transpositions.size() >= sweep.size());
    CHECK(std::equal(sweep.begin(), sweep.end(), big.transpositions.begin()));

    CHECK(block_descriptor({}, 0) == "z0");
    CHECK_THROWS_AS(standardize_idempotent(parse_map("0,0,1")), std::invalid_argument);
}

TEST_CASE("standardization conjugates every idempotent to its standard form") {
    for (int n = 1; n <= 5; ++n) {
        for_each_partial_map(n, [&](const std::vector<int>& images) {
            const PartialTransformation e(images);
            if (!e.is_idempotent()) return;
            const StandardForm st = standardize_idempotent(e);
            CHECK(conjugate(e, st.witness) == st.standard);
            CHECK(std::is_sorted(st.blocks.rbegin(), st.blocks.rend()));
            Permutation product = Permutation::identity(n);
            for (const auto& [a, b] : st.transpositions) product = Permutation::transposition(n, a, b) * product;
            CHECK(product == st.witness);
        });
    }
}

TEST_CASE("stabilizer orders") {
    for (int n = 1; n <= 5; ++n) {
        for_each_partial_map(n, [&](const std::vector<int>& images) {
            const PartialTransformation e(images);
            if (!e.is_idempotent()) return;
            CHECK(stabilizer_of_idempotent(e).order == oracle::centralizer_size(images));
        });
    }
    const WreathDecomposition w = stabilizer_of_idempotent(PartialTransformation::constant(4));
    CHECK(w.order == 6);
    CHECK(w.alternative_order == 24);
    CHECK_FALSE(w.note.empty());
}

TEST_CASE("idempotent counts") {
    const std::vector<long> full = {1, 3, 10, 41, 196, 1057};
    const std::vector<long> partial = {2, 6, 23, 104, 537, 3100};
    for (int n = 1; n <= 6; ++n) {
        CHECK(idempotent_count(n, Monoid::full) == full[n - 1]);
        CHECK(idempotent_count(n, Monoid::partial) == partial[n - 1]);
    }
}

TEST_CASE("standard form JSON") {
    const Json j = to_json(standardize_idempotent(parse_map("3,0,3")));
    CHECK(j["standard_form"] == "c2+z1");
    CHECK(j["witness"] == "(2,3)(1,3)");
    CHECK(j["zero_rank"] == 1);
}
