#include <doctest.h>

#include <random>

#include "odun/schur.hpp"
#include "odun/serialize.hpp"
#include "oracles.hpp"

using namespace odun;

namespace {

SchurPolynomial s(const Partition& p, long c = 1) { return SchurPolynomial::schur(p, c); }

SchurPolynomial complete_product(const Partition& mu) {
    SchurPolynomial out = SchurPolynomial::one();
    for (int part : mu.parts()) out = multiply(out, SchurPolynomial::complete(part));
    return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic drops zero terms") {
    SchurPolynomial f = s({2, 1}) + s({3}, 2);
    f -= s({2, 1});
    CHECK(f == s({3}, 2));
    f.add_term(Partition{3}, -2);
    CHECK(f.is_zero());
    CHECK_FALSE(f.degree().has_value());
    CHECK((s({2}) + s({1, 1})).degree() == 2);
    CHECK_FALSE((s({2}) + s({1})).is_homogeneous());
    CHECK(to_string(s({4, 2}) + s({3, 3}, 3) - s({2, 2, 2})) == "s[4,2] + 3 s[3,3] - s[2,2,2]");
    CHECK(to_string(SchurPolynomial()) == "0");
}

TEST_CASE("s_(2,2) s_(2,1)") {
    const SchurPolynomial expected = s({4, 3}) + s({4, 2, 1}) + s({3, 3, 1}) + s({3, 2, 2}) + s({3, 2, 1, 1}) +
                                     s({2, 2, 2, 1});
    CHECK(schur_product({2, 2}, {2, 1}) == expected);
}

TEST_CASE("products of complete functions give Kostka numbers") {
    for (int n = 1; n <= 7; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            const SchurPolynomial h = complete_product(mu);
            for (const Partition& lambda : partitions_of(n)) {
                CHECK(h.coefficient(lambda) == oracle::kostka(lambda.parts(), mu.parts()));
            }
        }
    }
}

TEST_CASE("skew expansion of (4,3,2,2)/(2,2,1)") {
    const SchurPolynomial f = skew_expand({4, 3, 2, 2}, {2, 2, 1});
    CHECK(f.degree() == 6);
    CHECK(f.has_nonnegative_coefficients());
    // Sum of coefficient times f^lambda counts standard fillings of the skew shape.
    BigInt weighted = 0;
    for (const auto& [lambda, c] : f.terms()) weighted += c * standard_tableaux_count(lambda);
    CHECK(weighted == 80);
}

TEST_CASE("skew coefficients are Littlewood-Richardson coefficients") {
    for (int n = 0; n <= 7; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for (int m = 0; m <= n; ++m) {
                for (const Partition& mu : partitions_of(m)) {
                    if (!contains(lambda, mu)) continue;
                    const SchurPolynomial skew = skew_expand(lambda, mu);
                    for (const Partition& nu : partitions_of(n - m)) {
                        CHECK(skew.coefficient(nu) == schur_product(mu, nu).coefficient(lambda));
                    }
                }
            }
        }
    }
}

TEST_CASE("skew expansion of a straight shape is that shape") {
    for (int n = 0; n <= 7; ++n) {
        for (const Partition& lambda : partitions_of(n)) CHECK(skew_expand(lambda, Partition{}) == s(lambda));
    }
}

TEST_CASE("stacked shape") {
    const SkewShape shape = stacked_shape({2, 1}, {2});
    CHECK(shape.outer == Partition{4, 2, 1});
    CHECK(shape.inner == Partition{2});
}

TEST_CASE("Pieri rule") {
    // s_lambda h_1 adds one cell in every possible way.
    for (int n = 0; n <= 8; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            const SchurPolynomial f = schur_product(lambda, {1});
            std::size_t corners = 0;
            for (std::size_t r = 0; r <= lambda.length(); ++r) corners += r == 0 || lambda[r - 1] > lambda[r];
            CHECK(f.size() == corners);
            for (const auto& [nu, c] : f.terms()) {
                CHECK(c == 1);
                CHECK(contains(nu, lambda));
            }
        }
    }
}

TEST_CASE("multiplication is commutative and associative with unit") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto pick = [&](int n) {
            const auto all = partitions_of(n);
            return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
        };
        const SchurPolynomial f = s(pick(trial % 4 + 1)) + s(pick(trial % 3 + 1), 2);
        const SchurPolynomial g = s(pick(trial % 5 + 1), -1);
        const SchurPolynomial h = s(pick(2)) + s(pick(3));
        CHECK(multiply(f, g) == multiply(g, f));
        CHECK(multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
        CHECK(multiply(f, SchurPolynomial::one()) == f);
    }
    CHECK(power(SchurPolynomial::complete(1), 3) == s({3}) + s({2, 1}, 2) + s({1, 1, 1}));
}

TEST_CASE("inner product and dimensions") {
    CHECK(inner_product(s({2, 1}, 3) + s({3}), s({2, 1}, 2)) == 6);
    for (int n = 1; n <= 10; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            CHECK(standard_tableaux_count(lambda) == oracle::hook_length_count(lambda.parts()));
        }
    }
    CHECK(dim_rep(power(SchurPolynomial::complete(1), 4), 4) == 24);
    CHECK_THROWS(dim_rep(s({2}), 3));
}

TEST_CASE("Murnaghan-Nakayama multiplication by p_k") {
    CHECK(mn_multiply(2, SchurPolynomial::one()) == s({2}) - s({1, 1}));
    CHECK(mn_multiply(3, s({1})) == s({4}) - s({2, 2}) + s({1, 1, 1, 1}));
}

TEST_CASE("schur JSON form") {
    const Json j = to_json(s({4, 2}) + s({3, 3}, 3));
    CHECK(j.dump() == R"({"basis":"schur","terms":[{"partition":[4,2],"coeff":1},{"partition":[3,3],"coeff":3}]})");
}
