#include <doctest.h>

#include <cstdlib>

#include "odun/foulkes.hpp"
#include "odun/plethysm.hpp"
#include "odun/serialize.hpp"

using namespace odun;

namespace {

SchurPolynomial s(const Partition& p, long c = 1) { return SchurPolynomial::schur(p, c); }

}  // namespace

TEST_CASE("closed form for n = 3 and n = 4") {
    const SchurPolynomial three = s({3, 1, 1, 1}) + s({2, 2, 2}) + s({4, 1, 1}) + s({3, 2, 1}, 2) + s({5, 1}) +
                                  s({4, 2}, 3) + s({6});
    CHECK(theorem1_expansion(3) == three);
    CHECK(dim_rep(three, 6) == 90);
    CHECK(theorem1_expansion(4).coefficient({4, 4}) == 2);
    CHECK(theorem1_expansion(5).coefficient({5, 5}) == 0);
    CHECK_THROWS_AS(theorem1_expansion(2), std::invalid_argument);
}

TEST_CASE("two-row coefficients") {
    CHECK(two_row_coefficient(2, 3) == 2);
    CHECK(two_row_coefficient(1, 3) == 1);
    CHECK(two_row_coefficient(4, 5) == 3);
    CHECK_THROWS(two_row_coefficient(0, 3));
    for (int n = 2; n <= 6; ++n) {
        const FoulkesSides sides = foulkes_sides(2, n);
        for (int a = 1; a <= n - 1; ++a) CHECK(sides.lhs.coefficient({2 * n - a, a}) == two_row_coefficient(a, n));
    }
}

TEST_CASE("sides for m = 2") {
    const FoulkesSides sides = foulkes_sides(2, 3);
    CHECK(sides.lhs.coefficient({2, 2, 2}) == 2);
    CHECK(sides.rhs == theorem1_expansion(3));
    const FoulkesSides equal = foulkes_sides(2, 2);
    CHECK(equal.lhs == equal.rhs);
    CHECK_THROWS(foulkes_sides(3, 2));
}

TEST_CASE("left-hand side dimension") {
    for (auto [m, n] : {std::pair{2, 3}, std::pair{2, 5}, std::pair{3, 3}, std::pair{3, 4}}) {
        const FoulkesSides sides = foulkes_sides(m, n);
        const BigInt expected = factorial(m * n) / (factorial(n) * ipow(factorial(m - 1), n));
        CHECK(dim_rep(sides.lhs, m * n) == expected);
    }
}

TEST_CASE("comparison report for (2, 3)") {
    const ComparisonReport report = foulkes_compare(2, 3);
    REQUIRE(report.exceptions.size() == 1);
    CHECK(report.exceptions[0].lambda == Partition{4, 2});
    CHECK(report.exceptions[0].lhs == 2);
    CHECK(report.exceptions[0].rhs == 3);
    CHECK(report.all_pass);
    CHECK_FALSE(report.seconds.has_value());
    for (const ComparisonRow& row : report.rows) {
        if (row.lambda.length() <= 2) CHECK(row.verdict == Verdict::info);
    }
    const std::string csv = to_csv(report);
    CHECK(csv.rfind("lambda,lhs,rhs,verdict\n", 0) == 0);
    CHECK(csv.find("\"4,2\",2,3,INFO") != std::string::npos);
    CHECK(to_json(report).dump() == to_json(foulkes_compare(2, 3)).dump());
}

TEST_CASE("open case m = 3 produces a report") {
    const ComparisonReport report = foulkes_compare(3, 4);
    REQUIRE_FALSE(report.rows.empty());
    for (const ComparisonRow& row : report.rows) {
        CHECK(row.lambda.weight() == 12);
        CHECK((row.lhs != 0 || row.rhs != 0));
    }
}

TEST_CASE("degree cap") {
    CHECK(degree_cap() == 24);
    CHECK_THROWS_AS(foulkes_sides(5, 5), std::out_of_range);
    setenv("ODUN_DEGREE_CAP", "10", 1);
    CHECK(degree_cap() == 10);
    CHECK_THROWS_AS(foulkes_sides(2, 6), std::out_of_range);
    unsetenv("ODUN_DEGREE_CAP");
}
