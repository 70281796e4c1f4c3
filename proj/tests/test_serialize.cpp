#include <doctest.h>

#include "odun/odun_characters.hpp"
#include "odun/power_sum.hpp"
#include "odun/serialize.hpp"

using namespace odun;

TEST_CASE("integers too large for 64 bits become strings") {
    CHECK(json_integer(BigInt(42)).is_number_integer());
    const BigInt big = factorial(30);
    CHECK(json_integer(big) == big.get_str());
    CHECK(json_partition({3, 1}).dump() == "[3,1]");
}

TEST_CASE("power-sum JSON keeps exact rationals") {
    const PowerSumPolynomial f = PowerSumPolynomial::power({2, 1}, ratio(1, 2));
    CHECK(to_json(f).dump() == R"({"basis":"power","terms":[{"partition":[2,1],"coeff":{"num":1,"den":2}}]})");
}

TEST_CASE("loop-augmented forest JSON") {
    const Json j = to_json(LoopAugmentedForest::with_loops(2, parse_forest("(())")));
    CHECK(j.dump() == R"j({"loops":2,"sigma":[1,1],"forest":"(())"})j");
}

TEST_CASE("census output is deterministic") {
    const SignCensus a = sign_census(6, CharacterMode::paper);
    const SignCensus b = sign_census(6, CharacterMode::paper);
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK(to_csv(a) == to_csv(b));
    CHECK(to_text(a) == to_text(b));
    CHECK(to_csv(a).rfind("k,paper,exact\n", 0) == 0);
}
