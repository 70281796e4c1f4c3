#include <doctest.h>

#include "odun/characters.hpp"
#include "odun/execution.hpp"
#include "odun/orbit_oracle.hpp"
#include "odun/plethysm.hpp"
#include "odun/power_sum.hpp"
#include "odun/schur.hpp"
#include "odun/transformation.hpp"

using namespace odun;

// The OpenMP kernels must agree bit for bit with their serial reference.

TEST_CASE("character table build") {
    for (int n : {0, 1, 5, 12, 18}) {
        const CharacterTable serial = CharacterTable::build(n, Execution::serial);
        const CharacterTable parallel = CharacterTable::build(n, Execution::parallel);
        REQUIRE(serial.size() == parallel.size());
        bool same = serial.partitions() == parallel.partitions();
        for (std::size_t r = 0; r < serial.size() && same; ++r) {
            for (std::size_t c = 0; c < serial.size() && same; ++c) same = serial.at(r, c) == parallel.at(r, c);
        }
        CHECK(same);
    }
}

TEST_CASE("basis changes") {
    SchurPolynomial f;
    for (const Partition& lambda : partitions_of(10)) f.add_term(lambda, BigInt(lambda.part(0)) - 3);
    const PowerSumPolynomial serial = schur_to_power(f, Execution::serial);
    CHECK(serial == schur_to_power(f, Execution::parallel));
    CHECK(power_to_schur(serial, Execution::serial) == power_to_schur(serial, Execution::parallel));
}

TEST_CASE("plethysm") {
    const SchurPolynomial outer = SchurPolynomial::complete(4);
    const SchurPolynomial inner = multiply(SchurPolynomial::complete(1), SchurPolynomial::complete(2));
    CHECK(plethysm(outer, inner, Execution::serial) == plethysm(outer, inner, Execution::parallel));
    CHECK(power_plethysm(3, inner, Execution::serial) == power_plethysm(3, inner, Execution::parallel));
}

TEST_CASE("permutation characters") {
    for (const char* map : {"2,3,0,0,6,0", "1,1,0,3,3,0", "2,1,4,5,3,0,6"}) {
        const PartialTransformation f = parse_map(map);
        CHECK(perm_character_decompose(f, Execution::serial) == perm_character_decompose(f, Execution::parallel));
    }
}

TEST_CASE("thread count is positive") { CHECK(max_threads() >= 1); }
