#include <doctest.h>

#include "odun/plethysm.hpp"
#include "odun/power_sum.hpp"
#include "odun/schur.hpp"

using namespace odun;

namespace {

SchurPolynomial s(const Partition& p, long c = 1) { return SchurPolynomial::schur(p, c); }
SchurPolynomial h(int k) { return SchurPolynomial::complete(k); }
SchurPolynomial e(int k) { return SchurPolynomial::elementary(k); }

}  // namespace

TEST_CASE("small plethysms") {
    CHECK(plethysm(h(2), h(2)) == s({4}) + s({2, 2}));
    CHECK(plethysm(h(2), h(3)) == s({6}) + s({4, 2}));
    CHECK(plethysm(h(3), h(2)) == s({6}) + s({4, 2}) + s({2, 2, 2}));
    CHECK(plethysm(e(2), h(2)) == s({3, 1}));
    CHECK(plethysm(h(2), e(2)) == s({2, 2}) + s({1, 1, 1, 1}));
    CHECK(plethysm(e(2), e(2)) == s({2, 1, 1}));
    CHECK(plethysm(h(1), s({3, 1})) == s({3, 1}));
    CHECK(plethysm(s({2, 1}), h(1)) == s({2, 1}));
}

TEST_CASE("h_2[h_1 h_2]") {
    const SchurPolynomial expected = s({3, 1, 1, 1}) + s({2, 2, 2}) + s({4, 1, 1}) + s({3, 2, 1}, 2) + s({5, 1}) +
                                     s({4, 2}, 3) + s({6});
    CHECK(plethysm(h(2), multiply(h(1), h(2))) == expected);
}

TEST_CASE("plethysm axioms") {
    const SchurPolynomial f = s({2, 1});
    const SchurPolynomial g = h(2) + e(2);
    const SchurPolynomial a = h(2);
    // (f + g)[a] = f[a] + g[a] and (fg)[a] = f[a] g[a].
    CHECK(plethysm(f + g, a) == plethysm(f, a) + plethysm(g, a));
    CHECK(plethysm(multiply(f, g), a) == multiply(plethysm(f, a), plethysm(g, a)));
    // p_k[p_m] = p_km.
    const PowerSumPolynomial p6 = power_plethysm(2, PowerSumPolynomial::power({3}));
    CHECK(p6 == PowerSumPolynomial::power({6}));
    // Associativity on a small case.
    CHECK(plethysm(plethysm(h(2), h(2)), h(2)) == plethysm(h(2), plethysm(h(2), h(2))));
}

TEST_CASE("dimension of h_n[h_m]") {
    for (int n = 1; n <= 4; ++n) {
        for (int m = 1; m <= 4; ++m) {
            const BigInt expected = factorial(n * m) / (factorial(n) * ipow(factorial(m), n));
            CHECK(dim_rep(plethysm(h(n), h(m)), n * m) == expected);
        }
    }
}

TEST_CASE("closed forms") {
    CHECK(littlewood_hn_h2(2) == s({4}) + s({2, 2}));
    CHECK(littlewood_hn_e2(2) == s({2, 2}) + s({1, 1, 1, 1}));
    CHECK(p2_hn(2) == s({4}) - s({3, 1}) + s({2, 2}));
    CHECK(chen_pk_hn(3, 2) == s({6}) - s({5, 1}) + s({4, 1, 1}) + s({3, 3}) - s({3, 2, 1}) + s({2, 2, 2}));
    for (int k = 1; k <= 4; ++k) {
        for (int n = 1; n <= 4; ++n) CHECK(chen_pk_hn(k, n) == power_plethysm(k, h(n)));
    }
    for (int n = 0; n <= 6; ++n) {
        CHECK(littlewood_hn_h2(n) == plethysm(h(n), h(2)));
        CHECK(p2_hn(n) == power_plethysm(2, h(n)));
    }
}
