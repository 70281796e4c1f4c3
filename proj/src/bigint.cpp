#include "odun/bigint.hpp"

#include <limits>
#include <stdexcept>

namespace odun {

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt ipow(const BigInt& base, unsigned exponent) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

std::string to_string(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational ratio(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool fits_int64(const BigInt& v) {
    static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
    return v >= lo && v <= hi;
}

std::int64_t to_int64(const BigInt& v) {
    if (!fits_int64(v)) throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
    return std::stoll(v.get_str());
}

}  // namespace odun
