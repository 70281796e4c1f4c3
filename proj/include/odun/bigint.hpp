#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace odun {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt ipow(const BigInt& base, unsigned exponent);

inline std::string to_string(const BigInt& v) { return v.get_str(); }
std::string to_string(const Rational& v);

/// num/den in lowest terms.
Rational ratio(const BigInt& num, const BigInt& den);

/// True iff v fits in a signed 64-bit integer.
bool fits_int64(const BigInt& v);
std::int64_t to_int64(const BigInt& v);

}  // namespace odun
