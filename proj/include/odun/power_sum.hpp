#pragma once

#include <map>
#include <optional>
#include <string>

#include "odun/bigint.hpp"
#include "odun/execution.hpp"
#include "odun/partition.hpp"
#include "odun/schur.hpp"

namespace odun {

/// A symmetric function in the power-sum basis with exact rational
/// coefficients. p_lambda is keyed by lambda; no stored coefficient is zero.
class PowerSumPolynomial {
public:
    using Terms = std::map<Partition, Rational, TermOrder>;

    PowerSumPolynomial() = default;

    static PowerSumPolynomial one() { return power(Partition()); }
    static PowerSumPolynomial power(const Partition& lambda, const Rational& coeff = 1);

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const Partition& lambda) const;
    std::optional<int> degree() const;

    void add_term(const Partition& lambda, const Rational& coeff);

    PowerSumPolynomial& operator+=(const PowerSumPolynomial& other);
    PowerSumPolynomial& operator-=(const PowerSumPolynomial& other);
    PowerSumPolynomial& operator*=(const Rational& scalar);

    friend PowerSumPolynomial operator+(PowerSumPolynomial a, const PowerSumPolynomial& b) { return a += b; }
    friend PowerSumPolynomial operator-(PowerSumPolynomial a, const PowerSumPolynomial& b) { return a -= b; }
    friend PowerSumPolynomial operator*(PowerSumPolynomial a, const Rational& s) { return a *= s; }
    friend bool operator==(const PowerSumPolynomial& a, const PowerSumPolynomial& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

/// p_alpha p_beta = p_{alpha joined with beta}.
PowerSumPolynomial multiply(const PowerSumPolynomial& f, const PowerSumPolynomial& g);
PowerSumPolynomial power(const PowerSumPolynomial& f, int exponent);

std::string to_string(const PowerSumPolynomial& f);

/// s_lambda -> sum over mu of chi^lambda(mu) / z_mu p_mu.
PowerSumPolynomial schur_to_power(const SchurPolynomial& f, Execution exec = Execution::parallel);

/// p_mu -> sum over lambda of chi^lambda(mu) s_lambda. A non-integral result
/// means the input was not the image of an integral Schur element and raises
/// std::logic_error.
SchurPolynomial power_to_schur(const PowerSumPolynomial& g, Execution exec = Execution::parallel);

}  // namespace odun
