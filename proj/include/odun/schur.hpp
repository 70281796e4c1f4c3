#pragma once

#include <iosfwd>
#include <map>
#include <optional>

#include "odun/bigint.hpp"
#include "odun/partition.hpp"

namespace odun {

/// A symmetric function in the Schur basis with exact integer coefficients.
/// No stored coefficient is zero, so equality is equality of term maps.
class SchurPolynomial {
public:
    using Terms = std::map<Partition, BigInt, TermOrder>;

    SchurPolynomial() = default;

    static SchurPolynomial one() { return schur(Partition()); }
    static SchurPolynomial schur(const Partition& lambda, const BigInt& coeff = 1);
    /// h_k = s_(k)
    static SchurPolynomial complete(int k);
    /// e_k = s_(1^k)
    static SchurPolynomial elementary(int k);

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    BigInt coefficient(const Partition& lambda) const;

    void add_term(const Partition& lambda, const BigInt& coeff);

    /// Common weight of all terms; nullopt for mixed degree or the zero polynomial.
    std::optional<int> degree() const;
    bool is_homogeneous() const;
    bool has_nonnegative_coefficients() const;

    SchurPolynomial& operator+=(const SchurPolynomial& other);
    SchurPolynomial& operator-=(const SchurPolynomial& other);
    SchurPolynomial& operator*=(const BigInt& scalar);

    friend SchurPolynomial operator+(SchurPolynomial a, const SchurPolynomial& b) { return a += b; }
    friend SchurPolynomial operator-(SchurPolynomial a, const SchurPolynomial& b) { return a -= b; }
    friend SchurPolynomial operator-(SchurPolynomial a) { return a *= BigInt(-1); }
    friend SchurPolynomial operator*(SchurPolynomial a, const BigInt& s) { return a *= s; }
    friend SchurPolynomial operator*(const BigInt& s, SchurPolynomial a) { return a *= s; }
    friend bool operator==(const SchurPolynomial& a, const SchurPolynomial& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

/// Human-readable form, e.g. "s[4,2] + 3 s[3,3] - s[2,2,2]"; zero prints as "0".
std::string to_string(const SchurPolynomial& f);
std::ostream& operator<<(std::ostream& os, const SchurPolynomial& f);

/// Schur expansion of the skew Schur function s_{lambda/mu} by the
/// Remmel-Whitney rule: one s_{sh(T)} per standard tableau T compatible with
/// the reverse lexicographic filling of lambda/mu.
SchurPolynomial skew_expand(const Partition& lambda, const Partition& mu);
SchurPolynomial skew_expand(const SkewShape& shape);

/// The skew shape lambda*mu: lambda placed above mu, touching it only at a
/// corner, so that s_{lambda*mu} = s_lambda s_mu.
SkewShape stacked_shape(const Partition& lambda, const Partition& mu);

/// s_lambda * s_mu by the Remmel-Whitney tree search: start from the diagram of
/// the larger factor and place the reverse lexicographic filling of the other.
/// Memoized per pair.
SchurPolynomial schur_product(const Partition& lambda, const Partition& mu);

/// Bilinear product.
SchurPolynomial multiply(const SchurPolynomial& f, const SchurPolynomial& g);
SchurPolynomial power(const SchurPolynomial& f, int exponent);

/// Hall inner product; the Schur basis is orthonormal.
BigInt inner_product(const SchurPolynomial& f, const SchurPolynomial& g);

/// p_k * f by the Murnaghan-Nakayama rule.
SchurPolynomial mn_multiply(int k, const SchurPolynomial& f);

/// f^lambda = |lambda|! / prod of hook lengths.
BigInt standard_tableaux_count(const Partition& lambda);

/// Dimension of the S_N module whose Frobenius characteristic is f. Rejects
/// terms whose weight differs from N.
BigInt dim_rep(const SchurPolynomial& f, int N);

}  // namespace odun
