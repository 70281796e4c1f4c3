#include "odun/power_sum.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "odun/characters.hpp"

namespace odun {

PowerSumPolynomial PowerSumPolynomial::power(const Partition& lambda, const Rational& coeff) {
    PowerSumPolynomial f;
    f.add_term(lambda, coeff);
    return f;
}

Rational PowerSumPolynomial::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> PowerSumPolynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.begin()->first.weight();
    if (terms_.rbegin()->first.weight() != d) return std::nullopt;
    return d;
}

void PowerSumPolynomial::add_term(const Partition& lambda, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

PowerSumPolynomial& PowerSumPolynomial::operator+=(const PowerSumPolynomial& other) {
    for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
    return *this;
}

PowerSumPolynomial& PowerSumPolynomial::operator-=(const PowerSumPolynomial& other) {
    for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
    return *this;
}

PowerSumPolynomial& PowerSumPolynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [lambda, c] : terms_) c *= scalar;
    return *this;
}

PowerSumPolynomial multiply(const PowerSumPolynomial& f, const PowerSumPolynomial& g) {
    PowerSumPolynomial out;
    for (const auto& [a, x] : f.terms()) {
        for (const auto& [b, y] : g.terms()) out.add_term(join(a, b), x * y);
    }
    return out;
}

PowerSumPolynomial power(const PowerSumPolynomial& f, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    PowerSumPolynomial out = PowerSumPolynomial::one();
    PowerSumPolynomial base = f;
    while (exponent > 0) {
        if (exponent & 1) out = multiply(out, base);
        exponent >>= 1;
        if (exponent > 0) base = multiply(base, base);
    }
    return out;
}

std::string to_string(const PowerSumPolynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [lambda, c] : f.terms()) {
        const Rational magnitude = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (magnitude != 1) out << to_string(magnitude) << " ";
        out << "p[" << to_string(lambda) << "]";
        first = false;
    }
    return out.str();
}

namespace {

// Splits a polynomial into its homogeneous components, keyed by degree.
template <typename Terms>
std::map<int, std::vector<typename Terms::const_iterator>> by_degree(const Terms& terms) {
    std::map<int, std::vector<typename Terms::const_iterator>> out;
    for (auto it = terms.begin(); it != terms.end(); ++it) out[it->first.weight()].push_back(it);
    return out;
}

}  // namespace

PowerSumPolynomial schur_to_power(const SchurPolynomial& f, Execution exec) {
    PowerSumPolynomial out;
    for (const auto& [d, component] : by_degree(f.terms())) {
        const CharacterTable& table = character_table(d);
        std::vector<std::pair<std::size_t, BigInt>> rows;
        for (auto it : component) rows.emplace_back(table.index(it->first), it->second);
        std::vector<Rational> coeffs(table.size());
        auto column = [&](std::size_t j) {
            BigInt sum = 0;
            for (const auto& [i, c] : rows) {
                const std::int64_t chi = table.at(i, j);
                if (chi == 0) continue;
                BigInt term = c;
                term *= static_cast<long>(chi);
                sum += term;
            }
            coeffs[j] = ratio(sum, centralizer_order(table.partitions()[j]));
        };
        const std::size_t size = table.size();
        if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
            for (std::size_t j = 0; j < size; ++j) column(j);
        } else {
            for (std::size_t j = 0; j < size; ++j) column(j);
        }
        for (std::size_t j = 0; j < size; ++j) out.add_term(table.partitions()[j], coeffs[j]);
    }
    return out;
}

SchurPolynomial power_to_schur(const PowerSumPolynomial& g, Execution exec) {
    SchurPolynomial out;
    for (const auto& [d, component] : by_degree(g.terms())) {
        const CharacterTable& table = character_table(d);
        // Clear denominators so that the inner sums are integral.
        BigInt scale = 1;
        for (auto it : component) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), it->second.get_den_mpz_t());
        std::vector<std::pair<std::size_t, BigInt>> columns;
        for (auto it : component) {
            BigInt scaled = it->second.get_num() * (scale / it->second.get_den());
            columns.emplace_back(table.index(it->first), std::move(scaled));
        }
        std::vector<BigInt> coeffs(table.size());
        auto row = [&](std::size_t i) {
            BigInt sum = 0;
            for (const auto& [j, c] : columns) {
                const std::int64_t chi = table.at(i, j);
                if (chi == 0) continue;
                BigInt term = c;
                term *= static_cast<long>(chi);
                sum += term;
            }
            coeffs[i] = std::move(sum);
        };
        const std::size_t size = table.size();
        if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
            for (std::size_t i = 0; i < size; ++i) row(i);
        } else {
            for (std::size_t i = 0; i < size; ++i) row(i);
        }
        for (std::size_t i = 0; i < size; ++i) {
            if (!mpz_divisible_p(coeffs[i].get_mpz_t(), scale.get_mpz_t())) {
                throw std::logic_error("power_to_schur: non-integral Schur coefficient at s[" +
                                       to_string(table.partitions()[i]) + "]");
            }
            out.add_term(table.partitions()[i], coeffs[i] / scale);
        }
    }
    return out;
}

}  // namespace odun
