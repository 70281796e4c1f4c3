#include "odun/plethysm.hpp"

#include <map>
#include <stdexcept>
#include <vector>

#include "odun/rim_hook.hpp"

namespace odun {

PowerSumPolynomial power_plethysm(int k, const PowerSumPolynomial& g) {
    if (k < 1) throw std::invalid_argument("p_k requires k >= 1");
    PowerSumPolynomial out;
    for (const auto& [nu, c] : g.terms()) out.add_term(scale(nu, k), c);
    return out;
}

PowerSumPolynomial plethysm(const PowerSumPolynomial& f, const PowerSumPolynomial& g) {
    std::map<int, PowerSumPolynomial> factors;
    std::map<Partition, PowerSumPolynomial, TermOrder> products;
    products.emplace(Partition(), PowerSumPolynomial::one());

    // prod_i p_{mu_i}[g], built from the product for mu without its last part.
    auto product = [&](auto& self, const Partition& mu) -> const PowerSumPolynomial& {
        if (auto it = products.find(mu); it != products.end()) return it->second;
        const int k = mu.parts().back();
        const Partition rest(std::vector<int>(mu.parts().begin(), mu.parts().end() - 1));
        auto factor = factors.find(k);
        if (factor == factors.end()) factor = factors.emplace(k, power_plethysm(k, g)).first;
        PowerSumPolynomial value = multiply(self(self, rest), factor->second);
        return products.emplace(mu, std::move(value)).first->second;
    };

    PowerSumPolynomial out;
    for (const auto& [mu, c] : f.terms()) out += product(product, mu) * c;
    return out;
}

SchurPolynomial plethysm(const SchurPolynomial& f, const SchurPolynomial& g, Execution exec) {
    return power_to_schur(plethysm(schur_to_power(f, exec), schur_to_power(g, exec)), exec);
}

SchurPolynomial power_plethysm(int k, const SchurPolynomial& f, Execution exec) {
    return power_to_schur(power_plethysm(k, schur_to_power(f, exec)), exec);
}

SchurPolynomial littlewood_hn_h2(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    SchurPolynomial out;
    for (const Partition& lambda : partitions_of(2 * n)) {
        if (is_even(lambda)) out.add_term(lambda, 1);
    }
    return out;
}

SchurPolynomial littlewood_hn_e2(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    SchurPolynomial out;
    for (const Partition& lambda : partitions_of(2 * n)) {
        if (is_even(conjugate(lambda))) out.add_term(lambda, 1);
    }
    return out;
}

namespace {

struct Tabloid {
    int count = 0;
    int sign = 1;
};

void grow_tabloids(const Partition& shape, int k, int remaining, int sign, std::map<Partition, Tabloid>& found) {
    if (remaining == 0) {
        Tabloid& t = found[shape];
        ++t.count;
        t.sign = sign;
        return;
    }
    for (const RimHook& h : addable_rim_hooks(shape, k)) {
        if (!h.transposed_special) continue;
        grow_tabloids(h.outer, k, remaining - 1, sign * h.sign(), found);
    }
}

}  // namespace

SchurPolynomial chen_pk_hn(int k, int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("chen_pk_hn requires k, n >= 1");
    std::map<Partition, Tabloid> found;
    grow_tabloids(Partition(), k, n, 1, found);
    SchurPolynomial out;
    for (const auto& [lambda, t] : found) {
        if (t.count > 1) {
            throw std::logic_error("shape " + to_string(lambda) + " admits more than one rim hook tabloid");
        }
        out.add_term(lambda, t.sign);
    }
    return out;
}

SchurPolynomial p2_hn(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    SchurPolynomial out;
    for (int a = 0; a <= n; ++a) out.add_term(Partition{2 * n - a, a}, a % 2 == 0 ? 1 : -1);
    return out;
}

}  // namespace odun
