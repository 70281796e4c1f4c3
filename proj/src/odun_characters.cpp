#include "odun/odun_characters.hpp"

#include <numeric>
#include <stdexcept>

#include "odun/memo.hpp"
#include "odun/plethysm.hpp"
#include "odun/power_sum.hpp"

namespace odun {

std::string to_string(CharacterMode mode) { return mode == CharacterMode::paper ? "paper" : "exact"; }

CharacterMode parse_mode(const std::string& text) {
    if (text == "paper") return CharacterMode::paper;
    if (text == "exact") return CharacterMode::exact;
    throw std::invalid_argument("mode must be paper or exact");
}

namespace {

MemoTable<std::string, SchurPolynomial>& forest_memo() {
    static MemoTable<std::string, SchurPolynomial> memo;
    return memo;
}

int euler_phi(int n) {
    int count = 0;
    for (int i = 1; i <= n; ++i) count += std::gcd(i, n) == 1;
    return count;
}

}  // namespace

SchurPolynomial frobenius_tree(const RootedTree& tree) {
    return multiply(SchurPolynomial::schur(Partition{1}), frobenius_forest(RootedForest(tree.children())));
}

SchurPolynomial frobenius_forest(const RootedForest& forest) {
    if (forest.empty()) return SchurPolynomial::one();
    return forest_memo().get_or_compute("f" + forest.code(), [&] {
        SchurPolynomial out = SchurPolynomial::one();
        for (const auto& [tree, m] : forest.components()) {
            const SchurPolynomial component = frobenius_tree(tree);
            out = multiply(out, m == 1 ? component : plethysm(SchurPolynomial::complete(m), component));
        }
        return out;
    });
}

SchurPolynomial centralizer_induced_char(const Partition& nu) {
    static MemoTable<Partition, SchurPolynomial> memo;
    return memo.get_or_compute(nu, [&] {
        PowerSumPolynomial out = PowerSumPolynomial::one();
        for (int j = 1; j <= nu.part(0); ++j) {
            const int m = nu.multiplicity(j);
            if (m == 0) continue;
            // Cycle index of the cyclic group of order j.
            PowerSumPolynomial cyclic;
            for (int d = 1; d <= j; ++d) {
                if (j % d == 0) cyclic.add_term(rectangle(d, j / d), ratio(euler_phi(d), j));
            }
            out = multiply(out, plethysm(schur_to_power(SchurPolynomial::complete(m)), cyclic));
        }
        return power_to_schur(out);
    });
}

BigInt dim_loop(const LoopAugmentedForest& f) {
    return factorial(f.size()) / (centralizer_order(f.sigma_type) * automorphism_order(f.forest));
}

BigInt dim_loop_as_published(const LoopAugmentedForest& f) {
    return factorial(f.size()) / factorial(f.loops) * centralizer_order(f.sigma_type) /
           automorphism_order(f.forest);
}

OdunCharacter frobenius_loop(const LoopAugmentedForest& f, CharacterMode mode) {
    if (f.sigma_type.weight() != f.loops) throw std::invalid_argument("cycle type must have weight equal to the loop count");
    const SchurPolynomial block =
        mode == CharacterMode::paper ? SchurPolynomial::schur(f.sigma_type) : centralizer_induced_char(f.sigma_type);
    OdunCharacter out;
    out.source = f;
    out.mode = mode;
    out.character = multiply(block, frobenius_forest(f.forest));
    out.dim = dim_rep(out.character, f.size());
    return out;
}

namespace {

MemoTable<std::string, BigInt>& sign_memo() {
    static MemoTable<std::string, BigInt> memo;
    return memo;
}

}  // namespace

BigInt forest_sign_multiplicity(const RootedForest& forest) {
    if (forest.empty()) return 1;
    return sign_memo().get_or_compute(forest.code(), [&] {
        BigInt out = 1;
        for (const auto& [tree, m] : forest.components()) {
            // A tree has the sign multiplicity of its branches: F(tree) = s_1 F(branches).
            const BigInt s = forest_sign_multiplicity(RootedForest(tree.children()));
            if (tree.size() % 2 == 0) {
                mpz_class c;
                mpz_bin_ui(c.get_mpz_t(), BigInt(s + m - 1).get_mpz_t(), m);
                out *= c;
            } else {
                mpz_class c;
                mpz_bin_ui(c.get_mpz_t(), s.get_mpz_t(), m);
                out *= c;
            }
        }
        return out;
    });
}

BigInt sign_multiplicity(const LoopAugmentedForest& f, CharacterMode mode) {
    if (f.sigma_type.weight() != f.loops) throw std::invalid_argument("cycle type must have weight equal to the loop count");
    const Partition column = rectangle(1, f.loops);
    const BigInt block = mode == CharacterMode::paper ? BigInt(f.sigma_type == column ? 1 : 0)
                                                      : centralizer_induced_char(f.sigma_type).coefficient(column);
    return block * forest_sign_multiplicity(f.forest);
}

std::vector<LoopAugmentedForest> enumerate_loop_augmented(int n, bool general_blocks) {
    std::vector<LoopAugmentedForest> out;
    for (int k = 0; k <= n; ++k) {
        const auto types = general_blocks ? partitions_of(k) : std::vector<Partition>{rectangle(1, k)};
        for (const Partition& nu : types) {
            for (const RootedForest& tau : enumerate_forests(n - k)) out.push_back(LoopAugmentedForest::block_form(nu, tau));
        }
    }
    return out;
}

SignCensus sign_census(int n, CharacterMode mode) {
    if (n < 2) throw std::invalid_argument("sign_census requires n >= 2");
    const CharacterMode other = mode == CharacterMode::paper ? CharacterMode::exact : CharacterMode::paper;
    SignCensus census;
    census.n = n;
    census.mode = mode;
    census.per_k.assign(n - 1, 0);
    census.other_per_k.assign(n - 1, 0);
    for (int k = 0; k <= n; ++k) {
        for (const RootedForest& tau : enumerate_forests(n - k)) {
            const auto f = LoopAugmentedForest::with_loops(k, tau);
            const BigInt mine = sign_multiplicity(f, mode);
            const BigInt theirs = sign_multiplicity(f, other);
            if (k <= n - 2) {
                census.per_k[k] += mine;
                census.other_per_k[k] += theirs;
            } else if (k == n - 1) {
                census.k_n_minus_1 += mine;
            } else {
                census.k_n += mine;
            }
            if (mine != theirs) {
                const bool paper_first = mode == CharacterMode::paper;
                SignDiscrepancy d;
                d.source = f;
                d.paper_sign = paper_first ? mine : theirs;
                d.exact_sign = paper_first ? theirs : mine;
                census.discrepancies.push_back(std::move(d));
            }
        }
    }
    for (const BigInt& c : census.per_k) census.total += c;
    for (const BigInt& c : census.other_per_k) census.other_total += c;
    return census;
}

std::vector<ModeDiscrepancy> mode_discrepancies(int max_n) {
    std::vector<ModeDiscrepancy> out;
    for (int n = 1; n <= max_n; ++n) {
        for (const LoopAugmentedForest& f : enumerate_loop_augmented(n, true)) {
            ModeDiscrepancy d;
            d.source = f;
            d.paper = frobenius_loop(f, CharacterMode::paper).character;
            d.exact = frobenius_loop(f, CharacterMode::exact).character;
            if (d.paper == d.exact) continue;
            const Partition sign = rectangle(1, n);
            d.paper_sign = d.paper.coefficient(sign);
            d.exact_sign = d.exact.coefficient(sign);
            out.push_back(std::move(d));
        }
    }
    return out;
}

}  // namespace odun
