#pragma once

#include <string>
#include <vector>

#include "odun/bigint.hpp"
#include "odun/forest.hpp"
#include "odun/schur.hpp"

namespace odun {

/// paper: the permutation block contributes s_nu.
/// exact: it contributes the character induced from the trivial character of
/// the centralizer of a permutation of cycle type nu.
enum class CharacterMode { paper, exact };

std::string to_string(CharacterMode mode);
CharacterMode parse_mode(const std::string& text);

/// Frobenius characteristic of the relabeling module of a forest:
/// F(tree) = s_1 F(branches), F(forest) = prod h_m[F(component)] over distinct
/// components of multiplicity m. Memoized by canonical encoding.
SchurPolynomial frobenius_forest(const RootedForest& forest);
SchurPolynomial frobenius_tree(const RootedTree& tree);

/// prod_j h_{m_j}[(1/j) sum_{d | j} phi(d) p_d^{j/d}] for nu = (1^m_1 2^m_2 ...).
SchurPolynomial centralizer_induced_char(const Partition& nu);

struct OdunCharacter {
    LoopAugmentedForest source;
    CharacterMode mode = CharacterMode::exact;
    SchurPolynomial character;
    BigInt dim;
};

/// The permutation-block factor times frobenius_forest(f.forest).
OdunCharacter frobenius_loop(const LoopAugmentedForest& f, CharacterMode mode);

/// Orbit size n! / (z_nu * aut(tau)).
BigInt dim_loop(const LoopAugmentedForest& f);
/// (n!/k!) * z_nu / aut(tau), the closed form as printed. Differs from
/// dim_loop whenever z_nu^2 != k!.
BigInt dim_loop_as_published(const LoopAugmentedForest& f);

/// Multiplicity of the sign character s_(1^n) in frobenius_loop(f, mode),
/// evaluated without expanding the character: <AB, e> = <A, e><B, e>, and
/// <h_m[F], e> is C(s+m-1, m) for F of even degree and C(s, m) for odd degree,
/// where s = <F, e>.
BigInt sign_multiplicity(const LoopAugmentedForest& f, CharacterMode mode);

/// <frobenius_forest(forest), s_(1^n)> by the same rules.
BigInt forest_sign_multiplicity(const RootedForest& forest);

struct SignDiscrepancy {
    LoopAugmentedForest source;
    BigInt paper_sign;
    BigInt exact_sign;
};

struct ModeDiscrepancy {
    LoopAugmentedForest source;
    SchurPolynomial paper;
    SchurPolynomial exact;
    BigInt paper_sign;
    BigInt exact_sign;
};

struct SignCensus {
    int n = 0;
    CharacterMode mode = CharacterMode::paper;
    /// per_k[k]: loop-augmented forests with k loops whose character contains
    /// the sign character, for k = 0 .. n-2.
    std::vector<BigInt> per_k;
    BigInt total;
    /// Counts for k = n-1 and k = n, kept out of the total.
    BigInt k_n_minus_1;
    BigInt k_n;
    /// The same counts in the other mode, index-aligned with per_k.
    std::vector<BigInt> other_per_k;
    BigInt other_total;
    /// Loop-augmented forests on which the two modes disagree about the sign.
    std::vector<SignDiscrepancy> discrepancies;
};

/// Counts loop-augmented forests on n vertices affording the sign character,
/// in the requested mode and side by side with the other mode.
SignCensus sign_census(int n, CharacterMode mode);

/// Every loop-augmented forest (nu = 1^k) and, when general_blocks is set,
/// every block form (nu, tau) on n vertices.
std::vector<LoopAugmentedForest> enumerate_loop_augmented(int n, bool general_blocks);

/// All (nu, tau) on at most max_n vertices where the two modes give different
/// characters.
std::vector<ModeDiscrepancy> mode_discrepancies(int max_n);

}  // namespace odun
