#pragma once

#include <vector>

#include "odun/bigint.hpp"
#include "odun/execution.hpp"
#include "odun/permutation.hpp"
#include "odun/schur.hpp"
#include "odun/transformation.hpp"

namespace odun {

/// Largest n the brute-force routines accept unless told otherwise.
inline constexpr int kOracleCap = 8;

/// {pi f pi^-1 : pi in S_n}, sorted by images. Expanded breadth-first from f
/// using conjugation by (1,2) and (1,2,...,n).
std::vector<PartialTransformation> orbit(const PartialTransformation& f, int cap = kOracleCap);

/// Frobenius characteristic of the permutation action of S_n on orbit(f):
/// sum over classes mu of fix(mu)/z_mu p_mu, converted to the Schur basis.
/// Fixed points are counted for one representative per class. A negative or
/// fractional coefficient raises std::logic_error.
SchurPolynomial perm_character_decompose(const PartialTransformation& f, Execution exec = Execution::parallel,
                                         int cap = kOracleCap);

struct BruteForceStabilizer {
    std::vector<Permutation> elements;
    BigInt order;
};

/// {pi : pi f pi^-1 = f} by scanning S_n; closure under composition is checked.
BruteForceStabilizer stabilizer_bruteforce(const PartialTransformation& f, int cap = kOracleCap);

/// Calls visit(images) for each of the (n+1)^n partial maps on [n].
template <typename Visit>
void for_each_partial_map(int n, Visit&& visit) {
    std::vector<int> images(n, 0);
    while (true) {
        visit(static_cast<const std::vector<int>&>(images));
        int i = 0;
        while (i < n && images[i] == n) images[i++] = 0;
        if (i == n) return;
        ++images[i];
    }
}

/// Exhaustive counts over all partial maps on [n], indexed by the number of
/// roots k (0..n). Nilpotent maps are forests whose roots are the undefined
/// points. Maps whose only cycles are fixed points are loop-augmented forests
/// whose roots are the undefined and the fixed points.
std::vector<BigInt> count_nilpotent_by_roots(int n);
std::vector<BigInt> count_loop_augmented_by_roots(int n);

/// Idempotents among all partial maps (partial) or all total maps (full) on [n].
BigInt count_idempotents_exhaustive(int n, Monoid which);

}  // namespace odun
