#pragma once

#include "odun/execution.hpp"
#include "odun/power_sum.hpp"
#include "odun/schur.hpp"

namespace odun {

/// p_k[g]: the algebra map sending p_j to p_{kj} and fixing rational scalars.
PowerSumPolynomial power_plethysm(int k, const PowerSumPolynomial& g);

/// f[g] in the power-sum basis: sum over mu of f_mu prod_i p_{mu_i}[g].
PowerSumPolynomial plethysm(const PowerSumPolynomial& f, const PowerSumPolynomial& g);

/// f[g] for Schur inputs, computed through the power-sum basis.
SchurPolynomial plethysm(const SchurPolynomial& f, const SchurPolynomial& g, Execution exec = Execution::parallel);

/// p_k[f] in the Schur basis, through the power-sum basis.
SchurPolynomial power_plethysm(int k, const SchurPolynomial& f, Execution exec = Execution::parallel);

/// h_n[h_2]: the sum of s_lambda over even lambda of 2n.
SchurPolynomial littlewood_hn_h2(int n);

/// h_n[e_2]: the sum of s_lambda over lambda of 2n whose conjugate is even.
SchurPolynomial littlewood_hn_e2(int n);

/// p_k[h_n] by Chen's rule: one signed term per shape of kn that can be built
/// from the empty shape by adding n rim hooks of size k, each touching the
/// first row. A shape reached in two different ways raises std::logic_error.
SchurPolynomial chen_pk_hn(int k, int n);

/// p_2[h_n] = sum over 0 <= a <= n of (-1)^a s_(2n-a, a).
SchurPolynomial p2_hn(int n);

}  // namespace odun
