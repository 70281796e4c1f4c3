#pragma once

#include <optional>
#include <string>
#include <vector>

#include "odun/bigint.hpp"
#include "odun/execution.hpp"
#include "odun/partition.hpp"
#include "odun/schur.hpp"

namespace odun {

/// Largest degree m*n the harness will expand. Defaults to 24; the
/// ODUN_DEGREE_CAP environment variable overrides it.
int degree_cap();

struct FoulkesSides {
    SchurPolynomial lhs;  // h_n[h_1 h_{m-1}]
    SchurPolynomial rhs;  // h_m[h_1 h_{n-1}]
};

/// Both sides through the plethysm engine. For m = 2 the left side is also
/// assembled as sum_k h_k[h_2] h_{n-k}[e_2] and the two must agree.
/// Requires 2 <= m <= n and m*n <= degree_cap().
FoulkesSides foulkes_sides(int m, int n, Execution exec = Execution::parallel);

/// Closed form of h_2[h_1 h_{n-1}] for n >= 3, summed family by family.
SchurPolynomial theorem1_expansion(int n);

/// <h_n[h_1 h_1], s_(2n-a, a)>: a/2 + 1 for even a, (a+1)/2 for odd a, 1 <= a <= n-1.
int two_row_coefficient(int a, int n);

enum class Verdict { pass, fail, info };
std::string to_string(Verdict v);

struct ComparisonRow {
    Partition lambda;
    BigInt lhs;
    BigInt rhs;
    /// pass/fail for shapes with at least three parts; info otherwise.
    Verdict verdict = Verdict::info;
};

struct ComparisonReport {
    int m = 0;
    int n = 0;
    /// One row per shape with a nonzero coefficient on either side, in term order.
    std::vector<ComparisonRow> rows;
    /// Shapes with at most two parts where lhs < rhs.
    std::vector<ComparisonRow> exceptions;
    bool all_pass = true;
    std::optional<double> seconds;
};

/// Compares the coefficients of both sides shape by shape.
ComparisonReport foulkes_compare(int m, int n, bool with_timing = false, Execution exec = Execution::parallel);

}  // namespace odun
