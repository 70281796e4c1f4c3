#include "odun/foulkes.hpp"

#include <chrono>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "odun/plethysm.hpp"

namespace odun {

int degree_cap() {
    if (const char* env = std::getenv("ODUN_DEGREE_CAP")) {
        try {
            const int cap = std::stoi(env);
            if (cap > 0) return cap;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument("ODUN_DEGREE_CAP must be a positive integer");
    }
    return 24;
}

FoulkesSides foulkes_sides(int m, int n, Execution exec) {
    if (m < 2 || n < m) throw std::invalid_argument("foulkes requires 2 <= m <= n");
    if (m * n > degree_cap()) {
        throw std::out_of_range("degree " + std::to_string(m * n) + " exceeds the cap " + std::to_string(degree_cap()));
    }
    const SchurPolynomial h1 = SchurPolynomial::complete(1);
    FoulkesSides sides;
    sides.lhs = plethysm(SchurPolynomial::complete(n), multiply(h1, SchurPolynomial::complete(m - 1)), exec);
    sides.rhs = plethysm(SchurPolynomial::complete(m), multiply(h1, SchurPolynomial::complete(n - 1)), exec);
    if (m == 2) {
        // h_n[h_1 h_1] = h_n[h_2 + e_2]
        SchurPolynomial sum;
        for (int k = 0; k <= n; ++k) {
            sum += multiply(plethysm(SchurPolynomial::complete(k), SchurPolynomial::complete(2), exec),
                            plethysm(SchurPolynomial::complete(n - k), SchurPolynomial::elementary(2), exec));
        }
        if (sum != sides.lhs) throw std::logic_error("h_n[h_1 h_1] disagrees with sum_k h_k[h_2] h_{n-k}[e_2]");
    }
    return sides;
}

SchurPolynomial theorem1_expansion(int n) {
    if (n < 3) throw std::invalid_argument("theorem1_expansion requires n >= 3");
    SchurPolynomial out;
    for (int a = 1; a <= n - 1; a += 2) out.add_term(Partition{1, 1, a, 2 * n - 2 - a}, 1);
    for (int a = 2; a <= n - 1; a += 2) out.add_term(Partition{2, a, 2 * n - 2 - a}, 1);
    out.add_term(Partition{1, 1, 2 * n - 2}, 1);
    for (int a = 2; a <= n - 1; ++a) out.add_term(Partition{1, a, 2 * n - 1 - a}, 2);
    out.add_term(Partition{1, 2 * n - 1}, 1);
    for (int a = 2; a <= n - 1; ++a) out.add_term(Partition{a, 2 * n - a}, a % 2 == 0 ? 3 : 1);
    if (n % 2 == 0) out.add_term(Partition{n, n}, 2);
    out.add_term(Partition{2 * n}, 1);
    return out;
}

int two_row_coefficient(int a, int n) {
    if (a < 1 || a > n - 1) throw std::out_of_range("two_row_coefficient requires 1 <= a <= n-1");
    return a % 2 == 0 ? a / 2 + 1 : (a + 1) / 2;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::fail: return "FAIL";
        case Verdict::info: return "INFO";
    }
    return "INFO";
}

ComparisonReport foulkes_compare(int m, int n, bool with_timing, Execution exec) {
    const auto start = std::chrono::steady_clock::now();
    const FoulkesSides sides = foulkes_sides(m, n, exec);
    ComparisonReport report;
    report.m = m;
    report.n = n;
    std::set<Partition, TermOrder> shapes;
    for (const auto& [lambda, c] : sides.lhs.terms()) shapes.insert(lambda);
    for (const auto& [lambda, c] : sides.rhs.terms()) shapes.insert(lambda);
    for (const Partition& lambda : shapes) {
        ComparisonRow row{lambda, sides.lhs.coefficient(lambda), sides.rhs.coefficient(lambda), Verdict::info};
        if (lambda.length() >= 3) {
            row.verdict = row.lhs >= row.rhs ? Verdict::pass : Verdict::fail;
            if (row.verdict == Verdict::fail) report.all_pass = false;
        } else if (row.lhs < row.rhs) {
            report.exceptions.push_back(row);
        }
        report.rows.push_back(std::move(row));
    }
    if (with_timing) {
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return report;
}

}  // namespace odun
