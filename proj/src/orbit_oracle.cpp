#include "odun/orbit_oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "odun/characters.hpp"
#include "odun/power_sum.hpp"

namespace odun {

namespace {

void check_cap(int n, int cap) {
    if (n > cap) throw std::out_of_range("brute force limited to n <= " + std::to_string(cap));
}

}  // namespace

std::vector<PartialTransformation> orbit(const PartialTransformation& f, int cap) {
    const int n = f.size();
    check_cap(n, cap);
    std::vector<Permutation> generators;
    if (n >= 2) {
        generators.push_back(Permutation::transposition(n, 1, 2));
        std::vector<int> cycle(n);
        for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n + 1;
        generators.emplace_back(std::move(cycle));
    }
    std::set<PartialTransformation> seen{f};
    std::deque<PartialTransformation> frontier{f};
    while (!frontier.empty()) {
        const PartialTransformation g = std::move(frontier.front());
        frontier.pop_front();
        for (const Permutation& pi : generators) {
            PartialTransformation h = conjugate(g, pi);
            if (seen.insert(h).second) frontier.push_back(std::move(h));
        }
    }
    return {seen.begin(), seen.end()};
}

SchurPolynomial perm_character_decompose(const PartialTransformation& f, Execution exec, int cap) {
    const int n = f.size();
    const std::vector<PartialTransformation> points = orbit(f, cap);
    const std::vector<Partition> classes = partitions_of(n);
    std::vector<long> fixed(classes.size(), 0);
    auto count = [&](std::size_t c) {
        const Permutation pi = Permutation::with_cycle_type(classes[c]);
        long total = 0;
        for (const PartialTransformation& g : points) total += conjugate(g, pi) == g;
        fixed[c] = total;
    };
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t c = 0; c < classes.size(); ++c) count(c);
    } else {
        for (std::size_t c = 0; c < classes.size(); ++c) count(c);
    }
    PowerSumPolynomial frobenius;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        frobenius.add_term(classes[c], ratio(fixed[c], centralizer_order(classes[c])));
    }
    SchurPolynomial out = power_to_schur(frobenius, exec);
    if (!out.has_nonnegative_coefficients()) {
        throw std::logic_error("permutation character of " + to_string(f) + " has a negative multiplicity");
    }
    return out;
}

BruteForceStabilizer stabilizer_bruteforce(const PartialTransformation& f, int cap) {
    const int n = f.size();
    check_cap(n, cap);
    BruteForceStabilizer out;
    for (Permutation& pi : all_permutations(n)) {
        if (conjugate(f, pi) == f) out.elements.push_back(std::move(pi));
    }
    out.order = static_cast<unsigned long>(out.elements.size());
    // Closure: every product with a bounded set of left factors stays inside.
    const std::size_t left = std::min<std::size_t>(out.elements.size(), 64);
    for (std::size_t a = 0; a < left; ++a) {
        for (const Permutation& b : out.elements) {
            if (!std::binary_search(out.elements.begin(), out.elements.end(), out.elements[a] * b)) {
                throw std::logic_error("stabilizer of " + to_string(f) + " is not closed under composition");
            }
        }
    }
    return out;
}

namespace {

// 0: reaches an undefined point; 1: ends on a fixed point; 2: ends on a longer cycle.
int fate(const std::vector<int>& images, int i) {
    const int n = static_cast<int>(images.size());
    int j = i;
    for (int step = 0; step <= n; ++step) {
        const int next = images[j - 1];
        if (next == 0) return 0;
        if (next == j) return 1;
        j = next;
    }
    return 2;
}

}  // namespace

std::vector<BigInt> count_nilpotent_by_roots(int n) {
    check_cap(n, 7);
    std::vector<long> counts(n + 1, 0);
    for_each_partial_map(n, [&](const std::vector<int>& images) {
        int roots = 0;
        for (int i = 1; i <= n; ++i) {
            if (fate(images, i) != 0) return;
            roots += images[i - 1] == 0;
        }
        ++counts[roots];
    });
    return {counts.begin(), counts.end()};
}

std::vector<BigInt> count_loop_augmented_by_roots(int n) {
    check_cap(n, 7);
    std::vector<long> counts(n + 1, 0);
    for_each_partial_map(n, [&](const std::vector<int>& images) {
        int roots = 0;
        for (int i = 1; i <= n; ++i) {
            if (fate(images, i) == 2) return;
            roots += images[i - 1] == 0 || images[i - 1] == i;
        }
        ++counts[roots];
    });
    return {counts.begin(), counts.end()};
}

BigInt count_idempotents_exhaustive(int n, Monoid which) {
    check_cap(n, 7);
    long count = 0;
    for_each_partial_map(n, [&](const std::vector<int>& images) {
        for (int i = 0; i < n; ++i) {
            const int j = images[i];
            if (j == 0) {
                if (which == Monoid::full) return;
                continue;
            }
            if (images[j - 1] != j) return;
        }
        ++count;
    });
    return count;
}

}  // namespace odun
