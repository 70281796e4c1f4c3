#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// into the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

// p(0..n) by Euler's pentagonal number recurrence.
inline std::vector<std::int64_t> partition_counts(int n) {
    std::vector<std::int64_t> p(n + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const int sign = k % 2 == 1 ? 1 : -1;
            p[m] += sign * p[m - g1];
            if (g2 <= m) p[m] += sign * p[m - g2];
        }
    }
    return p;
}

// Unlabeled rooted trees on 1..n vertices: a(n+1) = (1/n) sum_k (sum_{d|k} d a(d)) a(n-k+1).
inline std::vector<std::int64_t> rooted_tree_counts(int n) {
    std::vector<std::int64_t> a(n + 1, 0);
    if (n >= 1) a[1] = 1;
    for (int m = 1; m < n; ++m) {
        std::int64_t sum = 0;
        for (int k = 1; k <= m; ++k) {
            std::int64_t s = 0;
            for (int d = 1; d <= k; ++d) {
                if (k % d == 0) s += d * a[d];
            }
            sum += s * a[m - k + 1];
        }
        a[m + 1] = sum / m;
    }
    return a;
}

// Hook length formula for the number of standard Young tableaux.
inline std::int64_t hook_length_count(const std::vector<int>& shape) {
    int n = std::accumulate(shape.begin(), shape.end(), 0);
    long double value = 1;
    for (int i = 2; i <= n; ++i) value *= i;
    for (std::size_t r = 0; r < shape.size(); ++r) {
        for (int c = 0; c < shape[r]; ++c) {
            int below = 0;
            for (std::size_t r2 = r + 1; r2 < shape.size() && shape[r2] > c; ++r2) ++below;
            value /= shape[r] - c - 1 + below + 1;
        }
    }
    return static_cast<std::int64_t>(value + 0.5L);
}

// Kostka numbers K_{lambda,mu} by counting semistandard tableaux cell by cell.
inline std::int64_t kostka(const std::vector<int>& lambda, const std::vector<int>& content) {
    std::vector<std::vector<int>> t(lambda.size());
    for (std::size_t r = 0; r < lambda.size(); ++r) t[r].assign(lambda[r], 0);
    std::vector<int> left = content;
    std::function<std::int64_t(std::size_t, int)> fill = [&](std::size_t r, int c) -> std::int64_t {
        if (r == lambda.size()) return 1;
        if (c == lambda[r]) return fill(r + 1, 0);
        std::int64_t total = 0;
        for (std::size_t v = 0; v < left.size(); ++v) {
            if (left[v] == 0) continue;
            const int value = static_cast<int>(v) + 1;
            if (c > 0 && t[r][c - 1] > value) continue;
            if (r > 0 && t[r - 1][c] >= value) continue;
            t[r][c] = value;
            --left[v];
            total += fill(r, c + 1);
            ++left[v];
            t[r][c] = 0;
        }
        return total;
    };
    return fill(0, 0);
}

// Number of permutations of [n] commuting with a map, by direct search.
inline std::int64_t centralizer_size(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    std::int64_t count = 0;
    do {
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i) {
            const int fi = images[i - 1];
            const int lhs = images[pi[i - 1] - 1];
            const int rhs = fi == 0 ? 0 : pi[fi - 1];
            ok = lhs == rhs;
        }
        count += ok;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return count;
}

}  // namespace oracle
