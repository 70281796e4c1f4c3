#include "odun/rim_hook.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace odun {

namespace {

void fill_statistics(RimHook& hook) {
    std::sort(hook.cells.begin(), hook.cells.end());
    std::set<int> rows;
    std::set<int> cols;
    for (const Cell& c : hook.cells) {
        rows.insert(c.row);
        cols.insert(c.col);
        if (c.col == 0) hook.special = true;
        if (c.row == 0) hook.transposed_special = true;
    }
    hook.rows_spanned = static_cast<int>(rows.size());
    hook.columns_spanned = static_cast<int>(cols.size());
}

}  // namespace

std::vector<RimHook> removable_rim_hooks(const Partition& lambda, int k) {
    if (k < 1) throw std::invalid_argument("rim hook size must be positive");
    std::vector<RimHook> hooks;
    const Partition columns = conjugate(lambda);
    for (int i = 0; i < static_cast<int>(lambda.length()); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            if (hook_length(lambda, i, j) != k) continue;
            // The strip runs from (i, lambda_i - 1) along the rim to (bottom, j).
            const int bottom = columns[j] - 1;
            std::vector<int> rows = lambda.parts();
            RimHook hook;
            hook.outer = lambda;
            for (int r = i; r <= bottom; ++r) {
                const int new_len = r < bottom ? lambda[r + 1] - 1 : j;
                for (int c = new_len; c < lambda[r]; ++c) hook.cells.push_back({r, c});
                rows[r] = new_len;
            }
            hook.inner = Partition(std::move(rows));
            fill_statistics(hook);
            hooks.push_back(std::move(hook));
        }
    }
    return hooks;
}

std::vector<RimHook> addable_rim_hooks(const Partition& mu, int k) {
    if (k < 1) throw std::invalid_argument("rim hook size must be positive");
    // Beta-set (abacus) form: bead positions mu_i + (L - 1 - i). Adding a k-strip
    // moves one bead k steps up into an empty position.
    const int length = static_cast<int>(mu.length()) + k;
    std::vector<int> beads(length);
    std::vector<char> occupied;
    int top = 0;
    for (int i = 0; i < length; ++i) {
        beads[i] = mu.part(i) + (length - 1 - i);
        top = std::max(top, beads[i]);
    }
    occupied.assign(top + k + 1, 0);
    for (int b : beads) occupied[b] = 1;

    std::vector<RimHook> hooks;
    for (int i = 0; i < length; ++i) {
        const int target = beads[i] + k;
        if (occupied[target]) continue;
        std::vector<int> moved = beads;
        moved[i] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> parts(length);
        for (int r = 0; r < length; ++r) parts[r] = moved[r] - (length - 1 - r);

        RimHook hook;
        hook.inner = mu;
        hook.outer = Partition(parts);
        for (int r = 0; r < length; ++r) {
            for (int c = mu.part(r); c < parts[r]; ++c) hook.cells.push_back({r, c});
        }
        fill_statistics(hook);
        hooks.push_back(std::move(hook));
    }
    // Deterministic order: by resulting shape, reverse-lexicographic.
    std::sort(hooks.begin(), hooks.end(), [](const RimHook& a, const RimHook& b) { return b.outer < a.outer; });
    return hooks;
}

}  // namespace odun
