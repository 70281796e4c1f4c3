#pragma once

#include <compare>
#include <vector>

#include "odun/partition.hpp"

namespace odun {

struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A rim hook (border strip) outer/inner: an edge-connected run of boundary
/// cells of `outer` containing no 2x2 square whose removal leaves `inner`.
struct RimHook {
    Partition outer;
    Partition inner;
    std::vector<Cell> cells;  // sorted by (row, col)
    int rows_spanned = 0;
    int columns_spanned = 0;
    bool special = false;             // has a cell in the first column of outer
    bool transposed_special = false;  // has a cell in the first row of outer

    int size() const noexcept { return static_cast<int>(cells.size()); }
    int sign() const noexcept { return (rows_spanned - 1) % 2 == 0 ? 1 : -1; }
};

/// Rim hooks of size k that can be removed from lambda. Each one starts at the
/// end of a row and walks the north-east boundary down to the bottom of a
/// column; there is exactly one per cell of hook length k.
std::vector<RimHook> removable_rim_hooks(const Partition& lambda, int k);

/// Shapes lambda containing mu such that lambda/mu is a rim hook of size k.
std::vector<RimHook> addable_rim_hooks(const Partition& mu, int k);

}  // namespace odun
