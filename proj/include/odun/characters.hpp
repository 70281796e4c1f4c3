#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "odun/bigint.hpp"
#include "odun/execution.hpp"
#include "odun/partition.hpp"

namespace odun {

/// Irreducible characters of S_n. Rows are shapes lambda, columns are cycle
/// types mu, both indexed in partitions_of(n) order.
class CharacterTable {
public:
    int degree() const noexcept { return n_; }
    const std::vector<Partition>& partitions() const noexcept { return partitions_; }
    std::size_t size() const noexcept { return partitions_.size(); }

    /// Position of lambda in partitions(); throws if |lambda| != degree().
    std::size_t index(const Partition& lambda) const;

    std::int64_t at(std::size_t row, std::size_t column) const { return values_[row * size() + column]; }
    std::int64_t value(const Partition& lambda, const Partition& mu) const { return at(index(lambda), index(mu)); }

    /// Builds the table of S_n from scratch. Column mu is the Schur expansion
    /// of p_mu, obtained from column mu - k of the table of S_{n-k} by one
    /// Murnaghan-Nakayama step with k the smallest part of mu. Entries are
    /// checked for 64-bit overflow.
    static CharacterTable build(int n, Execution exec = Execution::parallel);

private:
    friend class CharacterTableBuilder;
    int n_ = 0;
    std::vector<Partition> partitions_;
    std::unordered_map<Partition, std::size_t, PartitionHash> index_;
    std::vector<std::int64_t> values_;
};

/// Shared, lazily built table of S_n. Thread-safe; references stay valid for
/// the lifetime of the program.
const CharacterTable& character_table(int n);

/// chi^lambda(mu) by the recursive Murnaghan-Nakayama rule, removing a rim hook
/// of size equal to the last part of mu at each step. Memoized on (lambda, mu).
/// Independent of CharacterTable.
BigInt char_value(const Partition& lambda, const Partition& mu);

}  // namespace odun
