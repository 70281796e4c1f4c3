#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "odun/bigint.hpp"

namespace odun {

/// A partition of a non-negative integer. Parts are stored weakly decreasing;
/// the empty partition is the unique partition of 0. Doubles as a Young
/// diagram shape (English convention, row 0 is the longest row) and as a
/// cycle type.
class Partition {
public:
    Partition() = default;
    /// Parts may be given in any order; zeros are dropped, negatives rejected.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part i (0-based), or 0 past the last row.
    int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    int operator[](std::size_t i) const noexcept { return part(i); }

    int multiplicity(int value) const noexcept;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    /// Lexicographic on the decreasing part sequence.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Term order used for every sparse polynomial in the library: weight
/// ascending, then reverse-lexicographic (lexicographically larger first).
struct TermOrder {
    bool operator()(const Partition& a, const Partition& b) const noexcept {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return b < a;
    }
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

Partition conjugate(const Partition& lambda);
bool is_even(const Partition& lambda);

/// All partitions of n, each once, in reverse-lexicographic order:
/// (n), (n-1,1), (n-2,2), (n-2,1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// z_nu = prod_j j^{m_j} m_j!, the order of the centralizer of a permutation of cycle type nu.
BigInt centralizer_order(const Partition& nu);

/// mu is contained in lambda as Young diagrams.
bool contains(const Partition& lambda, const Partition& mu);

/// Hook length of cell (row, col) of lambda; the cell must lie in lambda.
int hook_length(const Partition& lambda, int row, int col);

/// Partition with multiplicity[j-1] copies of j.
Partition from_multiplicities(const std::vector<int>& multiplicity);

/// Rectangle (value^count).
Partition rectangle(int value, int count);

/// Concatenate the parts of two partitions (the cycle type of a disjoint union).
Partition join(const Partition& a, const Partition& b);

/// Multiply every part by k.
Partition scale(const Partition& lambda, int k);

/// A skew shape outer/inner with inner contained in outer.
struct SkewShape {
    Partition outer;
    Partition inner;
    int size() const noexcept { return outer.weight() - inner.weight(); }
    friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

/// Comma separated parts, e.g. "4,2,2"; "" and "0" denote the empty partition.
/// Increasing input ("1,2,3") is accepted and normalized.
Partition parse_partition(std::string_view text);
/// "lambda/mu", e.g. "4,3,2,2/2,2,1". Rejects mu not contained in lambda.
SkewShape parse_skew(std::string_view text);

/// Decreasing parts joined by commas; the empty partition prints as "".
std::string to_string(const Partition& lambda);
std::ostream& operator<<(std::ostream& os, const Partition& lambda);

}  // namespace odun
