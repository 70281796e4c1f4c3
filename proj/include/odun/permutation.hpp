#pragma once

#include <compare>
#include <string>
#include <vector>

#include "odun/partition.hpp"

namespace odun {

/// A permutation of [n] in one-line notation (1-based images).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);
    /// A permutation of [n] with the given cycle type; cycles occupy
    /// consecutive points in the order of the parts.
    static Permutation with_cycle_type(const Partition& type);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const noexcept { return images_; }

    Permutation inverse() const;
    Partition cycle_type() const;
    /// Disjoint cycles of length >= 2, each starting at its smallest point.
    std::vector<std::vector<int>> cycles() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// (p * q)(i) = p(q(i)).
Permutation operator*(const Permutation& p, const Permutation& q);

/// Cycle notation, e.g. "(1,3)(2,4)"; "()" for the identity.
std::string to_cycle_string(const Permutation& p);

/// All n! permutations in lexicographic order of their images.
std::vector<Permutation> all_permutations(int n);

}  // namespace odun
