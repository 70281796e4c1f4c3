#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "odun/bigint.hpp"
#include "odun/forest.hpp"
#include "odun/partition.hpp"
#include "odun/permutation.hpp"

namespace odun {

/// A partial function on [n]. images[i-1] is the image of i, or 0 when i is
/// outside the domain. As a 0/1 matrix, entry (i, j) is 1 iff images[i-1] = j.
class PartialTransformation {
public:
    PartialTransformation() = default;
    explicit PartialTransformation(std::vector<int> images);

    static PartialTransformation identity(int n);
    static PartialTransformation zero(int n);
    /// c^(r): every point of [r] goes to 1.
    static PartialTransformation constant(int r);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    /// Image of i, 0 if undefined.
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const noexcept { return images_; }

    bool is_idempotent() const;
    bool is_nilpotent() const;

    friend auto operator<=>(const PartialTransformation&, const PartialTransformation&) = default;

private:
    std::vector<int> images_;
};

/// "3,0,3" -> 1 -> 3, 2 undefined, 3 -> 3.
PartialTransformation parse_map(std::string_view text);
std::string to_string(const PartialTransformation& f);

/// (f o g)(i) = f(g(i)), defined iff g(i) and f(g(i)) are.
PartialTransformation compose(const PartialTransformation& f, const PartialTransformation& g);
PartialTransformation power(const PartialTransformation& f, int m);

/// Block sum: g acts on the points after those of f.
PartialTransformation direct_sum(const PartialTransformation& f, const PartialTransformation& g);

/// pi f pi^-1, i.e. the map sending pi(i) to pi(f(i)).
PartialTransformation conjugate(const PartialTransformation& f, const Permutation& pi);

enum class TransformationKind { nilpotent, idempotent_diagonal, idempotent_general, in_n, other };

struct Classification {
    TransformationKind kind = TransformationKind::other;
    /// Rank of the diagonal idempotent some power of f is conjugate to; -1 if none.
    int k = -1;
};

std::string to_string(TransformationKind kind);

/// f lies in N(n, k) iff every point whose forward orbit reaches a cycle lies
/// on that cycle; k is then the number of cyclic points. Nilpotent maps are N(n, 0).
Classification classify(const PartialTransformation& f);

/// Child -> parent edges of a nilpotent map, as a forest.
RootedForest forest_from_nilpotent(const PartialTransformation& f);
/// The nilpotent map of the canonical labeling of the forest.
PartialTransformation nilpotent_from_forest(const RootedForest& forest);

/// For f in N(n, k): the cycle type of the permutation on the cyclic points
/// and the forest on the remaining points.
std::pair<Partition, RootedForest> split_block(const PartialTransformation& f);

/// The block form: a permutation of cycle type sigma_type on 1..k followed by
/// the canonical labeling of the forest on k+1..n.
PartialTransformation from_block_form(const LoopAugmentedForest& f);

struct StandardForm {
    PartialTransformation standard;
    /// st = witness * e * witness^-1.
    Permutation witness;
    /// Transpositions in the order they were applied.
    std::vector<std::pair<int, int>> transpositions;
    /// Constant block sizes in sweep order, before sorting.
    std::vector<int> sweep_blocks;
    /// Constant block sizes, weakly decreasing.
    std::vector<int> blocks;
    int zero_rank = 0;
};

/// Conjugates an idempotent to c^(b1) + ... + c^(br) + 0_m with b1 >= ... >= br.
/// The sweep handles the smallest fixed point not yet placed, moves it to the
/// next free position p, then pulls its preimages to p+1, p+2, ...; the blocks
/// are then stably sorted by size. Rejects non-idempotent input.
StandardForm standardize_idempotent(const PartialTransformation& e);

/// "c3+c2+c1+z1"; the zero block is omitted when empty.
std::string block_descriptor(const std::vector<int>& blocks, int zero_rank);
/// Product of the transpositions, last applied leftmost, e.g. "(2,3)(1,3)".
std::string transposition_product(const std::vector<std::pair<int, int>>& transpositions);

struct WreathDecomposition {
    /// (beta, multiplicity) with beta strictly decreasing.
    std::vector<std::pair<int, int>> blocks;
    int zero_rank = 0;
    /// prod m_i! ((beta_i - 1)!)^m_i * m!
    BigInt order;
    /// prod m_i! (beta_i!)^m_i * m!, the order if the wreath factors were S_{m_i} wr S_{beta_i}.
    BigInt alternative_order;
    std::string note;
};

/// The stabilizer of an idempotent under conjugation: prod S_{m_i} wr S_{beta_i - 1} x S_m.
WreathDecomposition stabilizer_of_idempotent(const PartialTransformation& e);

enum class Monoid { partial, full };

/// Idempotents of the partial transformation monoid P_n or the full
/// transformation monoid T_n, by the closed forms.
BigInt idempotent_count(int n, Monoid which);

}  // namespace odun
