#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "odun/bigint.hpp"
#include "odun/partition.hpp"

namespace odun {

/// Unlabeled rooted tree in canonical form. Children are kept sorted by size
/// descending, then by encoding descending; the encoding is the balanced
/// parenthesization, e.g. "(()())" for a root with two leaves.
class RootedTree {
public:
    RootedTree() : RootedTree(std::vector<RootedTree>{}) {}
    explicit RootedTree(std::vector<RootedTree> children);

    const std::vector<RootedTree>& children() const noexcept { return children_; }
    int size() const noexcept { return size_; }
    const std::string& code() const noexcept { return code_; }
    bool is_chain() const noexcept;

    friend bool operator==(const RootedTree& a, const RootedTree& b) { return a.code_ == b.code_; }

private:
    std::vector<RootedTree> children_;
    int size_ = 1;
    std::string code_;
};

/// Canonical order of branches: larger first, ties by encoding descending.
bool canonical_before(const RootedTree& a, const RootedTree& b) noexcept;

/// Unlabeled rooted forest in canonical form; equal encodings iff isomorphic.
class RootedForest {
public:
    RootedForest() = default;
    explicit RootedForest(std::vector<RootedTree> trees);

    const std::vector<RootedTree>& trees() const noexcept { return trees_; }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return trees_.empty(); }
    /// Concatenated tree encodings, "" for the empty forest.
    std::string code() const;

    /// Distinct components with their multiplicities, in canonical order.
    std::vector<std::pair<RootedTree, int>> components() const;

    /// The tree obtained by joining every component under a new root.
    RootedTree with_root() const { return RootedTree(trees_); }

    friend bool operator==(const RootedForest& a, const RootedForest& b) { return a.trees_ == b.trees_; }

private:
    std::vector<RootedTree> trees_;
    int size_ = 0;
};

/// Forest from its text form, e.g. "(()())()" ; "" is the empty forest.
RootedForest parse_forest(std::string_view text);
RootedTree parse_tree(std::string_view text);

/// Forest from a parent sequence: parents[i-1] is the parent of vertex i
/// (1-based), 0 for a root. Rejects cycles and out-of-range parents.
RootedForest canonicalize(const std::vector<int>& parents);

/// One labeling of the forest as a parent sequence. Vertices are labelled
/// level by level from the roots, left to right in canonical order, starting
/// from n and counting down.
std::vector<int> canonical_parents(const RootedForest& forest);

/// All isomorphism classes of rooted trees on n vertices (1 <= n <= 13).
const std::vector<RootedTree>& enumerate_trees(int n);
/// All isomorphism classes of rooted forests on n vertices (0 <= n <= 12).
const std::vector<RootedForest>& enumerate_forests(int n);

/// Labeled rooted forests on [n] with k roots: C(n-1, k-1) n^(n-k).
BigInt count_labeled(int n, int k);
/// Loop-augmented forests on [n] with k roots, each root optionally looped:
/// 2^k C(n-1, k-1) n^(n-k).
BigInt count_loop_augmented(int n, int k);
/// The closed form 2 n^(n-3) offered for the total number of loop-augmented
/// forests on n >= 2 vertices. It does not agree with the sum over k of
/// count_loop_augmented, which is sum_loop_augmented.
BigInt count_loop_augmented_total(int n);
/// Sum over k of count_loop_augmented(n, k), equal to 2 (n+2)^(n-1).
BigInt sum_loop_augmented(int n);

/// Lengths of the maximal terminal branches of a tree, grouped by the vertex
/// they hang from. A branch is a maximal chain subtree; its length is its
/// vertex count. A tree that is itself a chain is one branch with no parent.
std::vector<std::vector<int>> maximal_terminal_branches(const RootedTree& tree);

/// Joins the components under a new root; blossoming iff no vertex carries two
/// odd maximal terminal branches of the same length. Otherwise the forest is dry.
bool is_blossoming(const RootedForest& forest);

/// Order of the automorphism group: the product over all vertices, including a
/// virtual root over the components, of prod_b m_b! where m_b counts copies of
/// the branch b directly below that vertex.
BigInt automorphism_order(const RootedForest& forest);

/// n! / automorphism_order: the dimension of the relabeling module of the forest.
BigInt dim_odun(const RootedForest& forest);

/// A loop count k plus a forest on the remaining vertices. sigma_type is the
/// cycle type of the permutation block; (1^k) for a genuine loop-augmented
/// forest.
struct LoopAugmentedForest {
    int loops = 0;
    RootedForest forest;
    Partition sigma_type;

    static LoopAugmentedForest with_loops(int k, RootedForest forest);
    static LoopAugmentedForest block_form(Partition sigma_type, RootedForest forest);

    int size() const noexcept { return loops + forest.size(); }
    bool is_loop_augmented() const { return sigma_type == rectangle(1, loops); }
    friend bool operator==(const LoopAugmentedForest&, const LoopAugmentedForest&) = default;
};

}  // namespace odun
