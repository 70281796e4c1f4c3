#include "odun/forest.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>

namespace odun {

RootedTree::RootedTree(std::vector<RootedTree> children) : children_(std::move(children)) {
    std::sort(children_.begin(), children_.end(), canonical_before);
    code_ = "(";
    for (const RootedTree& c : children_) {
        size_ += c.size_;
        code_ += c.code_;
    }
    code_ += ")";
}

bool RootedTree::is_chain() const noexcept {
    const RootedTree* t = this;
    while (!t->children_.empty()) {
        if (t->children_.size() > 1) return false;
        t = &t->children_.front();
    }
    return true;
}

bool canonical_before(const RootedTree& a, const RootedTree& b) noexcept {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.code() > b.code();
}

RootedForest::RootedForest(std::vector<RootedTree> trees) : trees_(std::move(trees)) {
    std::sort(trees_.begin(), trees_.end(), canonical_before);
    for (const RootedTree& t : trees_) size_ += t.size();
}

std::string RootedForest::code() const {
    std::string out;
    for (const RootedTree& t : trees_) out += t.code();
    return out;
}

std::vector<std::pair<RootedTree, int>> RootedForest::components() const {
    std::vector<std::pair<RootedTree, int>> out;
    for (const RootedTree& t : trees_) {
        if (!out.empty() && out.back().first == t) {
            ++out.back().second;
        } else {
            out.emplace_back(t, 1);
        }
    }
    return out;
}

namespace {

std::vector<RootedTree> parse_sequence(std::string_view text, std::size_t& pos) {
    std::vector<RootedTree> out;
    while (pos < text.size() && text[pos] == '(') {
        ++pos;
        std::vector<RootedTree> children = parse_sequence(text, pos);
        if (pos >= text.size() || text[pos] != ')') throw std::invalid_argument("unbalanced forest string");
        ++pos;
        out.emplace_back(std::move(children));
    }
    return out;
}

}  // namespace

RootedForest parse_forest(std::string_view text) {
    std::size_t pos = 0;
    std::vector<RootedTree> trees = parse_sequence(text, pos);
    if (pos != text.size()) throw std::invalid_argument("malformed forest string: " + std::string(text));
    return RootedForest(std::move(trees));
}

RootedTree parse_tree(std::string_view text) {
    RootedForest f = parse_forest(text);
    if (f.trees().size() != 1) throw std::invalid_argument("expected exactly one tree: " + std::string(text));
    return f.trees().front();
}

RootedForest canonicalize(const std::vector<int>& parents) {
    const int n = static_cast<int>(parents.size());
    std::vector<std::vector<int>> children(n + 1);
    for (int v = 1; v <= n; ++v) {
        const int p = parents[v - 1];
        if (p < 0 || p > n || p == v) throw std::invalid_argument("not a forest: bad parent of vertex " + std::to_string(v));
        children[p].push_back(v);
    }
    // Every vertex must be reached from the roots; anything else lies on a cycle.
    std::vector<int> order;
    std::vector<int> stack = children[0];
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int c : children[v]) stack.push_back(c);
    }
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("not a forest: parent sequence has a cycle");
    std::vector<RootedTree> built(n + 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::vector<RootedTree> kids;
        for (int c : children[*it]) kids.push_back(std::move(built[c]));
        built[*it] = RootedTree(std::move(kids));
    }
    std::vector<RootedTree> trees;
    for (int r : children[0]) trees.push_back(std::move(built[r]));
    return RootedForest(std::move(trees));
}

std::vector<int> canonical_parents(const RootedForest& forest) {
    const int n = forest.size();
    std::vector<int> parents(n, 0);
    std::deque<std::pair<const RootedTree*, int>> queue;
    for (const RootedTree& t : forest.trees()) queue.emplace_back(&t, 0);
    int label = n;
    while (!queue.empty()) {
        auto [tree, parent] = queue.front();
        queue.pop_front();
        const int v = label--;
        parents[v - 1] = parent;
        for (const RootedTree& c : tree->children()) queue.emplace_back(&c, v);
    }
    return parents;
}

namespace {

constexpr int kMaxForest = 12;

std::mutex enumeration_mutex;
// Deques so that references handed out stay valid as the caches grow.
std::deque<std::vector<RootedTree>> tree_cache;
std::deque<std::vector<RootedForest>> forest_cache;

// Forests of weight n whose trees come from `pool` (canonically sorted) at
// positions >= start, listed in non-increasing canonical order.
void extend(const std::vector<RootedTree>& pool, std::size_t start, int remaining, std::vector<RootedTree>& prefix,
            std::vector<RootedForest>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
        if (pool[i].size() > remaining) continue;
        prefix.push_back(pool[i]);
        extend(pool, i, remaining - pool[i].size(), prefix, out);
        prefix.pop_back();
    }
}

// Trees on m vertices are the forests on m - 1 vertices under a new root.
void add_trees() {
    const int m = static_cast<int>(tree_cache.size());
    std::vector<RootedTree> trees;
    for (const RootedForest& f : forest_cache[m - 1]) trees.push_back(f.with_root());
    std::sort(trees.begin(), trees.end(), canonical_before);
    tree_cache.push_back(std::move(trees));
}

void build_until(int n) {
    if (tree_cache.empty()) {
        forest_cache.push_back({RootedForest()});
        tree_cache.push_back({});
    }
    while (static_cast<int>(forest_cache.size()) <= n) {
        const int m = static_cast<int>(forest_cache.size());
        if (static_cast<int>(tree_cache.size()) == m) add_trees();

        std::vector<RootedTree> pool;
        for (int s = m; s >= 1; --s) pool.insert(pool.end(), tree_cache[s].begin(), tree_cache[s].end());
        std::vector<RootedForest> forests;
        std::vector<RootedTree> prefix;
        extend(pool, 0, m, prefix, forests);
        forest_cache.push_back(std::move(forests));
    }
}

}  // namespace

const std::vector<RootedTree>& enumerate_trees(int n) {
    if (n < 1 || n > kMaxForest + 1) throw std::out_of_range("tree enumeration supports 1 <= n <= 13");
    std::lock_guard lock(enumeration_mutex);
    build_until(n - 1);
    while (static_cast<int>(tree_cache.size()) <= n) add_trees();
    return tree_cache[n];
}

const std::vector<RootedForest>& enumerate_forests(int n) {
    if (n < 0 || n > kMaxForest) throw std::out_of_range("forest enumeration supports 0 <= n <= 12");
    std::lock_guard lock(enumeration_mutex);
    build_until(n);
    return forest_cache[n];
}

BigInt count_labeled(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::out_of_range("count_labeled requires 1 <= k <= n");
    return binomial(n - 1, k - 1) * ipow(n, n - k);
}

BigInt count_loop_augmented(int n, int k) { return ipow(2, k) * count_labeled(n, k); }

BigInt count_loop_augmented_total(int n) {
    if (n < 2) throw std::out_of_range("count_loop_augmented_total requires n >= 2");
    if (n == 2) return 1;  // 2 * 2^(-1)
    return 2 * ipow(n, n - 3);
}

BigInt sum_loop_augmented(int n) {
    BigInt total = 0;
    for (int k = 1; k <= n; ++k) total += count_loop_augmented(n, k);
    return total;
}

namespace {

// Returns the chain length of `tree` if it is a chain, else 0; records the
// branches hanging from each branching vertex.
int collect_branches(const RootedTree& tree, std::vector<std::vector<int>>& out) {
    if (tree.children().empty()) return 1;
    if (tree.children().size() == 1) {
        const int below = collect_branches(tree.children().front(), out);
        return below > 0 ? below + 1 : 0;
    }
    std::vector<int> here;
    for (const RootedTree& c : tree.children()) {
        const int len = collect_branches(c, out);
        if (len > 0) here.push_back(len);
    }
    if (!here.empty()) out.push_back(std::move(here));
    return 0;
}

}  // namespace

std::vector<std::vector<int>> maximal_terminal_branches(const RootedTree& tree) {
    std::vector<std::vector<int>> out;
    if (const int len = collect_branches(tree, out); len > 0) out.push_back({len});
    return out;
}

bool is_blossoming(const RootedForest& forest) {
    for (std::vector<int>& group : maximal_terminal_branches(forest.with_root())) {
        std::vector<int> odd;
        for (int len : group) {
            if (len % 2 == 1) odd.push_back(len);
        }
        std::sort(odd.begin(), odd.end());
        if (std::adjacent_find(odd.begin(), odd.end()) != odd.end()) return false;
    }
    return true;
}

namespace {

BigInt branch_symmetry(const std::vector<RootedTree>& branches) {
    BigInt order = 1;
    std::size_t i = 0;
    while (i < branches.size()) {
        std::size_t j = i;
        while (j < branches.size() && branches[j] == branches[i]) ++j;
        order *= factorial(static_cast<unsigned>(j - i));
        for (std::size_t t = i; t < j; ++t) order *= branch_symmetry(branches[t].children());
        i = j;
    }
    return order;
}

}  // namespace

BigInt automorphism_order(const RootedForest& forest) { return branch_symmetry(forest.trees()); }

BigInt dim_odun(const RootedForest& forest) {
    return factorial(static_cast<unsigned>(forest.size())) / automorphism_order(forest);
}

LoopAugmentedForest LoopAugmentedForest::with_loops(int k, RootedForest forest) {
    if (k < 0) throw std::invalid_argument("negative loop count");
    return {k, std::move(forest), rectangle(1, k)};
}

LoopAugmentedForest LoopAugmentedForest::block_form(Partition sigma_type, RootedForest forest) {
    const int k = sigma_type.weight();
    return {k, std::move(forest), std::move(sigma_type)};
}

}  // namespace odun
