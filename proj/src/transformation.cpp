#include "odun/transformation.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

namespace odun {

PartialTransformation::PartialTransformation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    for (int v : images_) {
        if (v < 0 || v > n) throw std::invalid_argument("image out of range 0.." + std::to_string(n));
    }
}

PartialTransformation PartialTransformation::identity(int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    return PartialTransformation(std::move(images));
}

PartialTransformation PartialTransformation::zero(int n) { return PartialTransformation(std::vector<int>(n, 0)); }

PartialTransformation PartialTransformation::constant(int r) {
    return PartialTransformation(std::vector<int>(r, 1));
}

bool PartialTransformation::is_idempotent() const { return compose(*this, *this) == *this; }

bool PartialTransformation::is_nilpotent() const { return classify(*this).kind == TransformationKind::nilpotent; }

PartialTransformation parse_map(std::string_view text) {
    std::vector<int> images;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view field = text.substr(pos, end - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
            throw std::invalid_argument("bad map entry '" + std::string(field) + "'");
        }
        images.push_back(value);
        pos = end + 1;
    }
    return PartialTransformation(std::move(images));
}

std::string to_string(const PartialTransformation& f) {
    std::string out;
    for (int i = 1; i <= f.size(); ++i) {
        if (i > 1) out += ",";
        out += std::to_string(f(i));
    }
    return out;
}

PartialTransformation compose(const PartialTransformation& f, const PartialTransformation& g) {
    if (f.size() != g.size()) throw std::invalid_argument("compose: sizes differ");
    std::vector<int> images(g.size(), 0);
    for (int i = 1; i <= g.size(); ++i) {
        if (const int j = g(i); j != 0) images[i - 1] = f(j);
    }
    return PartialTransformation(std::move(images));
}

PartialTransformation power(const PartialTransformation& f, int m) {
    if (m < 0) throw std::invalid_argument("negative power");
    PartialTransformation out = PartialTransformation::identity(f.size());
    for (int i = 0; i < m; ++i) out = compose(f, out);
    return out;
}

PartialTransformation direct_sum(const PartialTransformation& f, const PartialTransformation& g) {
    std::vector<int> images = f.images();
    for (int v : g.images()) images.push_back(v == 0 ? 0 : v + f.size());
    return PartialTransformation(std::move(images));
}

PartialTransformation conjugate(const PartialTransformation& f, const Permutation& pi) {
    if (f.size() != pi.size()) throw std::invalid_argument("conjugate: sizes differ");
    std::vector<int> images(f.size(), 0);
    for (int i = 1; i <= f.size(); ++i) {
        if (const int j = f(i); j != 0) images[pi(i) - 1] = pi(j);
    }
    return PartialTransformation(std::move(images));
}

std::string to_string(TransformationKind kind) {
    switch (kind) {
        case TransformationKind::nilpotent: return "nilpotent";
        case TransformationKind::idempotent_diagonal: return "idempotent-diagonal";
        case TransformationKind::idempotent_general: return "idempotent-general";
        case TransformationKind::in_n: return "in-N(n,k)";
        case TransformationKind::other: return "other";
    }
    return "other";
}

namespace {

std::vector<char> cyclic_points(const PartialTransformation& f) {
    const int n = f.size();
    std::vector<char> cyclic(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        int j = f(i);
        for (int step = 0; step < n && j != 0 && j != i; ++step) j = f(j);
        cyclic[i] = j == i;
    }
    return cyclic;
}

// True iff no point off the cycles ever reaches a cycle.
bool cycles_are_isolated(const PartialTransformation& f, const std::vector<char>& cyclic) {
    for (int i = 1; i <= f.size(); ++i) {
        if (cyclic[i]) continue;
        for (int j = f(i), step = 0; j != 0 && step <= f.size(); j = f(j), ++step) {
            if (cyclic[j]) return false;
        }
    }
    return true;
}

}  // namespace

Classification classify(const PartialTransformation& f) {
    const auto cyclic = cyclic_points(f);
    const int k = static_cast<int>(std::count(cyclic.begin(), cyclic.end(), 1));
    const bool isolated = cycles_are_isolated(f, cyclic);
    if (k == 0) return {TransformationKind::nilpotent, 0};
    if (f.is_idempotent()) {
        for (int i = 1; i <= f.size(); ++i) {
            if (f(i) != 0 && f(i) != i) return {TransformationKind::idempotent_general, -1};
        }
        return {TransformationKind::idempotent_diagonal, k};
    }
    if (isolated) return {TransformationKind::in_n, k};
    return {TransformationKind::other, -1};
}

RootedForest forest_from_nilpotent(const PartialTransformation& f) {
    if (classify(f).kind != TransformationKind::nilpotent) throw std::invalid_argument("map is not nilpotent");
    return canonicalize(f.images());
}

PartialTransformation nilpotent_from_forest(const RootedForest& forest) {
    return PartialTransformation(canonical_parents(forest));
}

std::pair<Partition, RootedForest> split_block(const PartialTransformation& f) {
    const auto cyclic = cyclic_points(f);
    if (!cycles_are_isolated(f, cyclic)) throw std::invalid_argument("map does not lie in any N(n,k)");
    const int n = f.size();
    std::vector<int> lengths;
    std::vector<char> seen(n + 1, 0);
    std::vector<int> relabel(n + 1, 0);
    int next = 0;
    for (int i = 1; i <= n; ++i) {
        if (!cyclic[i]) {
            relabel[i] = ++next;
            continue;
        }
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = f(j)) {
            seen[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::vector<int> parents;
    for (int i = 1; i <= n; ++i) {
        if (!cyclic[i]) parents.push_back(f(i) == 0 ? 0 : relabel[f(i)]);
    }
    return {Partition(std::move(lengths)), canonicalize(parents)};
}

PartialTransformation from_block_form(const LoopAugmentedForest& f) {
    const Permutation sigma = Permutation::with_cycle_type(f.sigma_type);
    std::vector<int> images = sigma.images();
    const int k = sigma.size();
    for (int p : canonical_parents(f.forest)) images.push_back(p == 0 ? 0 : p + k);
    return PartialTransformation(std::move(images));
}

StandardForm standardize_idempotent(const PartialTransformation& e) {
    if (!e.is_idempotent()) throw std::invalid_argument("map is not idempotent");
    const int n = e.size();
    StandardForm out;
    PartialTransformation cur = e;
    Permutation sigma = Permutation::identity(n);
    auto apply = [&](int a, int b) {
        const Permutation t = Permutation::transposition(n, a, b);
        cur = conjugate(cur, t);
        sigma = t * sigma;
        out.transpositions.emplace_back(std::min(a, b), std::max(a, b));
    };

    int p = 1;
    while (p <= n) {
        int fixed = p;
        while (fixed <= n && cur(fixed) != fixed) ++fixed;
        if (fixed > n) break;
        if (fixed != p) apply(p, fixed);
        int q = p + 1;
        while (true) {
            int j = q;
            while (j <= n && cur(j) != p) ++j;
            if (j > n) break;
            if (j != q) apply(q, j);
            ++q;
        }
        out.sweep_blocks.push_back(q - p);
        p = q;
    }
    out.zero_rank = n - p + 1;

    // Stable sort of the blocks by size, realised as a relabeling of points.
    const auto& sweep = out.sweep_blocks;
    std::vector<std::size_t> order(sweep.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sweep[a] > sweep[b]; });
    std::vector<int> old_start(sweep.size());
    for (std::size_t b = 0, pos = 1; b < sweep.size(); pos += sweep[b], ++b) old_start[b] = static_cast<int>(pos);
    std::vector<int> rho = Permutation::identity(n).images();
    int pos = 1;
    for (std::size_t b : order) {
        for (int o = 0; o < sweep[b]; ++o) rho[old_start[b] + o - 1] = pos + o;
        out.blocks.push_back(sweep[b]);
        pos += sweep[b];
    }
    // A cycle a1 -> a2 -> ... -> ar equals (a1 a2)(a2 a3)...(a_{r-1} a_r).
    for (const auto& cycle : Permutation(rho).cycles()) {
        for (std::size_t i = cycle.size() - 1; i >= 1; --i) apply(cycle[i - 1], cycle[i]);
    }

    PartialTransformation expected = PartialTransformation(std::vector<int>{});
    for (int b : out.blocks) expected = direct_sum(expected, PartialTransformation::constant(b));
    expected = direct_sum(expected, PartialTransformation::zero(out.zero_rank));
    if (cur != expected || conjugate(e, sigma) != cur) {
        throw std::logic_error("standardization did not reach the standard form of " + to_string(e));
    }
    out.standard = cur;
    out.witness = sigma;
    return out;
}

std::string block_descriptor(const std::vector<int>& blocks, int zero_rank) {
    std::string out;
    for (int b : blocks) {
        if (!out.empty()) out += "+";
        out += "c" + std::to_string(b);
    }
    if (zero_rank > 0) {
        if (!out.empty()) out += "+";
        out += "z" + std::to_string(zero_rank);
    }
    return out.empty() ? "z0" : out;
}

std::string transposition_product(const std::vector<std::pair<int, int>>& transpositions) {
    if (transpositions.empty()) return "()";
    std::string out;
    for (auto it = transpositions.rbegin(); it != transpositions.rend(); ++it) {
        out += "(" + std::to_string(it->first) + "," + std::to_string(it->second) + ")";
    }
    return out;
}

WreathDecomposition stabilizer_of_idempotent(const PartialTransformation& e) {
    const StandardForm st = standardize_idempotent(e);
    WreathDecomposition out;
    out.zero_rank = st.zero_rank;
    for (int b : st.blocks) {
        if (!out.blocks.empty() && out.blocks.back().first == b) {
            ++out.blocks.back().second;
        } else {
            out.blocks.emplace_back(b, 1);
        }
    }
    out.order = factorial(st.zero_rank);
    out.alternative_order = out.order;
    for (const auto& [beta, m] : out.blocks) {
        out.order *= factorial(m) * ipow(factorial(beta - 1), m);
        out.alternative_order *= factorial(m) * ipow(factorial(beta), m);
    }
    if (out.order != out.alternative_order) {
        out.note = "wreath factors S_m wr S_beta would give order " + out.alternative_order.get_str() +
                   "; the stabilizer uses S_m wr S_(beta-1)";
    }
    return out;
}

BigInt idempotent_count(int n, Monoid which) {
    if (n < 1) throw std::invalid_argument("idempotent_count requires n >= 1");
    BigInt total = 0;
    for (int k = which == Monoid::partial ? 0 : 1; k <= n; ++k) {
        const int base = which == Monoid::partial ? k + 1 : k;
        total += binomial(n, k) * ipow(base, n - k);
    }
    return total;
}

}  // namespace odun
