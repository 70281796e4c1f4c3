#include "odun/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace odun {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size() + 1, 0);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[v]) throw std::invalid_argument("not a permutation");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p = identity(n);
    std::swap(p.images_.at(a - 1), p.images_.at(b - 1));
    return p;
}

Permutation Permutation::with_cycle_type(const Partition& type) {
    std::vector<int> images;
    int start = 1;
    for (int len : type.parts()) {
        for (int i = 0; i < len; ++i) images.push_back(start + (i + 1) % len);
        start += len;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

Partition Permutation::cycle_type() const {
    std::vector<int> lengths;
    std::vector<char> seen(images_.size() + 1, 0);
    for (int i = 1; i <= size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images_[j - 1]) {
            seen[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition(std::move(lengths));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size() + 1, 0);
    for (int i = 1; i <= size(); ++i) {
        if (seen[i] || images_[i - 1] == i) continue;
        std::vector<int> cycle;
        for (int j = i; !seen[j]; j = images_[j - 1]) {
            seen[j] = 1;
            cycle.push_back(j);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("permutation sizes differ");
    std::vector<int> images(q.size());
    for (int i = 1; i <= q.size(); ++i) images[i - 1] = p(q(i));
    return Permutation(std::move(images));
}

std::string to_cycle_string(const Permutation& p) {
    const auto cycles = p.cycles();
    if (cycles.empty()) return "()";
    std::string out;
    for (const auto& cycle : cycles) {
        out += "(";
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(cycle[i]);
        }
        out += ")";
    }
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

}  // namespace odun
