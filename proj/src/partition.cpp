#include "odun/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace odun {

Partition::Partition(std::vector<int> parts) {
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("partition parts must be non-negative");
    }
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    parts_ = std::move(parts);
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int value) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : p.parts()) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols(lambda.empty() ? 0 : lambda.part(0), 0);
    for (int row : lambda.parts()) {
        for (int j = 0; j < row; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
}

bool is_even(const Partition& lambda) {
    return std::all_of(lambda.parts().begin(), lambda.parts().end(), [](int p) { return p % 2 == 0; });
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        generate(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    generate(n, n, prefix, out);
    return out;
}

BigInt centralizer_order(const Partition& nu) {
    BigInt z = 1;
    const auto& parts = nu.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const auto m = static_cast<unsigned>(j - i);
        z *= ipow(BigInt(parts[i]), m) * factorial(m);
        i = j;
    }
    return z;
}

bool contains(const Partition& lambda, const Partition& mu) {
    if (mu.length() > lambda.length()) return false;
    for (std::size_t i = 0; i < mu.length(); ++i) {
        if (mu[i] > lambda[i]) return false;
    }
    return true;
}

int hook_length(const Partition& lambda, int row, int col) {
    const int arm = lambda.part(row) - col - 1;
    int leg = 0;
    for (std::size_t r = row + 1; r < lambda.length() && lambda[r] > col; ++r) ++leg;
    return arm + leg + 1;
}

Partition from_multiplicities(const std::vector<int>& multiplicity) {
    std::vector<int> parts;
    for (std::size_t j = 0; j < multiplicity.size(); ++j) {
        parts.insert(parts.end(), multiplicity[j], static_cast<int>(j + 1));
    }
    return Partition(std::move(parts));
}

Partition rectangle(int value, int count) {
    return Partition(std::vector<int>(count, value));
}

Partition join(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Partition(std::move(parts));
}

Partition scale(const Partition& lambda, int k) {
    std::vector<int> parts = lambda.parts();
    for (int& p : parts) p *= k;
    return Partition(std::move(parts));
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Partition parse_partition(std::string_view text) {
    text = trim(text);
    if (!text.empty() && (text.front() == '(' || text.front() == '[')) {
        if (text.size() < 2 || (text.back() != ')' && text.back() != ']')) {
            throw std::invalid_argument("unbalanced brackets in partition: " + std::string(text));
        }
        text = trim(text.substr(1, text.size() - 2));
    }
    std::vector<int> parts;
    if (text.empty()) return Partition();
    while (true) {
        const auto comma = text.find(',');
        const auto token = trim(text.substr(0, comma));
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
            throw std::invalid_argument("malformed partition: " + std::string(text));
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

SkewShape parse_skew(std::string_view text) {
    const auto slash = text.find('/');
    SkewShape shape;
    shape.outer = parse_partition(text.substr(0, slash));
    if (slash != std::string_view::npos) shape.inner = parse_partition(text.substr(slash + 1));
    if (!contains(shape.outer, shape.inner)) {
        throw std::invalid_argument("skew shape: inner partition is not contained in outer");
    }
    return shape;
}

std::string to_string(const Partition& lambda) {
    std::string out;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(lambda[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& lambda) {
    return os << '(' << to_string(lambda) << ')';
}

}  // namespace odun
