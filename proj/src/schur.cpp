#include "odun/schur.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "odun/memo.hpp"
#include "odun/rim_hook.hpp"

namespace odun {

SchurPolynomial SchurPolynomial::schur(const Partition& lambda, const BigInt& coeff) {
    SchurPolynomial f;
    f.add_term(lambda, coeff);
    return f;
}

SchurPolynomial SchurPolynomial::complete(int k) {
    if (k < 0) return {};
    return schur(Partition{k});
}

SchurPolynomial SchurPolynomial::elementary(int k) {
    if (k < 0) return {};
    return schur(rectangle(1, k));
}

BigInt SchurPolynomial::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void SchurPolynomial::add_term(const Partition& lambda, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

std::optional<int> SchurPolynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.begin()->first.weight();
    if (terms_.rbegin()->first.weight() != d) return std::nullopt;
    return d;
}

bool SchurPolynomial::is_homogeneous() const { return terms_.empty() || degree().has_value(); }

bool SchurPolynomial::has_nonnegative_coefficients() const {
    for (const auto& [lambda, c] : terms_) {
        if (c < 0) return false;
    }
    return true;
}

SchurPolynomial& SchurPolynomial::operator+=(const SchurPolynomial& other) {
    for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
    return *this;
}

SchurPolynomial& SchurPolynomial::operator-=(const SchurPolynomial& other) {
    for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
    return *this;
}

SchurPolynomial& SchurPolynomial::operator*=(const BigInt& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [lambda, c] : terms_) c *= scalar;
    return *this;
}

std::string to_string(const SchurPolynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [lambda, c] : f.terms()) {
        BigInt magnitude = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (magnitude != 1) out << magnitude.get_str() << " ";
        out << "s[" << to_string(lambda) << "]";
        first = false;
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& os, const SchurPolynomial& f) { return os << to_string(f); }

namespace {

// One cell of the filling being placed, numbered in reverse lexicographic
// order (row 0 right to left, then row 1, ...).
struct FillStep {
    bool follows_in_row = false;  // previous number sits in the same filling row
    int above = -1;               // number in the cell directly above, if any
};

std::vector<FillStep> reverse_lexicographic_filling(const Partition& outer, const Partition& inner) {
    std::vector<FillStep> steps;
    std::vector<std::vector<int>> number(outer.length());
    for (std::size_t r = 0; r < outer.length(); ++r) {
        number[r].assign(outer[r], -1);
        for (int c = outer[r] - 1; c >= inner[r]; --c) {
            FillStep step;
            step.follows_in_row = c < outer[r] - 1;
            if (r > 0 && c < outer[r - 1] && c >= inner[r - 1]) step.above = number[r - 1][c];
            number[r][c] = static_cast<int>(steps.size());
            steps.push_back(step);
        }
    }
    return steps;
}

// Depth-first search over standard placements obeying the two
// Remmel-Whitney rules; each leaf contributes s_{shape}.
class TableauSearch {
public:
    TableauSearch(std::vector<int> start, std::vector<FillStep> steps)
        : shape_(std::move(start)), steps_(std::move(steps)), placed_(steps_.size()) {}

    SchurPolynomial run() {
        visit(0);
        return std::move(result_);
    }

private:
    void visit(std::size_t x) {
        if (x == steps_.size()) {
            result_.add_term(Partition(shape_), 1);
            return;
        }
        const FillStep& step = steps_[x];
        const int rows = static_cast<int>(shape_.size());
        for (int r = 0; r <= rows; ++r) {
            const int c = r < rows ? shape_[r] : 0;
            if (r > 0 && shape_[r - 1] <= c) continue;  // not an addable corner
            if (step.follows_in_row) {
                const Cell& prev = placed_[x - 1];
                if (!(c > prev.col && r <= prev.row)) continue;
            }
            if (step.above >= 0) {
                const Cell& up = placed_[step.above];
                if (!(r > up.row && c <= up.col)) continue;
            }
            placed_[x] = {r, c};
            if (r == rows) {
                shape_.push_back(1);
                visit(x + 1);
                shape_.pop_back();
            } else {
                ++shape_[r];
                visit(x + 1);
                --shape_[r];
            }
        }
    }

    std::vector<int> shape_;
    std::vector<FillStep> steps_;
    std::vector<Cell> placed_;
    SchurPolynomial result_;
};

MemoTable<std::pair<Partition, Partition>, SchurPolynomial>& product_memo() {
    static MemoTable<std::pair<Partition, Partition>, SchurPolynomial> memo;
    return memo;
}

}  // namespace

SchurPolynomial skew_expand(const Partition& lambda, const Partition& mu) {
    if (!contains(lambda, mu)) throw std::invalid_argument("skew shape requires mu inside lambda");
    return TableauSearch({}, reverse_lexicographic_filling(lambda, mu)).run();
}

SchurPolynomial skew_expand(const SkewShape& shape) { return skew_expand(shape.outer, shape.inner); }

SkewShape stacked_shape(const Partition& lambda, const Partition& mu) {
    const int shift = lambda.part(0);
    std::vector<int> outer;
    for (int p : mu.parts()) outer.push_back(p + shift);
    for (int p : lambda.parts()) outer.push_back(p);
    return {Partition(std::move(outer)), rectangle(shift, static_cast<int>(mu.length()))};
}

SchurPolynomial schur_product(const Partition& lambda, const Partition& mu) {
    // The rows of the upper factor are forced into its own shape, so the search
    // starts there and only places the filling of the lower factor.
    const bool swap = lambda.weight() > mu.weight() || (lambda.weight() == mu.weight() && lambda < mu);
    const Partition& base = swap ? lambda : mu;
    const Partition& filled = swap ? mu : lambda;
    return product_memo().get_or_compute({base, filled}, [&] {
        return TableauSearch(base.parts(), reverse_lexicographic_filling(filled, Partition())).run();
    });
}

SchurPolynomial multiply(const SchurPolynomial& f, const SchurPolynomial& g) {
    SchurPolynomial out;
    for (const auto& [lambda, a] : f.terms()) {
        for (const auto& [mu, b] : g.terms()) {
            const BigInt ab = a * b;
            const SchurPolynomial product = schur_product(lambda, mu);
            for (const auto& [nu, c] : product.terms()) out.add_term(nu, ab * c);
        }
    }
    return out;
}

SchurPolynomial power(const SchurPolynomial& f, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    SchurPolynomial out = SchurPolynomial::one();
    for (int i = 0; i < exponent; ++i) out = multiply(out, f);
    return out;
}

BigInt inner_product(const SchurPolynomial& f, const SchurPolynomial& g) {
    BigInt sum = 0;
    for (const auto& [lambda, a] : f.terms()) {
        auto it = g.terms().find(lambda);
        if (it != g.terms().end()) sum += a * it->second;
    }
    return sum;
}

SchurPolynomial mn_multiply(int k, const SchurPolynomial& f) {
    if (k < 1) throw std::invalid_argument("mn_multiply requires k >= 1");
    SchurPolynomial out;
    for (const auto& [mu, c] : f.terms()) {
        for (const RimHook& h : addable_rim_hooks(mu, k)) out.add_term(h.outer, h.sign() * c);
    }
    return out;
}

BigInt standard_tableaux_count(const Partition& lambda) {
    BigInt hooks = 1;
    for (std::size_t r = 0; r < lambda.length(); ++r) {
        for (int c = 0; c < lambda[r]; ++c) hooks *= hook_length(lambda, static_cast<int>(r), c);
    }
    return factorial(static_cast<unsigned>(lambda.weight())) / hooks;
}

BigInt dim_rep(const SchurPolynomial& f, int N) {
    BigInt sum = 0;
    for (const auto& [lambda, c] : f.terms()) {
        if (lambda.weight() != N) throw std::invalid_argument("dim_rep: term of weight other than N");
        sum += c * standard_tableaux_count(lambda);
    }
    return sum;
}

}  // namespace odun
