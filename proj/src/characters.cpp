#include "odun/characters.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "odun/memo.hpp"
#include "odun/rim_hook.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace odun {

int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::size_t CharacterTable::index(const Partition& lambda) const {
    auto it = index_.find(lambda);
    if (it == index_.end()) throw std::invalid_argument("partition " + to_string(lambda) + " is not of the table degree");
    return it->second;
}

namespace {

struct Transition {
    std::size_t target;
    int sign;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("character value exceeds 64 bits");
    return out;
}

}  // namespace

class CharacterTableBuilder {
public:
    static CharacterTable build(int n, const std::vector<const CharacterTable*>& lower, Execution exec) {
        CharacterTable table;
        table.n_ = n;
        table.partitions_ = partitions_of(n);
        const std::size_t size = table.partitions_.size();
        for (std::size_t i = 0; i < size; ++i) table.index_.emplace(table.partitions_[i], i);
        table.values_.assign(size * size, 0);
        if (n == 0) {
            table.values_[0] = 1;
            return table;
        }

        // transitions[k][nu]: shapes of weight n reached from nu by adding a k-strip.
        std::vector<std::vector<std::vector<Transition>>> transitions(n + 1);
        auto fill_transitions = [&](int k) {
            const CharacterTable& from = *lower[n - k];
            auto& out = transitions[k];
            out.resize(from.size());
            for (std::size_t v = 0; v < from.size(); ++v) {
                for (const RimHook& h : addable_rim_hooks(from.partitions_[v], k)) {
                    out[v].push_back({table.index(h.outer), h.sign()});
                }
            }
        };
        auto fill_column = [&](std::size_t j) {
            const Partition& mu = table.partitions_[j];
            const int k = mu.parts().back();
            std::vector<int> rest(mu.parts().begin(), mu.parts().end() - 1);
            const CharacterTable& from = *lower[n - k];
            const std::size_t source = from.index(Partition(std::move(rest)));
            for (std::size_t v = 0; v < from.size(); ++v) {
                const std::int64_t chi = from.at(v, source);
                if (chi == 0) continue;
                for (const Transition& t : transitions[k][v]) {
                    std::int64_t& cell = table.values_[t.target * size + j];
                    cell = checked_add(cell, t.sign * chi);
                }
            }
        };

        if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
            for (int k = 1; k <= n; ++k) fill_transitions(k);
#pragma omp parallel for schedule(dynamic)
            for (std::size_t j = 0; j < size; ++j) fill_column(j);
        } else {
            for (int k = 1; k <= n; ++k) fill_transitions(k);
            for (std::size_t j = 0; j < size; ++j) fill_column(j);
        }
        return table;
    }
};

CharacterTable CharacterTable::build(int n, Execution exec) {
    if (n < 0) throw std::invalid_argument("negative degree");
    std::vector<CharacterTable> tables;
    std::vector<const CharacterTable*> lower;
    tables.reserve(n + 1);
    for (int m = 0; m <= n; ++m) {
        tables.push_back(CharacterTableBuilder::build(m, lower, exec));
        lower.push_back(&tables.back());
    }
    return std::move(tables.back());
}

const CharacterTable& character_table(int n) {
    if (n < 0) throw std::invalid_argument("negative degree");
    static std::mutex mutex;
    static std::vector<std::unique_ptr<CharacterTable>> tables;
    std::lock_guard lock(mutex);
    while (static_cast<int>(tables.size()) <= n) {
        std::vector<const CharacterTable*> lower;
        for (const auto& t : tables) lower.push_back(t.get());
        const int m = static_cast<int>(tables.size());
        tables.push_back(std::make_unique<CharacterTable>(CharacterTableBuilder::build(m, lower, Execution::parallel)));
    }
    return *tables[n];
}

namespace {

MemoTable<std::pair<Partition, Partition>, BigInt>& value_memo() {
    static MemoTable<std::pair<Partition, Partition>, BigInt> memo;
    return memo;
}

}  // namespace

BigInt char_value(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) throw std::invalid_argument("char_value: weights differ");
    if (mu.empty()) return 1;
    return value_memo().get_or_compute({lambda, mu}, [&] {
        const int k = mu.parts().back();
        const Partition rest(std::vector<int>(mu.parts().begin(), mu.parts().end() - 1));
        BigInt sum = 0;
        for (const RimHook& h : removable_rim_hooks(lambda, k)) sum += h.sign() * char_value(h.inner, rest);
        return sum;
    });
}

}  // namespace odun
