#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace odun {

/// Thread-safe write-once table for memoizing pure functions. Concurrent
/// inserts of the same key are idempotent: the first stored value wins and
/// later computations of the same key are discarded.
template <typename Key, typename Value, typename Compare = std::less<Key>>
class MemoTable {
public:
    template <typename Compute>
    Value get_or_compute(const Key& key, Compute&& compute) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        Value value = compute();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(value)).first->second;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, Value, Compare> table_;
};

}  // namespace odun
