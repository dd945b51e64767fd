#pragma once

#include "capcheck/chart_model.hpp"
#include "capcheck/check.hpp"

#include <cstdint>
#include <cstdio>
#include <functional>
#include <list>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>

namespace capcheck {

struct Session {
    std::string id;
    TimeSeries series;
    ChartSpec spec;
    std::string caption;
    std::optional<CheckResult> lastResult;
};

/// In-memory session map with least-recently-used eviction. All access goes
/// through one mutex; callers get copies, never references into the store.
class SessionStore {
public:
    explicit SessionStore(std::size_t capacity = 256) : capacity_(capacity), rng_(std::random_device{}()) {}

    /// Stores a new session under a fresh id and returns the id.
    std::string create(TimeSeries series, ChartSpec spec) {
        std::lock_guard lock(mutex_);
        std::string id = next_id();
        lru_.push_front(Session{id, std::move(series), spec, {}, std::nullopt});
        index_[id] = lru_.begin();
        while (lru_.size() > capacity_) {
            index_.erase(lru_.back().id);
            lru_.pop_back();
        }
        return id;
    }

    std::optional<Session> get(const std::string& id) {
        std::lock_guard lock(mutex_);
        const auto it = index_.find(id);
        if (it == index_.end()) return std::nullopt;
        lru_.splice(lru_.begin(), lru_, it->second);
        return *it->second;
    }

    /// Applies `fn` to the stored session; false if it no longer exists.
    bool update(const std::string& id, const std::function<void(Session&)>& fn) {
        std::lock_guard lock(mutex_);
        const auto it = index_.find(id);
        if (it == index_.end()) return false;
        lru_.splice(lru_.begin(), lru_, it->second);
        fn(*it->second);
        return true;
    }

    std::size_t size() const {
        std::lock_guard lock(mutex_);
        return lru_.size();
    }

    std::size_t capacity() const noexcept { return capacity_; }

private:
    // Monotonic counter plus a random suffix: unique for the process lifetime
    // and not guessable from a neighbour's id.
    std::string next_id() {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%08llx%016llx", static_cast<unsigned long long>(++counter_),
                      static_cast<unsigned long long>(rng_()));
        return buf;
    }

    std::size_t capacity_;
    mutable std::mutex mutex_;
    std::list<Session> lru_;
    std::unordered_map<std::string, std::list<Session>::iterator> index_;
    std::uint64_t counter_ = 0;
    std::mt19937_64 rng_;
};

} // namespace capcheck
