// Exhaustive enumeration of labeled posets and of set partitions, used by
// the verification harness. Both enumerators are restartable value types.
#pragma once

#include <vector>

#include "poq/error.hpp"
#include "poq/partition.hpp"
#include "poq/poset.hpp"

namespace poq {

inline constexpr int kDefaultPosetEnumCap = 5;

// Every labeled partial order on n elements, exactly once. Each unordered
// pair {i,j} is assigned incomparable / i<j / j<i, then the assignment is
// kept iff the resulting relation is transitive.
class PosetEnumerator {
public:
    explicit PosetEnumerator(int n, int cap = kDefaultPosetEnumCap) : n_(n) {
        if (n < 0 || n > cap) fail(ErrorKind::TooLarge, "poset enumeration cap exceeded");
        pairs_.clear();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs_.push_back({i, j});
        state_.assign(pairs_.size(), 0);
        done_ = false;
        fresh_ = true;
    }

    void reset() {
        state_.assign(pairs_.size(), 0);
        done_ = false;
        fresh_ = true;
    }

    bool next(Poset& out) {
        while (!done_) {
            if (!fresh_) advance();
            fresh_ = false;
            if (done_) return false;
            if (materialise(out)) return true;
        }
        return false;
    }

private:
    void advance() {
        for (size_t k = 0; k < state_.size(); ++k) {
            if (++state_[k] < 3) return;
            state_[k] = 0;
        }
        done_ = true;
        if (state_.empty()) done_ = true;
    }

    bool materialise(Poset& out) {
        Poset p(n_);
        for (size_t k = 0; k < pairs_.size(); ++k) {
            auto [i, j] = pairs_[k];
            if (state_[k] == 1) p.rows[i].set(j);
            if (state_[k] == 2) p.rows[j].set(i);
        }
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (p.leq(i, j) && !p.rows[j].is_subset_of(p.rows[i])) return false;
        out = std::move(p);
        return true;
    }

    int n_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> state_;
    bool done_ = false;
    bool fresh_ = true;
};

// All Bell(n) set partitions via restricted-growth strings.
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(int n) : n_(n) { reset(); }

    void reset() {
        rgs_.assign(n_, 0);
        done_ = false;
        fresh_ = true;
    }

    bool next(Partition& out) {
        if (done_) return false;
        if (!fresh_ && !advance()) return false;
        fresh_ = false;
        out = partition_from_class_of(rgs_);
        return true;
    }

private:
    bool advance() {
        // next restricted-growth string: rgs[i] <= 1 + max(rgs[0..i-1])
        for (int i = n_ - 1; i > 0; --i) {
            int mx = 0;
            for (int k = 0; k < i; ++k) mx = std::max(mx, rgs_[k]);
            if (rgs_[i] <= mx) {
                ++rgs_[i];
                for (int k = i + 1; k < n_; ++k) rgs_[k] = 0;
                return true;
            }
            rgs_[i] = 0;
        }
        done_ = true;
        return false;
    }

    int n_;
    std::vector<int> rgs_;
    bool done_ = false;
    bool fresh_ = true;
};

inline std::vector<Poset> all_posets(int n, int cap = kDefaultPosetEnumCap) {
    PosetEnumerator en(n, cap);
    std::vector<Poset> out;
    Poset p;
    while (en.next(p)) out.push_back(p);
    return out;
}

inline std::vector<Partition> all_partitions(int n) {
    PartitionEnumerator en(n);
    std::vector<Partition> out;
    Partition t;
    while (en.next(t)) out.push_back(t);
    return out;
}

}  // namespace poq
