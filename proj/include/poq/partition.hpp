// Set partitions of {0..n-1}: the candidate congruences. Canonical form:
// blocks sorted by smallest member, members sorted ascending.
#pragma once

#include <algorithm>
#include <vector>

#include "poq/error.hpp"
#include "poq/poset.hpp"

namespace poq {

struct Partition {
    int n = 0;
    std::vector<std::vector<int>> blocks;
    std::vector<int> class_of;

    bool same_block(int a, int b) const { return class_of[a] == class_of[b]; }
    int num_blocks() const { return int(blocks.size()); }

    bool operator==(const Partition& o) const { return n == o.n && class_of == o.class_of; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return class_of < o.class_of; }
};

inline Partition partition_from_class_of(std::vector<int> cls) {
    Partition t;
    t.n = int(cls.size());
    std::vector<int> renumber(t.n, -1);
    int next = 0;
    for (int i = 0; i < t.n; ++i) {
        if (cls[i] < 0 || cls[i] >= t.n) fail(ErrorKind::BadIndex, "bad class id");
        if (renumber[cls[i]] == -1) renumber[cls[i]] = next++;
    }
    t.class_of.resize(t.n);
    t.blocks.assign(next, {});
    for (int i = 0; i < t.n; ++i) {
        t.class_of[i] = renumber[cls[i]];
        t.blocks[t.class_of[i]].push_back(i);
    }
    return t;
}

inline Partition partition_from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> cls(n, -1);
    int id = 0;
    for (const auto& b : blocks) {
        if (b.empty()) fail(ErrorKind::BadIndex, "empty block");
        for (int x : b) {
            if (x < 0 || x >= n) fail(ErrorKind::BadIndex, "block element out of range");
            if (cls[x] != -1) fail(ErrorKind::BadIndex, "blocks not disjoint");
            cls[x] = id;
        }
        ++id;
    }
    for (int i = 0; i < n; ++i)
        if (cls[i] == -1) fail(ErrorKind::BadIndex, "blocks do not cover the ground set");
    return partition_from_class_of(cls);
}

inline Partition identity_partition(int n) {
    std::vector<int> cls(n);
    for (int i = 0; i < n; ++i) cls[i] = i;
    return partition_from_class_of(cls);
}

inline Partition total_partition(int n) {
    return partition_from_class_of(std::vector<int>(n, 0));
}

// Common refinement: the intersection of the two equivalence relations.
inline Partition intersection(const Partition& a, const Partition& b) {
    std::vector<int> cls(a.n);
    std::vector<std::pair<int, int>> keys(a.n);
    for (int i = 0; i < a.n; ++i) keys[i] = {a.class_of[i], b.class_of[i]};
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int i = 0; i < a.n; ++i)
        cls[i] = int(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
    return partition_from_class_of(cls);
}

// Does every block of a lie inside a block of b?
inline bool refines(const Partition& a, const Partition& b) {
    for (const auto& blk : a.blocks)
        for (int x : blk)
            if (b.class_of[x] != b.class_of[blk[0]]) return false;
    return true;
}

// Union-find helper shared by the congruence-closure style constructions.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
    Partition to_partition() {
        std::vector<int> cls(parent.size());
        for (size_t i = 0; i < parent.size(); ++i) cls[i] = find(int(i));
        return partition_from_class_of(cls);
    }
};

inline Bits block_bits(const Poset& p, const Partition& t, int block) {
    Bits b(p.n);
    for (int x : t.blocks[block]) b.set(x);
    return b;
}

}  // namespace poq
