// Finite posets as dense boolean order matrices (bitset rows), plus the
// structural operations everything else is built from: cover extraction,
// duals, bounds, pairwise meets/joins, grading, convexity, isomorphism.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poq/bits.hpp"
#include "poq/error.hpp"

namespace poq {

struct Poset {
    int n = 0;
    std::vector<Bits> rows;  // rows[i].test(j) <=> i <= j
    std::vector<std::string> labels;

    Poset() = default;
    explicit Poset(int size) : n(size), rows(size, Bits(size)), labels(size) {
        for (int i = 0; i < n; ++i) {
            rows[i].set(i);
            labels[i] = std::to_string(i);
        }
    }

    bool leq(int i, int j) const { return rows[i].test(j); }
    bool lt(int i, int j) const { return i != j && rows[i].test(j); }
    bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

    Bits up_set(int i) const { return rows[i]; }
    Bits down_set(int i) const {
        Bits d(n);
        for (int j = 0; j < n; ++j)
            if (leq(j, i)) d.set(j);
        return d;
    }

    bool operator==(const Poset& o) const { return n == o.n && rows == o.rows && labels == o.labels; }

    // Order matrices alone, ignoring labels.
    bool same_order(const Poset& o) const { return n == o.n && rows == o.rows; }
};

inline void check_order_axioms(const Poset& p) {
    for (int i = 0; i < p.n; ++i)
        if (!p.leq(i, i)) fail(ErrorKind::InternalCheckFailure, "order matrix not reflexive");
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j) {
            if (i != j && p.leq(i, j) && p.leq(j, i))
                fail(ErrorKind::InternalCheckFailure, "order matrix not antisymmetric");
        }
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            if (p.leq(i, j) && !p.rows[j].is_subset_of(p.rows[i]))
                fail(ErrorKind::InternalCheckFailure, "order matrix not transitive");
}

inline bool order_axioms_hold(const Poset& p) {
    for (int i = 0; i < p.n; ++i)
        if (!p.leq(i, i)) return false;
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            if (i != j && p.leq(i, j) && p.leq(j, i)) return false;
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            if (p.leq(i, j) && !p.rows[j].is_subset_of(p.rows[i])) return false;
    return true;
}

// Reflexive-transitive closure of an acyclic cover digraph.
inline Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                         std::vector<std::string> labels = {}) {
    if (n < 0) fail(ErrorKind::BadIndex, "negative element count");
    for (auto [a, b] : covers)
        if (a < 0 || a >= n || b < 0 || b >= n)
            fail(ErrorKind::BadIndex, "cover index out of range");

    std::vector<std::vector<int>> succ(n);
    std::vector<int> indeg(n, 0);
    for (auto [a, b] : covers) {
        succ[a].push_back(b);
        ++indeg[b];
    }
    // Kahn topological order; leftover nodes witness a cycle.
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> deg = indeg;
    for (int i = 0; i < n; ++i)
        if (deg[i] == 0) order.push_back(i);
    for (size_t k = 0; k < order.size(); ++k)
        for (int j : succ[order[k]])
            if (--deg[j] == 0) order.push_back(j);
    if (int(order.size()) != n) fail(ErrorKind::CyclicInput, "cover relation contains a cycle");

    Poset p(n);
    for (int k = n - 1; k >= 0; --k) {
        int i = order[k];
        for (int j : succ[i]) p.rows[i] |= p.rows[j];
    }
    if (!labels.empty()) {
        if (int(labels.size()) != n) fail(ErrorKind::BadIndex, "label count mismatch");
        p.labels = std::move(labels);
    }
    return p;
}

// Transitive reduction; pairs come out lexicographically sorted.
inline std::vector<std::pair<int, int>> covers(const Poset& p) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j) {
            if (!p.lt(i, j)) continue;
            bool direct = true;
            for (int k = 0; k < p.n && direct; ++k)
                if (k != i && k != j && p.lt(i, k) && p.lt(k, j)) direct = false;
            if (direct) out.emplace_back(i, j);
        }
    return out;
}

inline Poset dual(const Poset& p) {
    Poset d(p.n);
    d.labels = p.labels;
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            if (p.leq(j, i)) d.rows[i].set(j);
    return d;
}

enum class BoundSide { Upper, Lower };

// U_P(A) / L_P(A); bounds of the empty set are all of P.
inline Bits bounds(const Poset& p, const Bits& a, BoundSide side) {
    Bits out(p.n);
    out.set_all();
    for (int x = a.next(0); x < p.n; x = a.next(x + 1)) {
        Bits cmp = (side == BoundSide::Upper) ? p.up_set(x) : p.down_set(x);
        out &= cmp;
    }
    return out;
}

inline Bits bounds(const Poset& p, const std::vector<int>& elems, BoundSide side) {
    Bits a(p.n);
    for (int x : elems) {
        if (x < 0 || x >= p.n) fail(ErrorKind::BadIndex, "bounds: element out of range");
        a.set(x);
    }
    return bounds(p, a, side);
}

// Least upper bound of {i,j}, or -1 when none exists.
inline int join(const Poset& p, int i, int j) {
    Bits ub = p.up_set(i) & p.up_set(j);
    for (int s = ub.next(0); s < p.n; s = ub.next(s + 1))
        if (ub.is_subset_of(p.rows[s])) return s;
    return -1;
}

inline int meet(const Poset& p, int i, int j) {
    Bits lb = p.down_set(i) & p.down_set(j);
    for (int s = lb.next(0); s < p.n; s = lb.next(s + 1)) {
        bool above_all = true;
        for (int t = lb.next(0); t < p.n && above_all; t = lb.next(t + 1))
            if (!p.leq(t, s)) above_all = false;
        if (above_all) return s;
    }
    return -1;
}

inline std::vector<int> minimal_elements(const Poset& p) {
    std::vector<int> out;
    for (int i = 0; i < p.n; ++i) {
        bool minimal = true;
        for (int j = 0; j < p.n && minimal; ++j)
            if (p.lt(j, i)) minimal = false;
        if (minimal) out.push_back(i);
    }
    return out;
}

inline std::vector<int> maximal_elements(const Poset& p) {
    std::vector<int> out;
    for (int i = 0; i < p.n; ++i) {
        bool maximal = true;
        for (int j = 0; j < p.n && maximal; ++j)
            if (p.lt(i, j)) maximal = false;
        if (maximal) out.push_back(i);
    }
    return out;
}

// Index of the minimum element, or -1.
inline int minimum(const Poset& p) {
    for (int i = 0; i < p.n; ++i) {
        bool below_all = true;
        for (int j = 0; j < p.n && below_all; ++j)
            if (!p.leq(i, j)) below_all = false;
        if (below_all) return i;
    }
    return -1;
}

inline int maximum(const Poset& p) {
    for (int i = 0; i < p.n; ++i) {
        bool above_all = true;
        for (int j = 0; j < p.n && above_all; ++j)
            if (!p.leq(j, i)) above_all = false;
        if (above_all) return i;
    }
    return -1;
}

// Connected components of the comparability graph; component_of[i] in [0, k).
inline std::vector<int> components(const Poset& p) {
    std::vector<int> comp(p.n, -1);
    int k = 0;
    for (int s = 0; s < p.n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = k;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y = 0; y < p.n; ++y)
                if (comp[y] == -1 && p.comparable(x, y)) {
                    comp[y] = k;
                    stack.push_back(y);
                }
        }
        ++k;
    }
    return comp;
}

struct StructuralPredicates {
    bool is_lattice = false;
    bool is_directed = false;
    bool is_connected = false;
    bool is_total = false;
    bool has_min = false;
    bool has_max = false;
};

inline StructuralPredicates structural_predicates(const Poset& p) {
    StructuralPredicates r;
    r.is_lattice = true;
    r.is_total = true;
    r.is_directed = p.n > 0;
    for (int i = 0; i < p.n; ++i)
        for (int j = i; j < p.n; ++j) {
            if (join(p, i, j) == -1 || meet(p, i, j) == -1) r.is_lattice = false;
            if (i != j && !p.comparable(i, j)) r.is_total = false;
            if (!(p.up_set(i) & p.up_set(j)).any()) r.is_directed = false;
        }
    auto comp = components(p);
    r.is_connected = comp.empty() || *std::max_element(comp.begin(), comp.end()) == 0;
    r.has_min = minimum(p) != -1;
    r.has_max = maximum(p) != -1;
    return r;
}

inline bool is_convex(const Poset& p, const Bits& a) {
    for (int x = a.next(0); x < p.n; x = a.next(x + 1))
        for (int z = a.next(0); z < p.n; z = a.next(z + 1)) {
            if (!p.leq(x, z)) continue;
            for (int y = 0; y < p.n; ++y)
                if (p.leq(x, y) && p.leq(y, z) && !a.test(y)) return false;
        }
    return true;
}

inline bool is_convex(const Poset& p, const std::vector<int>& elems) {
    Bits a(p.n);
    for (int x : elems) a.set(x);
    return is_convex(p, a);
}

struct GradingInfo {
    bool is_graded = false;
    std::vector<int> rank;        // meaningful only when graded
    std::vector<int> rank_sizes;  // p_i, indexed by rank value
    std::optional<std::pair<int, int>> witness;  // cover pair with inconsistent rank
};

// A rank function exists iff the cover graph admits a consistent +1 labelling.
// Ranks are normalised to minimum 0 per connected component.
inline GradingInfo grading(const Poset& p) {
    GradingInfo g;
    auto cov = covers(p);
    std::vector<std::vector<std::pair<int, int>>> adj(p.n);  // (neighbour, delta)
    for (auto [a, b] : cov) {
        adj[a].push_back({b, +1});
        adj[b].push_back({a, -1});
    }
    std::vector<int> r(p.n, 0);
    std::vector<bool> seen(p.n, false);
    for (int s = 0; s < p.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> stack{s};
        std::vector<int> comp{s};
        seen[s] = true;
        r[s] = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto [y, d] : adj[x]) {
                if (!seen[y]) {
                    seen[y] = true;
                    r[y] = r[x] + d;
                    comp.push_back(y);
                    stack.push_back(y);
                } else if (r[y] != r[x] + d) {
                    g.is_graded = false;
                    g.witness = d > 0 ? std::make_pair(x, y) : std::make_pair(y, x);
                    return g;
                }
            }
        }
        int lo = r[comp[0]];
        for (int x : comp) lo = std::min(lo, r[x]);
        for (int x : comp) r[x] -= lo;
    }
    // Cover steps inside a component are consistent; isolated comparabilities
    // inside one component are forced through cover chains, so we are done.
    g.is_graded = true;
    g.rank = std::move(r);
    int top = 0;
    for (int i = 0; i < p.n; ++i) top = std::max(top, g.rank[i]);
    g.rank_sizes.assign(p.n == 0 ? 0 : top + 1, 0);
    for (int i = 0; i < p.n; ++i) ++g.rank_sizes[g.rank[i]];
    return g;
}

// --- isomorphism search -----------------------------------------------------

namespace detail {

// Iterated refinement colouring; stable invariant per element.
inline std::vector<int> iso_colours(const Poset& p) {
    std::vector<long long> col(p.n);
    for (int i = 0; i < p.n; ++i)
        col[i] = (long long)p.up_set(i).count() * 1000 + p.down_set(i).count();
    for (int round = 0; round < p.n; ++round) {
        std::vector<std::vector<long long>> sig(p.n);
        for (int i = 0; i < p.n; ++i) {
            sig[i].push_back(col[i]);
            std::vector<long long> up, down;
            for (int j = 0; j < p.n; ++j) {
                if (p.lt(i, j)) up.push_back(col[j]);
                if (p.lt(j, i)) down.push_back(col[j]);
            }
            std::sort(up.begin(), up.end());
            std::sort(down.begin(), down.end());
            sig[i].push_back(-1);
            sig[i].insert(sig[i].end(), up.begin(), up.end());
            sig[i].push_back(-2);
            sig[i].insert(sig[i].end(), down.begin(), down.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<long long> next(p.n);
        for (int i = 0; i < p.n; ++i)
            next[i] = std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin();
        if (next == col) break;
        col = next;
    }
    return std::vector<int>(col.begin(), col.end());
}

inline bool iso_backtrack(const Poset& a, const Poset& b, const std::vector<int>& ca,
                          const std::vector<int>& cb, std::vector<int>& map,
                          std::vector<bool>& used, int i) {
    if (i == a.n) return true;
    for (int j = 0; j < b.n; ++j) {
        if (used[j] || ca[i] != cb[j]) continue;
        bool ok = true;
        for (int k = 0; k < i && ok; ++k) {
            if (a.leq(i, k) != b.leq(j, map[k])) ok = false;
            if (a.leq(k, i) != b.leq(map[k], j)) ok = false;
        }
        if (!ok) continue;
        map[i] = j;
        used[j] = true;
        if (iso_backtrack(a, b, ca, cb, map, used, i + 1)) return true;
        used[j] = false;
    }
    return false;
}

}  // namespace detail

inline std::optional<std::vector<int>> find_isomorphism(const Poset& a, const Poset& b) {
    if (a.n != b.n) return std::nullopt;
    auto ca = detail::iso_colours(a);
    auto cb = detail::iso_colours(b);
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
    std::vector<int> map(a.n, -1);
    std::vector<bool> used(a.n, false);
    if (detail::iso_backtrack(a, b, ca, cb, map, used, 0)) return map;
    return std::nullopt;
}

inline bool is_isomorphic(const Poset& a, const Poset& b) {
    return find_isomorphism(a, b).has_value();
}

// All automorphisms, by brute force over colour-respecting bijections.
inline std::vector<std::vector<int>> automorphisms(const Poset& p) {
    std::vector<std::vector<int>> out;
    auto col = detail::iso_colours(p);
    std::vector<int> map(p.n, -1);
    std::vector<bool> used(p.n, false);
    // depth-first over all completions, not just the first
    std::function<void(int)> rec = [&](int i) {
        if (i == p.n) {
            out.push_back(map);
            return;
        }
        for (int j = 0; j < p.n; ++j) {
            if (used[j] || col[i] != col[j]) continue;
            bool ok = true;
            for (int k = 0; k < i && ok; ++k) {
                if (p.leq(i, k) != p.leq(j, map[k])) ok = false;
                if (p.leq(k, i) != p.leq(map[k], j)) ok = false;
            }
            if (!ok) continue;
            map[i] = j;
            used[j] = true;
            rec(i + 1);
            used[j] = false;
        }
    };
    rec(0);
    return out;
}

}  // namespace poq
