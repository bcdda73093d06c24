// Quotient constructions. The raw quotient relation puts [a] below [b] when
// some representatives satisfy a' <= b'; it is reflexive but in general
// neither antisymmetric nor transitive, which is exactly what the various
// congruence notions repair.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "poq/partition.hpp"
#include "poq/poset.hpp"

namespace poq {

// relation[a].test(b) <=> exists a' in block a, b' in block b with a' <= b'.
inline std::vector<Bits> quotient_relation(const Poset& p, const Partition& t) {
    int m = t.num_blocks();
    std::vector<Bits> rel(m, Bits(m));
    for (int a = 0; a < m; ++a) rel[a].set(a);
    for (int x = 0; x < p.n; ++x)
        for (int y = 0; y < p.n; ++y)
            if (p.leq(x, y)) rel[t.class_of[x]].set(t.class_of[y]);
    return rel;
}

namespace detail {

inline std::vector<Bits> transitive_closure(std::vector<Bits> rel) {
    int m = int(rel.size());
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            if (rel[i].test(k)) rel[i] |= rel[k];
    return rel;
}

// Strongly connected components of the digraph x -> y when x < y or x ~ y.
// Returns component ids; mutually reachable elements share an id.
inline std::vector<int> theta_sequence_components(const Poset& p, const Partition& t) {
    int n = p.n;
    std::vector<Bits> reach(n, Bits(n));
    for (int x = 0; x < n; ++x) {
        reach[x].set(x);
        for (int y = 0; y < n; ++y)
            if (p.lt(x, y) || (x != y && t.same_block(x, y))) reach[x].set(y);
    }
    reach = transitive_closure(std::move(reach));
    std::vector<int> comp(n, -1);
    int k = 0;
    for (int x = 0; x < n; ++x) {
        if (comp[x] != -1) continue;
        comp[x] = k;
        for (int y = x + 1; y < n; ++y)
            if (comp[y] == -1 && reach[x].test(y) && reach[y].test(x)) comp[y] = k;
        ++k;
    }
    return comp;
}

// A concrete theta-circle through x and y (mutually reachable, distinct
// blocks), as the element sequence of one round trip.
inline std::vector<int> reconstruct_circle(const Poset& p, const Partition& t, int x, int y) {
    auto step_path = [&](int from, int to) {
        int n = p.n;
        std::vector<int> prev(n, -1);
        std::vector<int> queue{from};
        std::vector<bool> seen(n, false);
        seen[from] = true;
        for (size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            if (u == to) break;
            for (int v = 0; v < n; ++v) {
                if (seen[v] || u == v) continue;
                if (p.lt(u, v) || t.same_block(u, v)) {
                    seen[v] = true;
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        std::vector<int> path;
        for (int u = to; u != -1; u = prev[u]) path.push_back(u);
        std::reverse(path.begin(), path.end());
        return path;
    };
    auto fwd = step_path(x, y);
    auto back = step_path(y, x);
    fwd.insert(fwd.end(), back.begin() + 1, back.end());
    return fwd;
}

}  // namespace detail

// Compatibility core: no theta-circle touches two blocks. Returns a circle
// witness when it fails.
inline std::optional<std::vector<int>> compatibility_violation(const Poset& p, const Partition& t) {
    auto comp = detail::theta_sequence_components(p, t);
    for (int x = 0; x < p.n; ++x)
        for (int y = x + 1; y < p.n; ++y)
            if (comp[x] == comp[y] && !t.same_block(x, y))
                return detail::reconstruct_circle(p, t, x, y);
    return std::nullopt;
}

// Weak-order core, checked as the two literal clauses. The inner existential
// of each clause is the block relation itself.
// Returns a violating tuple: (p,q,q',p') for antisymmetry, (p,q,q',r) for
// transitivity.
inline std::optional<std::vector<int>> weak_order_violation(const Poset& p, const Partition& t) {
    auto rel = quotient_relation(p, t);
    // clause 1: p <= q, q ~ q', q' <= p', p' ~ p  must force  p ~ q
    for (int x = 0; x < p.n; ++x)
        for (int y = 0; y < p.n; ++y) {
            if (!p.leq(x, y) || t.same_block(x, y)) continue;
            if (rel[t.class_of[y]].test(t.class_of[x])) {
                for (int q2 : t.blocks[t.class_of[y]])
                    for (int p2 : t.blocks[t.class_of[x]])
                        if (p.leq(q2, p2)) return std::vector<int>{x, y, q2, p2};
            }
        }
    // clause 2: p <= q, q ~ q', q' <= r  must have p' ~ p, r' ~ r, p' <= r'
    for (int x = 0; x < p.n; ++x)
        for (int y = 0; y < p.n; ++y) {
            if (!p.leq(x, y)) continue;
            for (int q2 : t.blocks[t.class_of[y]])
                for (int r = 0; r < p.n; ++r)
                    if (p.leq(q2, r) && !rel[t.class_of[x]].test(t.class_of[r]))
                        return std::vector<int>{x, y, q2, r};
        }
    return std::nullopt;
}

struct QuotientResult {
    Poset quotient;
    std::vector<int> class_map;  // element -> quotient element
    bool needed_transitive_closure = false;
    bool needed_collapse = false;
};

namespace detail {

inline std::string merged_label(const Poset& p, const std::vector<int>& members) {
    if (members.size() == 1) return p.labels[members[0]];
    std::string s = "{";
    for (size_t i = 0; i < members.size(); ++i) {
        if (i) s += ",";
        s += p.labels[members[i]];
    }
    return s + "}";
}

inline Poset poset_from_relation(const std::vector<Bits>& rel, std::vector<std::string> labels) {
    int m = int(rel.size());
    Poset q(m);
    q.rows = rel;
    q.labels = std::move(labels);
    check_order_axioms(q);
    return q;
}

}  // namespace detail

enum class QuotientMode { Strict, Closure };

// Strict mode requires the raw quotient relation to be a partial order
// (weak order congruence); closure mode takes the transitive closure and
// requires compatibility.
inline QuotientResult quotient_poset(const Poset& p, const Partition& t, QuotientMode mode) {
    if (mode == QuotientMode::Strict) {
        if (auto w = weak_order_violation(p, t))
            fail(ErrorKind::NotWeakOrder, "partition is not a weak order congruence");
    } else {
        if (auto w = compatibility_violation(p, t))
            fail(ErrorKind::NotCompatible, "partition is not a compatible congruence");
    }
    auto raw = quotient_relation(p, t);
    QuotientResult r;
    r.class_map = t.class_of;
    if (mode == QuotientMode::Strict) {
        r.needed_transitive_closure = false;
        std::vector<std::string> labels;
        for (const auto& b : t.blocks) labels.push_back(detail::merged_label(p, b));
        r.quotient = detail::poset_from_relation(raw, std::move(labels));
    } else {
        auto closed = detail::transitive_closure(raw);
        r.needed_transitive_closure = closed != raw;
        std::vector<std::string> labels;
        for (const auto& b : t.blocks) labels.push_back(detail::merged_label(p, b));
        r.quotient = detail::poset_from_relation(closed, std::move(labels));
    }
    return r;
}

// Universal quotient: pre-order the blocks, close transitively, collapse
// mutually comparable groups of blocks. Defined for every equivalence
// relation; the kernel of the result may be coarser than the input.
inline QuotientResult universal_quotient(const Poset& p, const Partition& t) {
    auto raw = quotient_relation(p, t);
    auto closed = detail::transitive_closure(raw);
    int m = t.num_blocks();

    std::vector<int> group(m, -1);
    int k = 0;
    for (int a = 0; a < m; ++a) {
        if (group[a] != -1) continue;
        group[a] = k;
        for (int b = a + 1; b < m; ++b)
            if (group[b] == -1 && closed[a].test(b) && closed[b].test(a)) group[b] = k;
        ++k;
    }

    QuotientResult r;
    r.needed_transitive_closure = closed != raw;
    r.needed_collapse = k != m;
    r.class_map.resize(p.n);
    for (int x = 0; x < p.n; ++x) r.class_map[x] = group[t.class_of[x]];

    std::vector<Bits> rel(k, Bits(k));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (closed[a].test(b)) rel[group[a]].set(group[b]);
    std::vector<std::vector<int>> members(k);
    for (int x = 0; x < p.n; ++x) members[r.class_map[x]].push_back(x);
    std::vector<std::string> labels;
    for (const auto& mm : members) labels.push_back(detail::merged_label(p, mm));
    r.quotient = detail::poset_from_relation(rel, std::move(labels));
    return r;
}

// Smallest compatible congruence containing t: merge everything that shares
// a theta-circle, i.e. the strongly connected components of the step
// digraph, iterated to a fixpoint.
inline Partition smallest_compatible(const Poset& p, const Partition& t) {
    Partition cur = t;
    for (;;) {
        auto comp = detail::theta_sequence_components(p, cur);
        Partition next = partition_from_class_of(comp);
        if (next == cur) return cur;
        cur = next;
    }
}

// --- lexicographic sums ------------------------------------------------------

// Ground set: pairs (q, p) for q in the index poset, p in fibers[q];
// (q,p) <= (q',p') iff q < q', or q = q' and p <= p'. The returned partition
// has one block per fiber.
inline std::pair<Poset, Partition> lex_sum(const Poset& index, const std::vector<Poset>& fibers) {
    if (int(fibers.size()) != index.n) fail(ErrorKind::BadIndex, "one fiber per index element");
    std::vector<int> offset(index.n + 1, 0);
    for (int q = 0; q < index.n; ++q) offset[q + 1] = offset[q] + fibers[q].n;
    int n = offset[index.n];
    Poset p(n);
    std::vector<int> cls(n);
    for (int q = 0; q < index.n; ++q)
        for (int x = 0; x < fibers[q].n; ++x) {
            int id = offset[q] + x;
            cls[id] = q;
            p.labels[id] = index.labels[q] + "." + fibers[q].labels[x];
        }
    for (int q = 0; q < index.n; ++q)
        for (int q2 = 0; q2 < index.n; ++q2) {
            if (q != q2 && index.lt(q, q2)) {
                for (int x = 0; x < fibers[q].n; ++x)
                    for (int y = 0; y < fibers[q2].n; ++y) p.rows[offset[q] + x].set(offset[q2] + y);
            }
            if (q == q2) {
                for (int x = 0; x < fibers[q].n; ++x)
                    for (int y = 0; y < fibers[q].n; ++y)
                        if (fibers[q].leq(x, y)) p.rows[offset[q] + x].set(offset[q] + y);
            }
        }
    check_order_axioms(p);
    return {p, partition_from_class_of(cls)};
}

// --- orbit partitions --------------------------------------------------------

struct PermutationGroup {
    int degree = 0;
    std::vector<std::vector<int>> generators;
};

// Orbits of the generated group: connected components of the generator
// action. The group itself is never materialised.
inline Partition orbit_partition(const Poset& p, const PermutationGroup& g) {
    if (g.degree != p.n) fail(ErrorKind::BadIndex, "group degree must match poset size");
    for (size_t gi = 0; gi < g.generators.size(); ++gi) {
        const auto& perm = g.generators[gi];
        if (int(perm.size()) != p.n) fail(ErrorKind::BadIndex, "generator has wrong degree");
        std::vector<bool> hit(p.n, false);
        for (int x : perm) {
            if (x < 0 || x >= p.n || hit[x]) fail(ErrorKind::BadIndex, "generator is not a bijection");
            hit[x] = true;
        }
        for (int x = 0; x < p.n; ++x)
            for (int y = 0; y < p.n; ++y)
                if (p.leq(x, y) != p.leq(perm[x], perm[y]))
                    fail(ErrorKind::NotAutomorphism,
                         "generator " + std::to_string(gi) + " breaks the pair (" +
                             std::to_string(x) + "," + std::to_string(y) + ")");
    }
    UnionFind uf(p.n);
    for (const auto& perm : g.generators)
        for (int x = 0; x < p.n; ++x) uf.unite(x, perm[x]);
    return uf.to_partition();
}

// --- universal property verification (test utility) ---------------------------

// Checks Definition-style factoring against a supplied family of targets:
// every order-preserving g constant on blocks must factor uniquely through
// the quotient map.
inline bool verify_universal_property(const Poset& p, const Partition& t,
                                      const QuotientResult& uq, const std::vector<Poset>& targets) {
    for (const auto& r : targets) {
        std::vector<int> g(p.n, 0);
        // enumerate all maps P -> R, filter to order-preserving block-constant
        auto next_map = [&]() {
            for (int i = 0; i < p.n; ++i) {
                if (++g[i] < r.n) return true;
                g[i] = 0;
            }
            return false;
        };
        if (p.n == 0) {
            // only the empty map; factoring through the empty quotient is trivial
            continue;
        }
        if (r.n == 0) continue;
        do {
            bool ok = true;
            for (int x = 0; x < p.n && ok; ++x)
                for (int y = 0; y < p.n && ok; ++y)
                    if (p.leq(x, y) && !r.leq(g[x], g[y])) ok = false;
            for (int x = 0; x < p.n && ok; ++x)
                if (g[x] != g[t.blocks[t.class_of[x]][0]]) ok = false;
            if (!ok) continue;
            // h is forced on the (surjective) image; it must be well-defined
            // and order-preserving.
            std::vector<int> h(uq.quotient.n, -1);
            bool well_defined = true;
            for (int x = 0; x < p.n && well_defined; ++x) {
                int q = uq.class_map[x];
                if (h[q] == -1)
                    h[q] = g[x];
                else if (h[q] != g[x])
                    well_defined = false;
            }
            if (!well_defined) return false;
            for (int a = 0; a < uq.quotient.n; ++a)
                for (int b = 0; b < uq.quotient.n; ++b)
                    if (uq.quotient.leq(a, b) && !r.leq(h[a], h[b])) return false;
        } while (next_map());
    }
    return true;
}

}  // namespace poq
