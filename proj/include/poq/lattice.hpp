// Lattice machinery: Dedekind-MacNeille completion (closed sets A with
// L(U(A)) = A, ordered by inclusion), the sublattice generated by principal
// ideals, and lattice-congruence generation and enumeration.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "poq/partition.hpp"
#include "poq/poset.hpp"
#include "poq/quotient.hpp"

namespace poq {

struct Completion {
    Poset lattice;
    std::vector<int> embed;        // source element -> completion element
    std::vector<Bits> closed_sets;  // subset of P represented by each element
};

namespace detail {

inline Bits closure_LU(const Poset& p, const Bits& a) {
    return bounds(p, bounds(p, a, BoundSide::Upper), BoundSide::Lower);
}

inline std::string set_label(const Poset& p, const Bits& a) {
    std::string s = "{";
    bool first = true;
    for (int x = a.next(0); x < p.n; x = a.next(x + 1)) {
        if (!first) s += ",";
        s += p.labels[x];
        first = false;
    }
    return s + "}";
}

inline Completion completion_from_sets(const Poset& p, std::vector<Bits> sets) {
    std::sort(sets.begin(), sets.end(), [](const Bits& a, const Bits& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    Completion c;
    int m = int(sets.size());
    c.lattice = Poset(m);
    for (int i = 0; i < m; ++i) {
        c.lattice.labels[i] = set_label(p, sets[i]);
        for (int j = 0; j < m; ++j)
            if (sets[i].is_subset_of(sets[j])) c.lattice.rows[i].set(j);
    }
    check_order_axioms(c.lattice);
    c.embed.resize(p.n);
    for (int x = 0; x < p.n; ++x) {
        Bits ideal = p.down_set(x);
        auto it = std::find(sets.begin(), sets.end(), ideal);
        if (it == sets.end()) fail(ErrorKind::InternalCheckFailure, "principal ideal not closed");
        c.embed[x] = int(it - sets.begin());
    }
    c.closed_sets = std::move(sets);
    return c;
}

}  // namespace detail

inline constexpr int kCompletionCap = 4096;

// The closed sets are exactly the intersections of principal ideals (the
// empty intersection giving all of P), so closing the ideals plus P under
// pairwise intersection enumerates DM(P). Completions grow exponentially in
// the worst case, hence the cap.
inline Completion dm_completion(const Poset& p, int cap = kCompletionCap) {
    std::set<Bits> seen;
    std::vector<Bits> work;
    Bits full(p.n);
    full.set_all();
    seen.insert(full);
    work.push_back(full);
    for (int x = 0; x < p.n; ++x) {
        Bits ideal = p.down_set(x);
        if (seen.insert(ideal).second) work.push_back(ideal);
    }
    for (size_t i = 0; i < work.size(); ++i) {
        if (int(work.size()) > cap) fail(ErrorKind::TooLarge, "completion cap exceeded");
        for (size_t j = 0; j < i; ++j) {
            Bits both = work[i] & work[j];
            if (seen.insert(both).second) work.push_back(both);
        }
    }
    for (const auto& a : work)
        if (detail::closure_LU(p, a) != a)
            fail(ErrorKind::InternalCheckFailure, "DM element is not L(U(A))-closed");
    return detail::completion_from_sets(p, work);
}

// Smallest subset of DM(P) containing the principal ideals and closed under
// DM meet (intersection) and DM join (A,B -> L(U(A u B))).
inline Completion m0_sublattice(const Poset& p, int cap = kCompletionCap) {
    std::set<Bits> seen;
    std::vector<Bits> work;
    for (int x = 0; x < p.n; ++x) {
        Bits ideal = p.down_set(x);
        if (seen.insert(ideal).second) work.push_back(ideal);
    }
    for (size_t i = 0; i < work.size(); ++i) {
        if (int(work.size()) > cap) fail(ErrorKind::TooLarge, "completion cap exceeded");
        for (size_t j = 0; j <= i; ++j) {
            Bits mt = work[i] & work[j];
            if (seen.insert(mt).second) work.push_back(mt);
            Bits jn = detail::closure_LU(p, work[i] | work[j]);
            if (seen.insert(jn).second) work.push_back(jn);
        }
    }
    return detail::completion_from_sets(p, work);
}

// --- lattice congruences -------------------------------------------------------

struct LatticeOps {
    std::vector<std::vector<int>> meet, join;
};

inline LatticeOps lattice_ops(const Poset& l) {
    LatticeOps ops;
    ops.meet.assign(l.n, std::vector<int>(l.n, -1));
    ops.join.assign(l.n, std::vector<int>(l.n, -1));
    for (int i = 0; i < l.n; ++i)
        for (int j = i; j < l.n; ++j) {
            int m = meet(l, i, j), v = join(l, i, j);
            if (m == -1 || v == -1) fail(ErrorKind::NotLattice, "poset is not a lattice");
            ops.meet[i][j] = ops.meet[j][i] = m;
            ops.join[i][j] = ops.join[j][i] = v;
        }
    return ops;
}

// Substitution property: x ~ y forces (x v z) ~ (y v z) and (x ^ z) ~ (y ^ z).
// Returns a violating triple (x, y, z).
inline std::optional<std::vector<int>> lattice_congruence_violation(const Poset& l,
                                                                    const LatticeOps& ops,
                                                                    const Partition& t) {
    for (int x = 0; x < l.n; ++x)
        for (int y = x + 1; y < l.n; ++y) {
            if (!t.same_block(x, y)) continue;
            for (int z = 0; z < l.n; ++z) {
                if (!t.same_block(ops.join[x][z], ops.join[y][z])) return std::vector<int>{x, y, z};
                if (!t.same_block(ops.meet[x][z], ops.meet[y][z])) return std::vector<int>{x, y, z};
            }
        }
    return std::nullopt;
}

// The two-clause congruence criterion: (1) x ~ y iff (x^y) ~ (x v y);
// (2) comparable equivalent pairs absorb every w under meet and join.
inline bool lattice_congruence_criterion(const Poset& l, const LatticeOps& ops,
                                         const Partition& t) {
    for (int x = 0; x < l.n; ++x)
        for (int y = 0; y < l.n; ++y) {
            bool both = t.same_block(ops.meet[x][y], ops.join[x][y]);
            if (t.same_block(x, y) != both) return false;
        }
    for (int x = 0; x < l.n; ++x)
        for (int y = 0; y < l.n; ++y) {
            if (!l.leq(x, y) || !t.same_block(x, y)) continue;
            for (int w = 0; w < l.n; ++w) {
                if (!t.same_block(ops.meet[x][w], ops.meet[y][w])) return false;
                if (!t.same_block(ops.join[x][w], ops.join[y][w])) return false;
            }
        }
    return true;
}

// Smallest lattice congruence containing the given pairs, by fixpoint over
// the two criterion clauses.
inline Partition smallest_lattice_congruence(const Poset& l, const LatticeOps& ops,
                                             const std::vector<std::pair<int, int>>& pairs) {
    UnionFind uf(l.n);
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= l.n || b < 0 || b >= l.n) fail(ErrorKind::BadIndex, "pair out of range");
        uf.unite(a, b);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < l.n; ++x)
            for (int y = x + 1; y < l.n; ++y) {
                if (uf.find(x) != uf.find(y)) continue;
                if (uf.unite(ops.meet[x][y], ops.join[x][y])) changed = true;
                if (l.leq(x, y) || l.leq(y, x)) {
                    for (int w = 0; w < l.n; ++w) {
                        if (uf.unite(ops.meet[x][w], ops.meet[y][w])) changed = true;
                        if (uf.unite(ops.join[x][w], ops.join[y][w])) changed = true;
                    }
                }
            }
    }
    Partition out = uf.to_partition();
    if (lattice_congruence_violation(l, ops, out))
        fail(ErrorKind::InternalCheckFailure, "congruence closure is not a congruence");
    return out;
}

inline Partition smallest_lattice_congruence(const Poset& l,
                                             const std::vector<std::pair<int, int>>& pairs) {
    return smallest_lattice_congruence(l, lattice_ops(l), pairs);
}

struct CongruenceLattice {
    std::vector<Partition> congruences;
    std::vector<Bits> leq;  // refinement order: i <= j iff congruences[i] refines congruences[j]
};

inline constexpr int kLatticeCongruenceEnumCap = 12;

namespace detail {

inline std::vector<std::pair<int, int>> block_pairs(const Partition& t) {
    std::vector<std::pair<int, int>> out;
    for (const auto& b : t.blocks)
        for (size_t i = 1; i < b.size(); ++i) out.push_back({b[0], b[i]});
    return out;
}

}  // namespace detail

// Every congruence is a join of principal congruences of cover pairs, so
// closing those under join enumerates the whole congruence lattice.
inline CongruenceLattice enumerate_lattice_congruences(const Poset& l,
                                                       int cap = kLatticeCongruenceEnumCap) {
    if (l.n > cap) fail(ErrorKind::TooLarge, "lattice too large for congruence enumeration");
    auto ops = lattice_ops(l);
    std::vector<Partition> principal;
    for (auto [a, b] : covers(l)) principal.push_back(smallest_lattice_congruence(l, ops, {{a, b}}));

    std::set<std::vector<int>> seen;
    std::vector<Partition> out;
    auto push = [&](const Partition& t) {
        if (seen.insert(t.class_of).second) out.push_back(t);
    };
    push(identity_partition(l.n));
    for (size_t i = 0; i < out.size(); ++i)
        for (const auto& pr : principal) {
            auto pairs = detail::block_pairs(out[i]);
            auto extra = detail::block_pairs(pr);
            pairs.insert(pairs.end(), extra.begin(), extra.end());
            push(smallest_lattice_congruence(l, ops, pairs));
        }

    std::sort(out.begin(), out.end());
    CongruenceLattice cl;
    cl.congruences = std::move(out);
    int m = int(cl.congruences.size());
    cl.leq.assign(m, Bits(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (refines(cl.congruences[i], cl.congruences[j])) cl.leq[i].set(j);
    return cl;
}

// --- exact-restriction characterisation of order congruences --------------------

struct ReadingCheck {
    int num_exact_extensions = 0;   // congruences of DM(P) restricting exactly to t
    bool unique_extension = false;
    bool completion_isomorphic = false;  // DM(P/t) isomorphic to DM(P)/extension
    Partition extension;            // meaningful when unique_extension
};

namespace detail {

// A lattice congruence class is the interval [meet of class, join of class].
inline std::pair<int, int> class_interval(const LatticeOps& ops, const std::vector<int>& block) {
    int lo = block[0], hi = block[0];
    for (int x : block) {
        lo = ops.meet[lo][x];
        hi = ops.join[hi][x];
    }
    return {lo, hi};
}

}  // namespace detail

// Searches the congruences of DM(P) for those that restrict exactly to P
// (class interval endpoints inside the image, or class disjoint from it)
// with restriction equal to t. The caller supplies an order congruence t.
inline ReadingCheck reading_dm_check(const Poset& p, const Partition& t,
                                     int cap = kLatticeCongruenceEnumCap) {
    Completion dm = dm_completion(p);
    auto ops = lattice_ops(dm.lattice);
    auto con = enumerate_lattice_congruences(dm.lattice, cap);

    Bits image(dm.lattice.n);
    for (int x : dm.embed) image.set(x);

    ReadingCheck rc;
    for (const auto& theta : con.congruences) {
        bool restriction_matches = true;
        for (int x = 0; x < p.n && restriction_matches; ++x)
            for (int y = 0; y < p.n && restriction_matches; ++y)
                if (theta.same_block(dm.embed[x], dm.embed[y]) != t.same_block(x, y))
                    restriction_matches = false;
        if (!restriction_matches) continue;
        bool exact = true;
        for (const auto& block : theta.blocks) {
            auto [lo, hi] = detail::class_interval(ops, block);
            bool touches = false;
            for (int x : block)
                if (image.test(x)) touches = true;
            if (touches && !(image.test(lo) && image.test(hi))) exact = false;
            if (!exact) break;
        }
        if (!exact) continue;
        ++rc.num_exact_extensions;
        rc.extension = theta;
    }
    rc.unique_extension = rc.num_exact_extensions == 1;
    if (rc.unique_extension) {
        auto quot = quotient_poset(p, t, QuotientMode::Strict);
        Completion dm_quot = dm_completion(quot.quotient);
        auto dm_mod = quotient_poset(dm.lattice, rc.extension, QuotientMode::Strict);
        rc.completion_isomorphic = is_isomorphic(dm_quot.lattice, dm_mod.quotient);
    }
    return rc;
}

}  // namespace poq
