// One decision procedure per congruence notion. Every predicate returns a
// verdict carrying a replayable witness on failure; notions defined through
// duality (lower regularity, the dual Kolibiar clauses, the inf-set half of
// the Haviar-Lihova conditions) run the primal check on the dual poset.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "poq/lattice.hpp"
#include "poq/partition.hpp"
#include "poq/poset.hpp"
#include "poq/quotient.hpp"

namespace poq {

enum class Kind {
    Compatible,
    WeakOrder,
    III,
    WStable,
    Order,
    HaviarLihova,
    GK,
    Closure,
    OrderAutonomous,
    Kolibiar,
    Homogeneous,
    Contraction,
    Lattice,
    GradedPreserving,
};

inline constexpr int kNumKinds = 14;
inline constexpr std::array<Kind, kNumKinds> kAllKinds = {
    Kind::Compatible,    Kind::WeakOrder, Kind::III,          Kind::WStable,
    Kind::Order,         Kind::HaviarLihova, Kind::GK,        Kind::Closure,
    Kind::OrderAutonomous, Kind::Kolibiar, Kind::Homogeneous, Kind::Contraction,
    Kind::Lattice,       Kind::GradedPreserving,
};

inline const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Compatible: return "compatible";
        case Kind::WeakOrder: return "weak_order";
        case Kind::III: return "iii";
        case Kind::WStable: return "w_stable";
        case Kind::Order: return "order";
        case Kind::HaviarLihova: return "haviar_lihova";
        case Kind::GK: return "gk";
        case Kind::Closure: return "closure";
        case Kind::OrderAutonomous: return "order_autonomous";
        case Kind::Kolibiar: return "kolibiar";
        case Kind::Homogeneous: return "homogeneous";
        case Kind::Contraction: return "contraction";
        case Kind::Lattice: return "lattice";
        case Kind::GradedPreserving: return "graded_preserving";
    }
    return "?";
}

struct Witness {
    std::string kind;
    std::vector<int> elements;
    std::string explanation;
};

struct Verdict {
    bool applicable = true;
    bool holds = false;
    std::optional<Witness> witness;
    std::string not_applicable_reason;

    bool ok() const { return applicable && holds; }
};

namespace detail {

inline Verdict pass() {
    Verdict v;
    v.holds = true;
    return v;
}
inline Verdict failure(Witness w) {
    Verdict v;
    v.holds = false;
    v.witness = std::move(w);
    return v;
}
inline Verdict not_applicable(std::string reason) {
    Verdict v;
    v.applicable = false;
    v.not_applicable_reason = std::move(reason);
    return v;
}

inline std::vector<Bits> block_bit_table(const Poset& p, const Partition& t) {
    std::vector<Bits> bb(t.num_blocks(), Bits(p.n));
    for (int x = 0; x < p.n; ++x) bb[t.class_of[x]].set(x);
    return bb;
}

inline std::vector<Bits> down_table(const Poset& p) {
    std::vector<Bits> d(p.n, Bits(p.n));
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            if (p.leq(j, i)) d[i].set(j);
    return d;
}

}  // namespace detail

// --- compatible -----------------------------------------------------------------

// Block digraph route: contract classes, draw arcs for <, demand singleton
// strongly connected components.
inline bool compatible_by_block_scc(const Poset& p, const Partition& t) {
    int m = t.num_blocks();
    std::vector<Bits> arc(m, Bits(m));
    for (int x = 0; x < p.n; ++x)
        for (int y = 0; y < p.n; ++y)
            if (p.lt(x, y) && !t.same_block(x, y)) arc[t.class_of[x]].set(t.class_of[y]);
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            if (arc[i].test(k)) arc[i] |= arc[k];
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (arc[a].test(b) && arc[b].test(a)) return false;
    return true;
}

inline Verdict is_compatible(const Poset& p, const Partition& t) {
    auto circle = compatibility_violation(p, t);  // literal theta-circle route
    bool scc = compatible_by_block_scc(p, t);
    if (scc != !circle.has_value())
        fail(ErrorKind::InternalCheckFailure, "compatible checkers disagree");
    if (!circle) return detail::pass();
    return detail::failure({"theta_circle", *circle, "theta-circle through two classes"});
}

// --- weak order -----------------------------------------------------------------

inline Verdict is_weak_order(const Poset& p, const Partition& t) {
    auto v = weak_order_violation(p, t);
    if (!v) return detail::pass();
    return detail::failure({"weak_order", *v, "quotient relation is not a partial order"});
}

// --- III ------------------------------------------------------------------------

inline Verdict is_iii(const Poset& p, const Partition& t) {
    Verdict wo = is_weak_order(p, t);
    if (!wo.holds) {
        wo.witness->explanation += " (III requires a weak order congruence)";
        return wo;
    }
    for (int x = 0; x < p.n; ++x)
        for (int r = 0; r < p.n; ++r) {
            int m = meet(p, x, r);
            if (m == -1) continue;
            for (int q = 0; q < p.n; ++q)
                if (p.leq(x, q) && t.same_block(q, r) && !t.same_block(x, m))
                    return detail::failure(
                        {"iii_meet", {x, q, r, m}, "p<=q, q~r but p is not equivalent to p^r"});
        }
    return detail::pass();
}

// --- w-stable ---------------------------------------------------------------------

// theta is w-stable iff some lattice congruence of M0(P) restricts to it.
// Any such congruence contains the one generated by the embedded pairs, and
// restriction is monotone, so the generated congruence is the only candidate
// that can restrict exactly.
inline Verdict is_w_stable(const Poset& p, const Partition& t) {
    Completion m0 = m0_sublattice(p);
    std::vector<std::pair<int, int>> pairs;
    for (const auto& b : t.blocks)
        for (size_t i = 1; i < b.size(); ++i) pairs.push_back({m0.embed[b[0]], m0.embed[b[i]]});
    Partition theta = smallest_lattice_congruence(m0.lattice, pairs);
    for (int x = 0; x < p.n; ++x)
        for (int y = x + 1; y < p.n; ++y) {
            bool in_theta = theta.same_block(m0.embed[x], m0.embed[y]);
            if (in_theta && !t.same_block(x, y))
                return detail::failure({"w_stable_restriction",
                                        {x, y},
                                        "minimal lattice congruence on M0(P) restricts strictly "
                                        "coarser than the partition"});
            if (!in_theta && t.same_block(x, y))
                fail(ErrorKind::InternalCheckFailure, "generated congruence lost a pair");
        }
    return detail::pass();
}

// --- order ------------------------------------------------------------------------

// Reading route: classes are intervals and both projections are monotone.
inline std::optional<Witness> order_reading_violation(const Poset& p, const Partition& t) {
    int m = t.num_blocks();
    std::vector<int> lo(m, -1), hi(m, -1);
    for (int b = 0; b < m; ++b) {
        const auto& blk = t.blocks[b];
        for (int x : blk) {
            bool is_lo = true, is_hi = true;
            for (int y : blk) {
                if (!p.leq(x, y)) is_lo = false;
                if (!p.leq(y, x)) is_hi = false;
            }
            if (is_lo) lo[b] = x;
            if (is_hi) hi[b] = x;
        }
        if (lo[b] == -1 || hi[b] == -1)
            return Witness{"order_interval", {blk[0]}, "class has no minimum or no maximum"};
        for (int z = 0; z < p.n; ++z)
            if (p.leq(lo[b], z) && p.leq(z, hi[b]) && t.class_of[z] != b)
                return Witness{"order_interval", {lo[b], z, hi[b]}, "class is not the full interval"};
    }
    for (int x = 0; x < p.n; ++x)
        for (int y = 0; y < p.n; ++y) {
            if (!p.leq(x, y)) continue;
            if (!p.leq(lo[t.class_of[x]], lo[t.class_of[y]]))
                return Witness{"order_pi_down", {x, y}, "min-projection is not order-preserving"};
            if (!p.leq(hi[t.class_of[x]], hi[t.class_of[y]]))
                return Witness{"order_pi_up", {x, y}, "max-projection is not order-preserving"};
        }
    return std::nullopt;
}

// Literal route: the four defining clauses.
inline std::optional<Witness> order_literal_violation(const Poset& p, const Partition& t) {
    auto bb = detail::block_bit_table(p, t);
    auto down = detail::down_table(p);
    for (int b = 0; b < t.num_blocks(); ++b)
        if (!is_convex(p, bb[b]))
            return Witness{"order_convex", {t.blocks[b][0]}, "class is not convex"};
    for (int b = 0; b < t.num_blocks(); ++b)
        for (int q : t.blocks[b])
            for (int r : t.blocks[b]) {
                bool found = false;
                for (int s : t.blocks[b]) {
                    if (!p.leq(s, q) || !p.leq(s, r)) continue;
                    for (int u : t.blocks[b])
                        if (p.leq(q, u) && p.leq(r, u)) {
                            found = true;
                            break;
                        }
                    if (found) break;
                }
                if (!found)
                    return Witness{"order_common_bounds", {q, r}, "no in-class bounds s<=q,r<=t"};
            }
    for (int u = 0; u < p.n; ++u)
        for (int x = 0; x < p.n; ++x) {
            if (!p.leq(u, x) || !t.same_block(u, x)) continue;
            for (int q = 0; q < p.n; ++q) {
                if (!p.leq(u, q)) continue;
                Bits cand = p.up_set(x) & p.up_set(q) & bb[t.class_of[q]];
                if (!cand.any())
                    return Witness{"order_clause3", {u, x, q}, "no t>=p,q with q~t"};
            }
        }
    for (int v = 0; v < p.n; ++v)
        for (int x = 0; x < p.n; ++x) {
            if (!p.leq(x, v) || !t.same_block(v, x)) continue;
            for (int q = 0; q < p.n; ++q) {
                if (!p.leq(q, v)) continue;
                Bits cand = down[x] & down[q] & bb[t.class_of[q]];
                if (!cand.any())
                    return Witness{"order_clause4", {v, x, q}, "no s<=p,q with p~s"};
            }
        }
    return std::nullopt;
}

inline Verdict is_order(const Poset& p, const Partition& t) {
    auto reading = order_reading_violation(p, t);
    auto literal = order_literal_violation(p, t);
    if (reading.has_value() != literal.has_value())
        fail(ErrorKind::InternalCheckFailure, "order-congruence checkers disagree");
    if (!reading) return detail::pass();
    return detail::failure(*reading);
}

// --- Haviar-Lihova -----------------------------------------------------------------

namespace detail {

// The sup-set half: for x ~ x' and x <= q, U(x', q) is nonempty and its
// minimal elements (the smallest sup-set) lie inside [q].
inline std::optional<Witness> hl_sup_violation(const Poset& p, const Partition& t) {
    auto bb = block_bit_table(p, t);
    auto down = down_table(p);
    for (int b = 0; b < t.num_blocks(); ++b)
        for (int x : t.blocks[b])
            for (int x2 : t.blocks[b]) {
                for (int q = 0; q < p.n; ++q) {
                    if (!p.leq(x, q)) continue;
                    Bits ub = p.up_set(x2) & p.up_set(q);
                    if (!ub.any())
                        return Witness{"hl_sup_empty", {x, x2, q}, "U(p',q) is empty"};
                    for (int u = ub.next(0); u < p.n; u = ub.next(u + 1)) {
                        Bits strictly_below = down[u] & ub;
                        strictly_below.reset(u);
                        if (strictly_below.any()) continue;  // not minimal in U
                        if (!bb[t.class_of[q]].test(u))
                            return Witness{"hl_sup_escape",
                                           {x, x2, q, u},
                                           "minimal upper bound leaves the class of q"};
                    }
                }
            }
    return std::nullopt;
}

}  // namespace detail

inline Verdict is_haviar_lihova(const Poset& p, const Partition& t) {
    auto bb = detail::block_bit_table(p, t);
    for (int b = 0; b < t.num_blocks(); ++b)
        if (!is_convex(p, bb[b]))
            return detail::failure({"hl_convex", {t.blocks[b][0]}, "class is not convex"});
    if (auto w = detail::hl_sup_violation(p, t)) return detail::failure(*w);
    if (auto w = detail::hl_sup_violation(dual(p), t)) {
        w->kind = "hl_inf_" + w->kind.substr(7);
        w->explanation += " (dual clause)";
        return detail::failure(*w);
    }
    return detail::pass();
}

// --- regularity, GK, closure --------------------------------------------------------

namespace detail {

inline std::optional<Witness> upper_regular_violation(const Poset& p, const Partition& t) {
    auto bb = block_bit_table(p, t);
    for (int x = 0; x < p.n; ++x)
        for (int y = 0; y < p.n; ++y) {
            if (!p.leq(x, y)) continue;
            for (int x2 : t.blocks[t.class_of[x]])
                if (!(p.up_set(x2) & bb[t.class_of[y]]).any())
                    return Witness{"upper_regular", {x, y, x2}, "no q'~q above p'"};
        }
    return std::nullopt;
}

}  // namespace detail

inline Verdict is_upper_regular(const Poset& p, const Partition& t) {
    if (auto w = detail::upper_regular_violation(p, t)) return detail::failure(*w);
    return detail::pass();
}

inline Verdict is_lower_regular(const Poset& p, const Partition& t) {
    if (auto w = detail::upper_regular_violation(dual(p), t)) {
        w->kind = "lower_regular";
        w->explanation = "no p'~p below q' (dual of upper regularity)";
        return detail::failure(*w);
    }
    return detail::pass();
}

inline Verdict is_gk(const Poset& p, const Partition& t) {
    Verdict up = is_upper_regular(p, t);
    if (!up.holds) return up;
    Verdict low = is_lower_regular(p, t);
    if (!low.holds) return low;
    auto bb = detail::block_bit_table(p, t);
    for (int b = 0; b < t.num_blocks(); ++b)
        if (!is_convex(p, bb[b]))
            return detail::failure({"gk_convex", {t.blocks[b][0]}, "class is not convex"});
    return detail::pass();
}

inline Verdict is_closure(const Poset& p, const Partition& t) {
    for (const auto& blk : t.blocks) {
        bool unique_max = false;
        for (int x : blk) {
            bool above_all = true;
            for (int y : blk)
                if (!p.leq(y, x)) above_all = false;
            if (above_all) unique_max = true;
        }
        if (!unique_max)
            return detail::failure({"closure_max", {blk[0]}, "class has no unique maximal element"});
    }
    Verdict up = is_upper_regular(p, t);
    if (!up.holds) {
        up.witness->kind = "closure_regular";
        return up;
    }
    return detail::pass();
}

// Class maxima of a closure congruence; the induced operator x -> max [x].
inline std::vector<int> closed_elements(const Poset& p, const Partition& t) {
    std::vector<int> out;
    for (const auto& blk : t.blocks)
        for (int x : blk) {
            bool above_all = true;
            for (int y : blk)
                if (!p.leq(y, x)) above_all = false;
            if (above_all) out.push_back(x);
        }
    return out;
}

// f(x) = max [x] must satisfy f(f(x)) = f(x) >= x and be order-preserving.
inline bool closure_operator_consistent(const Poset& p, const Partition& t) {
    std::vector<int> f(p.n, -1);
    for (const auto& blk : t.blocks) {
        int mx = -1;
        for (int x : blk) {
            bool above_all = true;
            for (int y : blk)
                if (!p.leq(y, x)) above_all = false;
            if (above_all) mx = x;
        }
        if (mx == -1) return false;
        for (int x : blk) f[x] = mx;
    }
    for (int x = 0; x < p.n; ++x)
        if (f[f[x]] != f[x] || !p.leq(x, f[x])) return false;
    for (int x = 0; x < p.n; ++x)
        for (int y = 0; y < p.n; ++y)
            if (p.leq(x, y) && !p.leq(f[x], f[y])) return false;
    return true;
}

// --- order-autonomous ------------------------------------------------------------------

inline Verdict is_order_autonomous(const Poset& p, const Partition& t) {
    auto bb = detail::block_bit_table(p, t);
    for (int b = 0; b < t.num_blocks(); ++b)
        for (int z = 0; z < p.n; ++z) {
            if (t.class_of[z] == b) continue;
            if ((p.up_set(z) & bb[b]).any())
                for (int a : t.blocks[b])
                    if (!p.leq(z, a))
                        return detail::failure(
                            {"order_autonomous", {z, a}, "outside element below only part of a class"});
            bool above_some = false;
            for (int a : t.blocks[b])
                if (p.leq(a, z)) above_some = true;
            if (above_some)
                for (int a : t.blocks[b])
                    if (!p.leq(a, z))
                        return detail::failure(
                            {"order_autonomous", {z, a}, "outside element above only part of a class"});
        }
    return detail::pass();
}

// --- Kolibiar ----------------------------------------------------------------------------

namespace detail {

inline bool poset_is_directed(const Poset& p) {
    if (p.n == 0) return false;
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j)
            if (!(p.up_set(i) & p.up_set(j)).any()) return false;
    return true;
}

// Clauses (2) and (3) of the Kolibiar definition on the given poset.
inline std::optional<Witness> kolibiar_primal_violation(const Poset& p, const Partition& t) {
    auto bb = block_bit_table(p, t);
    auto down = down_table(p);
    for (int a = 0; a < p.n; ++a)
        for (int b = 0; b < p.n; ++b) {
            if (!t.same_block(a, b)) continue;
            for (int r = 0; r < p.n; ++r) {
                if (!p.leq(a, r) || !p.leq(b, r)) continue;
                Bits cand = p.up_set(a) & down[r] & p.up_set(b) & bb[t.class_of[a]];
                if (!cand.any())
                    return Witness{"kolibiar_clause2", {a, b, r}, "no s with p<=s<=r, q<=s, p~s"};
            }
        }
    for (int r = 0; r < p.n; ++r)
        for (int a = 0; a < p.n; ++a) {
            if (!t.same_block(r, a) || !p.leq(r, a)) continue;
            for (int s = 0; s < p.n; ++s) {
                if (!p.leq(a, s)) continue;
                for (int q = 0; q < p.n; ++q) {
                    if (!p.leq(r, q) || !p.leq(q, s)) continue;
                    Bits cand = p.up_set(q) & down[s] & p.up_set(a) & bb[t.class_of[q]];
                    if (!cand.any())
                        return Witness{"kolibiar_clause3", {r, a, q, s}, "no t with q<=t<=s, p<=t, q~t"};
                }
            }
        }
    return std::nullopt;
}

}  // namespace detail

// Applicability is directedness in both directions (finite: bounded); with
// only upward directedness the clauses cannot see elements lacking common
// lower bounds and the Kolibiar => GK implication fails.
inline Verdict is_kolibiar(const Poset& p, const Partition& t) {
    if (!detail::poset_is_directed(p) || !detail::poset_is_directed(dual(p)))
        return detail::not_applicable("poset is not directed in both directions");
    auto bb = detail::block_bit_table(p, t);
    for (int b = 0; b < t.num_blocks(); ++b)
        if (!is_convex(p, bb[b]))
            return detail::failure({"kolibiar_convex", {t.blocks[b][0]}, "class is not convex"});
    if (auto w = detail::kolibiar_primal_violation(p, t)) return detail::failure(*w);
    if (auto w = detail::kolibiar_primal_violation(dual(p), t)) {
        w->kind += "_dual";
        w->explanation += " (dual clause)";
        return detail::failure(*w);
    }
    return detail::pass();
}

// --- homogeneous --------------------------------------------------------------------------

inline Verdict is_homogeneous(const Poset& p, const Partition& t) {
    int zero = minimum(p);
    if (zero == -1) return detail::not_applicable("poset has no unique minimal element");
    if (t.blocks[t.class_of[zero]].size() != 1)
        return detail::failure({"homogeneous_zero", {zero}, "{0} is not its own class"});
    Verdict up = is_upper_regular(p, t);
    if (!up.holds) {
        up.witness->kind = "homogeneous_regular";
        return up;
    }
    return detail::pass();
}

// --- contraction --------------------------------------------------------------------------

inline Verdict is_contraction(const Poset& p, const Partition& t) {
    Verdict comp = is_compatible(p, t);
    if (!comp.holds) {
        comp.witness->explanation += " (contraction requires compatibility)";
        return comp;
    }
    auto cov = covers(p);
    for (int b = 0; b < t.num_blocks(); ++b) {
        const auto& blk = t.blocks[b];
        UnionFind uf(p.n);
        for (auto [x, y] : cov)
            if (t.class_of[x] == b && t.class_of[y] == b) uf.unite(x, y);
        for (int x : blk)
            if (uf.find(x) != uf.find(blk[0]))
                return detail::failure({"contraction_connected",
                                        {blk[0], x},
                                        "class is disconnected in the Hasse diagram"});
    }
    return detail::pass();
}

// --- lattice congruence -------------------------------------------------------------------

inline Verdict is_lattice_congruence(const Poset& p, const Partition& t) {
    LatticeOps ops;
    try {
        ops = lattice_ops(p);
    } catch (const Error& e) {
        if (e.kind == ErrorKind::NotLattice) return detail::not_applicable("poset is not a lattice");
        throw;
    }
    auto sub = lattice_congruence_violation(p, ops, t);
    bool crit = lattice_congruence_criterion(p, ops, t);
    if (crit != !sub.has_value())
        fail(ErrorKind::InternalCheckFailure, "lattice-congruence checkers disagree");
    if (!sub) return detail::pass();
    return detail::failure({"lattice_substitution", *sub, "meet or join splits a class"});
}

// --- graded-preserving --------------------------------------------------------------------

inline Verdict is_graded_preserving(const Poset& p, const Partition& t) {
    auto g = grading(p);
    if (!g.is_graded) return detail::not_applicable("poset is not graded");
    for (const auto& blk : t.blocks)
        for (int x : blk)
            if (g.rank[x] != g.rank[blk[0]])
                return detail::failure({"rank_constant", {blk[0], x}, "rank differs inside a class"});
    return detail::pass();
}

// --- classify -----------------------------------------------------------------------------

struct CongruenceReport {
    std::array<Verdict, kNumKinds> verdicts;
    Verdict& operator[](Kind k) { return verdicts[int(k)]; }
    const Verdict& operator[](Kind k) const { return verdicts[int(k)]; }
};

// The implication arrows among report kinds; violated arrows indicate a
// checker bug and raise InternalCheckFailure.
inline void check_report_implications(const Poset& p, const Partition& t,
                                      const CongruenceReport& r) {
    auto ok = [&](Kind k) { return r[k].ok(); };
    bool strong = ok(Kind::WeakOrder);
    int zero = minimum(p);
    bool zero_singleton = zero != -1 && t.blocks[t.class_of[zero]].size() == 1;
    struct Arrow {
        bool premise;
        Kind target;
        const char* name;
    };
    const Arrow arrows[] = {
        {ok(Kind::HaviarLihova), Kind::Order, "hl->order"},
        {ok(Kind::Order), Kind::WStable, "order->w_stable"},
        {ok(Kind::WStable) && strong, Kind::III, "w_stable&strong->iii"},
        {ok(Kind::III), Kind::WeakOrder, "iii->weak_order"},
        {ok(Kind::WeakOrder), Kind::Compatible, "weak_order->compatible"},
        {ok(Kind::Order), Kind::GK, "order->gk"},
        {ok(Kind::Order), Kind::Closure, "order->closure"},
        {ok(Kind::Order), Kind::Contraction, "order->contraction"},
        {ok(Kind::Closure), Kind::WeakOrder, "closure->weak_order"},
        {ok(Kind::OrderAutonomous), Kind::GK, "order_autonomous->gk"},
        {ok(Kind::Kolibiar), Kind::GK, "kolibiar->gk"},
        {ok(Kind::GK) && zero_singleton, Kind::Homogeneous, "gk&zero->homogeneous"},
        {ok(Kind::Homogeneous), Kind::WeakOrder, "homogeneous->weak_order"},
        {ok(Kind::Contraction), Kind::Compatible, "contraction->compatible"},
    };
    for (const auto& a : arrows)
        if (a.premise && !ok(a.target))
            fail(ErrorKind::InternalCheckFailure,
                 std::string("implication violated in classify: ") + a.name);
}

inline CongruenceReport classify(const Poset& p, const Partition& t) {
    CongruenceReport r;
    r[Kind::Compatible] = is_compatible(p, t);
    r[Kind::WeakOrder] = is_weak_order(p, t);
    r[Kind::III] = is_iii(p, t);
    r[Kind::WStable] = is_w_stable(p, t);
    r[Kind::Order] = is_order(p, t);
    r[Kind::HaviarLihova] = is_haviar_lihova(p, t);
    r[Kind::GK] = is_gk(p, t);
    r[Kind::Closure] = is_closure(p, t);
    r[Kind::OrderAutonomous] = is_order_autonomous(p, t);
    r[Kind::Kolibiar] = is_kolibiar(p, t);
    r[Kind::Homogeneous] = is_homogeneous(p, t);
    r[Kind::Contraction] = is_contraction(p, t);
    r[Kind::Lattice] = is_lattice_congruence(p, t);
    r[Kind::GradedPreserving] = is_graded_preserving(p, t);
    check_report_implications(p, t, r);
    return r;
}

}  // namespace poq
