// Order invariants: the one-variable Moebius function, characteristic
// polynomial, maximum unions of k antichains (via min-cost flow over the
// chain-partition dual), and the Peck report with an exact-arithmetic
// unitary certificate.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "poq/partition.hpp"
#include "poq/poset.hpp"
#include "poq/quotient.hpp"

namespace poq {

struct IntPolynomial {
    std::vector<long long> coefficients;  // index = exponent

    void trim() {
        while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
    }
    int degree() const { return int(coefficients.size()) - 1; }
    bool operator==(const IntPolynomial& o) const { return coefficients == o.coefficients; }

    std::string to_string() const {
        if (coefficients.empty()) return "0";
        std::string s;
        for (int e = degree(); e >= 0; --e) {
            long long c = coefficients[e];
            if (c == 0) continue;
            if (!s.empty()) s += c > 0 ? " + " : " - ";
            else if (c < 0) s += "-";
            long long a = c < 0 ? -c : c;
            if (a != 1 || e == 0) s += std::to_string(a);
            if (e > 0) s += e == 1 ? "t" : "t^" + std::to_string(e);
        }
        return s.empty() ? "0" : s;
    }
};

// mu with sum_{p <= q} mu(p) = delta_{0,q}; requires a unique minimal element.
inline std::vector<long long> mobius(const Poset& p) {
    int zero = minimum(p);
    if (zero == -1) fail(ErrorKind::NoUniqueMin, "Moebius function needs a unique minimal element");
    // process along a linear extension: everything below q is already known
    std::vector<int> order(p.n);
    for (int i = 0; i < p.n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return p.down_set(a).count() < p.down_set(b).count(); });
    std::vector<long long> mu(p.n, 0);
    for (int q : order) {
        long long s = 0;
        for (int x = 0; x < p.n; ++x)
            if (x != q && p.leq(x, q)) s += mu[x];
        mu[q] = (q == zero ? 1 : 0) - s;
    }
    return mu;
}

inline IntPolynomial char_poly(const Poset& p) {
    auto g = grading(p);
    if (!g.is_graded) fail(ErrorKind::NotGraded, "characteristic polynomial needs a graded poset");
    auto mu = mobius(p);  // raises NoUniqueMin when required
    int top = 0;
    for (int i = 0; i < p.n; ++i) top = std::max(top, g.rank[i]);
    IntPolynomial chi;
    chi.coefficients.assign(top + 1, 0);
    for (int i = 0; i < p.n; ++i) chi.coefficients[top - g.rank[i]] += mu[i];
    chi.trim();
    return chi;
}

// --- characteristic-polynomial preservation ------------------------------------

enum class PreservationCondition { Original, Alternative };

struct PreservationReport {
    bool applicable = true;
    std::string not_applicable_reason;
    bool condition_holds = false;
    std::optional<int> violating_class;
    bool mu_additive = false;   // mu_{P/theta}([p]) == sum of mu_P over [p]
    bool chi_equal = false;
    IntPolynomial chi_source, chi_quotient;
};

// Original condition: for every class without 0, the Moebius values of the
// class's lower bounds sum to zero. Alternative condition: the class sums of
// mu already satisfy the quotient's defining recursion. Either way the
// conclusions are recomputed independently, never assumed.
inline PreservationReport homogeneous_preservation_check(const Poset& p, const Partition& t,
                                                         PreservationCondition cond) {
    PreservationReport rep;
    int zero = minimum(p);
    auto g = grading(p);
    if (zero == -1 || !g.is_graded) {
        rep.applicable = false;
        rep.not_applicable_reason = "needs a graded poset with a unique minimal element";
        return rep;
    }
    for (const auto& blk : t.blocks)
        for (int x : blk)
            if (g.rank[x] != g.rank[blk[0]]) {
                rep.applicable = false;
                rep.not_applicable_reason = "rank is not constant on classes";
                return rep;
            }

    auto mu = mobius(p);
    auto quot = quotient_poset(p, t, QuotientMode::Closure);  // rank-constant => compatible

    rep.condition_holds = true;
    if (cond == PreservationCondition::Original) {
        for (int b = 0; b < t.num_blocks() && rep.condition_holds; ++b) {
            if (b == t.class_of[zero]) continue;
            Bits blk(p.n);
            for (int x : t.blocks[b]) blk.set(x);
            Bits lower = bounds(p, blk, BoundSide::Lower);
            long long s = 0;
            for (int x = lower.next(0); x < p.n; x = lower.next(x + 1)) s += mu[x];
            if (s != 0) {
                rep.condition_holds = false;
                rep.violating_class = b;
            }
        }
    } else {
        for (int b = 0; b < t.num_blocks() && rep.condition_holds; ++b) {
            long long s = 0;
            for (int c = 0; c < t.num_blocks(); ++c)
                if (quot.quotient.leq(c, b))
                    for (int x : t.blocks[c]) s += mu[x];
            long long expect = (b == t.class_of[zero]) ? 1 : 0;
            if (s != expect) {
                rep.condition_holds = false;
                rep.violating_class = b;
            }
        }
    }

    auto mu_quot = mobius(quot.quotient);
    rep.mu_additive = true;
    for (int b = 0; b < t.num_blocks(); ++b) {
        long long s = 0;
        for (int x : t.blocks[b]) s += mu[x];
        if (s != mu_quot[b]) rep.mu_additive = false;
    }
    rep.chi_source = char_poly(p);
    rep.chi_quotient = char_poly(quot.quotient);
    rep.chi_equal = rep.chi_source == rep.chi_quotient;
    return rep;
}

// --- maximum unions of k antichains ----------------------------------------------

namespace detail {

// Min-cost flow, successive shortest augmenting paths; small graphs only.
struct MinCostFlow {
    struct Edge {
        int to, cap;
        long long cost;
        int rev;
    };
    std::vector<std::vector<Edge>> g;
    explicit MinCostFlow(int n) : g(n) {}
    void add_edge(int a, int b, int cap, long long cost) {
        g[a].push_back({b, cap, cost, int(g[b].size())});
        g[b].push_back({a, 0, -cost, int(g[a].size()) - 1});
    }
    // augment unit paths while they have negative cost; returns total cost
    long long run(int s, int t) {
        long long total = 0;
        const long long inf = (1LL << 60);
        for (;;) {
            int n = int(g.size());
            std::vector<long long> dist(n, inf);
            std::vector<int> pe(n, -1), pv(n, -1);
            dist[s] = 0;
            for (int round = 0; round < n; ++round) {
                bool relax = false;
                for (int v = 0; v < n; ++v) {
                    if (dist[v] == inf) continue;
                    for (int i = 0; i < int(g[v].size()); ++i) {
                        const Edge& e = g[v][i];
                        if (e.cap > 0 && dist[v] + e.cost < dist[e.to]) {
                            dist[e.to] = dist[v] + e.cost;
                            pv[e.to] = v;
                            pe[e.to] = i;
                            relax = true;
                        }
                    }
                }
                if (!relax) break;
            }
            if (dist[t] >= 0 || dist[t] == inf) break;
            for (int v = t; v != s; v = pv[v]) {
                Edge& e = g[pv[v]][pe[v]];
                --e.cap;
                ++g[v][e.rev].cap;
            }
            total += dist[t];
        }
        return total;
    }
};

}  // namespace detail

// Exact maximum size of a union of k antichains. Dually this is
// min over chain partitions of sum min(|C|, k); a chain of length > k saves
// |C| - k elements, and the flow searches for the best saving.
inline int max_k_family(const Poset& p, int k) {
    if (p.n == 0 || k <= 0) return 0;
    int s = 0, t = 1;
    auto in = [](int x) { return 2 + 2 * x; };
    auto out = [](int x) { return 3 + 2 * x; };
    detail::MinCostFlow mcf(2 + 2 * p.n);
    for (int x = 0; x < p.n; ++x) {
        mcf.add_edge(s, in(x), 1, k);     // opening a chain forfeits k elements
        mcf.add_edge(in(x), out(x), 1, -1);  // covering an element gains one
        mcf.add_edge(out(x), t, 1, 0);
        for (int y = 0; y < p.n; ++y)
            if (p.lt(x, y)) mcf.add_edge(out(x), in(y), 1, 0);
    }
    long long saving = -mcf.run(s, t);
    return p.n - int(saving);
}

// --- Peck reports ------------------------------------------------------------------

struct PeckReport {
    bool rank_symmetric = false;
    bool rank_unimodal = false;
    bool strongly_sperner = false;
    bool is_peck = false;
    // Present only when every stacked cover-map product V_i -> V_{n-i} is
    // invertible with unit coefficients; holds the exact ranks found.
    std::optional<std::vector<int>> unitary_certificate;
    std::vector<int> rank_sizes;
};

namespace detail {

// Exact rank over the rationals.
inline int matrix_rank(std::vector<std::vector<mpq_class>> m) {
    if (m.empty()) return 0;
    int rows = int(m.size()), cols = int(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv == -1) continue;
        std::swap(m[rank], m[piv]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[rank][c];
            for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

inline PeckReport peck_report(const Poset& p) {
    auto g = grading(p);
    auto comp = components(p);
    bool connected = p.n == 0 || *std::max_element(comp.begin(), comp.end()) == 0;
    if (!g.is_graded || !connected)
        fail(ErrorKind::NotGraded, "Peck report needs a connected graded poset");

    PeckReport rep;
    rep.rank_sizes = g.rank_sizes;
    int top = int(g.rank_sizes.size()) - 1;

    rep.rank_symmetric = true;
    for (int i = 0; i <= top; ++i)
        if (g.rank_sizes[i] != g.rank_sizes[top - i]) rep.rank_symmetric = false;

    rep.rank_unimodal = false;
    for (int j = 0; j <= top && !rep.rank_unimodal; ++j) {
        bool ok = true;
        for (int i = 0; i < j; ++i)
            if (g.rank_sizes[i] > g.rank_sizes[i + 1]) ok = false;
        for (int i = j; i < top; ++i)
            if (g.rank_sizes[i] < g.rank_sizes[i + 1]) ok = false;
        if (ok) rep.rank_unimodal = true;
    }
    if (p.n == 0) rep.rank_unimodal = true;

    rep.strongly_sperner = true;
    auto sorted_sizes = g.rank_sizes;
    std::sort(sorted_sizes.begin(), sorted_sizes.end(), std::greater<int>());
    for (int k = 1; k <= top + 1; ++k) {
        int best_ranks = 0;
        for (int i = 0; i < std::min<int>(k, int(sorted_sizes.size())); ++i)
            best_ranks += sorted_sizes[i];
        if (max_k_family(p, k) > best_ranks) rep.strongly_sperner = false;
    }

    rep.is_peck = rep.rank_symmetric && rep.rank_unimodal && rep.strongly_sperner;

    if (rep.rank_symmetric && p.n > 0) {
        // members of each rank, in element order
        std::vector<std::vector<int>> level(top + 1);
        for (int i = 0; i < p.n; ++i) level[g.rank[i]].push_back(i);
        bool all_invertible = true;
        std::vector<int> ranks_found;
        for (int i = 0; 2 * i < top; ++i) {
            // product M_{top-i-1} ... M_i as an exact integer matrix,
            // accumulated from the identity on V_i
            std::vector<std::vector<mpz_class>> cur(level[i].size());
            for (size_t a = 0; a < level[i].size(); ++a) {
                cur[a].assign(level[i].size(), 0);
                cur[a][a] = 1;
            }
            for (int lvl = i; lvl < top - i; ++lvl) {
                std::vector<std::vector<mpz_class>> next(level[lvl + 1].size());
                for (size_t r = 0; r < level[lvl + 1].size(); ++r)
                    next[r].assign(level[i].size(), 0);
                for (size_t r = 0; r < level[lvl + 1].size(); ++r)
                    for (size_t m = 0; m < level[lvl].size(); ++m) {
                        if (!p.lt(level[lvl][m], level[lvl + 1][r])) continue;
                        for (size_t c = 0; c < level[i].size(); ++c) next[r][c] += cur[m][c];
                    }
                cur = std::move(next);
            }
            std::vector<std::vector<mpq_class>> q(cur.size());
            for (size_t r = 0; r < cur.size(); ++r)
                for (const auto& v : cur[r]) q[r].push_back(mpq_class(v));
            int rk = detail::matrix_rank(q);
            ranks_found.push_back(rk);
            if (rk != int(level[i].size())) all_invertible = false;
        }
        if (all_invertible) rep.unitary_certificate = ranks_found;
    }
    return rep;
}

}  // namespace poq
