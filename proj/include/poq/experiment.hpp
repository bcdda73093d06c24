// The empirical comparison harness: checks every implication arrow between
// congruence kinds over all labeled posets up to n_max crossed with all
// partitions, hunts separating fixtures for the non-arrows, and runs the
// comparison-table checks (self-duality, intersection closure, quotient-map
// strength). Deterministic: a seed only permutes the search order for
// counterexamples, never a verdict.
#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "poq/congruence.hpp"
#include "poq/enumerate.hpp"
#include "poq/json_io.hpp"
#include "poq/partition.hpp"
#include "poq/poset.hpp"

namespace poq {

// --- replayable fixtures -----------------------------------------------------------

struct Fixture {
    int n = 0;
    std::vector<std::pair<int, int>> cover_pairs;
    std::vector<std::vector<int>> blocks;
    std::vector<std::vector<int>> blocks2;  // second partition, for intersection cells
};

inline Fixture make_fixture(const Poset& p, const Partition& t) {
    Fixture f;
    f.n = p.n;
    f.cover_pairs = covers(p);
    f.blocks = t.blocks;
    return f;
}

inline Poset fixture_poset(const Fixture& f) { return from_covers(f.n, f.cover_pairs); }
inline Partition fixture_partition(const Fixture& f) { return partition_from_blocks(f.n, f.blocks); }

inline Json fixture_to_json(const Fixture& f) {
    Json j;
    j["n"] = f.n;
    Json cov = Json::array();
    for (auto [a, b] : f.cover_pairs) cov.push_back(Json::array({a, b}));
    j["covers"] = std::move(cov);
    j["blocks"] = f.blocks;
    if (!f.blocks2.empty()) j["blocks2"] = f.blocks2;
    return j;
}

// --- experiment kinds ---------------------------------------------------------------

// The Figure-style kind set: the report kinds that appear in the implication
// diagram plus the orbit property, which is a property of the pair (P, t)
// rather than a checker in the report.
inline constexpr int kNumExpKinds = 13;

inline constexpr std::array<const char*, kNumExpKinds> kExpKindNames = {
    "haviar_lihova", "order",     "w_stable",        "iii",      "weak_order",
    "compatible",    "gk",        "closure",         "order_autonomous", "kolibiar",
    "homogeneous",   "contraction", "orbit",
};

inline constexpr int kExpOrbit = 12;

inline int exp_kind_index(const std::string& name) {
    for (int i = 0; i < kNumExpKinds; ++i)
        if (name == kExpKindNames[i]) return i;
    fail(ErrorKind::BadIndex, "unknown kind: " + name);
}

// t is an orbit partition iff the automorphisms fixing every block setwise
// have exactly t as their orbits.
inline bool is_orbit_partition(const Poset& p, const Partition& t,
                               const std::vector<std::vector<int>>& auts) {
    UnionFind uf(p.n);
    for (const auto& g : auts) {
        bool preserves = true;
        for (int x = 0; x < p.n && preserves; ++x)
            if (t.class_of[g[x]] != t.class_of[x]) preserves = false;
        if (!preserves) continue;
        for (int x = 0; x < p.n; ++x) uf.unite(x, g[x]);
    }
    return uf.to_partition() == t;
}

inline bool is_orbit_partition(const Poset& p, const Partition& t) {
    return is_orbit_partition(p, t, automorphisms(p));
}

struct CaseEval {
    std::array<bool, kNumExpKinds> applicable{};
    std::array<bool, kNumExpKinds> holds{};
    bool zero_singleton = false;

    bool ok(int k) const { return applicable[k] && holds[k]; }
};

inline CaseEval evaluate_case(const Poset& p, const Partition& t,
                              const std::vector<std::vector<int>>& auts) {
    CongruenceReport r = classify(p, t);
    auto put = [&](int idx, const Verdict& v, CaseEval& e) {
        e.applicable[idx] = v.applicable;
        e.holds[idx] = v.holds;
    };
    CaseEval e;
    put(0, r[Kind::HaviarLihova], e);
    put(1, r[Kind::Order], e);
    put(2, r[Kind::WStable], e);
    put(3, r[Kind::III], e);
    put(4, r[Kind::WeakOrder], e);
    put(5, r[Kind::Compatible], e);
    put(6, r[Kind::GK], e);
    put(7, r[Kind::Closure], e);
    put(8, r[Kind::OrderAutonomous], e);
    put(9, r[Kind::Kolibiar], e);
    put(10, r[Kind::Homogeneous], e);
    put(11, r[Kind::Contraction], e);
    e.applicable[kExpOrbit] = true;
    e.holds[kExpOrbit] = is_orbit_partition(p, t, auts);
    int zero = minimum(p);
    e.zero_singleton = zero != -1 && t.blocks[t.class_of[zero]].size() == 1;
    return e;
}

// --- the implication arrows ------------------------------------------------------------

enum class SideCondition { None, Finite, Strong, ZeroSingleton };

struct ArrowSpec {
    int from, to;
    SideCondition cond;
};

inline const char* side_condition_name(SideCondition c) {
    switch (c) {
        case SideCondition::None: return "";
        case SideCondition::Finite: return "finite";
        case SideCondition::Strong: return "strong";
        case SideCondition::ZeroSingleton: return "zero_singleton";
    }
    return "";
}

// from, to are experiment kind indices (see kExpKindNames).
inline const std::array<ArrowSpec, 15>& implication_arrows() {
    static const std::array<ArrowSpec, 15> arrows = {{
        {0, 1, SideCondition::None},           // haviar_lihova -> order
        {1, 2, SideCondition::Finite},         // order -> w_stable
        {2, 3, SideCondition::Strong},         // w_stable (strong map) -> iii
        {3, 4, SideCondition::None},           // iii -> weak_order
        {4, 5, SideCondition::None},           // weak_order -> compatible
        {1, 6, SideCondition::None},           // order -> gk
        {1, 7, SideCondition::Finite},         // order -> closure
        {1, 11, SideCondition::Finite},        // order -> contraction
        {7, 4, SideCondition::None},           // closure -> weak_order
        {8, 6, SideCondition::None},           // order_autonomous -> gk
        {9, 6, SideCondition::None},           // kolibiar -> gk
        {kExpOrbit, 6, SideCondition::None},   // orbit -> gk
        {6, 10, SideCondition::ZeroSingleton}, // gk -> homogeneous
        {10, 4, SideCondition::Finite},        // homogeneous -> weak_order
        {11, 5, SideCondition::None},          // contraction -> compatible
    }};
    return arrows;
}

inline bool arrow_premise(const CaseEval& e, const ArrowSpec& a) {
    if (!e.ok(a.from)) return false;
    switch (a.cond) {
        case SideCondition::None:
        case SideCondition::Finite: return true;  // everything here is finite
        case SideCondition::Strong: return e.ok(4);
        case SideCondition::ZeroSingleton: return e.zero_singleton;
    }
    return false;
}

// --- experiment result -------------------------------------------------------------------

struct ArrowResult {
    std::string from, to, side_condition;
    long long premise_cases = 0;
    long long violations = 0;
    std::optional<Fixture> first_violation;
};

struct NonArrowResult {
    std::string from, to;
    bool counterexample_found = false;
    std::optional<Fixture> fixture;
};

struct MatrixExperimentResult {
    int n_max = 0;
    long long cases = 0;
    std::vector<ArrowResult> arrows_checked;
    std::vector<NonArrowResult> non_arrows;

    long long total_violations() const {
        long long v = 0;
        for (const auto& a : arrows_checked) v += a.violations;
        return v;
    }
};

inline Json matrix_result_to_json(const MatrixExperimentResult& r) {
    Json j;
    j["n_max"] = r.n_max;
    j["cases"] = r.cases;
    Json arrows = Json::array();
    for (const auto& a : r.arrows_checked) {
        Json e;
        e["from"] = a.from;
        e["to"] = a.to;
        e["side_condition"] = a.side_condition;
        e["premise_cases"] = a.premise_cases;
        e["violations"] = a.violations;
        e["first_violation"] = a.first_violation ? fixture_to_json(*a.first_violation) : Json();
        arrows.push_back(std::move(e));
    }
    j["arrows_checked"] = std::move(arrows);
    Json nons = Json::array();
    for (const auto& s : r.non_arrows) {
        Json e;
        e["from"] = s.from;
        e["to"] = s.to;
        e["counterexample_found"] = s.counterexample_found;
        e["fixture"] = s.fixture ? fixture_to_json(*s.fixture) : Json();
        nons.push_back(std::move(e));
    }
    j["non_arrows"] = std::move(nons);
    return j;
}

inline int worker_count_from_env() {
    if (const char* env = std::getenv("POQ_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1 && v <= 64) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(std::min(hw, 16u));
}

inline constexpr int kMatrixNMaxCap = 5;

// Runs the whole experiment. Work is split over posets; each (poset,
// partition) evaluation is pure, and results are merged in enumeration
// order, so the outcome is independent of the worker count.
inline MatrixExperimentResult verify_matrix(int n_max, unsigned seed = 0,
                                            int workers = worker_count_from_env()) {
    if (n_max < 0 || n_max > kMatrixNMaxCap) fail(ErrorKind::TooLarge, "n_max cap exceeded");

    struct CaseRef {
        int n, poset_idx, part_idx;
    };
    std::vector<CaseRef> refs;
    std::vector<CaseEval> evals;
    std::vector<std::vector<Poset>> posets_by_n(n_max + 1);
    std::vector<std::vector<Partition>> parts_by_n(n_max + 1);

    for (int n = 0; n <= n_max; ++n) {
        posets_by_n[n] = all_posets(n);
        parts_by_n[n] = all_partitions(n);
        for (int pi = 0; pi < int(posets_by_n[n].size()); ++pi)
            for (int ti = 0; ti < int(parts_by_n[n].size()); ++ti) refs.push_back({n, pi, ti});
    }
    evals.resize(refs.size());

    // parallel evaluation; exceptions are carried back to the caller
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&]() {
        int cached_n = -1, cached_idx = -1;
        std::vector<std::vector<int>> cached_auts;
        try {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= refs.size()) return;
                const auto& ref = refs[i];
                const Poset& p = posets_by_n[ref.n][ref.poset_idx];
                // refs are poset-major, so the automorphism cache hits on
                // every partition of the same poset
                if (cached_n != ref.n || cached_idx != ref.poset_idx) {
                    cached_auts = automorphisms(p);
                    cached_n = ref.n;
                    cached_idx = ref.poset_idx;
                }
                evals[i] = evaluate_case(p, parts_by_n[ref.n][ref.part_idx], cached_auts);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);

    MatrixExperimentResult result;
    result.n_max = n_max;
    result.cases = (long long)refs.size();

    for (const auto& spec : implication_arrows()) {
        ArrowResult ar;
        ar.from = kExpKindNames[spec.from];
        ar.to = kExpKindNames[spec.to];
        ar.side_condition = side_condition_name(spec.cond);
        for (size_t i = 0; i < refs.size(); ++i) {
            if (!arrow_premise(evals[i], spec)) continue;
            ++ar.premise_cases;
            if (!evals[i].ok(spec.to)) {
                ++ar.violations;
                if (!ar.first_violation)
                    ar.first_violation = make_fixture(posets_by_n[refs[i].n][refs[i].poset_idx],
                                                      parts_by_n[refs[i].n][refs[i].part_idx]);
            }
        }
        result.arrows_checked.push_back(std::move(ar));
    }

    // reachability over the arrow digraph
    std::array<Bits, kNumExpKinds> reach;
    for (int k = 0; k < kNumExpKinds; ++k) {
        reach[k] = Bits(kNumExpKinds);
        reach[k].set(k);
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& a : implication_arrows())
            for (int k = 0; k < kNumExpKinds; ++k)
                if (reach[k].test(a.from) && !reach[k].test(a.to)) {
                    reach[k].set(a.to);
                    changed = true;
                }
    }

    std::vector<size_t> scan_order(refs.size());
    for (size_t i = 0; i < refs.size(); ++i) scan_order[i] = i;
    if (seed != 0) {
        std::mt19937 rng(seed);
        std::shuffle(scan_order.begin(), scan_order.end(), rng);
    }
    for (int a = 0; a < kNumExpKinds; ++a)
        for (int b = 0; b < kNumExpKinds; ++b) {
            if (a == b || reach[a].test(b)) continue;
            NonArrowResult nar;
            nar.from = kExpKindNames[a];
            nar.to = kExpKindNames[b];
            for (size_t idx : scan_order) {
                const auto& e = evals[idx];
                if (e.ok(a) && e.applicable[b] && !e.holds[b]) {
                    nar.counterexample_found = true;
                    nar.fixture = make_fixture(posets_by_n[refs[idx].n][refs[idx].poset_idx],
                                               parts_by_n[refs[idx].n][refs[idx].part_idx]);
                    break;
                }
            }
            result.non_arrows.push_back(std::move(nar));
        }
    return result;
}

// --- comparison-table checks ---------------------------------------------------------------

struct TableCell {
    bool expected = false;   // the documented value being verified
    bool observed = false;   // what the exhaustive run found
    long long violations = 0;
    std::optional<Fixture> counterexample;
};

struct TableRow {
    std::string kind;
    TableCell self_dual;
    TableCell intersection_closed;
    TableCell quotient_map_strong;
};

struct TableChecksReport {
    int n_max = 0;
    std::vector<TableRow> rows;

    const TableRow& row(const std::string& kind) const {
        for (const auto& r : rows)
            if (r.kind == kind) return r;
        fail(ErrorKind::BadIndex, "no table row for " + kind);
    }
};

inline Json table_report_to_json(const TableChecksReport& rep) {
    Json j;
    j["n_max"] = rep.n_max;
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
        Json e;
        e["kind"] = r.kind;
        auto cell = [&](const TableCell& c) {
            Json x;
            x["expected"] = c.expected;
            x["observed"] = c.observed;
            x["violations"] = c.violations;
            x["counterexample"] = c.counterexample ? fixture_to_json(*c.counterexample) : Json();
            return x;
        };
        e["self_dual"] = cell(r.self_dual);
        e["intersection_closed"] = cell(r.intersection_closed);
        e["quotient_map_strong"] = cell(r.quotient_map_strong);
        rows.push_back(std::move(e));
    }
    j["rows"] = std::move(rows);
    return j;
}

// Single-kind evaluation, for checks that do not need the whole report.
inline Verdict eval_kind(const Poset& p, const Partition& t, const std::string& kind) {
    int k = exp_kind_index(kind);
    switch (k) {
        case 0: return is_haviar_lihova(p, t);
        case 1: return is_order(p, t);
        case 2: return is_w_stable(p, t);
        case 3: return is_iii(p, t);
        case 4: return is_weak_order(p, t);
        case 5: return is_compatible(p, t);
        case 6: return is_gk(p, t);
        case 7: return is_closure(p, t);
        case 8: return is_order_autonomous(p, t);
        case 9: return is_kolibiar(p, t);
        case 10: return is_homogeneous(p, t);
        case 11: return is_contraction(p, t);
        case kExpOrbit: {
            Verdict v;
            v.holds = is_orbit_partition(p, t);
            return v;
        }
    }
    fail(ErrorKind::BadIndex, "unknown kind");
}

// Hunts a pair of congruences of the given kind whose intersection is not
// one, over all labeled posets with exactly n elements. Used where the
// failure lives above the main experiment's cap (order congruences first
// fail intersection closure at six elements).
inline std::optional<Fixture> search_intersection_failure(const std::string& kind, int n,
                                                          int cap = 6) {
    PosetEnumerator en(n, cap);
    auto parts = all_partitions(n);
    Poset p;
    while (en.next(p)) {
        std::vector<int> holding;
        for (int ti = 0; ti < int(parts.size()); ++ti)
            if (eval_kind(p, parts[ti], kind).ok()) holding.push_back(ti);
        for (size_t i = 0; i < holding.size(); ++i)
            for (size_t j = i + 1; j < holding.size(); ++j) {
                Partition both = intersection(parts[holding[i]], parts[holding[j]]);
                Verdict v = eval_kind(p, both, kind);
                if (v.applicable && !v.holds) {
                    Fixture f = make_fixture(p, parts[holding[i]]);
                    f.blocks2 = parts[holding[j]].blocks;
                    return f;
                }
            }
    }
    return std::nullopt;
}

// Exhaustive check of three comparison-table columns over all posets with
// n <= n_max and all partitions (pairs of partitions for the intersection
// column).
inline TableChecksReport table_checks(int n_max = 4) {
    if (n_max < 0 || n_max > kMatrixNMaxCap) fail(ErrorKind::TooLarge, "n_max cap exceeded");

    struct Expected {
        const char* kind;
        bool self_dual, cap_closed, strong;
    };
    // documented expectations for the three columns
    static const Expected expected[] = {
        {"compatible", true, true, false},
        {"weak_order", true, false, true},
        {"iii", false, false, true},
        {"w_stable", true, true, false},
        {"order", true, false, true},
        {"haviar_lihova", true, true, true},
        {"gk", true, false, true},
        {"order_autonomous", true, true, true},
        {"closure", false, false, true},
        {"orbit", true, false, true},
        {"contraction", true, false, false},
        {"kolibiar", true, false, true},
        {"homogeneous", false, false, true},
    };

    TableChecksReport rep;
    rep.n_max = n_max;
    for (const auto& ex : expected) {
        TableRow row;
        row.kind = ex.kind;
        row.self_dual.expected = ex.self_dual;
        row.intersection_closed.expected = ex.cap_closed;
        row.quotient_map_strong.expected = ex.strong;
        rep.rows.push_back(row);
    }

    for (int n = 0; n <= n_max; ++n) {
        auto posets = all_posets(n);
        auto parts = all_partitions(n);
        for (const auto& p : posets) {
            Poset d = dual(p);
            auto auts = automorphisms(p);
            std::vector<CaseEval> evals, dual_evals;
            for (const auto& t : parts) {
                evals.push_back(evaluate_case(p, t, auts));
                dual_evals.push_back(evaluate_case(d, t, auts));
            }
            for (auto& row : rep.rows) {
                int k = exp_kind_index(row.kind);
                for (size_t ti = 0; ti < parts.size(); ++ti) {
                    // self-dual: verdicts agree whenever both sides apply
                    if (evals[ti].applicable[k] && dual_evals[ti].applicable[k] &&
                        evals[ti].holds[k] != dual_evals[ti].holds[k]) {
                        ++row.self_dual.violations;
                        if (!row.self_dual.counterexample)
                            row.self_dual.counterexample = make_fixture(p, parts[ti]);
                    }
                    // quotient map strong: kind forces weak_order
                    if (evals[ti].ok(k) && !evals[ti].holds[4]) {
                        ++row.quotient_map_strong.violations;
                        if (!row.quotient_map_strong.counterexample)
                            row.quotient_map_strong.counterexample = make_fixture(p, parts[ti]);
                    }
                }
                for (size_t ti = 0; ti < parts.size(); ++ti) {
                    if (!evals[ti].ok(k)) continue;
                    for (size_t si = ti + 1; si < parts.size(); ++si) {
                        if (!evals[si].ok(k)) continue;
                        Partition both = intersection(parts[ti], parts[si]);
                        Verdict v = eval_kind(p, both, row.kind);
                        if (v.applicable && !v.holds) {
                            ++row.intersection_closed.violations;
                            if (!row.intersection_closed.counterexample) {
                                Fixture f = make_fixture(p, parts[ti]);
                                f.blocks2 = parts[si].blocks;
                                row.intersection_closed.counterexample = f;
                            }
                        }
                    }
                }
            }
        }
    }
    for (auto& row : rep.rows) {
        row.self_dual.observed = row.self_dual.violations == 0;
        row.intersection_closed.observed = row.intersection_closed.violations == 0;
        row.quotient_map_strong.observed = row.quotient_map_strong.violations == 0;
    }
    return rep;
}

}  // namespace poq
