// Generators for the example posets and their canonical congruences:
// Boolean and Young lattices, weak Bruhat orders of types A and B, the
// strong Bruhat order, Tamari lattices with the permutations-to-trees map,
// Cambrian partitions, the Simion interval partition, and the graph poset.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "poq/lattice.hpp"
#include "poq/partition.hpp"
#include "poq/poset.hpp"
#include "poq/quotient.hpp"

namespace poq {
namespace families {

// --- elementary families ---------------------------------------------------------

inline Poset chain(int n) {
    std::vector<std::pair<int, int>> cov;
    for (int i = 0; i + 1 < n; ++i) cov.push_back({i, i + 1});
    return from_covers(n, cov);
}

inline Poset antichain(int n) { return from_covers(n, {}); }

inline constexpr int kBooleanCap = 12;

inline Poset boolean_lattice(int n) {
    if (n < 0 || n > kBooleanCap) fail(ErrorKind::TooLarge, "boolean lattice cap exceeded");
    int size = 1 << n;
    Poset p(size);
    for (int a = 0; a < size; ++a) {
        std::string lab = "{";
        bool first = true;
        for (int k = 0; k < n; ++k)
            if (a >> k & 1) {
                if (!first) lab += ",";
                lab += std::to_string(k + 1);
                first = false;
            }
        p.labels[a] = lab + "}";
        for (int b = 0; b < size; ++b)
            if ((a & b) == a) p.rows[a].set(b);
    }
    return p;
}

// --- Young lattice ----------------------------------------------------------------

// Partitions with at most m parts, each part at most n, ordered by
// containment of Young diagrams.
inline Poset young_lattice(int m, int n) {
    if (m >= 0 && n >= 0) {
        // C(m+n, m) elements; keep the order matrix at desk scale
        long long count = 1;
        for (int i = 1; i <= m; ++i) count = count * (n + i) / i;
        if (count > 4096) fail(ErrorKind::TooLarge, "young lattice cap exceeded");
    }
    std::vector<std::vector<int>> shapes;
    std::vector<int> cur;
    std::function<void(int, int)> gen = [&](int row, int maxpart) {
        shapes.push_back(cur);
        if (row == m) return;
        for (int part = 1; part <= maxpart; ++part) {
            cur.push_back(part);
            gen(row + 1, part);
            cur.pop_back();
        }
    };
    if (m >= 0 && n >= 0) gen(0, n);
    std::sort(shapes.begin(), shapes.end());
    int size = int(shapes.size());
    Poset p(size);
    for (int i = 0; i < size; ++i) {
        std::string lab = "(";
        for (size_t k = 0; k < shapes[i].size(); ++k) {
            if (k) lab += ",";
            lab += std::to_string(shapes[i][k]);
        }
        p.labels[i] = lab + ")";
        for (int j = 0; j < size; ++j) {
            bool contained = shapes[i].size() <= shapes[j].size();
            for (size_t k = 0; k < shapes[i].size() && contained; ++k)
                if (shapes[i][k] > shapes[j][k]) contained = false;
            if (contained) p.rows[i].set(j);
        }
    }
    return p;
}

// --- type A weak order ------------------------------------------------------------

namespace detail {

inline std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = i + 1;
    std::vector<std::vector<int>> out;
    do out.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return out;
}

inline std::string perm_label(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

inline Bits inversion_set(const std::vector<int>& v) {
    int n = int(v.size());
    Bits inv(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (v[i] > v[j]) inv.set(i * n + j);
    return inv;
}

// Swap the entries holding values v and v+1.
inline std::vector<int> value_swap(std::vector<int> perm, int v) {
    int a = -1, b = -1;
    for (int i = 0; i < int(perm.size()); ++i) {
        if (perm[i] == v) a = i;
        if (perm[i] == v + 1) b = i;
    }
    std::swap(perm[a], perm[b]);
    return perm;
}

}  // namespace detail

inline constexpr int kWeakBruhatACap = 6;

// Permutations of [n] ordered by containment of inversion sets; covering
// relations are adjacent-value transpositions adding one inversion, and the
// two constructions are checked against each other.
inline Poset weak_bruhat_A(int n) {
    if (n < 1 || n > kWeakBruhatACap) fail(ErrorKind::TooLarge, "weak order cap exceeded");
    auto perms = detail::all_permutations(n);
    int size = int(perms.size());
    std::vector<Bits> inv;
    for (const auto& v : perms) inv.push_back(detail::inversion_set(v));

    Poset p(size);
    for (int i = 0; i < size; ++i) {
        p.labels[i] = detail::perm_label(perms[i]);
        for (int j = 0; j < size; ++j)
            if (inv[i].is_subset_of(inv[j])) p.rows[i].set(j);
    }
    check_order_axioms(p);

    std::map<std::vector<int>, int> index;
    for (int i = 0; i < size; ++i) index[perms[i]] = i;
    std::vector<std::pair<int, int>> cov;
    for (int i = 0; i < size; ++i)
        for (int v = 1; v < n; ++v) {
            auto up = detail::value_swap(perms[i], v);
            if (detail::inversion_set(up).count() == inv[i].count() + 1)
                cov.push_back({i, index[up]});
        }
    if (!from_covers(size, cov).same_order(p))
        fail(ErrorKind::InternalCheckFailure, "weak order covers disagree with inversion sets");
    return p;
}

// --- Tamari lattices ---------------------------------------------------------------

// Binary trees are carried as canonical strings: empty tree "", internal
// node with subtrees L, R as "(L)R".
namespace detail {

inline std::pair<std::string, std::string> tree_split(const std::string& t) {
    int depth = 0;
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] == '(') ++depth;
        if (t[i] == ')' && --depth == 0)
            return {t.substr(1, i - 1), t.substr(i + 1)};
    }
    fail(ErrorKind::InternalCheckFailure, "bad tree encoding");
}

inline std::vector<std::string> all_trees(int n) {
    std::vector<std::vector<std::string>> memo(n + 1);
    memo[0] = {""};
    for (int k = 1; k <= n; ++k)
        for (int left = 0; left < k; ++left)
            for (const auto& l : memo[left])
                for (const auto& r : memo[k - 1 - left]) memo[k].push_back("(" + l + ")" + r);
    return memo[n];
}

// All trees reachable by one forwards rotation: ((A)B)C -> (A)(B)C at any node.
inline std::vector<std::string> forward_rotations(const std::string& t) {
    std::vector<std::string> out;
    if (t.empty()) return out;
    auto [l, r] = tree_split(t);
    if (!l.empty()) {
        auto [a, b] = tree_split(l);
        out.push_back("(" + a + ")(" + b + ")" + r);
    }
    for (const auto& l2 : forward_rotations(l)) out.push_back("(" + l2 + ")" + r);
    for (const auto& r2 : forward_rotations(r)) out.push_back("(" + l + ")" + r2);
    return out;
}

}  // namespace detail

inline constexpr int kTamariCap = 8;

// Binary trees with n internal nodes under forwards rotation.
inline Poset tamari(int n) {
    if (n < 0 || n > kTamariCap) fail(ErrorKind::TooLarge, "tamari cap exceeded");
    auto trees = detail::all_trees(n);
    std::sort(trees.begin(), trees.end());
    std::map<std::string, int> index;
    for (int i = 0; i < int(trees.size()); ++i) index[trees[i]] = i;
    std::vector<std::pair<int, int>> cov;
    for (int i = 0; i < int(trees.size()); ++i)
        for (const auto& up : detail::forward_rotations(trees[i])) cov.push_back({i, index[up]});
    std::vector<std::string> labels = trees;
    for (auto& s : labels)
        if (s.empty()) s = ".";
    return from_covers(int(trees.size()), cov, labels);
}

// The recursive permutations-to-trees map: split the one-line word at its
// largest value, recurse on the two sides. psi[i] is the tamari(n) index of
// the image of the i-th element of weak_bruhat_A(n).
inline std::vector<int> psi(int n) {
    if (n < 1) fail(ErrorKind::BadIndex, "psi needs n >= 1");
    auto perms = detail::all_permutations(n);
    auto trees = detail::all_trees(n);
    std::sort(trees.begin(), trees.end());
    std::map<std::string, int> index;
    for (int i = 0; i < int(trees.size()); ++i) index[trees[i]] = i;
    std::function<std::string(const std::vector<int>&)> build = [&](const std::vector<int>& w) {
        if (w.empty()) return std::string();
        auto mx = std::max_element(w.begin(), w.end());
        std::vector<int> left(w.begin(), mx), right(mx + 1, w.end());
        return "(" + build(left) + ")" + build(right);
    };
    std::vector<int> out;
    for (const auto& v : perms) out.push_back(index.at(build(v)));
    return out;
}

inline Partition psi_kernel(int n) {
    return partition_from_class_of(psi(n));
}

// --- Cambrian partitions ------------------------------------------------------------

// orientation[i] (0-based, i < n-2) gives the direction of the diagram edge
// between the i+1st and i+2nd simple reflections: true for ascending
// (s_{i+1} -> s_{i+2}), false for descending. For each oriented edge s -> t
// the generating pair merges t with ts.
inline Partition cambrian_partition(int n, const std::vector<bool>& orientation) {
    if (int(orientation.size()) != std::max(0, n - 2))
        fail(ErrorKind::BadIndex, "orientation needs one direction per diagram edge");
    auto perms = detail::all_permutations(n);
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < int(perms.size()); ++i) index[perms[i]] = i;
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i + 1;

    Poset w = weak_bruhat_A(n);
    std::vector<std::pair<int, int>> pairs;
    for (int e = 0; e < n - 2; ++e) {
        int s = e + 1, t = e + 2;  // diagram edge between s_{e+1} and s_{e+2}
        if (!orientation[e]) std::swap(s, t);
        auto telem = detail::value_swap(id, t);
        auto ts = detail::value_swap(telem, s);
        pairs.push_back({index.at(telem), index.at(ts)});
    }
    return smallest_lattice_congruence(w, pairs);
}

// --- type B weak order ---------------------------------------------------------------

struct SignedPermutation {
    std::vector<int> values;  // abbreviated one-line form, entries in +-{1..n}
};

namespace detail {

inline std::vector<std::vector<int>> all_signed_permutations(int n) {
    std::vector<std::vector<int>> out;
    for (const auto& base : all_permutations(n))
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> v = base;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) v[i] = -v[i];
            out.push_back(v);
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Left inversion set of a signed permutation, encoded over the n^2 positive
// roots: the short roots e_a, then e_b - e_a, then e_b + e_a for a < b.
inline Bits b_inversions(const std::vector<int>& w) {
    int n = int(w.size());
    std::vector<int> pos(n + 1);
    std::vector<bool> neg(n + 1);
    for (int i = 0; i < n; ++i) {
        pos[std::abs(w[i])] = i;
        neg[std::abs(w[i])] = w[i] < 0;
    }
    int pair_count = n * (n - 1) / 2;
    Bits inv(n + 2 * pair_count);
    auto pair_id = [&](int a, int b) {  // 1 <= a < b <= n
        return (a - 1) * n - (a - 1) * a / 2 + (b - a - 1);
    };
    for (int a = 1; a <= n; ++a)
        if (neg[a]) inv.set(a - 1);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            bool minus_root, plus_root;
            if (!neg[a] && !neg[b]) {
                minus_root = pos[b] < pos[a];
                plus_root = false;
            } else if (!neg[a] && neg[b]) {
                minus_root = true;
                plus_root = pos[a] < pos[b];
            } else if (neg[a] && !neg[b]) {
                minus_root = false;
                plus_root = pos[b] < pos[a];
            } else {
                minus_root = pos[a] < pos[b];
                plus_root = true;
            }
            if (minus_root) inv.set(n + pair_id(a, b));
            if (plus_root) inv.set(n + pair_count + pair_id(a, b));
        }
    return inv;
}

inline int b_length_formula(const std::vector<int>& w) {
    int n = int(w.size());
    int inv = 0, negsum = 0;
    for (int i = 0; i < n; ++i) {
        if (w[i] < 0) negsum += -w[i];
        for (int j = i + 1; j < n; ++j)
            if (w[i] > w[j]) ++inv;
    }
    return inv + negsum;
}

inline std::string signed_label(const std::vector<int>& v) { return perm_label(v); }

}  // namespace detail

inline constexpr int kWeakBruhatBCap = 4;

// Signed permutations under the right weak order: containment of left
// inversion sets, cross-checked against covers by right multiplication with
// the simple generators (negate the first entry / swap adjacent positions).
inline Poset weak_bruhat_B(int n) {
    if (n < 1 || n > kWeakBruhatBCap) fail(ErrorKind::TooLarge, "type B weak order cap exceeded");
    auto elems = detail::all_signed_permutations(n);
    int size = int(elems.size());
    std::vector<Bits> inv;
    for (const auto& v : elems) {
        inv.push_back(detail::b_inversions(v));
        if (inv.back().count() != detail::b_length_formula(v))
            fail(ErrorKind::InternalCheckFailure, "type B length formulas disagree");
    }
    Poset p(size);
    for (int i = 0; i < size; ++i) {
        p.labels[i] = detail::signed_label(elems[i]);
        for (int j = 0; j < size; ++j)
            if (inv[i].is_subset_of(inv[j])) p.rows[i].set(j);
    }
    check_order_axioms(p);

    std::map<std::vector<int>, int> index;
    for (int i = 0; i < size; ++i) index[elems[i]] = i;
    std::vector<std::pair<int, int>> cov;
    for (int i = 0; i < size; ++i) {
        int len = inv[i].count();
        for (int gen = 0; gen <= n - 1; ++gen) {
            auto up = elems[i];
            if (gen == 0)
                up[0] = -up[0];
            else
                std::swap(up[gen - 1], up[gen]);
            if (detail::b_length_formula(up) == len + 1) cov.push_back({i, index.at(up)});
        }
    }
    if (!from_covers(size, cov).same_order(p))
        fail(ErrorKind::InternalCheckFailure, "type B covers disagree with inversion sets");
    return p;
}

// The interval partition of the type B weak order: sigma's block is the
// interval spanned by sigma+sigma- and sigma-sigma+ (positive entries first,
// respectively negative entries first).
inline Partition simion_partition(int n) {
    auto elems = detail::all_signed_permutations(n);
    Poset w = weak_bruhat_B(n);
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < int(elems.size()); ++i) index[elems[i]] = i;

    std::set<std::vector<int>> blocks;
    for (size_t i = 0; i < elems.size(); ++i) {
        std::vector<int> plus, minus;
        for (int x : elems[i]) (x > 0 ? plus : minus).push_back(x);
        std::vector<int> alpha = plus, beta = minus;
        alpha.insert(alpha.end(), minus.begin(), minus.end());
        beta.insert(beta.end(), plus.begin(), plus.end());
        int a = index.at(alpha), b = index.at(beta);
        if (!w.comparable(a, b))
            fail(ErrorKind::InternalCheckFailure, "interval endpoints are incomparable");
        if (!w.leq(a, b)) std::swap(a, b);
        std::vector<int> blk;
        for (int x = 0; x < w.n; ++x)
            if (w.leq(a, x) && w.leq(x, b)) blk.push_back(x);
        blocks.insert(blk);
    }
    try {
        return partition_from_blocks(w.n, std::vector<std::vector<int>>(blocks.begin(), blocks.end()));
    } catch (const Error&) {
        fail(ErrorKind::InternalCheckFailure, "intervals do not tile the group");
    }
}

// --- strong Bruhat order ----------------------------------------------------------

namespace detail {

// One reduced word per permutation (letters are 0-based positions of the
// adjacent transpositions, applied left to right by right multiplication).
inline std::vector<int> reduced_word(std::vector<int> w, unsigned rng_seed = 0) {
    std::vector<int> rev;
    unsigned state = rng_seed;
    auto next_rand = [&]() {
        state = state * 1664525u + 1013904223u;
        return state >> 16;
    };
    for (;;) {
        std::vector<int> descents;
        for (int i = 0; i + 1 < int(w.size()); ++i)
            if (w[i] > w[i + 1]) descents.push_back(i);
        if (descents.empty()) break;
        int d = rng_seed == 0 ? descents[0] : descents[next_rand() % descents.size()];
        std::swap(w[d], w[d + 1]);
        rev.push_back(d);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

inline std::vector<int> apply_word(int n, const std::vector<int>& word) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    for (int letter : word) std::swap(w[letter], w[letter + 1]);
    return w;
}

inline bool subword_reaches(int n, const std::vector<int>& big, const std::vector<int>& target,
                            int target_len) {
    // try all subwords of the fixed reduced word with the target's length
    int m = int(big.size());
    if (target_len > m) return false;
    std::vector<int> pick(target_len);
    std::function<bool(int, int)> rec = [&](int idx, int from) {
        if (idx == target_len) {
            std::vector<int> sub(target_len);
            for (int k = 0; k < target_len; ++k) sub[k] = big[pick[k]];
            return apply_word(n, sub) == target;
        }
        for (int i = from; i <= m - (target_len - idx); ++i) {
            pick[idx] = i;
            if (rec(idx + 1, i + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

}  // namespace detail

inline constexpr int kStrongBruhatCap = 5;

// u <= w iff the fixed reduced word of w contains a reduced word of u as a
// subword. rng_seed != 0 picks different reduced words (cross-check use).
inline Poset strong_bruhat_A(int n, unsigned rng_seed = 0) {
    if (n < 1 || n > kStrongBruhatCap) fail(ErrorKind::TooLarge, "strong order cap exceeded");
    auto perms = detail::all_permutations(n);
    int size = int(perms.size());
    std::vector<std::vector<int>> words;
    for (const auto& v : perms) words.push_back(detail::reduced_word(v, rng_seed));
    Poset p(size);
    for (int i = 0; i < size; ++i) p.labels[i] = detail::perm_label(perms[i]);
    for (int j = 0; j < size; ++j)
        for (int i = 0; i < size; ++i) {
            if (words[i].size() > words[j].size()) continue;
            if (detail::subword_reaches(n, words[j], perms[i], int(words[i].size())))
                p.rows[i].set(j);
        }
    check_order_axioms(p);
    return p;
}

// Double cosets W_J w W_K inside the symmetric group, as a partition of the
// strong (or weak) order's element list. J and K hold 1-based generator
// indices.
inline Partition double_coset_partition(int n, const std::vector<int>& J,
                                        const std::vector<int>& K) {
    for (int j : J)
        if (j < 1 || j >= n) fail(ErrorKind::BadIndex, "generator index out of range");
    for (int k : K)
        if (k < 1 || k >= n) fail(ErrorKind::BadIndex, "generator index out of range");
    auto perms = detail::all_permutations(n);
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < int(perms.size()); ++i) index[perms[i]] = i;
    UnionFind uf(int(perms.size()));
    for (int i = 0; i < int(perms.size()); ++i) {
        for (int j : J) uf.unite(i, index.at(detail::value_swap(perms[i], j)));  // left coset moves
        for (int k : K) {
            auto v = perms[i];
            std::swap(v[k - 1], v[k]);  // right coset moves
            uf.unite(i, index.at(v));
        }
    }
    return uf.to_partition();
}

// --- orbit-driven families -----------------------------------------------------------

namespace detail {

// Permutation of subsets of the ground set induced by a permutation of atoms.
inline std::vector<int> induced_on_masks(const std::vector<int>& atom_perm) {
    int n = int(atom_perm.size());
    std::vector<int> out(1 << n);
    for (int mask = 0; mask < (1 << n); ++mask) {
        int img = 0;
        for (int k = 0; k < n; ++k)
            if (mask >> k & 1) img |= 1 << atom_perm[k];
        out[mask] = img;
    }
    return out;
}

}  // namespace detail

// Full symmetric group permuting the atoms of the boolean lattice B_n.
inline PermutationGroup atoms_symmetric_group(int n) {
    PermutationGroup g;
    g.degree = 1 << n;
    if (n >= 2) {
        std::vector<int> swap01(n), cycle(n);
        for (int i = 0; i < n; ++i) swap01[i] = cycle[i] = i;
        std::swap(swap01[0], swap01[1]);
        for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
        g.generators.push_back(detail::induced_on_masks(swap01));
        if (n >= 3) g.generators.push_back(detail::induced_on_masks(cycle));
    }
    return g;
}

inline PermutationGroup atoms_cyclic_group(int n) {
    PermutationGroup g;
    g.degree = 1 << n;
    if (n >= 2) {
        std::vector<int> cycle(n);
        for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
        g.generators.push_back(detail::induced_on_masks(cycle));
    }
    return g;
}

// S_m acting on the C(m,2) edge atoms of B_{C(m,2)} by relabelling vertices.
inline PermutationGroup pair_action_group(int m) {
    int atoms = m * (m - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) pairs.push_back({a, b});
    auto on_atoms = [&](const std::vector<int>& vperm) {
        std::vector<int> out(atoms);
        for (int e = 0; e < atoms; ++e) {
            int a = vperm[pairs[e].first], b = vperm[pairs[e].second];
            if (a > b) std::swap(a, b);
            out[e] = int(std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) - pairs.begin());
        }
        return out;
    };
    PermutationGroup g;
    g.degree = 1 << atoms;
    if (m >= 2) {
        std::vector<int> swap01(m), cycle(m);
        for (int i = 0; i < m; ++i) swap01[i] = i;
        std::swap(swap01[0], swap01[1]);
        for (int i = 0; i < m; ++i) cycle[i] = (i + 1) % m;
        g.generators.push_back(detail::induced_on_masks(on_atoms(swap01)));
        if (m >= 3) g.generators.push_back(detail::induced_on_masks(on_atoms(cycle)));
    }
    return g;
}

// Cells of an m x n array as atoms of B_{mn}: permute cells within each row,
// swap adjacent rows.
inline PermutationGroup wreath_rows_group(int m, int n) {
    int atoms = m * n;
    PermutationGroup g;
    g.degree = 1 << atoms;
    auto identity = [&] {
        std::vector<int> v(atoms);
        for (int i = 0; i < atoms; ++i) v[i] = i;
        return v;
    };
    for (int r = 0; r < m; ++r)
        for (int c = 0; c + 1 < n; ++c) {
            auto v = identity();
            std::swap(v[r * n + c], v[r * n + c + 1]);
            g.generators.push_back(detail::induced_on_masks(v));
        }
    for (int r = 0; r + 1 < m; ++r) {
        auto v = identity();
        for (int c = 0; c < n; ++c) std::swap(v[r * n + c], v[(r + 1) * n + c]);
        g.generators.push_back(detail::induced_on_masks(v));
    }
    return g;
}

inline constexpr int kGraphPosetCap = 4;

// Subgraph order on unlabelled simple graphs with m vertices, constructed as
// the orbit quotient of B_{C(m,2)} under the vertex-relabelling action.
inline std::pair<Poset, Partition> graph_poset(int m, int cap = kGraphPosetCap) {
    if (m < 1 || m > cap) fail(ErrorKind::TooLarge, "graph poset cap exceeded");
    Poset source = boolean_lattice(m * (m - 1) / 2);
    Partition orbits = orbit_partition(source, pair_action_group(m));
    auto q = quotient_poset(source, orbits, QuotientMode::Strict);
    return {q.quotient, orbits};
}

}  // namespace families
}  // namespace poq
