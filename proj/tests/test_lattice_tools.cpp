#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "poq/congruence.hpp"
#include "poq/enumerate.hpp"
#include "poq/families.hpp"
#include "poq/lattice.hpp"

using namespace poq;

TEST_CASE("DM completion of the named fixtures", "[lattice]") {
    // complete lattices complete to themselves
    for (const Poset& l : {families::boolean_lattice(3), families::chain(3), fixtures::pentagon(),
                           families::weak_bruhat_A(3)}) {
        auto dm = dm_completion(l);
        CHECK(is_isomorphic(dm.lattice, l));
    }
    // the 2-antichain gains a top and a bottom
    auto dm = dm_completion(families::antichain(2));
    CHECK(dm.lattice.n == 4);
    CHECK(is_isomorphic(dm.lattice, families::boolean_lattice(2)));
}

TEST_CASE("DM closed sets and embedding", "[lattice][property]") {
    for (int n = 0; n <= 4; ++n) {
        PosetEnumerator en(n);
        Poset p;
        while (en.next(p)) {
            auto dm = dm_completion(p);
            REQUIRE(structural_predicates(dm.lattice).is_lattice);
            for (const auto& a : dm.closed_sets) {
                Bits closed = bounds(p, bounds(p, a, BoundSide::Upper), BoundSide::Lower);
                REQUIRE(closed == a);
            }
            // embedding preserves and reflects order
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    REQUIRE(p.leq(x, y) == dm.lattice.leq(dm.embed[x], dm.embed[y]));
        }
    }
}

TEST_CASE("M0 sublattice", "[lattice]") {
    // of a lattice: exactly the image of the lattice
    Poset b2 = families::boolean_lattice(2);
    auto m0 = m0_sublattice(b2);
    CHECK(m0.lattice.n == 4);
    CHECK(is_isomorphic(m0.lattice, b2));

    // of the 2-antichain: all four DM elements
    CHECK(m0_sublattice(families::antichain(2)).lattice.n == 4);

    // of the crown: a sublattice of DM closed under both operations
    auto crown = fixtures::crown4();
    auto m0c = m0_sublattice(crown);
    auto dmc = dm_completion(crown);
    CHECK(structural_predicates(m0c.lattice).is_lattice);
    // every m0 closed set appears in DM
    for (const auto& a : m0c.closed_sets)
        CHECK(std::find(dmc.closed_sets.begin(), dmc.closed_sets.end(), a) != dmc.closed_sets.end());
    // closure under meet and join inside the member list
    for (const auto& a : m0c.closed_sets)
        for (const auto& b : m0c.closed_sets) {
            Bits mt = a & b;
            Bits jn = bounds(crown, bounds(crown, a | b, BoundSide::Upper), BoundSide::Lower);
            CHECK(std::find(m0c.closed_sets.begin(), m0c.closed_sets.end(), mt) != m0c.closed_sets.end());
            CHECK(std::find(m0c.closed_sets.begin(), m0c.closed_sets.end(), jn) != m0c.closed_sets.end());
        }
}

TEST_CASE("smallest lattice congruence fixtures", "[lattice]") {
    // the Cambrian generator on the six-element weak order
    Poset w3 = families::weak_bruhat_A(3);
    // s2 = 1,3,2 covers: merging it with 2,3,1
    int s2 = -1, s2s1 = -1;
    for (int i = 0; i < 6; ++i) {
        if (w3.labels[i] == "1,3,2") s2 = i;
        if (w3.labels[i] == "2,3,1") s2s1 = i;
    }
    REQUIRE(s2 != -1);
    REQUIRE(s2s1 != -1);
    Partition camb = smallest_lattice_congruence(w3, {{s2, s2s1}});
    CHECK(camb.num_blocks() == 5);
    CHECK(camb == families::cambrian_partition(3, {true}));

    // empty pair set: identity
    CHECK(smallest_lattice_congruence(w3, {}) == identity_partition(6));

    // the diamond: bottom glued to an atom forces the two-block congruence
    Poset b2 = families::boolean_lattice(2);
    CHECK(smallest_lattice_congruence(b2, {{0, 1}}) == partition_from_blocks(4, {{0, 1}, {2, 3}}));

    CHECK_THROWS_MATCHES(smallest_lattice_congruence(families::antichain(2), {}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind == ErrorKind::NotLattice;
                         }));
}

TEST_CASE("smallest lattice congruence is minimal", "[lattice][property]") {
    for (const Poset& l : {families::boolean_lattice(2), fixtures::pentagon(),
                           families::weak_bruhat_A(3), families::boolean_lattice(3),
                           fixtures::stacked_diamonds()}) {
        auto all = oracle::all_lattice_congruences_bruteforce(l);
        for (int a = 0; a < l.n; ++a)
            for (int b = a + 1; b < l.n; ++b) {
                Partition built = smallest_lattice_congruence(l, {{a, b}});
                REQUIRE(oracle::lattice_congruence_bruteforce(l, built));
                // the brute-force minimum: intersect every congruence containing (a,b)
                Partition best;
                bool first = true;
                for (const auto& cand : all) {
                    if (!cand.same_block(a, b)) continue;
                    best = first ? cand : intersection(best, cand);
                    first = false;
                }
                REQUIRE_FALSE(first);
                REQUIRE(built == best);
            }
    }
}

TEST_CASE("lattice congruence enumeration counts", "[lattice]") {
    CHECK(enumerate_lattice_congruences(families::chain(2)).congruences.size() == 2);
    CHECK(enumerate_lattice_congruences(families::boolean_lattice(2)).congruences.size() == 4);
    CHECK(enumerate_lattice_congruences(fixtures::pentagon()).congruences.size() == 5);
    CHECK_THROWS_MATCHES(enumerate_lattice_congruences(families::weak_bruhat_A(4), 12), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind == ErrorKind::TooLarge;
                         }));
}

TEST_CASE("lattice congruence enumeration equals the brute-force filter", "[lattice][property]") {
    for (const Poset& l : {families::chain(4), families::boolean_lattice(2), fixtures::pentagon(),
                           families::weak_bruhat_A(3), families::boolean_lattice(3)}) {
        auto enumerated = enumerate_lattice_congruences(l).congruences;
        auto brute = oracle::all_lattice_congruences_bruteforce(l);
        REQUIRE(enumerated == brute);
    }
}

TEST_CASE("congruence lattices are meet-closed and bounded", "[lattice][property]") {
    for (const Poset& l :
         {families::boolean_lattice(2), fixtures::pentagon(), families::weak_bruhat_A(3)}) {
        auto cl = enumerate_lattice_congruences(l);
        auto has = [&](const Partition& t) {
            return std::find(cl.congruences.begin(), cl.congruences.end(), t) != cl.congruences.end();
        };
        REQUIRE(has(identity_partition(l.n)));
        REQUIRE(has(total_partition(l.n)));
        for (const auto& a : cl.congruences)
            for (const auto& b : cl.congruences) REQUIRE(has(intersection(a, b)));
        // the refinement matrix matches refines()
        for (size_t i = 0; i < cl.congruences.size(); ++i)
            for (size_t j = 0; j < cl.congruences.size(); ++j)
                REQUIRE(cl.leq[i].test(int(j)) == refines(cl.congruences[i], cl.congruences[j]));
    }
}

TEST_CASE("exact-restriction extension of an order congruence", "[lattice]") {
    Poset l = fixtures::stacked_diamonds();
    Partition t = fixtures::stacked_diamonds_merge_middle();
    auto rc = reading_dm_check(l, t);
    CHECK(rc.unique_extension);
    CHECK(rc.num_exact_extensions == 1);
    CHECK(rc.completion_isomorphic);

    // identity partition extends to the identity congruence
    Poset crown = fixtures::crown4();
    auto rc2 = reading_dm_check(crown, identity_partition(4));
    CHECK(rc2.unique_extension);
    CHECK(rc2.extension == identity_partition(rc2.extension.n));
    CHECK(rc2.completion_isomorphic);
}

TEST_CASE("exact restriction exhaustively on small posets", "[lattice][property]") {
    for (int n = 0; n <= 4; ++n) {
        PosetEnumerator en(n);
        Poset p;
        while (en.next(p)) {
            if (dm_completion(p).lattice.n > kLatticeCongruenceEnumCap) continue;
            for (const auto& t : all_partitions(n)) {
                if (!is_order(p, t).holds) continue;
                auto rc = reading_dm_check(p, t);
                REQUIRE(rc.unique_extension);
                REQUIRE(rc.completion_isomorphic);
            }
        }
    }
}

TEST_CASE("w-stable agrees with exhaustive extension search", "[lattice][property]") {
    for (int n = 0; n <= 4; ++n) {
        PosetEnumerator en(n);
        Poset p;
        while (en.next(p)) {
            auto m0 = m0_sublattice(p);
            if (m0.lattice.n > 10) continue;
            auto con = enumerate_lattice_congruences(m0.lattice, 10);
            for (const auto& t : all_partitions(n)) {
                bool some_restricts = false;
                for (const auto& theta : con.congruences) {
                    bool restricts = true;
                    for (int x = 0; x < n && restricts; ++x)
                        for (int y = 0; y < n && restricts; ++y)
                            if (theta.same_block(m0.embed[x], m0.embed[y]) != t.same_block(x, y))
                                restricts = false;
                    if (restricts) some_restricts = true;
                }
                REQUIRE(is_w_stable(p, t).holds == some_restricts);
            }
        }
    }
}
