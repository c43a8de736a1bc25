#include <doctest.h>

#include "bck/closure.hpp"
#include "bck/enumerate.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace bck;
using bck::testing::algebra_a5;
using bck::testing::algebra_b8;
using bck::testing::make_set;

TEST_CASE("subalgebra closure") {
    Algebra a = algebra_a5();
    CHECK(subalgebra_closure(a, make_set(5, {4})) == make_set(5, {0, 4}));
    CHECK(subalgebra_closure(a, make_set(5, {})) == make_set(5, {0}));

    Algebra b = algebra_b8();
    CHECK(subalgebra_closure(b, make_set(8, {0, 1, 2, 4, 6})) == make_set(8, {0, 1, 2, 4, 5, 6}));
}

TEST_CASE("ideal closure fixpoint") {
    Algebra a = algebra_a5();
    CHECK(ideal_closure(a, make_set(5, {2})) == make_set(5, {0, 2, 4}));
    CHECK(ideal_closure(a, make_set(5, {})) == make_set(5, {0}));
    CHECK(ideal_closure(a, make_set(5, {0, 1, 2})) == make_set(5, {0, 1, 2, 4}));
}

TEST_CASE("derived subalgebra and derived ideal") {
    Algebra a = algebra_a5();
    ElementSet da = derived_subalgebra(a);
    CHECK(da == make_set(5, {0, 1, 2}));
    CHECK(derived_ideal(a) == make_set(5, {0, 1, 2, 4}));

    // the derived subalgebra is a subalgebra but not an ideal here:
    // 4*2 = 2 and 2 are members, 4 is not
    CHECK(is_subalgebra(a, da));
    auto fail = ideal_failure(a, da);
    REQUIRE(fail);
    CHECK(fail->x == 4);
    CHECK(fail->y == 2);
    CHECK(da.contains(a.op(4, 2)));

    Algebra m3 = chain_algebra(3);
    CHECK(derived_subalgebra(m3) == make_set(4, {0, 1, 2}));
    CHECK(derived_ideal(m3) == make_set(4, {0, 1, 2}));

    Algebra b = algebra_b8();
    CHECK(derived_subalgebra(b) == make_set(8, {0, 1}));
    CHECK(derived_ideal(b) == make_set(8, {0, 1, 2, 3}));

    // commutativity is equivalent to a trivial derived subalgebra
    for (int n = 1; n <= 4; ++n)
        for (const Algebra& c : enumerate_bck(n))
            CHECK(c.is_commutative() == (derived_subalgebra(c) == make_set(n, {0})));
}

TEST_CASE("commutator subalgebra") {
    Algebra a = algebra_a5();
    CHECK(commutator_subalgebra(a, a.carrier(), a.carrier()) == make_set(5, {0, 1, 2}));
    CHECK(commutator_subalgebra(a, make_set(5, {0}), a.carrier()) == make_set(5, {0}));
}

TEST_CASE("closure outputs are closed and minimal") {
    for (int n = 2; n <= 4; ++n)
        for (const Algebra& a : enumerate_bck(n))
            for (Element g = 0; g < a.order(); ++g) {
                ElementSet gen = make_set(a.order(), {g});
                ElementSet sub = subalgebra_closure(a, gen);
                CHECK(is_subalgebra(a, sub));
                ElementSet ideal = ideal_closure(a, gen);
                CHECK(is_ideal(a, ideal));
                CHECK(sub.subset_of(ideal));  // ideals are subalgebras and downsets
                // minimality: any ideal containing g contains the closure
                for (const ElementSet& other : all_ideals(a))
                    if (other.contains(g)) CHECK(ideal.subset_of(other));
            }
}

TEST_CASE("ideal closure agrees with the breadth-first oracle") {
    Algebra algs[] = {algebra_a5(), algebra_b8(), chain_algebra(3)};
    for (const Algebra& a : algs)
        for (Element g = 0; g < a.order(); ++g) {
            ElementSet gen = make_set(a.order(), {g});
            std::vector<oracle::IdealWitness> ws;
            ElementSet bfs = oracle::ideal_closure_bfs(a, gen, &ws);
            CHECK(ideal_closure(a, gen) == bfs);
            for (const auto& w : ws) {
                Element v = w.element;
                for (Element s : w.chain) {
                    CHECK(gen.contains(s));
                    v = a.op(v, s);
                }
                CHECK(v == 0);  // replaying the chain reaches 0
            }
        }
}

TEST_CASE("all_ideals enumerates exactly the ideals") {
    Algebra a = algebra_a5();
    auto ideals = all_ideals(a);
    REQUIRE(ideals.size() == 5);
    CHECK(ideals[0] == make_set(5, {0}));
    std::vector<ElementSet> expected = {
        make_set(5, {0}), make_set(5, {0, 1}), make_set(5, {0, 2, 4}),
        make_set(5, {0, 1, 2, 4}), make_set(5, {0, 1, 2, 3, 4})};
    for (const auto& e : expected)
        CHECK(std::find(ideals.begin(), ideals.end(), e) != ideals.end());

    // DI(A) is the intersection of all ideals containing A'
    ElementSet da = derived_subalgebra(a);
    ElementSet meet = a.carrier();
    for (const auto& i : ideals)
        if (da.subset_of(i)) meet = meet & i;
    CHECK(meet == derived_ideal(a));
}

TEST_CASE("commutator subalgebra is monotone in the left argument") {
    for (const Algebra& a : enumerate_bck(4)) {
        const int n = a.order();
        const uint64_t top = uint64_t{1} << n;
        for (uint64_t sbits = 0; sbits < top; ++sbits) {
            ElementSet s(n);
            for (Element x = 0; x < n; ++x)
                if (sbits >> x & 1) s.insert(x);
            ElementSet left = commutator_subalgebra(a, s, a.carrier());
            for (uint64_t tbits = sbits; tbits < top; tbits = (tbits + 1) | sbits) {
                ElementSet t(n);
                for (Element x = 0; x < n; ++x)
                    if (tbits >> x & 1) t.insert(x);
                CHECK(left.subset_of(commutator_subalgebra(a, t, a.carrier())));
            }
        }
    }
}
