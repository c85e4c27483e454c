#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "latcount/construct.hpp"
#include "latcount/enumerate.hpp"
#include "latcount/poset.hpp"
#include "support.hpp"

using namespace latcount;

namespace {

Poset diamond() { return Poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

}  // namespace

TEST_CASE("constructor rejects malformed cover sets") {
    CHECK_THROWS_AS(Poset(0, {}), PosetError);
    CHECK_THROWS_AS(Poset(2, {{0, 2}}), PosetError);
    CHECK_THROWS_AS(Poset(2, {{1, 1}}), PosetError);
    CHECK_THROWS_AS(Poset(2, {{0, 1}, {1, 0}}), PosetError);
    CHECK_THROWS_AS(Poset(3, {{0, 1}, {1, 2}, {0, 2}}), PosetError);
    CHECK_NOTHROW(Poset(1, {}));
}

TEST_CASE("transitive closure") {
    SUBCASE("chain") {
        const auto leq = transitive_closure(chain(3));
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) CHECK(leq[x][y] == (x <= y));
    }
    SUBCASE("antichain") {
        const auto leq = transitive_closure(Poset(2, {}));
        CHECK(leq[0][0]);
        CHECK(leq[1][1]);
        CHECK_FALSE(leq[0][1]);
        CHECK_FALSE(leq[1][0]);
    }
    SUBCASE("diamond") {
        const Poset d = diamond();
        for (int x = 0; x < 4; ++x) {
            CHECK(d.leq(0, x));
            CHECK(d.leq(x, 3));
        }
        CHECK_FALSE(d.comparable(1, 2));
    }
}

TEST_CASE("lattice test") {
    CHECK(is_lattice(diamond()));
    CHECK(is_lattice(Poset(1, {})));
    CHECK_FALSE(is_lattice(Poset(2, {})));
    // Two 4-chains sharing ends: 0<a<c<1, 0<b<d<1 is a lattice.
    const Poset hexagon(6, {{0, 1}, {1, 3}, {3, 5}, {0, 2}, {2, 4}, {4, 5}});
    CHECK(is_lattice(hexagon));
    CHECK(testing::naive_is_lattice(hexagon));
    // Bowtie: two minima below two maxima has no joins.
    const Poset bowtie(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK_FALSE(is_lattice(bowtie));
    // 0 below a, b; a, b both below c, d; c, d below 1: a and b have no join.
    const Poset twisted(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
    CHECK_FALSE(is_lattice(twisted));
}

TEST_CASE("lattice test agrees with the naive bound check on every small lattice and poset") {
    for (int n = 1; n <= 8; ++n) {
        for (const CanonicalForm& key : enumerate_all_lattices(n, 1)) {
            const Poset p = key.poset();
            REQUIRE(is_lattice(p));
            REQUIRE(testing::naive_is_lattice(p));
        }
    }
    // Random posets: orient random graphs upward and keep the covers.
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 7)(rng);
        std::vector<ElementSet> up(n);
        for (int x = n - 1; x >= 0; --x) {
            up[x] = bit(x);
            for (int y = x + 1; y < n; ++y)
                if (rng() % 3 == 0) up[x] |= up[y];
        }
        const Poset p = Poset::from_order(up);
        CHECK(is_lattice(p) == testing::naive_is_lattice(p));
        const auto reference = testing::naive_order(p);
        const auto closure = transitive_closure(p);
        CHECK(reference == closure);
    }
}

TEST_CASE("nullity") {
    CHECK(nullity(chain(5)) == 0);
    CHECK(nullity(chain(9)) == 0);
    CHECK(nullity(diamond()) == 1);
    CHECK(nullity(catalog(BasicBlockId::B22)) == 3);
    CHECK(nullity(Poset(3, {})) == 0);
    CHECK(component_count(Poset(3, {{0, 1}})) == 2);
}

TEST_CASE("reducible elements") {
    CHECK(reducible_elements(chain(6)) == 0);
    CHECK(reducible_elements(diamond()) == (bit(0) | bit(3)));
    CHECK_THROWS_AS(lattice_reducibles(Poset(2, {})), PosetError);

    // B1: the base chain 0 < a < b < 1 carries the reducible elements.
    const Poset b1 = catalog(BasicBlockId::B1);
    const ElementSet red = lattice_reducibles(b1);
    CHECK(popcount(red) == 4);
    std::vector<Element> chain_elements = elements_of(red);
    for (std::size_t i = 0; i + 1 < chain_elements.size(); ++i)
        for (std::size_t j = i + 1; j < chain_elements.size(); ++j)
            CHECK(b1.comparable(chain_elements[i], chain_elements[j]));
    CHECK((red & bit(*b1.bottom())) != 0);
    CHECK((red & bit(*b1.top())) != 0);
}

TEST_CASE("RC test") {
    CHECK(is_rc(diamond()));
    CHECK(is_rc(catalog(BasicBlockId::B1)));
    // Boolean cube 2^3: the atoms {1,2,4} and coatoms {3,5,6}.
    std::vector<Cover> cube;
    for (int x = 0; x < 8; ++x)
        for (int b = 0; b < 3; ++b)
            if (!(x & (1 << b))) cube.push_back({x, x | (1 << b)});
    const Poset boolean(8, cube);
    REQUIRE(is_lattice(boolean));
    CHECK_FALSE(is_rc(boolean));
    CHECK(popcount(lattice_reducibles(boolean)) == 8);
    CHECK_THROWS_AS(is_rc(Poset(2, {})), PosetError);
}

TEST_CASE("height") {
    CHECK(height(chain(1)) == 0);
    CHECK(height(chain(7)) == 6);
    CHECK(height(diamond()) == 2);
    CHECK(height(catalog(BasicBlockId::B22)) == 6);
}

TEST_CASE("doubly irreducible elements") {
    CHECK(doubly_irreducible(chain(3)) == 0b111);
    CHECK(irr_star(chain(3)) == 0b010);
    CHECK(doubly_irreducible(diamond()) == 0b0110);
    CHECK(irr_star(diamond()) == 0b0110);

    // In B1 only the three adjoined single elements qualify.
    const Poset b1 = catalog(BasicBlockId::B1);
    const ElementSet red = lattice_reducibles(b1);
    CHECK(popcount(doubly_irreducible(b1)) == 3);
    CHECK(irr_star(b1) == doubly_irreducible(b1));
    CHECK((doubly_irreducible(b1) & red) == 0);
}

TEST_CASE("dual") {
    const Poset b1 = catalog(BasicBlockId::B1);
    CHECK(dual(dual(b1)) == b1);
    CHECK(is_isomorphic(dual(chain(5)), chain(5)));
    CHECK(is_isomorphic(dual(b1), catalog(BasicBlockId::B2)));
    CHECK(is_isomorphic(dual(catalog(BasicBlockId::B6)), catalog(BasicBlockId::B7)));
}

TEST_CASE("pendant vertices") {
    CHECK(pendant_vertices(chain(2)) == 0b11);
    CHECK(pendant_vertices(diamond()) == 0);
    const Poset tail = direct_sum(diamond(), chain(1));
    CHECK(pendant_vertices(tail) == bit(4));
}

TEST_CASE("statistics are invariant under duality") {
    for (int n = 1; n <= 8; ++n) {
        for (const CanonicalForm& key : enumerate_all_lattices(n, 1)) {
            const Poset p = key.poset();
            const Poset d = dual(p);
            CHECK(nullity(p) == nullity(d));
            CHECK(height(p) == height(d));
            CHECK(popcount(reducible_elements(p)) == popcount(reducible_elements(d)));
        }
    }
}

TEST_CASE("reducible count is bounded by twice the nullity for dismantlable lattices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const int pairs = std::uniform_int_distribution<int>(1, 4)(rng);
        const Poset p = realize(testing::random_adjunct_rep(rng, pairs, 16));
        const int r = popcount(lattice_reducibles(p));
        CHECK(r >= 2);
        CHECK(r <= 2 * nullity(p));
    }
}

TEST_CASE("dismantlability") {
    CHECK(is_dismantlable(chain(4)));
    CHECK(is_dismantlable(diamond()));
    std::vector<Cover> cube;
    for (int x = 0; x < 8; ++x)
        for (int b = 0; b < 3; ++b)
            if (!(x & (1 << b))) cube.push_back({x, x | (1 << b)});
    CHECK_FALSE(is_dismantlable(Poset(8, cube)));
}

TEST_CASE("text and DOT formats") {
    const Poset p = catalog(BasicBlockId::F5);
    CHECK(parse_text(to_text(p)) == p);
    std::istringstream in("# comment\n4\n0 1\n0 2 # trailing\n1 3\n2 3\n");
    CHECK(read_text(in) == diamond());
    CHECK_THROWS(parse_text("3\n0 7\n"));
    CHECK_THROWS(parse_text("x\n"));

    const std::string dot = to_dot(diamond(), "D");
    CHECK(dot.find("digraph \"D\"") != std::string::npos);
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(dot.find("0 -> 1;") != std::string::npos);
    CHECK(dot.find("2 -> 3;") != std::string::npos);
}
