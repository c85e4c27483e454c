#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latcount/canon.hpp"
#include "latcount/construct.hpp"
#include "latcount/enumerate.hpp"
#include "support.hpp"

using namespace latcount;

namespace {

Poset diamond() { return Poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

}  // namespace

TEST_CASE("chains") {
    CHECK(chain(1).size() == 1);
    CHECK(chain(1).edge_count() == 0);
    CHECK(chain(4) == Poset(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(nullity(chain(9)) == 0);
    CHECK_THROWS_AS(chain(0), PosetError);
}

TEST_CASE("direct sum") {
    CHECK(direct_sum(chain(2), chain(3)) == chain(5));
    const Poset tail = direct_sum(diamond(), chain(1));
    CHECK(tail.size() == 5);
    CHECK(is_lattice(tail));
    CHECK(nullity(tail) == 1);
    CHECK(direct_sum(diamond(), diamond()).edge_count() == 9);
    // Antichains are joined completely.
    CHECK(direct_sum(Poset(2, {}), Poset(2, {})).edge_count() == 4);
}

TEST_CASE("vertical sum") {
    CHECK(vertical_sum(chain(3), chain(4)) == chain(6));
    const Poset glued = vertical_sum(diamond(), diamond());
    CHECK(glued.size() == 7);
    const ClassKey key = classify(glued);
    // The glued element is reducible both ways and counts once.
    CHECK(key.r == 3);
    CHECK(key.k == 2);
    CHECK_THROWS_AS(vertical_sum(Poset(2, {}), chain(2)), PosetError);
    CHECK_THROWS_AS(vertical_sum(chain(2), Poset(2, {})), PosetError);

    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        const Poset p = realize(testing::random_adjunct_rep(rng, int(rng() % 3), 9));
        const Poset q = realize(testing::random_adjunct_rep(rng, int(rng() % 3), 9));
        CHECK(vertical_sum(p, q).size() == p.size() + q.size() - 1);
    }
}

TEST_CASE("adjunct") {
    const Poset pentagon = adjunct(chain(4), 0, 2, chain(1));
    CHECK(pentagon.size() == 5);
    CHECK(is_lattice(pentagon));
    CHECK(popcount(lattice_reducibles(pentagon)) == 2);
    CHECK(nullity(pentagon) == 1);
    CHECK(height(pentagon) == 3);

    auto fault_of = [](auto&& call) {
        try {
            call();
        } catch (const AdjunctError& e) {
            return std::optional<AdjunctFault>(e.fault());
        }
        return std::optional<AdjunctFault>();
    };
    CHECK(fault_of([] { adjunct(chain(4), 1, 2, chain(1)); }) == AdjunctFault::Covering);
    CHECK(fault_of([] { adjunct(chain(4), 2, 0, chain(1)); }) == AdjunctFault::NotBelow);
    CHECK(fault_of([] { adjunct(chain(4), 2, 2, chain(1)); }) == AdjunctFault::NotBelow);
    CHECK(fault_of([] { adjunct(Poset(2, {}), 0, 1, chain(1)); }) == AdjunctFault::NotLattice);
    CHECK(fault_of([] { adjunct(chain(4), 0, 3, Poset(2, {})); }) == AdjunctFault::NotLattice);
}

TEST_CASE("adjunct edge law and nullity on random constructions") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const Poset l1 = realize(testing::random_adjunct_rep(rng, int(rng() % 3), 10));
        const Poset l2 = realize(testing::random_adjunct_rep(rng, int(rng() % 2), 6));
        std::vector<std::pair<Element, Element>> valid;
        for (Element a = 0; a < l1.size(); ++a)
            for (Element b = 0; b < l1.size(); ++b)
                if (l1.less(a, b) && !l1.covered_by(a, b)) valid.push_back({a, b});
        if (valid.empty()) continue;
        const auto [a, b] = valid[rng() % valid.size()];
        const Poset l = adjunct(l1, a, b, l2);
        CHECK(l.edge_count() == l1.edge_count() + l2.edge_count() + 2);
        CHECK(is_lattice(l));
        CHECK(nullity(l) == nullity(l1) + nullity(l2) + 1);
    }
}

TEST_CASE("realize") {
    CHECK(realize({{4}, {}}) == chain(4));
    CHECK(is_isomorphic(realize(*quoted_representation(BasicBlockId::B1)), catalog(BasicBlockId::B1)));

    const AdjunctRep bad{{4, 1, 1}, {{0, 2}, {0, 1}}};
    try {
        realize(bad);
        FAIL("expected an error");
    } catch (const AdjunctError& e) {
        CHECK(e.stage() == 1);
        CHECK(e.fault() == AdjunctFault::Covering);
    }
    CHECK_THROWS(realize({{4, 1}, {}}));

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const int pairs = std::uniform_int_distribution<int>(0, 4)(rng);
        const AdjunctRep rep = testing::random_adjunct_rep(rng, pairs, 15);
        const Poset p = realize(rep);
        CHECK(p.size() == rep.size());
        CHECK(is_lattice(p));
        CHECK(nullity(p) == pairs);
        CHECK(classify(p).k == pairs);
    }
}

TEST_CASE("catalog invariants") {
    for (BasicBlockId id : all_block_ids()) {
        CAPTURE(name_of(id));
        const CatalogEntry& entry = catalog_entry(id);
        const Poset& p = entry.poset;
        REQUIRE(is_lattice(p));
        CHECK(popcount(lattice_reducibles(p)) == entry.reducibles);
        CHECK(nullity(p) == entry.nullity);
        CHECK(height(p) == entry.height);
        CHECK(is_rc(p));
        if (is_b_block(id)) {
            CHECK(entry.reducibles == 4);
            CHECK(entry.nullity == 3);
            const int i = block_index(id);
            const int expected_height = i <= 3 ? 3 : i <= 12 ? 4 : i <= 21 ? 5 : 6;
            CHECK(entry.height == expected_height);
        } else {
            CHECK(entry.reducibles == (block_index(id) <= 4 ? 3 : 4));
        }
        CHECK(parse_block_id(name_of(id)) == id);
    }
    CHECK_FALSE(parse_block_id("B23").has_value());
    CHECK_FALSE(parse_block_id("F0").has_value());
}

TEST_CASE("the B-blocks are pairwise non-isomorphic") {
    std::vector<BasicBlockId> blocks;
    for (BasicBlockId id : all_block_ids())
        if (is_b_block(id)) blocks.push_back(id);
    REQUIRE(blocks.size() == 22);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            CHECK(canonical_form(catalog(blocks[i])) != canonical_form(catalog(blocks[j])));
            if (catalog(blocks[i]).size() <= 8) {
                CHECK_FALSE(testing::brute_isomorphic(catalog(blocks[i]), catalog(blocks[j])));
            }
        }
    }
}

TEST_CASE("dual pairs of the figures") {
    using B = BasicBlockId;
    const std::pair<B, B> pairs[] = {{B::B1, B::B2},   {B::B6, B::B7},   {B::B8, B::B9},   {B::B10, B::B11},
                                     {B::B13, B::B14}, {B::B15, B::B16}, {B::B17, B::B18}, {B::B19, B::B20},
                                     {B::F1, B::F2}};
    for (const auto& [a, b] : pairs) {
        CAPTURE(name_of(a));
        CHECK(is_isomorphic(dual(catalog(a)), catalog(b)));
        CHECK_FALSE(is_isomorphic(catalog(a), catalog(b)));
    }
    for (B self : {B::B3, B::B4, B::B5, B::B12, B::B21, B::B22, B::F3, B::F5, B::F7}) {
        CAPTURE(name_of(self));
        CHECK(is_isomorphic(dual(catalog(self)), catalog(self)));
    }
}

TEST_CASE("quoted representations realize the catalog blocks") {
    int quoted = 0;
    for (BasicBlockId id : all_block_ids()) {
        const auto rep = quoted_representation(id);
        if (!rep) continue;
        ++quoted;
        CAPTURE(name_of(id));
        CHECK(rep->pairs.size() == 3);
        CHECK(is_isomorphic(realize(*rep), catalog(id)));
    }
    CHECK(quoted == 10);
}
