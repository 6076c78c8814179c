#include <gtest/gtest.h>

#include <random>

#include "catzero/complex.hpp"
#include "catzero/halfspace.hpp"
#include "../support/fixtures.hpp"
#include "../support/random_pip.hpp"

using namespace catzero;
using testing_support::fixture;
using testing_support::set_of;

namespace {

bool four_way_axiom(const HalfspaceSystem& h) {
    for (std::size_t a = 0; a < h.size(); ++a) {
        if (h.less({a, true}, {a, false}) || h.less({a, false}, {a, true})) return false;
        for (std::size_t b = 0; b < h.size(); ++b) {
            if (a == b) continue;
            int n = 0;
            for (bool s : {true, false})
                for (bool t : {true, false}) n += h.less({a, s}, {b, t});
            if (n > 1) return false;
            for (bool s : {true, false})
                for (bool t : {true, false})
                    if (h.less({a, s}, {b, t}) != h.less({b, !t}, {a, !s})) return false;
        }
    }
    return true;
}

} // namespace

TEST(Halfspace, BookSystem) {
    const auto h = pip_to_halfspace(fixture("book"));
    ASSERT_EQ(h.size(), 3u);
    EXPECT_TRUE(h.less({0, false}, {2, true}));
    EXPECT_TRUE(h.less({2, false}, {0, true}));
    int relations = 0;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            for (bool s : {true, false})
                for (bool t : {true, false}) relations += h.less({a, s}, {b, t});
    EXPECT_EQ(relations, 2);
}

TEST(Halfspace, SingleElementAndChain) {
    const auto one = pip_to_halfspace(Pip::validate({{"a"}, {}, {}}));
    EXPECT_TRUE(one.cover_relations().empty());
    const auto chain = pip_to_halfspace(Pip::validate({{"a", "b"}, {{"a", "b"}}, {}}));
    const auto rel = chain.cover_relations();
    ASSERT_EQ(rel.size(), 2u);
    EXPECT_TRUE(chain.less({0, true}, {1, true}));
    EXPECT_TRUE(chain.less({1, false}, {0, false}));
}

TEST(Halfspace, RoundTripFixtures) {
    for (auto name : {"sq", "book", "grid22", "grid32", "s8", "bent", "ex4", "fig4"}) {
        const auto p = fixture(name);
        EXPECT_EQ(halfspace_to_pip(pip_to_halfspace(p)), p) << name;
    }
}

TEST(Halfspace, FigureSystemRecoversInconsistentPair) {
    const auto p = fixture("fig4");
    const auto back = halfspace_to_pip(pip_to_halfspace(p));
    EXPECT_TRUE(back.inconsistent(back.index("3"), back.index("6")));
}

TEST(Halfspace, NotAcyclic) {
    const auto h = HalfspaceSystem::build({"1", "2"}, {{{0, true}, {1, false}}});
    try {
        halfspace_to_pip(h);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotAcyclic);
        EXPECT_NE(std::string(e.what()).find("1+ < 2-"), std::string::npos);
    }
}

TEST(Halfspace, BuildRejectsBrokenSystems) {
    EXPECT_THROW(HalfspaceSystem::build({"1"}, {{{0, true}, {0, false}}}), Error);
    EXPECT_THROW(HalfspaceSystem::build({"1", "2"}, {{{0, true}, {1, true}}, {{0, true}, {1, false}}}), Error);
    EXPECT_THROW(HalfspaceSystem::build({"1", "1"}, {}), Error);
}

TEST(Reroot, AtEmptyIsIdentity) {
    const auto p = fixture("s8");
    const auto r = reroot(p, ElementSet(p.size()));
    EXPECT_EQ(r.pip, p);
    const auto x = testing_support::pt({1, 1, 1, 0.3, 0.7});
    EXPECT_EQ(r.transport(x), x);
}

TEST(Reroot, Grid22AtCentre) {
    // Centre vertex of the 2x2 grid: four directions open; opposite
    // directions exclude each other and nothing is ordered.
    const auto p = fixture("grid22");
    const auto r = reroot(p, set_of(p, {"1", "2"}));
    EXPECT_TRUE(r.pip.cover_pairs().empty());
    const auto mins = r.pip.minimal_inconsistent_pairs();
    ASSERT_EQ(mins.size(), 2u);
    EXPECT_TRUE(r.pip.inconsistent(r.pip.index("1"), r.pip.index("3")));
    EXPECT_TRUE(r.pip.inconsistent(r.pip.index("2"), r.pip.index("4")));
    EXPECT_EQ(enumerate_consistent_ideals(r.pip).size(), enumerate_consistent_ideals(p).size());
}

TEST(Reroot, RejectsNonVertex) {
    const auto p = fixture("book");
    EXPECT_THROW(reroot(p, set_of(p, {"1", "3"})), Error);
    const auto g = fixture("grid22");
    try {
        reroot(g, set_of(g, {"3"}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::InconsistentVertex);
    }
}

TEST(HalfspaceProperties, RandomAxiomsRoundTripAndReroot) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 200; ++t) {
        const auto p = testing_support::random_pip(rng, {1, 9, 0.3, 3});
        const auto h = pip_to_halfspace(p);
        ASSERT_TRUE(four_way_axiom(h));
        ASSERT_EQ(halfspace_to_pip(h), p);

        const auto ideals = enumerate_consistent_ideals(p);
        const auto& v = ideals[static_cast<std::size_t>(t) % ideals.size()].members();
        const auto r = reroot(p, v);
        const auto back = reroot(r.pip, r.transport_vertex(ElementSet(p.size())));
        EXPECT_EQ(back.pip, p);
        EXPECT_EQ(enumerate_consistent_ideals(r.pip).size(), ideals.size());
        EXPECT_EQ(cube_dimension_counts(enumerate_cubes(r.pip)), cube_dimension_counts(enumerate_cubes(p)));
        for (const auto& ideal : ideals) {
            const auto moved = r.transport_vertex(ideal.members());
            EXPECT_TRUE(r.pip.is_down_closed(moved) && r.pip.is_consistent(moved));
        }
    }
}
