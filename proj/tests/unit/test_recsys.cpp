#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "catzero/complex.hpp"
#include "catzero/recsys.hpp"
#include "../support/fixtures.hpp"
#include "../support/random_pip.hpp"

using namespace catzero;
using testing_support::fixture;
using testing_support::set_of;

namespace {

Move bare_move(std::size_t n, std::vector<std::size_t> support, std::vector<std::size_t> trace) {
    Move m;
    m.support = ElementSet(n);
    m.trace = ElementSet(n);
    for (auto s : support) m.support.set(s);
    for (auto t : trace) m.trace.set(t);
    m.context = ElementSet(n);
    m.u1 = ElementSet(n);
    m.u2 = m.trace;
    return m;
}

using Cell = std::vector<std::vector<std::size_t>>;

Cell cell_of(const std::vector<ElementSet>& vertices) {
    Cell v;
    for (const auto& s : vertices) v.push_back(s.indices());
    std::sort(v.begin(), v.end());
    return v;
}

// Cubes of X_P as sorted lists of vertex ideals.
std::multiset<Cell> complex_cells(const Pip& p) {
    std::multiset<Cell> out;
    for (const auto& c : enumerate_cubes(p)) out.insert(cell_of(cube_vertices(c)));
    return out;
}

std::multiset<Cell> state_cells(const ReconfigurableSystem& sys, const StateComplex& sc) {
    std::multiset<Cell> out;
    for (const auto& c : sc.cubes) {
        std::vector<ElementSet> v;
        for (auto i : c) v.push_back(sys.states[i]);
        out.insert(cell_of(v));
    }
    return out;
}

} // namespace

TEST(MovesCommute, Examples) {
    EXPECT_TRUE(moves_commute(bare_move(4, {0, 1}, {0}), bare_move(4, {2, 3}, {2})));
    EXPECT_FALSE(moves_commute(bare_move(4, {0, 1}, {0}), bare_move(4, {0, 2}, {2})));

    const auto g = fixture("grid22");
    const auto sys = pip_to_reconfigurable(g);
    EXPECT_TRUE(moves_commute(sys.moves[g.index("1")], sys.moves[g.index("2")]));
    EXPECT_FALSE(moves_commute(sys.moves[g.index("1")], sys.moves[g.index("3")]));
}

TEST(VirusSystem, SingleElement) {
    const auto p = Pip::validate({{"a"}, {}, {}});
    const auto sys = pip_to_reconfigurable(p);
    EXPECT_EQ(sys.moves.size(), 1u);
    EXPECT_EQ(sys.states.size(), 2u);
}

TEST(VirusSystem, Book) {
    const auto b = fixture("book");
    const auto sys = pip_to_reconfigurable(b);
    ASSERT_EQ(sys.moves.size(), 3u);
    EXPECT_EQ(sys.states.size(), 6u);
    const auto& phi1 = sys.moves[b.index("1")];
    EXPECT_EQ(phi1.support, set_of(b, {"1", "3"}));
    EXPECT_EQ(phi1.trace, set_of(b, {"1"}));
    EXPECT_TRUE(phi1.context.empty()); // label(3) must be 0
    EXPECT_FALSE(phi1.admissible(set_of(b, {"3"})));
    EXPECT_TRUE(phi1.admissible(set_of(b, {"2"})));
    EXPECT_EQ(sys.edges.size(), 1u);
}

TEST(VirusSystem, S8) {
    const auto s8 = fixture("s8");
    const auto sys = pip_to_reconfigurable(s8);
    EXPECT_EQ(sys.moves.size(), 5u);
    EXPECT_EQ(sys.states.size(), 12u);
    const auto& phi5 = sys.moves[s8.index("5")];
    EXPECT_EQ(phi5.context, set_of(s8, {"2", "3"}));
}

TEST(StateComplex, Counts) {
    const auto sq = pip_to_reconfigurable(fixture("sq"));
    EXPECT_EQ(state_complex(sq).dimension_counts(), (std::vector<std::size_t>{4, 4, 1}));
    const auto book = pip_to_reconfigurable(fixture("book"));
    EXPECT_EQ(state_complex(book).dimension_counts(), (std::vector<std::size_t>{6, 7, 2}));
    const auto s8 = fixture("s8");
    const auto sc = state_complex(pip_to_reconfigurable(s8));
    EXPECT_EQ(sc.dimension_counts(), (std::vector<std::size_t>{12, 18, 8, 1}));
    EXPECT_EQ(sc.dimension_counts(), cube_dimension_counts(enumerate_cubes(s8)));
}

TEST(StateComplex, Guard) {
    const auto sys = pip_to_reconfigurable(fixture("grid32"));
    try {
        state_complex(sys, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::TooLarge);
    }
}

TEST(StateComplex, MoveOutsideStatesIsNotClosed) {
    auto sys = pip_to_reconfigurable(fixture("sq"));
    sys.states.pop_back();
    EXPECT_THROW(sys.check_closed(), Error);
}

TEST(RecsysProperties, RealizesTheCubeComplex) {
    std::mt19937_64 rng(91);
    for (int t = 0; t < 60; ++t) {
        const auto p = testing_support::random_pip(rng, {1, 8, 0.3, 3});
        const auto sys = pip_to_reconfigurable(p);
        const auto sc = state_complex(sys);
        EXPECT_EQ(sc.vertex_count, enumerate_consistent_ideals(p).size());
        EXPECT_EQ(state_cells(sys, sc), complex_cells(p)) << "case " << t;
    }
}

TEST(RecsysProperties, InvolutionAndSymmetry) {
    std::mt19937_64 rng(92);
    for (int t = 0; t < 40; ++t) {
        const auto p = testing_support::random_pip(rng, {1, 8, 0.3, 3});
        const auto sys = pip_to_reconfigurable(p);
        for (const auto& s : sys.states)
            for (const auto& m : sys.moves)
                if (m.admissible(s)) {
                    const auto once = m.apply(s);
                    EXPECT_TRUE(m.admissible(once));
                    EXPECT_EQ(m.apply(once), s);
                }
        for (const auto& a : sys.moves)
            for (const auto& b : sys.moves) EXPECT_EQ(moves_commute(a, b), moves_commute(b, a));
    }
}
