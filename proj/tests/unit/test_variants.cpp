#include "forcing/bruteforce.hpp"
#include "forcing/error.hpp"
#include "forcing/game.hpp"
#include "forcing/json_io.hpp"
#include "forcing/variants.hpp"
#include "forcing/verify.hpp"

#include <doctest.h>

using namespace forcing;

namespace
{
    auto cycle3() -> TournamentCondition { return TournamentCondition{{0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}}}; }
    auto transitive3() -> TournamentCondition { return TournamentCondition{{0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}}}; }
}

TEST_CASE("tournament conditions")
{
    CHECK_THROWS_AS(TournamentCondition({0, 1}, {}), InvalidCondition);
    CHECK_THROWS_AS(TournamentCondition({0, 1}, {{0, 1}, {1, 0}}), InvalidCondition);
    auto t = cycle3();
    CHECK(t.beats(2, 0));
    CHECK_FALSE(t.beats(0, 2));
    Json j = t;
    CHECK(j.get<TournamentCondition>() == t);
}

TEST_CASE("tournament extensions")
{
    Universe u{5, 5};
    CHECK(tournament_extensions(TournamentCondition{}, 0, u).size() == 1);
    TournamentCondition two{{0, 1}, {{1, 0}}};
    auto ext = tournament_extensions(two, 3, u);
    CHECK(ext.size() == 4);
    for (const auto & e : ext)
        CHECK(TournamentFrame::extends(e, two));
    CHECK(uniform_frame_tree<TournamentFrame>(TournamentCondition{}, 2, u).size() == 2);
    CHECK(uniform_frame_tree<TournamentFrame>(TournamentCondition{{0}, {}}, 2, u).size() == 8);
}

TEST_CASE("dominating sets")
{
    std::vector<Element> all{0, 1, 2};
    CHECK(dominating_set_check(cycle3(), all));
    CHECK_FALSE(dominating_set_check(cycle3(), std::vector<Element>{0}));
    CHECK(dominating_set_check(transitive3(), std::vector<Element>{0}));
}

TEST_CASE("domination player")
{
    Universe u{4, 4};
    std::vector<Element> X{0};
    auto next = domination_player_move(TournamentCondition{{0}, {}}, X, u);
    CHECK(next.vertices() == std::vector<Element>{0, 1});
    CHECK(next.beats(1, 0));

    std::vector<Element> far{3};
    auto plain = domination_player_move(TournamentCondition{{0}, {}}, far, u);
    CHECK(plain.vertices() == std::vector<Element>{0, 1});
    CHECK(plain.beats(0, 1));

    auto t = TournamentCondition{{0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}}};
    std::vector<Element> X2{0, 1};
    auto after = domination_player_move(t, X2, u);
    CHECK(after.has_vertex(3));
    CHECK_FALSE(dominating_set_check(after, X2));
}

TEST_CASE("partial functions and the surjection player")
{
    Universe u{2, 2};
    CHECK_THROWS_AS(check_partial_fn(PartialFnCondition{{{0, 4}}}, u), InvalidCondition);
    auto m = surjection_player_move(PartialFnCondition{}, HoleQueue::full(u), u);
    CHECK(m.next == PartialFnCondition{{{0, 0}}});
    CHECK_FALSE(m.exhausted);

    std::vector<std::shared_ptr<Strategy<PartialFnCondition>>> schedule{std::make_shared<SurjectionPlayer>(u)};
    auto t = run_game<PartialFnFrame>(u, schedule, 4);
    CHECK(t.final.size() == 2);
    CHECK(t.final.range().size() == 2);
    CHECK(t.final.range().size() < 2 * u.n());
    CHECK(check_surjection_progress(t).passed);
}

TEST_CASE("frame counts")
{
    bruteforce::EnumerationBudget budget;
    auto row = frame_counts("partialfn", 2, 0, 1, budget);
    CHECK(row["tree_size"] == 4);
    CHECK(row["formula"] == "4");
    CHECK(row["max_antichain"] == 4);

    row = frame_counts("tournament", 3, 1, 2, budget);
    CHECK(row["tree_size"] == 8);
    CHECK(row["formula"] == "8");

    row = frame_counts("order", 3, 0, 2, budget);
    CHECK(row["tree_size"] == 2);

    row = frame_counts("order", 4, 1, 2, budget);
    CHECK(row["formula"] == "6");
    CHECK(row["tree_size"] == 6);
    CHECK(row["max_antichain"] == 6);

    for (const char * f : {"order", "tournament", "partialfn"}) {
        row = frame_counts(f, 3, 1, 0, budget);
        CHECK(row["tree_size"] == 1);
        CHECK(row["max_antichain"] == 1);
        CHECK(row["passed"].get<bool>());
    }
    CHECK_THROWS_AS((void) frame_counts("lattice", 3, 0, 1, budget), InvalidArgument);
    CHECK_THROWS_AS((void) frame_counts("order", 3, 2, 2, budget), CapExceeded);
}
