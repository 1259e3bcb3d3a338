#include "forcing/error.hpp"
#include "forcing/json_io.hpp"
#include "forcing/poset.hpp"

#include <doctest.h>

#include <algorithm>

using namespace forcing;

TEST_CASE("universe rejects bad parameters and conditions")
{
    CHECK_THROWS_AS(Universe(0, 0), InvalidArgument);
    CHECK_THROWS_AS(Universe(3, 4), InvalidArgument);
    Universe u{4, 3};
    CHECK(u.admits(Condition{2, 0}));
    CHECK_FALSE(u.admits(Condition{4}));
    CHECK_THROWS_AS(u.check(Condition{4}), InvalidCondition);
    CHECK_THROWS_AS(u.check(Condition{0, 1, 2, 3}), CapExceeded);
}

TEST_CASE("conditions reject repeated entries")
{
    CHECK_THROWS_AS(Condition({1, 2, 1}), InvalidCondition);
    Condition c{3, 0, 1};
    CHECK(c.precedes(3, 1));
    CHECK_FALSE(c.precedes(1, 0));
    CHECK(c.elements() == std::vector<Element>{0, 1, 3});
    CHECK(c.position(1) == 2u);
    CHECK_FALSE(c.position(7).has_value());
}

TEST_CASE("extends is the subsequence order")
{
    CHECK(extends(Condition{3, 0, 1}, Condition{0, 1}));
    Condition o{2, 5, 1};
    CHECK(extends(o, o));
    CHECK_FALSE(extends(Condition{1, 0}, Condition{0, 1}));
    CHECK(extends(Condition{4}, Condition{}));
    CHECK_FALSE(extends(Condition{}, Condition{4}));

    Universe u{4, 4};
    CHECK_THROWS_AS((void) extends(u, Condition{5}, Condition{}), InvalidCondition);
}

TEST_CASE("compatible gives a merge or the first conflicting pair")
{
    auto w = compatible(Condition{1, 2}, Condition{2, 3, 1});
    REQUIRE_FALSE(w.compatible());
    CHECK(w.conflict() == ConflictPair{1, 2});

    w = compatible(Condition{}, Condition{4, 2});
    REQUIRE(w.compatible());
    CHECK(w.merged() == Condition{4, 2});

    w = compatible(Condition{0, 2}, Condition{0, 1, 2});
    REQUIRE(w.compatible());
    CHECK(w.merged() == Condition{0, 1, 2});

    CHECK(is_compatible(Condition{0, 1}, Condition{1, 2}));
    CHECK_FALSE(is_compatible(Condition{0, 1}, Condition{1, 0}));
    auto m = merge_compatible(Condition{0, 1}, Condition{1, 2});
    REQUIRE(m);
    CHECK(*m == Condition{0, 1, 2});
    CHECK_FALSE(merge_compatible(Condition{0, 1, 2}, Condition{2, 0}));
}

TEST_CASE("merged witness extends both inputs")
{
    Universe u{5, 5};
    auto all = extensions_up_to(Condition{}, 3, u);
    for (const auto & a : all)
        for (const auto & b : all) {
            auto w = compatible(a, b);
            if (! w.compatible())
                continue;
            CHECK(extends(w.merged(), a));
            CHECK(extends(w.merged(), b));
            CHECK(w.merged().elements() == union_elements(a, b));
        }
}

TEST_CASE("one point extensions")
{
    Universe u{8, 8};
    auto e = one_point_extensions(Condition{5, 7}, 2, u);
    CHECK(e == std::vector<Condition>{{2, 5, 7}, {5, 2, 7}, {5, 7, 2}});
    CHECK(one_point_extensions(Condition{}, 0, u) == std::vector<Condition>{{0}});
    CHECK(one_point_extensions(Condition{1, 2, 3}, 0, u).size() == 4);
    CHECK_THROWS_AS((void) one_point_extensions(Condition{1, 2}, 1, u), InvalidCondition);
    Universe tight{4, 2};
    CHECK_THROWS_AS((void) one_point_extensions(Condition{1, 2}, 0, tight), CapExceeded);
}

TEST_CASE("restrict keeps order")
{
    std::vector<Element> keep{1, 4};
    CHECK(restrict(Condition{3, 1, 4}, keep) == Condition{1, 4});
    CHECK(restrict(Condition{3, 1, 4}, std::vector<Element>{}) == Condition{});
    CHECK(restrict(Condition{0, 2, 5, 1}, std::vector<Element>{5, 0}) == Condition{0, 5});
}

TEST_CASE("extension enumeration counts")
{
    // Arrangements of k of the 4 free elements into a sequence containing (0) in order:
    // length 2 has 3 * 2 = 6, length 3 has C(3,2) * 3! = 18.
    Universe u{4, 4};
    CHECK(extensions_of_length(Condition{0}, 1, u).size() == 1);
    CHECK(extensions_of_length(Condition{0}, 2, u).size() == 6);
    CHECK(extensions_of_length(Condition{0}, 3, u).size() == 18);
    CHECK(extensions_of_length(Condition{}, 4, u).size() == 24);
    auto all = extensions_up_to(Condition{}, 2, u);
    CHECK(all.size() == 1 + 4 + 12);
    CHECK(std::is_sorted(all.begin(), all.end(), shortlex_less));
}

TEST_CASE("smallest unused and common count")
{
    Universe u{6, 6};
    CHECK(smallest_unused(Condition{0, 2}, 3, u) == std::vector<Element>{1, 3, 4});
    CHECK(smallest_unused(Condition{0, 1, 2, 3, 4}, 3, u) == std::vector<Element>{5});
    CHECK(common_count(Condition{0, 1, 2}, Condition{2, 5, 0}) == 2);
}

TEST_CASE("condition json")
{
    Json j = Condition{3, 0};
    CHECK(j.dump() == "[3,0]");
    CHECK(j.get<Condition>() == Condition{3, 0});
    CHECK_THROWS_AS(Json::parse("[1,1]").get<Condition>(), InvalidCondition);
    CHECK_THROWS_AS((void) universe_from_json(Json::parse(R"({"length_cap": 3})")), ParseError);
    CHECK(universe_from_json(Json::parse(R"({"n": 3})")) == Universe{3, 3});
    CHECK(universe_from_json(Json::parse(R"({"n": 3, "length_cap": 2})")) == Universe{3, 2});
}
