#include "forcing/bruteforce.hpp"
#include "forcing/error.hpp"
#include "forcing/machines.hpp"

#include <doctest.h>

#include <set>

using namespace forcing;

namespace
{
    auto query01() -> OracleProgram
    {
        return OracleProgram{1, {{{0, 0}, DecisionTree::query(0, 1, DecisionTree::leaf(true), DecisionTree::leaf(false))}}};
    }
}

TEST_CASE("decision trees")
{
    auto t = DecisionTree::query(0, 1, DecisionTree::leaf(true), DecisionTree::query(2, 3, DecisionTree::leaf(false), DecisionTree::leaf(true)));
    CHECK(t.depth() == 2);
    CHECK(t.largest_element() == 3u);
    CHECK(DecisionTree{}.depth() == 0);
    CHECK_FALSE(DecisionTree{}.root().accept);
    CHECK_FALSE(DecisionTree::leaf(true).largest_element().has_value());
}

TEST_CASE("evaluate")
{
    CHECK(evaluate(programs::constant(true, 1, 1), 0, 0, Condition{}));
    auto prog = query01();
    CHECK(evaluate(prog, 0, 0, Condition{0, 1}));
    CHECK_FALSE(evaluate(prog, 0, 0, Condition{1, 0}));
    CHECK_FALSE(evaluate(prog, 0, 1, Condition{0, 1}));
    CHECK_THROWS_AS((void) evaluate(prog, 0, 0, Condition{1}), InvalidArgument);

    OracleProgram self{1, {{{0, 0}, DecisionTree::query(2, 2, DecisionTree::leaf(true), DecisionTree::leaf(false))}}};
    CHECK_FALSE(evaluate(self, 0, 0, Condition{2}));
}

TEST_CASE("program check")
{
    Universe u{3, 3};
    auto prog = query01();
    CHECK_NOTHROW(prog.check(u));
    prog.depth_cap = 0;
    CHECK_THROWS_AS(prog.check(u), InvalidArgument);
    CHECK_THROWS_AS(programs::comparator(2, 2).check(u), InvalidArgument);
}

TEST_CASE("compile small programs")
{
    Universe u{3, 3};
    auto accept = compile(programs::constant(true, 1, 1), Condition{}, 1, 1, u);
    CHECK(accept.plus.cell(0, 0) == std::vector<Condition>{Condition{}});
    CHECK(accept.minus.cell(0, 0).empty());

    auto q = compile(query01(), Condition{}, 1, 1, u);
    CHECK(q.plus.cell(0, 0) == std::vector<Condition>{Condition{0, 1}});
    CHECK(q.minus.cell(0, 0) == std::vector<Condition>{Condition{1, 0}});
    auto tree = q.cell_tree(0, 0);
    CHECK(tree.leaves.size() == 2);
    CHECK(validate_tree(tree, u, 3).passed());

    auto decided = compile(query01(), Condition{1, 2, 0}, 1, 1, u);
    CHECK(decided.minus.cell(0, 0) == std::vector<Condition>{Condition{1, 2, 0}});
    CHECK(decided.plus.cell(0, 0).empty());
}

TEST_CASE("compiled random programs are sound")
{
    Universe u{4, 4};
    bruteforce::EnumerationBudget budget;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto prog = programs::random(2, 2, 4, 2, seed);
        REQUIRE_NOTHROW(prog.check(u));
        auto family = compile(prog, Condition{}, 2, 2, u);
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b) {
                CHECK(validate_tree(family.cell_tree(a, b), u, 4).passed());
                for (bool accept : {true, false})
                    for (const auto & r : (accept ? family.plus : family.minus).cell(a, b))
                        bruteforce::for_each_total_order(4, r, budget, [&](const bruteforce::Sequence & total) {
                            CHECK(evaluate(prog, a, b, Condition{total}) == accept);
                        });
            }
    }
    CHECK(programs::random(2, 2, 4, 2, 9) == programs::random(2, 2, 4, 2, 9));
}

TEST_CASE("php instance check")
{
    auto v = php_instance_check(programs::modular(3, 2), 3, 2, Condition{});
    CHECK(v.kind == PhpOutcome::collision);
    CHECK(v.pigeons == std::vector<std::size_t>{0, 2});
    CHECK(v.holes == std::vector<std::size_t>{0});

    v = php_instance_check(programs::constant(false, 1, 1), 1, 1, Condition{});
    CHECK(v.kind == PhpOutcome::unmapped);
    CHECK(v.pigeons == std::vector<std::size_t>{0});

    v = php_instance_check(programs::identity(2, 3), 2, 3, Condition{});
    CHECK(v.kind == PhpOutcome::injection);
    CHECK_FALSE(v.violation());

    v = php_instance_check(programs::constant(true, 1, 2), 1, 2, Condition{});
    CHECK(v.kind == PhpOutcome::split);

    // comparator: pigeon a maps to hole b iff a precedes 2 + b
    v = php_instance_check(programs::comparator(2, 1), 2, 1, Condition{0, 2, 1});
    CHECK(v.kind == PhpOutcome::unmapped);
    CHECK(v.pigeons == std::vector<std::size_t>{1});
}

TEST_CASE("enumerated trees")
{
    // T(0) = 2 leaves, T(d) = 2 + 12 T(d-1)^2 over the 12 ordered pairs of distinct elements of [0, 4)
    CHECK(programs::all_trees(4, 0).size() == 2);
    CHECK(programs::all_trees(4, 1).size() == 50);
    CHECK(programs::all_trees(4, 2).size() == 30002);
    std::set<std::string> distinct;
    for (const auto & t : programs::all_trees(3, 1))
        distinct.insert(to_json(t).dump());
    CHECK(distinct.size() == 2 + 6 * 4);
}

TEST_CASE("program json")
{
    auto prog = query01();
    Json j = prog;
    CHECK(j.dump() == R"({"depth_cap":1,"table":{"0,0":{"no":{"leaf":false},"query":[0,1],"yes":{"leaf":true}}}})");
    CHECK(j.get<OracleProgram>() == prog);
    CHECK_THROWS_AS(Json::parse(R"({"depth_cap":1,"table":{"x":{"leaf":true}}})").get<OracleProgram>(), ParseError);
    auto random = programs::random(3, 2, 5, 3, 42);
    CHECK(Json(random).get<OracleProgram>() == random);
}
