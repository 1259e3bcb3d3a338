#include "forcing/bruteforce.hpp"
#include "forcing/error.hpp"
#include "forcing/json_io.hpp"
#include "forcing/trees.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace forcing;

namespace
{
    auto check_named(const std::vector<CheckResult> & checks, const std::string & name) -> CheckResult
    {
        auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckResult & c) { return c.property == name; });
        REQUIRE(it != checks.end());
        return *it;
    }

    auto as_set(const std::vector<Condition> & v) { return std::set<Condition>(v.begin(), v.end()); }
}

TEST_CASE("tree size formula")
{
    CHECK(tree_size(0, 3) == 6);
    CHECK(tree_size(4, 0) == 1);
    CHECK(tree_size(2, 3) == 60);
    CHECK(tree_size(0, 20).str() == "2432902008176640000");
    CHECK(tree_size(3, 25).str() == "50814724101952310083584000000");
}

TEST_CASE("uniform trees")
{
    Universe u{6, 6};
    auto t = build_uniform_tree(Condition{5}, std::vector<Element>{0, 1}, u);
    CHECK(t.leaves.size() == 6);
    CHECK(t.depth == 2);
    for (const auto & leaf : t.leaves) {
        CHECK(leaf.size() == 3);
        CHECK(extends(leaf, Condition{5}));
    }
    CHECK(is_uniform(t));

    auto trivial = build_uniform_tree(Condition{}, std::vector<Element>{}, u);
    CHECK(trivial.leaves == std::vector<Condition>{Condition{}});

    std::set<Condition> perms;
    for (const auto & s : bruteforce::all_total_orders(3, Condition{}, {}))
        perms.insert(Condition{s});
    CHECK(as_set(build_uniform_tree(Condition{}, std::vector<Element>{0, 1, 2}, u).leaves) == perms);

    CHECK_THROWS_AS((void) build_uniform_tree(Condition{0, 1}, 5, u), CapExceeded);
    CHECK_THROWS_AS((void) build_uniform_tree(Condition{0}, std::vector<Element>{0}, u), InvalidCondition);
}

TEST_CASE("uniform tree sizes over the small grid")
{
    for (std::size_t lo = 0; lo <= 3; ++lo)
        for (std::size_t d = 0; d <= 3; ++d) {
            auto n = std::max<std::size_t>(1, lo + d);
            Universe u{n, n};
            std::vector<Element> seq;
            for (std::size_t i = 0; i < lo; ++i)
                seq.push_back(static_cast<Element>(i));
            auto t = build_uniform_tree(Condition{seq}, d, u);
            CHECK(tree_size(lo, d) == t.leaves.size());
            CHECK(validate_tree(t, u, n).passed());
        }
}

TEST_CASE("envelope")
{
    Universe u{5, 5};
    auto e = envelope(Condition{0, 1}, Condition{0, 2}, u);
    CHECK(as_set(e.tree.leaves) == std::set<Condition>{{2, 0, 1}, {0, 2, 1}, {0, 1, 2}});

    auto same = envelope(Condition{0, 1, 2}, Condition{0, 2}, u);
    CHECK(same.tree.leaves == std::vector<Condition>{{0, 1, 2}});

    auto grow = envelope(Condition{0}, Condition{1, 2}, u);
    CHECK(grow.tree.leaves.size() == 6);
    for (const auto & r : grow.tree.leaves)
        CHECK(r.elements() == std::vector<Element>{0, 1, 2});
}

TEST_CASE("validate_tree")
{
    Universe u{6, 6};
    auto t = build_uniform_tree(Condition{5}, std::vector<Element>{0, 1}, u);
    auto report = validate_tree(t, u, 3);
    CHECK(report.passed());
    CHECK(report.equality);

    Universe small{3, 3};
    MinTree single{Condition{}, {Condition{0, 1}}, 2};
    report = validate_tree(single, small, 2);
    CHECK(check_named(report.checks, "size_bound").passed);
    CHECK(report.size == 1);
    CHECK(report.bound == 2);
    CHECK_FALSE(report.equality);
    CHECK_FALSE(check_named(report.checks, "covering").passed);

    MinTree clash{Condition{0}, {Condition{0, 1}, Condition{0, 2}}, 1};
    report = validate_tree(clash, small, 3);
    auto pairwise = check_named(report.checks, "pairwise_incompatible");
    CHECK_FALSE(pairwise.passed);
    auto common = pairwise.counterexample["common_extension"].get<Condition>();
    CHECK(extends(common, Condition{0, 1}));
    CHECK(extends(common, Condition{0, 2}));
    CHECK_FALSE(report.passed());
}

TEST_CASE("tree json round trip")
{
    Universe u{4, 4};
    auto t = build_uniform_tree(Condition{2}, 1, u);
    Json j = t;
    CHECK(j.dump() == R"({"depth":1,"leaves":[[0,2],[2,0]],"root":[2]})");
    CHECK(j.get<MinTree>() == t);
    CHECK_THROWS_AS(Json::parse(R"({"root":[0],"leaves":[[0,0]],"depth":1})").get<MinTree>(), InvalidCondition);
}
