#include "forcing/error.hpp"
#include "forcing/verify.hpp"

#include <doctest.h>

#include <set>

using namespace forcing;

TEST_CASE("suite list")
{
    auto names = suite_names();
    std::set<std::string> s(names.begin(), names.end());
    for (const char * required :
        {"tree-props", "envelope", "uniformize", "upper-bound", "array-inequality", "frame-bounds", "compile-soundness"})
        CHECK(s.count(required) == 1);
    VerifyConfig bad;
    bad.suite = "nope";
    CHECK_THROWS_AS((void) verify(bad), InvalidArgument);
}

TEST_CASE("reports replay to the same digest")
{
    VerifyConfig c;
    c.suite = "upper-bound";
    c.m = 5;
    auto report = verify(c);
    CHECK(report["passed"].get<bool>());
    CHECK(report["digest"] == report_digest(report));

    auto replayed = verify(report["config"].get<VerifyConfig>());
    CHECK(replayed["digest"] == report["digest"]);
    CHECK(replayed == report);
}

TEST_CASE("upper bound counts")
{
    VerifyConfig c;
    c.suite = "upper-bound";
    c.m = 6;
    c.o_length = 2;
    c.depth = 2;
    auto report = verify(c);
    REQUIRE(report["passed"].get<bool>());
    bool saw_counts = false;
    for (const auto & inst : report["instances"])
        if (inst.contains("total_orders")) {
            CHECK(inst["total_orders"] == "360");
            CHECK(inst["per_member_orders"] == "30");
            saw_counts = true;
        }
    CHECK(saw_counts);
}

TEST_CASE("array inequality at n = 3")
{
    VerifyConfig c;
    c.suite = "array-inequality";
    c.n = 3;
    c.p = 2;
    c.h = 1;
    auto report = verify(c);
    CHECK(report["passed"].get<bool>());
    for (const auto & inst : report["instances"])
        CHECK_FALSE(inst["exists"].get<bool>());
}

TEST_CASE("tree-props rejects a corrupted tree")
{
    VerifyConfig c;
    c.suite = "tree-props";
    c.n = 3;
    c.input = Json::parse(R"({"root":[0],"leaves":[[1,0],[0,1],[0,2]],"depth":1})");
    auto report = verify(c);
    CHECK_FALSE(report["passed"].get<bool>());
    c.input = Json::parse(R"({"root":[0],"leaves":[[1,0],[0,1]],"depth":1})");
    CHECK(verify(c)["passed"].get<bool>());
}

TEST_CASE("uniformize corpus")
{
    auto corpus = uniformize_corpus();
    CHECK(corpus.size() >= 20);
    for (const auto & entry : corpus) {
        CHECK(entry.array["p"].get<std::size_t>() <= 3);
        CHECK(entry.array["h"].get<std::size_t>() <= 3);
        CHECK(entry.universe["n"].get<std::size_t>() <= 6);
    }
    auto record = uniformize_instance(corpus.front().name, corpus.front().universe, corpus.front().array, std::nullopt);
    CHECK(record["passed"].get<bool>());
}

TEST_CASE("budget is enforced")
{
    VerifyConfig c;
    c.suite = "upper-bound";
    c.m = 7;
    c.budget.max_nodes = 100;
    CHECK_THROWS_AS((void) verify(c), BudgetExceeded);
    c.budget.max_nodes = 0;
    CHECK_THROWS_AS((void) verify(c), InvalidArgument);
}
