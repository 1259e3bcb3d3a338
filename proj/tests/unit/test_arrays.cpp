#include "forcing/arrays.hpp"
#include "forcing/error.hpp"
#include "forcing/machines.hpp"

#include <doctest.h>

#include <algorithm>

using namespace forcing;

namespace
{
    auto passed(const std::vector<CheckResult> & checks, const std::string & name) -> bool
    {
        auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckResult & c) { return c.property == name; });
        REQUIRE(it != checks.end());
        return it->passed;
    }

    auto singleton(Condition o) -> PhpArray
    {
        auto A = PhpArray::empty(o, 1, 1);
        A.cell(0, 0).push_back(o);
        return A;
    }
}

TEST_CASE("singleton array")
{
    Universe u{3, 3};
    auto A = singleton(Condition{});
    auto r = validate_array(A, u);
    CHECK(r.passed());
    CHECK(r.checks.size() == 5);
    CHECK(array_size(A).total == 1);
    CHECK(array_size(A).consistent());
}

TEST_CASE("array axioms fail where expected")
{
    Universe u{3, 3};
    auto A = PhpArray::empty(Condition{}, 2, 1);
    A.cell(0, 0) = {Condition{0, 1}};
    A.cell(1, 0) = {Condition{0, 1, 2}};
    auto r = validate_array(A, u);
    CHECK_FALSE(passed(r.checks, "axiom3_column_incompatible"));
    CHECK(passed(r.checks, "axiom1_extends_base"));

    auto E = PhpArray::empty(Condition{}, 2, 2);
    CHECK(array_size(E).total == 0);
    CHECK_FALSE(passed(validate_array(E, u).checks, "axiom5_density"));

    auto B = PhpArray::empty(Condition{0}, 1, 2);
    B.cell(0, 0) = {Condition{1, 0}};
    B.cell(0, 1) = {Condition{1}};
    r = validate_array(B, u);
    CHECK_FALSE(passed(r.checks, "axiom1_extends_base"));

    auto C = PhpArray::empty(Condition{}, 1, 2);
    C.cell(0, 0) = {Condition{0, 1}, Condition{0}};
    C.cell(0, 1) = {Condition{1, 0}, Condition{2, 1, 0}};
    r = validate_array(C, u);
    CHECK_FALSE(passed(r.checks, "axiom2_cell_incompatible"));
    CHECK_FALSE(passed(r.checks, "axiom4_row_incompatible"));
}

TEST_CASE("a non-reading program mapping both pigeons to one hole breaks column incompatibility")
{
    Universe u{3, 3};
    auto family = compile(programs::constant(true, 2, 1), Condition{}, 2, 1, u);
    CHECK(family.plus.cell(0, 0) == std::vector<Condition>{Condition{}});
    CHECK(family.plus.cell(1, 0) == std::vector<Condition>{Condition{}});
    CHECK_FALSE(passed(validate_array(family.plus, u).checks, "axiom3_column_incompatible"));
}

TEST_CASE("array json")
{
    auto A = singleton(Condition{1});
    auto j = array_to_json(A);
    CHECK(j.dump() == R"({"base":[1],"cells":[[[[1]]]],"h":1,"p":1})");
    CHECK(array_from_json<Condition>(j) == A);
    CHECK_THROWS_AS((void) array_from_json<Condition>(Json::parse(R"({"base":[],"p":2,"h":1,"cells":[[[]]]})")), ParseError);
}

TEST_CASE("uniformize a singleton")
{
    Universe u{4, 4};
    auto out = uniformize_rows(singleton(Condition{2, 0}), 1, u);
    CHECK(out.depth == 1);
    CHECK(out.array.cell(0, 0).size() == 3);
    CHECK(array_size(out.array).total == tree_size(2, 1));
    CHECK(validate_array(out.array, u).passed());
    CHECK(array_extends<OrderFrame>(out.array, singleton(Condition{2, 0})));
}

TEST_CASE("uniformize a split row")
{
    Universe u{3, 3};
    auto A = PhpArray::empty(Condition{}, 1, 2);
    A.cell(0, 0) = {Condition{0, 1}};
    A.cell(0, 1) = {Condition{1, 0}};
    REQUIRE(validate_array(A, u).passed());

    // The row is already the uniform depth-2 tree over (), so d = 2 leaves it at 2 leaves;
    // six leaves, one per permutation of {0,1,2}, need d = 3.
    auto two = uniformize_rows(A, 2, u);
    CHECK(array_size(two.array).total == 2);

    auto three = uniformize_rows(A, 3, u);
    CHECK(three.depth == 3);
    CHECK(three.rows.at(0).leaves.size() == 6);
    CHECK(three.array.cell(0, 0).size() == 3);
    CHECK(three.array.cell(0, 1).size() == 3);
    for (const auto & r : three.array.cell(0, 0))
        CHECK(extends(r, Condition{0, 1}));
    for (const auto & r : three.array.cell(0, 1))
        CHECK(extends(r, Condition{1, 0}));
    CHECK(validate_array(three.array, u).passed());

    CHECK_THROWS_AS((void) uniformize_rows(A, 1, u), InvalidArgument);
    CHECK_THROWS_AS((void) uniformize_rows(A, 4, u), CapExceeded);
}

TEST_CASE("uniformized size is p times the tree size")
{
    Universe u{4, 4};
    auto A = PhpArray::empty(Condition{}, 2, 2);
    A.cell(0, 0) = {Condition{0}};
    A.cell(1, 1) = {Condition{0}};
    REQUIRE(validate_array(A, u).passed());
    auto out = uniformize_rows(A, 2, u);
    CHECK(array_size(out.array).total == 2 * tree_size(0, 2));
    CHECK(validate_array(out.array, u).passed());
    for (const auto & rec : out.records)
        CHECK(rec.invariant_held);
}

TEST_CASE("antichain upper bound check")
{
    bruteforce::EnumerationBudget budget;
    Universe u{4, 4};
    auto leaves = build_uniform_tree(Condition{1, 0}, 1, u).leaves;
    auto r = antichain_upper_bound_check(leaves, Condition{1, 0}, 1, 4, budget);
    CHECK(r.passed());
    CHECK(r.total_orders == 12);
    CHECK(r.per_member_orders == 4);
    CHECK(r.bound == leaves.size());

    std::vector<Condition> clash{Condition{1, 0, 2}, Condition{1, 3, 0}};
    r = antichain_upper_bound_check(clash, Condition{1, 0}, 1, 4, budget);
    CHECK_FALSE(passed(r.checks, "pairwise_incompatible"));
    CHECK_FALSE(passed(r.checks, "extension_sets_disjoint"));
}

TEST_CASE("array search")
{
    Universe u3{3, 3};
    auto none = search_array<OrderFrame>(Condition{}, 2, 1, 3, u3, 10'000'000);
    CHECK_FALSE(none.exists);
    CHECK(none.nodes > 0);

    auto one = search_array<OrderFrame>(Condition{}, 1, 1, 3, u3, 10'000'000);
    REQUIRE(one.exists);
    CHECK(validate_array(*one.witness, u3).passed());

    auto split = search_array<OrderFrame>(Condition{}, 1, 2, 3, u3, 10'000'000);
    REQUIRE(split.exists);
    CHECK(validate_array(*split.witness, u3).passed());

    CHECK_THROWS_AS((void) search_array<OrderFrame>(Condition{}, 3, 2, 3, Universe{4, 4}, 5), BudgetExceeded);
}
