#include "forcing/bruteforce.hpp"
#include "forcing/error.hpp"
#include "forcing/poset.hpp"
#include "forcing/trees.hpp"

#include <doctest.h>

using namespace forcing;
using namespace forcing::bruteforce;

TEST_CASE("total order counts")
{
    EnumerationBudget budget;
    CHECK(all_total_orders(3, Condition{}, budget).size() == 6);
    CHECK(all_total_orders(4, Condition{2, 0}, budget).size() == 12);
    CHECK(all_total_orders(3, Condition{2, 0, 1}, budget).size() == 1);
    CHECK(all_total_orders(3, Condition{2, 0, 1}, budget).front() == Sequence{2, 0, 1});

    // m!/|o|! for every m <= 7 and a prefix base
    const std::size_t fact[] = {1, 1, 2, 6, 24, 120, 720, 5040};
    for (std::size_t m = 1; m <= 7; ++m)
        for (std::size_t k = 0; k <= m; ++k) {
            std::vector<Element> seq;
            for (std::size_t i = 0; i < k; ++i)
                seq.push_back(static_cast<Element>(k - 1 - i));
            std::size_t count = 0;
            for_each_total_order(m, Condition{seq}, budget, [&](const Sequence &) { ++count; });
            CHECK(count == fact[m] / fact[k]);
        }
}

TEST_CASE("budget limits are hard errors")
{
    EnumerationBudget small;
    small.max_universe = 3;
    CHECK_THROWS_AS((void) all_total_orders(4, Condition{}, small), BudgetExceeded);
    EnumerationBudget bad;
    bad.max_nodes = 0;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    NodeCounter counter(2);
    counter.tick();
    counter.tick();
    CHECK_THROWS_AS(counter.tick(), BudgetExceeded);
}

TEST_CASE("merge oracle")
{
    EnumerationBudget budget;
    CHECK_FALSE(merge_exists(Condition{1, 2}, Condition{2, 1}, budget));
    CHECK(merge_exists(Condition{0, 1}, Condition{1, 2}, budget));
    CHECK(merge_witness(Condition{0, 1}, Condition{1, 2}, budget) == Sequence{0, 1, 2});
    CHECK(merge_exists(Condition{}, Condition{3, 1, 2}, budget));
    CHECK(lists_in_order(Sequence{3, 0, 1, 2}, Sequence{0, 2}));
    CHECK_FALSE(lists_in_order(Sequence{3, 0, 1, 2}, Sequence{2, 0}));
}

TEST_CASE("merge oracle agrees with compatible")
{
    EnumerationBudget budget;
    Universe u{4, 4};
    auto all = extensions_up_to(Condition{}, 4, u);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
            CHECK(merge_exists(all[i], all[j], budget) == is_compatible(all[i], all[j]));
            ++pairs;
        }
    CHECK(pairs == 65 * 65);
}

TEST_CASE("max antichain")
{
    EnumerationBudget budget;
    CHECK(max_antichain(Condition{}, 1, 3, budget) == 1);
    CHECK(max_antichain(Condition{}, 2, 3, budget) == 2);
    CHECK(max_antichain(Condition{0}, 0, 3, budget) == 1);
    CHECK(max_antichain(Condition{0}, 2, 4, budget) == 6);
    CHECK(max_antichain(Condition{}, 3, 4, budget) == 6);
}

TEST_CASE("max disjoint family")
{
    NodeCounter nodes(1000);
    // {0,1}, {1,2}, {2,3}, {3}: best is {0,1} + {2,3} or {0,1} + {3}
    std::vector<std::vector<std::uint64_t>> blocks{{0b0011}, {0b0110}, {0b1100}, {0b1000}};
    CHECK(max_disjoint_family(blocks, 4, nodes) == 2);
}
