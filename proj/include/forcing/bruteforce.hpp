#pragma once

// Ground-truth oracles. Nothing here calls into poset-core, trees or arrays beyond
// reading the raw contents of the value types: every test is reimplemented by
// enumeration, so agreement with the main modules is evidence rather than tautology.

#include "forcing/poset.hpp"
#include "forcing/variants.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace forcing::bruteforce
{
    struct EnumerationBudget
    {
        std::size_t max_universe = 8;
        std::size_t max_length = 8;
        std::uint64_t max_nodes = 200'000'000;

        /// Throws InvalidArgument unless all limits are positive.
        void validate() const;
        void require_universe(std::size_t m) const;
        void require_length(std::size_t length) const;
    };

    /// Counts search nodes against a budget; throws BudgetExceeded past the limit.
    class NodeCounter
    {
    public:
        explicit NodeCounter(std::uint64_t limit) : _limit(limit) {}

        void tick(std::uint64_t k = 1);
        [[nodiscard]] auto count() const noexcept -> std::uint64_t { return _count; }

    private:
        std::uint64_t _limit;
        std::uint64_t _count = 0;
    };

    using Sequence = std::vector<Element>;

    /// Every permutation of [0, m) that lists `extending` in order, in lexicographic order.
    void for_each_total_order(std::size_t m, const Condition & extending, const EnumerationBudget & budget,
        const std::function<void(const Sequence &)> & visit);

    [[nodiscard]] auto all_total_orders(std::size_t m, const Condition & extending, const EnumerationBudget & budget)
        -> std::vector<Sequence>;

    /// Subsequence test written independently of poset-core.
    [[nodiscard]] auto lists_in_order(const Sequence & total, const Sequence & part) -> bool;

    /// True iff some ordering of el(a) ∪ el(b) lists both a and b in order.
    [[nodiscard]] auto merge_exists(const Condition & a, const Condition & b, const EnumerationBudget & budget) -> bool;

    /// The common extension found by merge_exists, if any (first in lexicographic order).
    [[nodiscard]] auto merge_witness(const Condition & a, const Condition & b, const EnumerationBudget & budget)
        -> std::optional<Sequence>;

    /// Size of the largest family of pairwise disjoint sets among `blocks`,
    /// each given as a bitset over a common ground set of `ground` points.
    [[nodiscard]] auto max_disjoint_family(const std::vector<std::vector<std::uint64_t>> & blocks, std::size_t ground,
        NodeCounter & nodes) -> std::size_t;

    /// Largest pairwise-incompatible set of length-(|o|+d) extensions of o over [0, m).
    [[nodiscard]] auto max_antichain(const Condition & o, std::size_t d, std::size_t m, const EnumerationBudget & budget)
        -> std::size_t;

    /// Same for tournaments extending t on |t|+d vertices drawn from [0, m).
    [[nodiscard]] auto max_antichain(const TournamentCondition & t, std::size_t d, std::size_t m,
        const EnumerationBudget & budget) -> std::size_t;

    /// Same for partial functions extending f with |f|+d pairs, pigeons [0, n), holes [0, 2n).
    [[nodiscard]] auto max_antichain(const PartialFnCondition & f, std::size_t d, std::size_t n,
        const EnumerationBudget & budget) -> std::size_t;
}
