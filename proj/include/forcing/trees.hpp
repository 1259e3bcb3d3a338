#pragma once

#include "forcing/bigint.hpp"
#include "forcing/poset.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace forcing
{
    /// An o-tree kept as its leaf set. Internal branching is not retained:
    /// only the maximal conditions matter to every consumer.
    struct MinTree
    {
        Condition root;
        std::vector<Condition> leaves;
        std::size_t depth = 0;

        auto operator==(const MinTree &) const -> bool = default;
    };

    /// Uniform tree: insert `fresh` one element at a time, branching over all positions.
    [[nodiscard]] auto build_uniform_tree(const Condition & root, std::span<const Element> fresh, const Universe & u) -> MinTree;

    /// Uniform tree of the given depth using the smallest elements not in the root.
    [[nodiscard]] auto build_uniform_tree(const Condition & root, std::size_t depth, const Universe & u) -> MinTree;

    /// E(q, s): q-tree of all extensions of q to el(q) ∪ el(s), inserting the
    /// missing elements of s in ascending order.
    struct Envelope
    {
        Condition base;
        Condition target;
        MinTree tree;
    };

    [[nodiscard]] auto envelope(const Condition & q, const Condition & s, const Universe & u) -> Envelope;

    /// (m + d)! / m!
    [[nodiscard]] auto tree_size(std::size_t m, std::size_t d) -> BigInt;

    /// One named property check with an optional counterexample.
    struct CheckResult
    {
        std::string property;
        bool passed = true;
        nlohmann::json counterexample;
        std::string detail;

        CheckResult() = default;
        explicit CheckResult(std::string name) : property(std::move(name)) {}
    };

    void to_json(nlohmann::json & j, const CheckResult & c);

    /// {"root": [...], "leaves": [[...], ...], "depth": d}
    void to_json(nlohmann::json & j, const MinTree & t);
    void from_json(const nlohmann::json & j, MinTree & t);

    struct TreeReport
    {
        std::vector<CheckResult> checks;
        BigInt size;
        BigInt bound;
        bool equality = false; ///< size equals the bound, i.e. uniform of exactly the claimed depth

        [[nodiscard]] auto passed() const -> bool;
    };

    /// Checks that leaves extend the root, pairwise incompatibility, covering against
    /// every condition of length <= sample_cap, and the size bound for the claimed depth.
    [[nodiscard]] auto validate_tree(const MinTree & tree, const Universe & u, std::size_t sample_cap) -> TreeReport;

    [[nodiscard]] auto is_uniform(const MinTree & tree) -> bool;
}
