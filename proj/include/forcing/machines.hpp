#pragma once

#include "forcing/arrays.hpp"
#include "forcing/json_io.hpp"
#include "forcing/poset.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace forcing
{
    /// Binary decision tree over queries "u ◁ v?", stored as a node pool rooted at index 0.
    class DecisionTree
    {
    public:
        struct Node
        {
            bool leaf = true;
            bool accept = false;
            Element u = 0;
            Element v = 0;
            std::size_t yes = 0;
            std::size_t no = 0;

            auto operator==(const Node &) const -> bool = default;
        };

        DecisionTree() : DecisionTree(leaf(false)) {}

        static auto leaf(bool accept) -> DecisionTree;
        static auto query(Element u, Element v, const DecisionTree & yes, const DecisionTree & no) -> DecisionTree;

        [[nodiscard]] auto nodes() const noexcept -> const std::vector<Node> & { return _nodes; }
        [[nodiscard]] auto root() const -> const Node & { return _nodes.front(); }
        [[nodiscard]] auto node(std::size_t i) const -> const Node & { return _nodes.at(i); }

        /// Longest number of queries on a root-to-leaf path.
        [[nodiscard]] auto depth() const -> std::size_t;
        [[nodiscard]] auto largest_element() const -> std::optional<Element>;

        auto operator==(const DecisionTree &) const -> bool = default;

    private:
        explicit DecisionTree(std::vector<Node> nodes) : _nodes(std::move(nodes)) {}
        std::vector<Node> _nodes;
    };

    /// phi(a, b) for every pigeon/hole pair; a missing cell is constant reject.
    struct OracleProgram
    {
        std::size_t depth_cap = 0;
        std::map<std::pair<std::size_t, std::size_t>, DecisionTree> table;

        [[nodiscard]] auto tree(std::size_t a, std::size_t b) const -> const DecisionTree &;

        /// Throws InvalidArgument if some tree is deeper than depth_cap or queries an element >= n.
        void check(const Universe & u) const;

        auto operator==(const OracleProgram &) const -> bool = default;
    };

    /// Walks tree (a, b) answering u ◁ v from `order`. u ◁ u is false.
    /// Throws InvalidArgument when the order does not contain a queried element.
    [[nodiscard]] auto evaluate(const OracleProgram & prog, std::size_t a, std::size_t b, const Condition & order) -> bool;

    /// T⁺ and T⁻ per cell; their union per cell is the leaf set of a base-tree.
    struct CompiledFamily
    {
        PhpArray plus;
        PhpArray minus;

        [[nodiscard]] auto base() const -> const Condition & { return plus.base; }
        [[nodiscard]] auto pigeons() const -> std::size_t { return plus.pigeons; }
        [[nodiscard]] auto holes() const -> std::size_t { return plus.holes; }
        [[nodiscard]] auto cell_tree(std::size_t a, std::size_t b) const -> MinTree;
    };

    /// Simulates every tree along extensions of o. Undecided queries insert the missing
    /// element(s) at every position, u before v; decided ones do not grow the condition.
    /// The cap is enforced as insertions happen.
    [[nodiscard]] auto compile(const OracleProgram & prog, const Condition & o, std::size_t p, std::size_t h, const Universe & u)
        -> CompiledFamily;

    enum class PhpOutcome
    {
        injection,
        unmapped,
        collision,
        split,
    };

    [[nodiscard]] auto to_string(PhpOutcome kind) -> std::string;

    struct PhpVerdict
    {
        PhpOutcome kind = PhpOutcome::injection;
        std::vector<std::size_t> pigeons;
        std::vector<std::size_t> holes;

        [[nodiscard]] auto violation() const -> bool { return kind != PhpOutcome::injection; }
    };

    /// First violation in the order unmapped, collision, split; injection if none.
    [[nodiscard]] auto php_instance_check(const OracleProgram & prog, std::size_t p, std::size_t h, const Condition & order)
        -> PhpVerdict;

    namespace programs
    {
        [[nodiscard]] auto constant(bool accept, std::size_t p, std::size_t h) -> OracleProgram;

        /// phi(a, b) := b == a mod h.
        [[nodiscard]] auto modular(std::size_t p, std::size_t h) -> OracleProgram;

        /// phi(a, b) := a == b, the identity graph.
        [[nodiscard]] auto identity(std::size_t p, std::size_t h) -> OracleProgram;

        /// phi(a, b) := (x_a ◁ y_b) with x_a = a, y_b = p + b; every cell one query.
        [[nodiscard]] auto comparator(std::size_t p, std::size_t h) -> OracleProgram;

        /// Independent random tree per cell, depth <= depth over [0, n); leaves and queries uniform.
        [[nodiscard]] auto random(std::size_t p, std::size_t h, std::size_t n, std::size_t depth, std::uint64_t seed) -> OracleProgram;

        /// Every decision tree of depth <= depth querying distinct u, v < n, in a fixed order.
        [[nodiscard]] auto all_trees(std::size_t n, std::size_t depth) -> std::vector<DecisionTree>;
    }

    auto to_json(const DecisionTree & t) -> Json;
    auto decision_tree_from_json(const Json & j) -> DecisionTree;
    void to_json(Json & j, const OracleProgram & prog);
    void from_json(const Json & j, OracleProgram & prog);
    void to_json(Json & j, const PhpVerdict & v);
}
