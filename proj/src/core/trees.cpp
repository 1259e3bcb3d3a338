#include "forcing/trees.hpp"

#include "forcing/error.hpp"
#include "forcing/json_io.hpp"

#include <algorithm>

namespace forcing
{
    auto build_uniform_tree(const Condition & root, std::span<const Element> fresh, const Universe & u) -> MinTree
    {
        u.check(root);
        for (std::size_t i = 0; i < fresh.size(); ++i) {
            if (root.contains(fresh[i]))
                throw InvalidCondition("element " + std::to_string(fresh[i]) + " is already in the root");
            if (std::find(fresh.begin(), fresh.begin() + static_cast<std::ptrdiff_t>(i), fresh[i]) != fresh.begin() + static_cast<std::ptrdiff_t>(i))
                throw InvalidCondition("element " + std::to_string(fresh[i]) + " is listed twice");
        }
        if (root.size() + fresh.size() > u.length_cap())
            throw CapExceeded("uniform tree of depth " + std::to_string(fresh.size()) + " over a root of length "
                + std::to_string(root.size()) + " exceeds the length cap " + std::to_string(u.length_cap()));

        std::vector<Condition> level{root};
        for (auto x : fresh) {
            std::vector<Condition> next;
            next.reserve(level.size() * (level.front().size() + 1));
            for (const auto & c : level)
                for (auto & child : one_point_extensions(c, x, u))
                    next.push_back(std::move(child));
            level = std::move(next);
        }
        return MinTree{root, std::move(level), fresh.size()};
    }

    auto build_uniform_tree(const Condition & root, std::size_t depth, const Universe & u) -> MinTree
    {
        auto fresh = smallest_unused(root, depth, u);
        if (fresh.size() < depth)
            throw CapExceeded("universe has only " + std::to_string(fresh.size()) + " elements outside the root, depth "
                + std::to_string(depth) + " requested");
        return build_uniform_tree(root, fresh, u);
    }

    auto envelope(const Condition & q, const Condition & s, const Universe & u) -> Envelope
    {
        u.check(q);
        u.check(s);
        if (! is_compatible(q, s))
            throw InvalidArgument("envelope requires compatible conditions");

        std::vector<Element> missing;
        for (auto x : s.elements())
            if (! q.contains(x))
                missing.push_back(x);
        return Envelope{q, s, build_uniform_tree(q, missing, u)};
    }

    auto tree_size(std::size_t m, std::size_t d) -> BigInt
    {
        return rising_product(m, d);
    }

    void to_json(Json & j, const CheckResult & c)
    {
        j = Json{{"property", c.property}, {"passed", c.passed}, {"counterexample", c.counterexample}, {"detail", c.detail}};
    }

    void to_json(Json & j, const MinTree & t)
    {
        j = Json{{"root", t.root}, {"leaves", t.leaves}, {"depth", t.depth}};
    }

    void from_json(const Json & j, MinTree & t)
    {
        t.root = field<Condition>(j, "root");
        t.leaves = field<std::vector<Condition>>(j, "leaves");
        t.depth = field<std::size_t>(j, "depth");
    }

    auto TreeReport::passed() const -> bool
    {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult & c) { return c.passed; });
    }

    auto is_uniform(const MinTree & tree) -> bool
    {
        return std::all_of(tree.leaves.begin(), tree.leaves.end(),
            [&](const Condition & c) { return c.size() == tree.root.size() + tree.depth; });
    }

    auto validate_tree(const MinTree & tree, const Universe & u, std::size_t sample_cap) -> TreeReport
    {
        TreeReport report;

        CheckResult extends_root{"extends_root"};
        CheckResult within_depth{"depth_within_claim"};
        for (const auto & leaf : tree.leaves) {
            if (extends_root.passed && ! extends(leaf, tree.root)) {
                extends_root.passed = false;
                extends_root.counterexample = Json{{"leaf", leaf}};
            }
            if (within_depth.passed && leaf.size() > tree.root.size() + tree.depth) {
                within_depth.passed = false;
                within_depth.counterexample = Json{{"leaf", leaf}};
            }
        }
        report.checks.push_back(extends_root);
        report.checks.push_back(within_depth);

        CheckResult incompatible{"pairwise_incompatible"};
        for (std::size_t i = 0; i < tree.leaves.size() && incompatible.passed; ++i)
            for (std::size_t k = i + 1; k < tree.leaves.size(); ++k)
                if (auto w = compatible(tree.leaves[i], tree.leaves[k]); w.compatible()) {
                    incompatible.passed = false;
                    incompatible.counterexample = Json{{"first", tree.leaves[i]}, {"second", tree.leaves[k]}, {"common_extension", w.merged()}};
                    break;
                }
        report.checks.push_back(incompatible);

        CheckResult covering{"covering"};
        std::size_t probes = 0;
        for_each_extension(Condition{}, sample_cap, u, [&](const Condition & q) {
            if (! covering.passed || ! is_compatible(q, tree.root))
                return;
            ++probes;
            bool hit = std::any_of(tree.leaves.begin(), tree.leaves.end(), [&](const Condition & leaf) { return is_compatible(q, leaf); });
            if (! hit) {
                covering.passed = false;
                covering.counterexample = Json{{"probe", q}};
            }
        });
        covering.detail = std::to_string(probes) + " probes of length <= " + std::to_string(std::min(sample_cap, u.length_cap()));
        report.checks.push_back(covering);

        report.size = tree.leaves.size();
        report.bound = tree_size(tree.root.size(), tree.depth);
        report.equality = report.size == report.bound;
        CheckResult size_bound{"size_bound"};
        size_bound.passed = report.size <= report.bound;
        size_bound.detail = report.size.str() + (report.equality ? " == " : (size_bound.passed ? " < " : " > ")) + report.bound.str();
        report.checks.push_back(size_bound);

        return report;
    }
}
