#include "forcing/machines.hpp"

#include "forcing/error.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace forcing
{
    auto DecisionTree::leaf(bool accept) -> DecisionTree
    {
        return DecisionTree{std::vector<Node>{Node{true, accept}}};
    }

    auto DecisionTree::query(Element u, Element v, const DecisionTree & yes, const DecisionTree & no) -> DecisionTree
    {
        std::vector<Node> pool;
        pool.reserve(1 + yes._nodes.size() + no._nodes.size());
        pool.push_back(Node{false, false, u, v, 1, 1 + yes._nodes.size()});
        auto append = [&](const DecisionTree & sub) {
            auto offset = pool.size();
            for (auto n : sub._nodes) {
                if (! n.leaf) {
                    n.yes += offset;
                    n.no += offset;
                }
                pool.push_back(n);
            }
        };
        append(yes);
        append(no);
        return DecisionTree{std::move(pool)};
    }

    auto DecisionTree::depth() const -> std::size_t
    {
        std::function<std::size_t(std::size_t)> walk = [&](std::size_t i) -> std::size_t {
            const auto & n = _nodes[i];
            return n.leaf ? 0 : 1 + std::max(walk(n.yes), walk(n.no));
        };
        return walk(0);
    }

    auto DecisionTree::largest_element() const -> std::optional<Element>
    {
        std::optional<Element> top;
        for (const auto & n : _nodes)
            if (! n.leaf)
                top = std::max({top.value_or(0), n.u, n.v});
        return top;
    }

    auto OracleProgram::tree(std::size_t a, std::size_t b) const -> const DecisionTree &
    {
        static const DecisionTree reject = DecisionTree::leaf(false);
        auto it = table.find({a, b});
        return it == table.end() ? reject : it->second;
    }

    void OracleProgram::check(const Universe & u) const
    {
        for (const auto & [cell, t] : table) {
            auto label = std::to_string(cell.first) + "," + std::to_string(cell.second);
            if (t.depth() > depth_cap)
                throw InvalidArgument("tree " + label + " has depth " + std::to_string(t.depth()) + " > depth_cap "
                    + std::to_string(depth_cap));
            if (auto top = t.largest_element(); top && ! u.contains(*top))
                throw InvalidArgument("tree " + label + " queries element " + std::to_string(*top) + " outside the universe");
        }
    }

    auto evaluate(const OracleProgram & prog, std::size_t a, std::size_t b, const Condition & order) -> bool
    {
        const auto & t = prog.tree(a, b);
        const auto * n = &t.root();
        while (! n->leaf) {
            if (! order.contains(n->u) || ! order.contains(n->v))
                throw InvalidArgument("query " + std::to_string(n->u) + " ◁ " + std::to_string(n->v) + " is not answered by the order");
            n = &t.node(order.precedes(n->u, n->v) ? n->yes : n->no);
        }
        return n->accept;
    }

    auto CompiledFamily::cell_tree(std::size_t a, std::size_t b) const -> MinTree
    {
        std::vector<Condition> leaves = plus.cell(a, b);
        leaves.insert(leaves.end(), minus.cell(a, b).begin(), minus.cell(a, b).end());
        std::size_t depth = 0;
        for (const auto & c : leaves)
            depth = std::max(depth, c.size() - base().size());
        return MinTree{base(), std::move(leaves), depth};
    }

    namespace
    {
        void simulate(const DecisionTree & t, std::size_t index, const Condition & c, const Universe & u,
            std::vector<Condition> & accept, std::vector<Condition> & reject)
        {
            const auto & n = t.node(index);
            if (n.leaf) {
                (n.accept ? accept : reject).push_back(c);
                return;
            }
            if (n.u == n.v) {
                simulate(t, n.no, c, u, accept, reject);
                return;
            }
            std::vector<Condition> outcomes{c};
            for (auto x : {n.u, n.v}) {
                if (c.contains(x))
                    continue;
                std::vector<Condition> grown;
                for (const auto & o : outcomes)
                    for (auto & child : one_point_extensions(o, x, u))
                        grown.push_back(std::move(child));
                outcomes = std::move(grown);
            }
            for (const auto & o : outcomes)
                simulate(t, o.precedes(n.u, n.v) ? n.yes : n.no, o, u, accept, reject);
        }
    }

    auto compile(const OracleProgram & prog, const Condition & o, std::size_t p, std::size_t h, const Universe & u)
        -> CompiledFamily
    {
        prog.check(u);
        u.check(o);
        CompiledFamily family{PhpArray::empty(o, p, h), PhpArray::empty(o, p, h)};
        for (std::size_t a = 0; a < p; ++a)
            for (std::size_t b = 0; b < h; ++b)
                simulate(prog.tree(a, b), 0, o, u, family.plus.cell(a, b), family.minus.cell(a, b));
        return family;
    }

    auto to_string(PhpOutcome kind) -> std::string
    {
        switch (kind) {
        case PhpOutcome::injection: return "injection";
        case PhpOutcome::unmapped: return "unmapped";
        case PhpOutcome::collision: return "collision";
        case PhpOutcome::split: return "split";
        }
        return "unknown";
    }

    auto php_instance_check(const OracleProgram & prog, std::size_t p, std::size_t h, const Condition & order) -> PhpVerdict
    {
        std::vector<std::vector<char>> graph(p, std::vector<char>(h));
        for (std::size_t a = 0; a < p; ++a)
            for (std::size_t b = 0; b < h; ++b)
                graph[a][b] = evaluate(prog, a, b, order);

        for (std::size_t a = 0; a < p; ++a)
            if (std::none_of(graph[a].begin(), graph[a].end(), [](char x) { return x; }))
                return {PhpOutcome::unmapped, {a}, {}};
        for (std::size_t b = 0; b < h; ++b)
            for (std::size_t a = 0; a < p; ++a)
                for (std::size_t a2 = a + 1; a2 < p; ++a2)
                    if (graph[a][b] && graph[a2][b])
                        return {PhpOutcome::collision, {a, a2}, {b}};
        for (std::size_t a = 0; a < p; ++a)
            for (std::size_t b = 0; b < h; ++b)
                for (std::size_t b2 = b + 1; b2 < h; ++b2)
                    if (graph[a][b] && graph[a][b2])
                        return {PhpOutcome::split, {a}, {b, b2}};
        return {};
    }

    namespace programs
    {
        auto constant(bool accept, std::size_t p, std::size_t h) -> OracleProgram
        {
            OracleProgram prog;
            for (std::size_t a = 0; a < p; ++a)
                for (std::size_t b = 0; b < h; ++b)
                    prog.table[{a, b}] = DecisionTree::leaf(accept);
            return prog;
        }

        auto modular(std::size_t p, std::size_t h) -> OracleProgram
        {
            if (h == 0)
                throw InvalidArgument("modular program needs h >= 1");
            OracleProgram prog;
            for (std::size_t a = 0; a < p; ++a)
                for (std::size_t b = 0; b < h; ++b)
                    prog.table[{a, b}] = DecisionTree::leaf(b == a % h);
            return prog;
        }

        auto identity(std::size_t p, std::size_t h) -> OracleProgram
        {
            OracleProgram prog;
            for (std::size_t a = 0; a < p; ++a)
                for (std::size_t b = 0; b < h; ++b)
                    prog.table[{a, b}] = DecisionTree::leaf(a == b);
            return prog;
        }

        auto comparator(std::size_t p, std::size_t h) -> OracleProgram
        {
            OracleProgram prog{1, {}};
            for (std::size_t a = 0; a < p; ++a)
                for (std::size_t b = 0; b < h; ++b)
                    prog.table[{a, b}] = DecisionTree::query(static_cast<Element>(a), static_cast<Element>(p + b),
                        DecisionTree::leaf(true), DecisionTree::leaf(false));
            return prog;
        }

        auto random(std::size_t p, std::size_t h, std::size_t n, std::size_t depth, std::uint64_t seed) -> OracleProgram
        {
            if (n < 2 && depth > 0)
                throw InvalidArgument("random queries need n >= 2");
            std::mt19937_64 rng{seed};
            auto below = [&](std::uint64_t k) { return static_cast<std::size_t>(rng() % k); };
            std::function<DecisionTree(std::size_t)> grow = [&](std::size_t left) -> DecisionTree {
                if (left == 0 || below(4) == 0)
                    return DecisionTree::leaf(below(2) == 1);
                auto u = static_cast<Element>(below(n));
                auto v = static_cast<Element>(below(n - 1));
                if (v >= u)
                    ++v;
                auto yes = grow(left - 1);
                auto no = grow(left - 1);
                return DecisionTree::query(u, v, yes, no);
            };
            OracleProgram prog{depth, {}};
            for (std::size_t a = 0; a < p; ++a)
                for (std::size_t b = 0; b < h; ++b)
                    prog.table[{a, b}] = grow(depth);
            return prog;
        }

        auto all_trees(std::size_t n, std::size_t depth) -> std::vector<DecisionTree>
        {
            std::vector<DecisionTree> level{DecisionTree::leaf(false), DecisionTree::leaf(true)};
            for (std::size_t d = 0; d < depth; ++d) {
                std::vector<DecisionTree> next{DecisionTree::leaf(false), DecisionTree::leaf(true)};
                for (Element u = 0; u < n; ++u)
                    for (Element v = 0; v < n; ++v) {
                        if (u == v)
                            continue;
                        for (const auto & yes : level)
                            for (const auto & no : level)
                                next.push_back(DecisionTree::query(u, v, yes, no));
                    }
                level = std::move(next);
            }
            return level;
        }
    }

    namespace
    {
        auto node_json(const DecisionTree & t, std::size_t i) -> Json
        {
            const auto & n = t.node(i);
            if (n.leaf)
                return Json{{"leaf", n.accept}};
            return Json{{"query", {n.u, n.v}}, {"yes", node_json(t, n.yes)}, {"no", node_json(t, n.no)}};
        }

        auto element_at(const Json & q, std::size_t i) -> Element
        {
            if (! q[i].is_number_integer() || q[i].get<long long>() < 0)
                throw ParseError("query elements must be non-negative integers, got " + q.dump());
            return q[i].get<Element>();
        }
    }

    auto to_json(const DecisionTree & t) -> Json
    {
        return node_json(t, 0);
    }

    auto decision_tree_from_json(const Json & j) -> DecisionTree
    {
        if (! j.is_object())
            throw ParseError("a decision tree node must be an object, got " + j.dump());
        if (j.contains("leaf"))
            return DecisionTree::leaf(field<bool>(j, "leaf"));
        auto q = field<Json>(j, "query");
        if (! q.is_array() || q.size() != 2)
            throw ParseError("\"query\" must be a pair [u, v]");
        return DecisionTree::query(element_at(q, 0), element_at(q, 1), decision_tree_from_json(field<Json>(j, "yes")),
            decision_tree_from_json(field<Json>(j, "no")));
    }

    void to_json(Json & j, const OracleProgram & prog)
    {
        Json table = Json::object();
        for (const auto & [cell, t] : prog.table)
            table[std::to_string(cell.first) + "," + std::to_string(cell.second)] = to_json(t);
        j = Json{{"depth_cap", prog.depth_cap}, {"table", table}};
    }

    void from_json(const Json & j, OracleProgram & prog)
    {
        prog.depth_cap = field<std::size_t>(j, "depth_cap");
        prog.table.clear();
        auto table = field_or<Json>(j, "table", Json::object());
        if (! table.is_object())
            throw ParseError("\"table\" must be an object");
        for (auto it = table.begin(); it != table.end(); ++it) {
            const auto & key = it.key();
            auto comma = key.find(',');
            std::size_t a = 0, b = 0;
            try {
                if (comma == std::string::npos)
                    throw std::invalid_argument(key);
                std::size_t used = 0;
                a = std::stoul(key.substr(0, comma), &used);
                if (used != comma)
                    throw std::invalid_argument(key);
                b = std::stoul(key.substr(comma + 1), &used);
                if (used != key.size() - comma - 1)
                    throw std::invalid_argument(key);
            }
            catch (const std::logic_error &) {
                throw ParseError("table key \"" + key + "\" is not of the form \"a,b\"");
            }
            prog.table[{a, b}] = decision_tree_from_json(it.value());
        }
    }

    void to_json(Json & j, const PhpVerdict & v)
    {
        j = Json{{"kind", to_string(v.kind)}, {"pigeons", v.pigeons}, {"holes", v.holes}};
    }
}
