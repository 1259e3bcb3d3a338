#include "forcing/bruteforce.hpp"

#include "forcing/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

namespace forcing::bruteforce
{
    void EnumerationBudget::validate() const
    {
        if (max_universe == 0 || max_length == 0 || max_nodes == 0)
            throw InvalidArgument("enumeration budget limits must be positive");
    }

    void EnumerationBudget::require_universe(std::size_t m) const
    {
        validate();
        if (m > max_universe)
            throw BudgetExceeded("universe of size " + std::to_string(m) + " exceeds the enumeration budget " + std::to_string(max_universe));
    }

    void EnumerationBudget::require_length(std::size_t length) const
    {
        validate();
        if (length > max_length)
            throw BudgetExceeded("length " + std::to_string(length) + " exceeds the enumeration budget " + std::to_string(max_length));
    }

    void NodeCounter::tick(std::uint64_t k)
    {
        _count += k;
        if (_count > _limit)
            throw BudgetExceeded("search exceeded the node budget of " + std::to_string(_limit));
    }

    auto lists_in_order(const Sequence & total, const Sequence & part) -> bool
    {
        std::size_t at = 0;
        for (auto x : total)
            if (at < part.size() && part[at] == x)
                ++at;
        if (at == part.size())
            return true;
        // part may contain elements missing from total
        return false;
    }

    void for_each_total_order(std::size_t m, const Condition & extending, const EnumerationBudget & budget,
        const std::function<void(const Sequence &)> & visit)
    {
        budget.require_universe(m);
        for (auto x : extending.seq())
            if (x >= m)
                throw InvalidArgument("condition element " + std::to_string(x) + " is outside [0," + std::to_string(m) + ")");
        Sequence perm(m);
        std::iota(perm.begin(), perm.end(), Element{0});
        do {
            if (lists_in_order(perm, extending.seq()))
                visit(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    auto all_total_orders(std::size_t m, const Condition & extending, const EnumerationBudget & budget) -> std::vector<Sequence>
    {
        std::vector<Sequence> out;
        for_each_total_order(m, extending, budget, [&](const Sequence & s) { out.push_back(s); });
        return out;
    }

    auto merge_witness(const Condition & a, const Condition & b, const EnumerationBudget & budget) -> std::optional<Sequence>
    {
        Sequence domain(a.seq());
        for (auto x : b.seq())
            if (std::find(domain.begin(), domain.end(), x) == domain.end())
                domain.push_back(x);
        budget.require_universe(domain.size());
        std::sort(domain.begin(), domain.end());
        do {
            if (lists_in_order(domain, a.seq()) && lists_in_order(domain, b.seq()))
                return domain;
        } while (std::next_permutation(domain.begin(), domain.end()));
        return std::nullopt;
    }

    auto merge_exists(const Condition & a, const Condition & b, const EnumerationBudget & budget) -> bool
    {
        return merge_witness(a, b, budget).has_value();
    }

    namespace
    {
        using Bits = std::vector<std::uint64_t>;

        auto any(const Bits & b) -> bool
        {
            return std::any_of(b.begin(), b.end(), [](auto w) { return w != 0; });
        }

        auto first(const Bits & b) -> std::size_t
        {
            for (std::size_t i = 0; i < b.size(); ++i)
                if (b[i])
                    return i * 64 + static_cast<std::size_t>(std::countr_zero(b[i]));
            return b.size() * 64;
        }

        void reset(Bits & b, std::size_t i) { b[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
        void set(Bits & b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

        struct CliqueSearch
        {
            std::vector<Bits> adjacent;
            NodeCounter & nodes;
            std::size_t best = 0;

            void expand(Bits candidates, std::size_t size)
            {
                nodes.tick();

                // greedy colouring: each class is a set of pairwise non-adjacent vertices
                std::vector<std::size_t> order, colour;
                Bits uncoloured = candidates;
                std::size_t c = 0;
                while (any(uncoloured)) {
                    ++c;
                    Bits q = uncoloured;
                    while (any(q)) {
                        auto v = first(q);
                        reset(q, v);
                        reset(uncoloured, v);
                        for (std::size_t w = 0; w < q.size(); ++w)
                            q[w] &= ~adjacent[v][w];
                        order.push_back(v);
                        colour.push_back(c);
                    }
                }

                for (auto i = order.size(); i-- > 0;) {
                    if (size + colour[i] <= best)
                        return;
                    auto v = order[i];
                    Bits next(candidates.size());
                    for (std::size_t w = 0; w < next.size(); ++w)
                        next[w] = candidates[w] & adjacent[v][w];
                    if (any(next))
                        expand(std::move(next), size + 1);
                    else
                        best = std::max(best, size + 1);
                    reset(candidates, v);
                }
            }
        };

        auto intersects(const Bits & a, const Bits & b) -> bool
        {
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] & b[i])
                    return true;
            return false;
        }

        /// Groups total objects by their restriction; each group is one candidate's block.
        template <class Key>
        auto blocks_from(const std::vector<Key> & restriction_of_total, std::size_t totals, std::map<Key, Bits> & into)
        {
            auto words = (totals + 63) / 64;
            for (std::size_t i = 0; i < restriction_of_total.size(); ++i) {
                auto [it, fresh] = into.try_emplace(restriction_of_total[i], Bits(words, 0));
                set(it->second, i % totals);
            }
        }

        template <class Key>
        auto solve(const std::map<Key, Bits> & grouped, std::size_t totals, const EnumerationBudget & budget) -> std::size_t
        {
            std::vector<Bits> blocks;
            for (const auto & [k, b] : grouped)
                blocks.push_back(b);
            NodeCounter nodes{budget.max_nodes};
            return max_disjoint_family(blocks, totals, nodes);
        }

        void for_each_subset(std::size_t m, std::size_t k, const std::vector<bool> & required,
            const std::function<void(const std::vector<Element> &)> & visit)
        {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
                if (static_cast<std::size_t>(std::popcount(mask)) != k)
                    continue;
                bool ok = true;
                std::vector<Element> subset;
                for (std::size_t i = 0; i < m; ++i) {
                    bool in = (mask >> i) & 1U;
                    if (required[i] && ! in)
                        ok = false;
                    if (in)
                        subset.push_back(static_cast<Element>(i));
                }
                if (ok)
                    visit(subset);
            }
        }
    }

    auto max_disjoint_family(const std::vector<std::vector<std::uint64_t>> & blocks, std::size_t ground, NodeCounter & nodes)
        -> std::size_t
    {
        if (blocks.empty())
            return 0;
        auto words = (ground + 63) / 64;
        for (const auto & b : blocks)
            if (b.size() != words)
                throw InvalidArgument("block bitsets must all span the ground set");

        auto count = blocks.size();
        auto vwords = (count + 63) / 64;

        // renumber vertices by decreasing degree; colouring then starts from the hubs
        std::vector<std::size_t> degree(count, 0);
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j)
                if (i != j && ! intersects(blocks[i], blocks[j]))
                    ++degree[i];
        std::vector<std::size_t> order(count);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return degree[a] > degree[b]; });

        CliqueSearch search{std::vector<Bits>(count, Bits(vwords, 0)), nodes};
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j)
                if (i != j && ! intersects(blocks[order[i]], blocks[order[j]]))
                    set(search.adjacent[i], j);

        Bits all(vwords, 0);
        for (std::size_t i = 0; i < count; ++i)
            set(all, i);
        search.expand(all, 0);
        return search.best;
    }

    auto max_antichain(const Condition & o, std::size_t d, std::size_t m, const EnumerationBudget & budget) -> std::size_t
    {
        budget.require_universe(m);
        auto k = o.size() + d;
        if (k > m)
            return 0;
        std::vector<bool> required(m, false);
        for (auto x : o.seq()) {
            if (x >= m)
                throw InvalidArgument("condition element outside the oracle universe");
            required[x] = true;
        }

        auto totals = all_total_orders(m, o, budget);
        std::map<Sequence, Bits> grouped;
        for_each_subset(m, k, required, [&](const std::vector<Element> & subset) {
            std::vector<Sequence> restricted;
            for (const auto & tau : totals) {
                Sequence r;
                for (auto x : tau)
                    if (std::binary_search(subset.begin(), subset.end(), x))
                        r.push_back(x);
                restricted.push_back(std::move(r));
            }
            blocks_from(restricted, totals.size(), grouped);
        });
        return solve(grouped, totals.size(), budget);
    }

    auto max_antichain(const TournamentCondition & t, std::size_t d, std::size_t m, const EnumerationBudget & budget) -> std::size_t
    {
        budget.require_universe(m);
        auto k = t.size() + d;
        if (k > m)
            return 0;
        std::vector<bool> required(m, false);
        for (auto v : t.vertices()) {
            if (v >= m)
                throw InvalidArgument("tournament vertex outside the oracle universe");
            required[v] = true;
        }

        // a total tournament on [0, m) is a bit per pair i<j, set when i -> j
        std::vector<std::pair<Element, Element>> pairs;
        for (Element i = 0; i < m; ++i)
            for (Element j = i + 1; j < m; ++j)
                pairs.emplace_back(i, j);
        if (pairs.size() > 20)
            throw BudgetExceeded("too many total tournaments to enumerate");

        std::vector<std::uint64_t> totals;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
            bool agrees = true;
            for (std::size_t p = 0; p < pairs.size() && agrees; ++p) {
                auto [i, j] = pairs[p];
                bool forward = (mask >> p) & 1U;
                if (t.has_vertex(i) && t.has_vertex(j))
                    agrees = forward ? ! t.beats(j, i) : ! t.beats(i, j);
            }
            if (agrees)
                totals.push_back(mask);
        }

        using Key = std::pair<std::vector<Element>, std::uint64_t>;
        std::map<Key, Bits> grouped;
        for_each_subset(m, k, required, [&](const std::vector<Element> & subset) {
            std::uint64_t within = 0;
            for (std::size_t p = 0; p < pairs.size(); ++p)
                if (std::binary_search(subset.begin(), subset.end(), pairs[p].first)
                    && std::binary_search(subset.begin(), subset.end(), pairs[p].second))
                    within |= std::uint64_t{1} << p;
            std::vector<Key> restricted;
            for (auto mask : totals)
                restricted.emplace_back(subset, mask & within);
            blocks_from(restricted, totals.size(), grouped);
        });
        return solve(grouped, totals.size(), budget);
    }

    auto max_antichain(const PartialFnCondition & f, std::size_t d, std::size_t n, const EnumerationBudget & budget) -> std::size_t
    {
        budget.require_universe(n);
        auto k = f.size() + d;
        if (k > n)
            return 0;
        std::vector<bool> required(n, false);
        for (auto [x, y] : f.pairs()) {
            if (x >= n || y >= 2 * n)
                throw InvalidArgument("partial function pair outside the oracle universe");
            required[x] = true;
        }

        // every total function [0, n) -> [0, 2n) agreeing with f, as a value vector
        std::vector<Sequence> totals;
        Sequence g(n, 0);
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < n; ++i)
            count *= 2 * n;
        if (count > budget.max_nodes)
            throw BudgetExceeded("too many total functions to enumerate");
        for (std::uint64_t code = 0; code < count; ++code) {
            auto c = code;
            for (std::size_t i = 0; i < n; ++i) {
                g[i] = static_cast<Element>(c % (2 * n));
                c /= 2 * n;
            }
            bool agrees = true;
            for (auto [x, y] : f.pairs())
                agrees = agrees && g[x] == y;
            if (agrees)
                totals.push_back(g);
        }

        using Key = std::vector<std::pair<Element, Element>>;
        std::map<Key, Bits> grouped;
        for_each_subset(n, k, required, [&](const std::vector<Element> & domain) {
            std::vector<Key> restricted;
            for (const auto & total : totals) {
                Key r;
                for (auto x : domain)
                    r.emplace_back(x, total[x]);
                restricted.push_back(std::move(r));
            }
            blocks_from(restricted, totals.size(), grouped);
        });
        return solve(grouped, totals.size(), budget);
    }
}
