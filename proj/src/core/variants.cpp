#include "forcing/variants.hpp"

#include <algorithm>
#include <string>

namespace forcing
{
    namespace
    {
        auto key(Element u, Element v) -> Edge { return u < v ? Edge{u, v} : Edge{v, u}; }

        /// Visits each size-k subset of `pool` in lexicographic order.
        void for_each_combination(const std::vector<Element> & pool, std::size_t k,
            const std::function<void(const std::vector<Element> &)> & visit)
        {
            if (k > pool.size())
                return;
            std::vector<std::size_t> idx(k);
            for (std::size_t i = 0; i < k; ++i)
                idx[i] = i;
            while (true) {
                std::vector<Element> pick;
                for (auto i : idx)
                    pick.push_back(pool[i]);
                visit(pick);
                std::size_t i = k;
                while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1))
                    --i;
                if (i == 0)
                    return;
                ++idx[i - 1];
                for (auto j = i; j < k; ++j)
                    idx[j] = idx[j - 1] + 1;
            }
        }
    }

    TournamentCondition::TournamentCondition(std::vector<Element> vertices, std::vector<Edge> edges) :
        _vertices(std::move(vertices)),
        _edges(std::move(edges))
    {
        std::sort(_vertices.begin(), _vertices.end());
        if (std::adjacent_find(_vertices.begin(), _vertices.end()) != _vertices.end())
            throw InvalidCondition("tournament repeats a vertex");
        std::sort(_edges.begin(), _edges.end());

        std::vector<Edge> pairs;
        for (auto [u, v] : _edges) {
            if (u == v)
                throw InvalidCondition("tournament has a loop at " + std::to_string(u));
            if (! has_vertex(u) || ! has_vertex(v))
                throw InvalidCondition("tournament edge " + std::to_string(u) + "->" + std::to_string(v) + " leaves the vertex set");
            pairs.push_back(key(u, v));
        }
        std::sort(pairs.begin(), pairs.end());
        if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
            throw InvalidCondition("tournament has two edges between the same pair");
        auto k = _vertices.size();
        if (pairs.size() != k * (k - (k ? 1 : 0)) / 2)
            throw InvalidCondition("tournament is missing an edge between some pair of vertices");
    }

    auto TournamentCondition::has_vertex(Element v) const noexcept -> bool
    {
        return std::binary_search(_vertices.begin(), _vertices.end(), v);
    }

    auto TournamentCondition::beats(Element u, Element v) const noexcept -> bool
    {
        return std::binary_search(_edges.begin(), _edges.end(), Edge{u, v});
    }

    auto TournamentCondition::with_vertex(Element v, std::uint64_t out_mask) const -> TournamentCondition
    {
        if (has_vertex(v))
            throw InvalidCondition("vertex " + std::to_string(v) + " already present");
        auto vertices = _vertices;
        auto edges = _edges;
        for (std::size_t i = 0; i < _vertices.size(); ++i) {
            if ((out_mask >> i) & 1U)
                edges.emplace_back(v, _vertices[i]);
            else
                edges.emplace_back(_vertices[i], v);
        }
        vertices.push_back(v);
        return TournamentCondition{std::move(vertices), std::move(edges)};
    }

    PartialFnCondition::PartialFnCondition(std::vector<std::pair<Element, Element>> pairs) :
        _pairs(std::move(pairs))
    {
        std::sort(_pairs.begin(), _pairs.end());
        for (std::size_t i = 1; i < _pairs.size(); ++i)
            if (_pairs[i].first == _pairs[i - 1].first)
                throw InvalidCondition("partial function maps pigeon " + std::to_string(_pairs[i].first) + " twice");
    }

    auto PartialFnCondition::image(Element pigeon) const noexcept -> std::optional<Element>
    {
        auto it = std::lower_bound(_pairs.begin(), _pairs.end(), std::pair<Element, Element>{pigeon, 0});
        if (it == _pairs.end() || it->first != pigeon)
            return std::nullopt;
        return it->second;
    }

    auto PartialFnCondition::range() const -> std::set<Element>
    {
        std::set<Element> out;
        for (const auto & [x, y] : _pairs)
            out.insert(y);
        return out;
    }

    auto PartialFnCondition::with_pair(Element pigeon, Element hole) const -> PartialFnCondition
    {
        auto pairs = _pairs;
        pairs.emplace_back(pigeon, hole);
        return PartialFnCondition{std::move(pairs)};
    }

    void check_tournament(const TournamentCondition & t, const Universe & u)
    {
        for (auto v : t.vertices())
            if (v >= u.n())
                throw InvalidCondition("vertex " + std::to_string(v) + " is outside [0," + std::to_string(u.n()) + ")");
        if (t.size() > u.length_cap())
            throw CapExceeded("tournament has " + std::to_string(t.size()) + " vertices, cap is " + std::to_string(u.length_cap()));
    }

    void check_partial_fn(const PartialFnCondition & f, const Universe & u)
    {
        for (auto [x, y] : f.pairs()) {
            if (x >= u.n())
                throw InvalidCondition("pigeon " + std::to_string(x) + " is outside [0," + std::to_string(u.n()) + ")");
            if (y >= 2 * u.n())
                throw InvalidCondition("hole " + std::to_string(y) + " is outside [0," + std::to_string(2 * u.n()) + ")");
        }
        if (f.size() > u.length_cap())
            throw CapExceeded("partial function has " + std::to_string(f.size()) + " pairs, cap is " + std::to_string(u.length_cap()));
    }

    auto tournament_extensions(const TournamentCondition & t, Element v, const Universe & u) -> std::vector<TournamentCondition>
    {
        check_tournament(t, u);
        if (v >= u.n())
            throw InvalidCondition("vertex " + std::to_string(v) + " is outside the universe");
        if (t.has_vertex(v))
            throw InvalidCondition("vertex " + std::to_string(v) + " already present");
        if (t.size() + 1 > u.length_cap())
            throw CapExceeded("adding vertex " + std::to_string(v) + " exceeds the cap " + std::to_string(u.length_cap()));
        if (t.size() >= 63)
            throw CapExceeded("too many orientation vectors to enumerate");

        std::vector<TournamentCondition> out;
        std::uint64_t count = std::uint64_t{1} << t.size();
        out.reserve(count);
        for (std::uint64_t mask = 0; mask < count; ++mask)
            out.push_back(t.with_vertex(v, mask));
        return out;
    }

    auto domination_player_move(const TournamentCondition & t, std::span<const Element> X, const Universe & u) -> TournamentCondition
    {
        check_tournament(t, u);
        std::optional<Element> fresh;
        for (Element x = 0; x < u.n(); ++x)
            if (! t.has_vertex(x) && std::find(X.begin(), X.end(), x) == X.end()) {
                fresh = x;
                break;
            }
        if (! fresh)
            throw QueueExhausted("no vertex outside X and outside the tournament is left");
        if (t.size() + 1 > u.length_cap())
            throw CapExceeded("domination move exceeds the vertex cap " + std::to_string(u.length_cap()));

        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < t.vertices().size(); ++i)
            if (std::find(X.begin(), X.end(), t.vertices()[i]) != X.end())
                mask |= std::uint64_t{1} << i;
        return t.with_vertex(*fresh, mask);
    }

    auto dominating_set_check(const TournamentCondition & t, std::span<const Element> X) -> bool
    {
        for (auto x : X)
            if (! t.has_vertex(x))
                throw InvalidArgument("dominating set member " + std::to_string(x) + " is not a vertex");
        for (auto w : t.vertices()) {
            if (std::find(X.begin(), X.end(), w) != X.end())
                continue;
            if (std::none_of(X.begin(), X.end(), [&](Element v) { return t.beats(v, w); }))
                return false;
        }
        return true;
    }

    auto HoleQueue::full(const Universe & u) -> HoleQueue
    {
        HoleQueue q;
        for (Element y = 0; y < 2 * u.n(); ++y)
            q.pending.push_back(y);
        return q;
    }

    auto surjection_player_move(const PartialFnCondition & f, HoleQueue queue, const Universe & u) -> SurjectionMove
    {
        check_partial_fn(f, u);
        auto covered = f.range();
        while (! queue.pending.empty() && covered.contains(queue.pending.front()))
            queue.pending.pop_front();

        std::optional<Element> pigeon;
        for (Element x = 0; x < u.n(); ++x)
            if (! f.image(x)) {
                pigeon = x;
                break;
            }
        if (! pigeon || queue.pending.empty())
            return SurjectionMove{f, std::move(queue), true};
        if (f.size() + 1 > u.length_cap())
            throw CapExceeded("surjection move exceeds the pair cap " + std::to_string(u.length_cap()));

        auto hole = queue.pending.front();
        queue.pending.pop_front();
        return SurjectionMove{f.with_pair(*pigeon, hole), std::move(queue), false};
    }

    auto TournamentFrame::extends(const TournamentCondition & strong, const TournamentCondition & weak) -> bool
    {
        return std::includes(strong.vertices().begin(), strong.vertices().end(), weak.vertices().begin(), weak.vertices().end())
            && std::includes(strong.edges().begin(), strong.edges().end(), weak.edges().begin(), weak.edges().end());
    }

    auto TournamentFrame::compatible(const TournamentCondition & a, const TournamentCondition & b) -> bool
    {
        for (auto [u, v] : a.edges())
            if (b.beats(v, u))
                return false;
        return true;
    }

    auto TournamentFrame::grow(const TournamentCondition & t, const Universe & u) -> std::vector<TournamentCondition>
    {
        for (Element v = 0; v < u.n(); ++v)
            if (! t.has_vertex(v))
                return tournament_extensions(t, v, u);
        throw CapExceeded("no unused vertex left to grow the tournament");
    }

    auto TournamentFrame::extensions_of_size(const TournamentCondition & base, std::size_t size, const Universe & u)
        -> std::vector<TournamentCondition>
    {
        std::vector<TournamentCondition> out;
        if (size < base.size() || size > u.length_cap())
            return out;
        std::vector<Element> pool;
        for (Element v = 0; v < u.n(); ++v)
            if (! base.has_vertex(v))
                pool.push_back(v);
        for_each_combination(pool, size - base.size(), [&](const std::vector<Element> & added) {
            std::vector<TournamentCondition> level{base};
            for (auto v : added) {
                std::vector<TournamentCondition> next;
                for (const auto & t : level)
                    for (auto & c : tournament_extensions(t, v, u))
                        next.push_back(std::move(c));
                level = std::move(next);
            }
            for (auto & t : level)
                out.push_back(std::move(t));
        });
        return out;
    }

    auto TournamentFrame::tree_size(std::size_t base_size, std::size_t d, const Universe &) -> BigInt
    {
        BigInt result = 1;
        for (std::size_t i = 0; i < d; ++i)
            result <<= (base_size + i);
        return result;
    }

    auto TournamentFrame::antichain_bound(std::size_t base_size, std::size_t d, const Universe & u) -> BigInt
    {
        return tree_size(base_size, d, u);
    }

    auto PartialFnFrame::extends(const PartialFnCondition & strong, const PartialFnCondition & weak) -> bool
    {
        return std::includes(strong.pairs().begin(), strong.pairs().end(), weak.pairs().begin(), weak.pairs().end());
    }

    auto PartialFnFrame::compatible(const PartialFnCondition & a, const PartialFnCondition & b) -> bool
    {
        for (auto [x, y] : a.pairs())
            if (auto other = b.image(x); other && *other != y)
                return false;
        return true;
    }

    auto PartialFnFrame::grow(const PartialFnCondition & f, const Universe & u) -> std::vector<PartialFnCondition>
    {
        check_partial_fn(f, u);
        if (f.size() + 1 > u.length_cap())
            throw CapExceeded("growing the partial function exceeds the pair cap " + std::to_string(u.length_cap()));
        for (Element x = 0; x < u.n(); ++x) {
            if (f.image(x))
                continue;
            std::vector<PartialFnCondition> out;
            for (Element y = 0; y < 2 * u.n(); ++y)
                out.push_back(f.with_pair(x, y));
            return out;
        }
        throw CapExceeded("every pigeon is already mapped");
    }

    auto PartialFnFrame::extensions_of_size(const PartialFnCondition & base, std::size_t size, const Universe & u)
        -> std::vector<PartialFnCondition>
    {
        std::vector<PartialFnCondition> out;
        if (size < base.size() || size > u.length_cap())
            return out;
        std::vector<Element> pool;
        for (Element x = 0; x < u.n(); ++x)
            if (! base.image(x))
                pool.push_back(x);
        for_each_combination(pool, size - base.size(), [&](const std::vector<Element> & added) {
            std::vector<PartialFnCondition> level{base};
            for (auto x : added) {
                std::vector<PartialFnCondition> next;
                for (const auto & f : level)
                    for (Element y = 0; y < 2 * u.n(); ++y)
                        next.push_back(f.with_pair(x, y));
                level = std::move(next);
            }
            for (auto & f : level)
                out.push_back(std::move(f));
        });
        return out;
    }

    auto PartialFnFrame::tree_size(std::size_t, std::size_t d, const Universe & u) -> BigInt
    {
        return boost::multiprecision::pow(BigInt(2 * u.n()), static_cast<unsigned>(d));
    }

    auto PartialFnFrame::antichain_bound(std::size_t base_size, std::size_t d, const Universe & u) -> BigInt
    {
        return tree_size(base_size, d, u);
    }
}
