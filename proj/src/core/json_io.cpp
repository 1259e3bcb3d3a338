#include "forcing/json_io.hpp"

#include "forcing/error.hpp"

namespace forcing
{
    namespace
    {
        auto element_of(const Json & v) -> Element
        {
            if (! v.is_number_integer() || v.get<long long>() < 0)
                throw ParseError("expected a non-negative integer element, got " + v.dump());
            return v.get<Element>();
        }
    }

    void to_json(Json & j, const Condition & c)
    {
        j = c.seq();
    }

    void from_json(const Json & j, Condition & c)
    {
        if (! j.is_array())
            throw ParseError("a condition must be a JSON array of integers, got " + j.dump());
        std::vector<Element> seq;
        for (const auto & v : j)
            seq.push_back(element_of(v));
        c = Condition{std::move(seq)};
    }

    void to_json(Json & j, const Universe & u)
    {
        j = Json{{"n", u.n()}, {"length_cap", u.length_cap()}};
    }

    auto universe_from_json(const Json & j) -> Universe
    {
        auto n = field<std::size_t>(j, "n");
        return Universe{n, field_or<std::size_t>(j, "length_cap", n)};
    }

    void to_json(Json & j, const TournamentCondition & t)
    {
        Json edges = Json::array();
        for (auto [u, v] : t.edges())
            edges.push_back(Json::array({u, v}));
        j = Json{{"vertices", t.vertices()}, {"edges", edges}};
    }

    void from_json(const Json & j, TournamentCondition & t)
    {
        std::vector<Element> vertices;
        for (const auto & v : field<Json>(j, "vertices"))
            vertices.push_back(element_of(v));
        std::vector<Edge> edges;
        for (const auto & e : field<Json>(j, "edges")) {
            if (! e.is_array() || e.size() != 2)
                throw ParseError("a tournament edge must be a pair [u, v]");
            edges.emplace_back(element_of(e[0]), element_of(e[1]));
        }
        t = TournamentCondition{std::move(vertices), std::move(edges)};
    }

    void to_json(Json & j, const PartialFnCondition & f)
    {
        Json pairs = Json::array();
        for (auto [x, y] : f.pairs())
            pairs.push_back(Json::array({x, y}));
        j = Json{{"pairs", pairs}};
    }

    void from_json(const Json & j, PartialFnCondition & f)
    {
        std::vector<std::pair<Element, Element>> pairs;
        for (const auto & p : field<Json>(j, "pairs")) {
            if (! p.is_array() || p.size() != 2)
                throw ParseError("a partial function pair must be [pigeon, hole]");
            pairs.emplace_back(element_of(p[0]), element_of(p[1]));
        }
        f = PartialFnCondition{std::move(pairs)};
    }
}
