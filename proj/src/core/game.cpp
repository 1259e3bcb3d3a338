#include "forcing/game.hpp"

#include "forcing/error.hpp"

#include <algorithm>
#include <map>

namespace forcing
{
    auto to_string(AlternativeKind kind) -> std::string
    {
        switch (kind) {
        case AlternativeKind::row_collision: return "row-collision";
        case AlternativeKind::column_collision: return "column-collision";
        case AlternativeKind::starving_extension: return "starving-extension";
        }
        return "unknown";
    }

    void to_json(Json & j, const Alternative & alt)
    {
        j = Json{{"kind", to_string(alt.kind)}, {"pigeons", alt.pigeons}, {"holes", alt.holes}, {"members", alt.members},
            {"extension", alt.extension}, {"search_length", alt.search_length}};
    }

    auto single_step_search(const CompiledFamily & family, const Universe & u, std::size_t search_length) -> Alternative
    {
        const auto & T = family.plus;
        auto merged = [&](const Condition & r, const Condition & s) -> std::optional<Condition> {
            auto m = merge_compatible(r, s);
            if (m && u.admits(*m))
                return m;
            return std::nullopt;
        };

        for (std::size_t c = 0; c < T.holes; ++c)
            for (std::size_t a = 0; a < T.pigeons; ++a)
                for (std::size_t a2 = a + 1; a2 < T.pigeons; ++a2)
                    for (const auto & r : T.cell(a, c))
                        for (const auto & s : T.cell(a2, c))
                            if (auto m = merged(r, s))
                                return {AlternativeKind::row_collision, {a, a2}, {c}, {r, s}, *m, 0};

        for (std::size_t a = 0; a < T.pigeons; ++a)
            for (std::size_t b = 0; b < T.holes; ++b)
                for (std::size_t c = b + 1; c < T.holes; ++c)
                    for (const auto & r : T.cell(a, b))
                        for (const auto & s : T.cell(a, c))
                            if (auto m = merged(r, s))
                                return {AlternativeKind::column_collision, {a}, {b, c}, {r, s}, *m, 0};

        for (const auto & candidate : extensions_up_to(family.base(), search_length, u))
            for (std::size_t a = 0; a < T.pigeons; ++a) {
                bool starved = true;
                for (std::size_t b = 0; b < T.holes && starved; ++b)
                    starved = std::none_of(T.cell(a, b).begin(), T.cell(a, b).end(),
                        [&](const Condition & r) { return is_compatible(candidate, r); });
                if (starved)
                    return {AlternativeKind::starving_extension, {a}, {}, {}, candidate, search_length};
            }

        throw SearchExhausted("no alternative found for p=" + std::to_string(T.pigeons) + ", h=" + std::to_string(T.holes)
            + " with starving extensions up to length " + std::to_string(search_length));
    }

    auto min_player_move(const Condition & o, std::deque<Element> & queue, const Universe & u) -> Condition
    {
        u.check(o);
        std::erase_if(queue, [&](Element x) { return o.contains(x); });
        if (queue.empty())
            throw QueueExhausted("MIN queue is empty");
        if (o.size() + 1 > u.length_cap())
            throw CapExceeded("MIN move exceeds the length cap " + std::to_string(u.length_cap()));
        auto a = queue.front();
        queue.pop_front();
        return o.inserted(0, a);
    }

    MinPlayer::MinPlayer(const Universe & u)
    {
        for (Element x = 0; x < u.n(); ++x)
            _queue.push_back(x);
    }

    auto MinPlayer::move(const Condition & current, const Universe & u) -> Move<Condition>
    {
        auto next = min_player_move(current, _queue, u);
        return {next, "min", Json{{"inserted", next[0]}}};
    }

    auto MinPlayer::state() const -> Json
    {
        return Json{{"queue", std::vector<Element>(_queue.begin(), _queue.end())}};
    }

    auto dlo_player_move(const Condition & o, std::span<const Element> X, const Universe & u) -> Condition
    {
        u.check(o);
        auto ox = restrict(o, X);
        std::vector<Element> fresh;
        for (auto x : X)
            if (! o.contains(x))
                fresh.push_back(x);
        std::sort(fresh.begin(), fresh.end());
        fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
        if (fresh.size() < ox.size() + 1)
            throw QueueExhausted("DLO needs " + std::to_string(ox.size() + 1) + " fresh elements of X, " + std::to_string(fresh.size())
                + " left");
        if (o.size() + ox.size() + 1 > u.length_cap())
            throw CapExceeded("DLO move exceeds the length cap " + std::to_string(u.length_cap()));

        std::vector<Element> seq;
        std::size_t j = 0;
        for (auto e : o) {
            if (ox.contains(e)) {
                if (j == 0)
                    seq.push_back(fresh[0]);
                seq.push_back(e);
                seq.push_back(fresh[++j]);
            }
            else
                seq.push_back(e);
        }
        if (ox.empty())
            seq.push_back(fresh[0]);
        return Condition{std::move(seq)};
    }

    DloPlayer::DloPlayer(std::vector<Element> X) : _X(std::move(X))
    {
        std::sort(_X.begin(), _X.end());
        _X.erase(std::unique(_X.begin(), _X.end()), _X.end());
    }

    auto DloPlayer::move(const Condition & current, const Universe & u) -> Move<Condition>
    {
        return {dlo_player_move(current, _X, u), "dlo", nullptr};
    }

    PhpPlayer::PhpPlayer(std::vector<Requirement> requirements, std::size_t search_length)
        : _requirements(std::move(requirements)), _search_length(search_length)
    {
        for (const auto & r : _requirements)
            if (r.p <= r.h)
                throw InvalidArgument("a PHP requirement needs p > h, got p=" + std::to_string(r.p) + ", h=" + std::to_string(r.h));
    }

    auto PhpPlayer::move(const Condition & current, const Universe & u) -> Move<Condition>
    {
        if (_next == _requirements.size())
            return {current, "idle", nullptr};
        const auto & req = _requirements[_next];
        auto family = compile(req.program, current, req.p, req.h, u);
        auto alt = single_step_search(family, u, _search_length);
        auto index = _next++;
        return {alt.extension, "requirement " + std::to_string(index), Json{{"requirement", index}, {"alternative", alt}}};
    }

    auto DominationPlayer::move(const TournamentCondition & current, const Universe & u) -> Move<TournamentCondition>
    {
        auto next = domination_player_move(current, _X, u);
        Element added = 0;
        for (auto v : next.vertices())
            if (! current.has_vertex(v))
                added = v;
        return {next, "dominate", Json{{"added", added}}};
    }

    auto SurjectionPlayer::move(const PartialFnCondition & current, const Universe & u) -> Move<PartialFnCondition>
    {
        auto m = surjection_player_move(current, _queue, u);
        _queue = std::move(m.queue);
        if (m.exhausted)
            return {current, "exhausted", nullptr};
        Json detail;
        for (auto [x, y] : m.next.pairs())
            if (! current.image(x))
                detail = Json{{"pigeon", x}, {"hole", y}};
        return {m.next, "map", detail};
    }

    auto SurjectionPlayer::state() const -> Json
    {
        return Json{{"queue", std::vector<Element>(_queue.pending.begin(), _queue.pending.end())}};
    }

    auto check_min_effectiveness(const GameTranscript<Condition> & t) -> CheckResult
    {
        CheckResult result{"min_effective"};
        std::size_t moves = 0;
        for (const auto & r : t.rounds) {
            if (r.player != "MIN")
                continue;
            ++moves;
            if (r.output.empty() || r.input.contains(r.output[0])) {
                result.passed = false;
                result.counterexample = Json{{"round", r.index}, {"input", r.input}, {"output", r.output}};
                break;
            }
        }
        result.detail = std::to_string(moves) + " MIN rounds";
        return result;
    }

    auto check_dlo_effectiveness(const GameTranscript<Condition> & t, std::span<const Element> X) -> CheckResult
    {
        CheckResult result{"dlo_dense"};
        auto fx = restrict(t.final, X);
        std::size_t gaps = 0;
        for (const auto & r : t.rounds) {
            if (r.player != "DLO")
                continue;
            auto ox = restrict(r.input, X);
            auto fail = [&](const Json & where) {
                result.passed = false;
                result.counterexample = Json{{"round", r.index}, {"gap", where}, {"final_x", fx}};
            };
            if (ox.empty()) {
                ++gaps;
                if (fx.empty())
                    fail("empty");
            }
            else {
                gaps += ox.size() + 1;
                if (*fx.position(ox[0]) == 0)
                    fail(Json{"before", ox[0]});
                if (*fx.position(ox[ox.size() - 1]) + 1 == fx.size())
                    fail(Json{"after", ox[ox.size() - 1]});
                for (std::size_t i = 0; i + 1 < ox.size(); ++i)
                    if (*fx.position(ox[i + 1]) - *fx.position(ox[i]) < 2)
                        fail(Json{ox[i], ox[i + 1]});
            }
            if (! result.passed)
                break;
        }
        result.detail = std::to_string(gaps) + " gaps checked";
        return result;
    }

    auto check_php_effectiveness(const GameTranscript<Condition> & t, const std::vector<Requirement> & requirements,
        const Universe & u, const bruteforce::EnumerationBudget & budget) -> CheckResult
    {
        CheckResult result{"php_effective"};
        std::size_t orders = 0, discharged = 0;
        for (const auto & r : t.rounds) {
            if (r.player != "PHP" || ! r.detail.is_object() || ! r.detail.contains("requirement"))
                continue;
            ++discharged;
            const auto & req = requirements.at(r.detail["requirement"].get<std::size_t>());
            bruteforce::for_each_total_order(u.n(), t.final, budget, [&](const bruteforce::Sequence & total) {
                ++orders;
                if (! result.passed)
                    return;
                auto verdict = php_instance_check(req.program, req.p, req.h, Condition{total});
                if (! verdict.violation()) {
                    result.passed = false;
                    result.counterexample = Json{{"round", r.index}, {"total_order", total}};
                }
            });
        }
        result.detail = std::to_string(discharged) + " requirements, " + std::to_string(orders) + " total orders";
        return result;
    }

    auto check_domination_effectiveness(const GameTranscript<TournamentCondition> & t, std::span<const Element> X) -> CheckResult
    {
        CheckResult result{"dom_escapes"};
        for (const auto & r : t.rounds) {
            if (r.player != "DOM")
                continue;
            auto added = r.detail["added"].get<Element>();
            for (auto v : X)
                if (t.final.has_vertex(v) && t.final.beats(v, added)) {
                    result.passed = false;
                    result.counterexample = Json{{"round", r.index}, {"added", added}, {"dominator", v}};
                    return result;
                }
        }
        return result;
    }

    auto check_surjection_progress(const GameTranscript<PartialFnCondition> & t) -> CheckResult
    {
        CheckResult result{"surj_progress"};
        for (const auto & r : t.rounds) {
            if (r.player != "SURJ")
                continue;
            auto expected = r.input.range().size() + (r.tag == "map" ? 1 : 0);
            if (r.output.range().size() != expected) {
                result.passed = false;
                result.counterexample = Json{{"round", r.index}};
                break;
            }
        }
        result.detail = std::to_string(t.final.range().size()) + " holes covered";
        return result;
    }

    auto requirement_from_json(const Json & j) -> Requirement
    {
        Requirement req;
        req.p = field<std::size_t>(j, "p");
        req.h = field<std::size_t>(j, "h");
        if (j.contains("program")) {
            req.program = field<OracleProgram>(j, "program");
            return req;
        }
        auto name = field<std::string>(j, "generator");
        if (name == "modular")
            req.program = programs::modular(req.p, req.h);
        else if (name == "identity")
            req.program = programs::identity(req.p, req.h);
        else if (name == "comparator")
            req.program = programs::comparator(req.p, req.h);
        else if (name == "constant-accept")
            req.program = programs::constant(true, req.p, req.h);
        else if (name == "constant-reject")
            req.program = programs::constant(false, req.p, req.h);
        else
            throw ParseError("unknown program generator \"" + name + "\"");
        return req;
    }

    namespace
    {
        auto elements_of(const Json & players, const char * id) -> std::vector<Element>
        {
            return field<std::vector<Element>>(field<Json>(players, id), "X");
        }

        template <Frame F, class Make>
        auto play(const Json & config, const Universe & u, Make make) -> std::pair<GameTranscript<typename F::condition_type>, Json>
        {
            using C = typename F::condition_type;
            std::map<std::string, std::shared_ptr<Strategy<C>>> made;
            std::vector<std::shared_ptr<Strategy<C>>> schedule;
            for (const auto & id : field<std::vector<std::string>>(config, "schedule")) {
                if (! made.contains(id))
                    made[id] = make(id);
                schedule.push_back(made[id]);
            }
            auto transcript = run_game<F>(u, schedule, field<std::size_t>(config, "rounds"));
            return {std::move(transcript), Json::array({check_chain<F>(transcript)})};
        }

        auto finish(Json transcript, Json checks, const Json & config) -> Json
        {
            bool passed = std::all_of(checks.begin(), checks.end(), [](const Json & c) { return c["passed"].get<bool>(); });
            transcript["config"] = config;
            transcript["checks"] = std::move(checks);
            transcript["passed"] = passed;
            return transcript;
        }
    }

    auto run_game_from_config(const Json & config, const bruteforce::EnumerationBudget & budget) -> Json
    {
        auto frame = field_or<std::string>(config, "frame", "order");
        auto u = universe_from_json(field<Json>(config, "universe"));
        auto players = field_or<Json>(config, "players", Json::object());
        auto scheduled = [&](const std::string & id) {
            auto s = field<std::vector<std::string>>(config, "schedule");
            return std::find(s.begin(), s.end(), id) != s.end();
        };
        auto unknown = [&](const std::string & id) {
            return InvalidArgument("player \"" + id + "\" is not available in the " + frame + " frame");
        };

        if (frame == "order") {
            std::vector<Requirement> requirements;
            std::size_t search_length = u.length_cap();
            if (players.contains("PHP")) {
                for (const auto & r : field_or<Json>(players["PHP"], "requirements", Json::array()))
                    requirements.push_back(requirement_from_json(r));
                search_length = field_or<std::size_t>(players["PHP"], "search_length", search_length);
            }
            auto [t, checks] = play<OrderFrame>(config, u, [&](const std::string & id) -> std::shared_ptr<Strategy<Condition>> {
                if (id == "MIN")
                    return std::make_shared<MinPlayer>(u);
                if (id == "DLO")
                    return std::make_shared<DloPlayer>(elements_of(players, "DLO"));
                if (id == "PHP")
                    return std::make_shared<PhpPlayer>(requirements, search_length);
                if (id == "PASS")
                    return std::make_shared<PassPlayer<Condition>>();
                if (id == "GROW")
                    return std::make_shared<GrowPlayer<OrderFrame>>();
                throw unknown(id);
            });
            if (scheduled("MIN"))
                checks.push_back(check_min_effectiveness(t));
            if (scheduled("DLO"))
                checks.push_back(check_dlo_effectiveness(t, elements_of(players, "DLO")));
            if (scheduled("PHP"))
                checks.push_back(check_php_effectiveness(t, requirements, u, budget));
            return finish(transcript_to_json(t), std::move(checks), config);
        }
        if (frame == "tournament") {
            auto [t, checks] = play<TournamentFrame>(config, u, [&](const std::string & id) -> std::shared_ptr<Strategy<TournamentCondition>> {
                if (id == "DOM")
                    return std::make_shared<DominationPlayer>(elements_of(players, "DOM"));
                if (id == "PASS")
                    return std::make_shared<PassPlayer<TournamentCondition>>();
                if (id == "GROW")
                    return std::make_shared<GrowPlayer<TournamentFrame>>();
                throw unknown(id);
            });
            if (scheduled("DOM")) {
                auto X = elements_of(players, "DOM");
                checks.push_back(check_domination_effectiveness(t, X));
                std::vector<Element> present;
                for (auto x : X)
                    if (t.final.has_vertex(x))
                        present.push_back(x);
                CheckResult escapes{"x_not_dominating"};
                bool added = std::any_of(t.rounds.begin(), t.rounds.end(), [](const auto & r) { return r.player == "DOM"; });
                escapes.passed = ! added || ! dominating_set_check(t.final, present);
                checks.push_back(escapes);
            }
            return finish(transcript_to_json(t), std::move(checks), config);
        }
        if (frame == "partialfn") {
            auto [t, checks] = play<PartialFnFrame>(config, u, [&](const std::string & id) -> std::shared_ptr<Strategy<PartialFnCondition>> {
                if (id == "SURJ")
                    return std::make_shared<SurjectionPlayer>(u);
                if (id == "PASS")
                    return std::make_shared<PassPlayer<PartialFnCondition>>();
                if (id == "GROW")
                    return std::make_shared<GrowPlayer<PartialFnFrame>>();
                throw unknown(id);
            });
            if (scheduled("SURJ"))
                checks.push_back(check_surjection_progress(t));
            return finish(transcript_to_json(t), std::move(checks), config);
        }
        throw InvalidArgument("unknown frame \"" + frame + "\"");
    }
}
