#pragma once

#include "forcing/bruteforce.hpp"
#include "forcing/frames.hpp"
#include "forcing/json_io.hpp"
#include "forcing/machines.hpp"
#include "forcing/variants.hpp"

#include <deque>
#include <memory>
#include <string>
#include <vector>

namespace forcing
{
    enum class AlternativeKind
    {
        row_collision,      ///< two pigeons, one hole: compatible T⁺ members merged
        column_collision,   ///< one pigeon, two holes
        starving_extension, ///< an extension incompatible with all of some pigeon's T⁺
    };

    [[nodiscard]] auto to_string(AlternativeKind kind) -> std::string;

    struct Alternative
    {
        AlternativeKind kind = AlternativeKind::starving_extension;
        std::vector<std::size_t> pigeons;
        std::vector<std::size_t> holes;
        std::vector<Condition> members; ///< the merged T⁺ members, empty for a starving extension
        Condition extension;
        std::size_t search_length = 0; ///< length bound used when looking for a starving extension
    };

    void to_json(Json & j, const Alternative & alt);

    /// Tries row collisions, then column collisions, then starving extensions of the base
    /// of length <= search_length, each in index/lexicographic order. Merges beyond the
    /// length cap are skipped. Throws SearchExhausted if nothing is found.
    [[nodiscard]] auto single_step_search(const CompiledFamily & family, const Universe & u, std::size_t search_length)
        -> Alternative;

    template <class C>
    struct Move
    {
        C next;
        std::string tag;
        Json detail;
    };

    template <class C>
    class Strategy
    {
    public:
        virtual ~Strategy() = default;

        [[nodiscard]] virtual auto id() const -> std::string = 0;
        virtual auto move(const C & current, const Universe & u) -> Move<C> = 0;
        [[nodiscard]] virtual auto state() const -> Json { return nullptr; }
    };

    template <class C>
    class PassPlayer : public Strategy<C>
    {
    public:
        [[nodiscard]] auto id() const -> std::string override { return "PASS"; }
        auto move(const C & current, const Universe &) -> Move<C> override { return {current, "pass", nullptr}; }
    };

    /// Takes the first branch of the frame's one-step growth rule.
    template <Frame F>
    class GrowPlayer : public Strategy<typename F::condition_type>
    {
    public:
        using C = typename F::condition_type;

        [[nodiscard]] auto id() const -> std::string override { return "GROW"; }
        auto move(const C & current, const Universe & u) -> Move<C> override
        {
            auto next = F::grow(current, u);
            if (next.empty())
                throw QueueExhausted("nothing left to grow");
            return {next.front(), "grow", nullptr};
        }
    };

    /// Prepends the first queued element not yet used.
    class MinPlayer : public Strategy<Condition>
    {
    public:
        explicit MinPlayer(const Universe & u);

        [[nodiscard]] auto id() const -> std::string override { return "MIN"; }
        auto move(const Condition & current, const Universe & u) -> Move<Condition> override;
        [[nodiscard]] auto state() const -> Json override;

    private:
        std::deque<Element> _queue;
    };

    /// One move of the MIN player; the queue loses el(output).
    [[nodiscard]] auto min_player_move(const Condition & o, std::deque<Element> & queue, const Universe & u) -> Condition;

    /// Interleaves fresh X-elements around the X-elements of o: b0 < x1 < b1 < ... < xm < bm.
    [[nodiscard]] auto dlo_player_move(const Condition & o, std::span<const Element> X, const Universe & u) -> Condition;

    class DloPlayer : public Strategy<Condition>
    {
    public:
        explicit DloPlayer(std::vector<Element> X);

        [[nodiscard]] auto id() const -> std::string override { return "DLO"; }
        auto move(const Condition & current, const Universe & u) -> Move<Condition> override;
        [[nodiscard]] auto state() const -> Json override { return Json{{"X", _X}}; }

    private:
        std::vector<Element> _X;
    };

    struct Requirement
    {
        OracleProgram program;
        std::size_t p = 0;
        std::size_t h = 0;
    };

    /// Discharges queued requirements one per turn via single_step_search; idles when the queue is empty.
    class PhpPlayer : public Strategy<Condition>
    {
    public:
        PhpPlayer(std::vector<Requirement> requirements, std::size_t search_length);

        [[nodiscard]] auto id() const -> std::string override { return "PHP"; }
        auto move(const Condition & current, const Universe & u) -> Move<Condition> override;
        [[nodiscard]] auto state() const -> Json override { return Json{{"next_requirement", _next}, {"pending", _requirements.size() - _next}}; }

    private:
        std::vector<Requirement> _requirements;
        std::size_t _next = 0;
        std::size_t _search_length;
    };

    class DominationPlayer : public Strategy<TournamentCondition>
    {
    public:
        explicit DominationPlayer(std::vector<Element> X) : _X(std::move(X)) {}

        [[nodiscard]] auto id() const -> std::string override { return "DOM"; }
        auto move(const TournamentCondition & current, const Universe & u) -> Move<TournamentCondition> override;

    private:
        std::vector<Element> _X;
    };

    class SurjectionPlayer : public Strategy<PartialFnCondition>
    {
    public:
        explicit SurjectionPlayer(const Universe & u) : _queue(HoleQueue::full(u)) {}

        [[nodiscard]] auto id() const -> std::string override { return "SURJ"; }
        auto move(const PartialFnCondition & current, const Universe & u) -> Move<PartialFnCondition> override;
        [[nodiscard]] auto state() const -> Json override;

    private:
        HoleQueue _queue;
    };

    template <class C>
    struct Round
    {
        std::size_t index = 0;
        std::string player;
        C input;
        C output;
        std::string tag;
        Json detail;
        Json state;
    };

    template <class C>
    struct GameTranscript
    {
        std::vector<Round<C>> rounds;
        C final;
        bool halted = false;
        std::string halt_reason;
    };

    template <class C>
    auto transcript_to_json(const GameTranscript<C> & t) -> Json
    {
        Json rounds = Json::array();
        for (const auto & r : t.rounds)
            rounds.push_back(Json{{"index", r.index}, {"player", r.player}, {"input", r.input}, {"output", r.output},
                {"tag", r.tag}, {"detail", r.detail}, {"state", r.state}});
        return Json{{"rounds", rounds}, {"final", t.final}, {"halted", t.halted}, {"halt_reason", t.halt_reason}};
    }

    /// A game stopped on a strategy error; carries the transcript up to the failing round.
    class GameAborted : public Error
    {
    public:
        enum class Cause
        {
            contract_breach,
            cap_exceeded,
        };

        GameAborted(Cause cause, const std::string & what, Json transcript)
            : Error(what), _cause(cause), _transcript(std::move(transcript))
        {
        }

        [[nodiscard]] auto cause() const noexcept -> Cause { return _cause; }
        [[nodiscard]] auto transcript() const noexcept -> const Json & { return _transcript; }

    private:
        Cause _cause;
        Json _transcript;
    };

    inline void check_condition(const Condition & c, const Universe & u) { u.check(c); }
    inline void check_condition(const TournamentCondition & t, const Universe & u) { check_tournament(t, u); }
    inline void check_condition(const PartialFnCondition & f, const Universe & u) { check_partial_fn(f, u); }

    /// Plays `rounds` rounds from the empty condition, cycling through `schedule`.
    /// QueueExhausted halts the game; non-extensions and cap errors abort it.
    template <Frame F>
    auto run_game(const Universe & u, const std::vector<std::shared_ptr<Strategy<typename F::condition_type>>> & schedule,
        std::size_t rounds) -> GameTranscript<typename F::condition_type>
    {
        using C = typename F::condition_type;
        if (rounds > 0 && schedule.empty())
            throw InvalidArgument("a game with rounds needs a non-empty schedule");

        GameTranscript<C> transcript;
        for (std::size_t k = 0; k < rounds; ++k) {
            auto & player = *schedule[k % schedule.size()];
            Move<C> move;
            try {
                move = player.move(transcript.final, u);
            }
            catch (const QueueExhausted & e) {
                transcript.halted = true;
                transcript.halt_reason = player.id() + ": " + e.what();
                break;
            }
            catch (const CapExceeded & e) {
                throw GameAborted(GameAborted::Cause::cap_exceeded, player.id() + ": " + e.what(), transcript_to_json(transcript));
            }
            auto breach = [&](const std::string & why) {
                transcript.rounds.push_back({k, player.id(), transcript.final, move.next, move.tag, move.detail, player.state()});
                throw GameAborted(GameAborted::Cause::contract_breach, player.id() + " round " + std::to_string(k) + ": " + why,
                    transcript_to_json(transcript));
            };
            try {
                check_condition(move.next, u);
            }
            catch (const Error & e) {
                breach(std::string("invalid output: ") + e.what());
            }
            if (! F::extends(move.next, transcript.final))
                breach("output does not extend the input");
            transcript.rounds.push_back({k, player.id(), transcript.final, move.next, move.tag, move.detail, player.state()});
            transcript.final = move.next;
        }
        return transcript;
    }

    /// Every round's output extends its input and the last output is the final condition.
    template <Frame F>
    auto check_chain(const GameTranscript<typename F::condition_type> & t) -> CheckResult
    {
        CheckResult result{"chain"};
        typename F::condition_type previous{};
        for (const auto & r : t.rounds) {
            if (r.input != previous || ! F::extends(r.output, r.input)) {
                result.passed = false;
                result.counterexample = Json{{"round", r.index}};
                return result;
            }
            previous = r.output;
        }
        result.passed = previous == t.final;
        return result;
    }

    /// After every MIN round the first element of the condition is one not present before.
    [[nodiscard]] auto check_min_effectiveness(const GameTranscript<Condition> & t) -> CheckResult;

    /// For every DLO round, the final condition has an X-element before the first, after the
    /// last and strictly between each adjacent pair of the round's input X-elements.
    [[nodiscard]] auto check_dlo_effectiveness(const GameTranscript<Condition> & t, std::span<const Element> X) -> CheckResult;

    /// For every discharged requirement, every total order of [0, n) extending the final
    /// condition makes the program violate the pigeonhole principle.
    [[nodiscard]] auto check_php_effectiveness(const GameTranscript<Condition> & t, const std::vector<Requirement> & requirements,
        const Universe & u, const bruteforce::EnumerationBudget & budget) -> CheckResult;

    /// No X-vertex beats a vertex added by the domination player.
    [[nodiscard]] auto check_domination_effectiveness(const GameTranscript<TournamentCondition> & t, std::span<const Element> X)
        -> CheckResult;

    /// After k effective SURJ rounds the range has k distinct holes.
    [[nodiscard]] auto check_surjection_progress(const GameTranscript<PartialFnCondition> & t) -> CheckResult;

    /// Requirement from {"p", "h", "program": {...}} or {"p", "h", "generator": name}.
    [[nodiscard]] auto requirement_from_json(const Json & j) -> Requirement;

    /// Runs a game described by a config object and returns the transcript with the
    /// config and the effectiveness checks attached under "checks".
    [[nodiscard]] auto run_game_from_config(const Json & config, const bruteforce::EnumerationBudget & budget) -> Json;
}
