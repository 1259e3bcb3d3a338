#pragma once

#include "forcing/frames.hpp"

#include <compare>
#include <deque>
#include <set>
#include <utility>
#include <vector>

namespace forcing
{
    using Edge = std::pair<Element, Element>; ///< u -> v

    /// A tournament on a finite vertex set: one directed edge per unordered pair.
    class TournamentCondition
    {
    public:
        TournamentCondition() = default;
        TournamentCondition(std::vector<Element> vertices, std::vector<Edge> edges);

        [[nodiscard]] auto vertices() const noexcept -> const std::vector<Element> & { return _vertices; }
        [[nodiscard]] auto edges() const noexcept -> const std::vector<Edge> & { return _edges; }
        [[nodiscard]] auto size() const noexcept -> std::size_t { return _vertices.size(); }
        [[nodiscard]] auto has_vertex(Element v) const noexcept -> bool;

        /// True iff the edge u -> v is present.
        [[nodiscard]] auto beats(Element u, Element v) const noexcept -> bool;

        /// Adds v; bit i of `out_mask` set means v -> vertices()[i], otherwise vertices()[i] -> v.
        [[nodiscard]] auto with_vertex(Element v, std::uint64_t out_mask) const -> TournamentCondition;

        auto operator<=>(const TournamentCondition &) const = default;
        auto operator==(const TournamentCondition &) const -> bool = default;

    private:
        std::vector<Element> _vertices; // sorted
        std::vector<Edge> _edges;       // sorted
    };

    /// Graph of a partial function from pigeons [0, n) to holes [0, 2n).
    class PartialFnCondition
    {
    public:
        PartialFnCondition() = default;
        explicit PartialFnCondition(std::vector<std::pair<Element, Element>> pairs);

        [[nodiscard]] auto pairs() const noexcept -> const std::vector<std::pair<Element, Element>> & { return _pairs; }
        [[nodiscard]] auto size() const noexcept -> std::size_t { return _pairs.size(); }
        [[nodiscard]] auto image(Element pigeon) const noexcept -> std::optional<Element>;
        [[nodiscard]] auto range() const -> std::set<Element>;
        [[nodiscard]] auto with_pair(Element pigeon, Element hole) const -> PartialFnCondition;

        auto operator<=>(const PartialFnCondition &) const = default;
        auto operator==(const PartialFnCondition &) const -> bool = default;

    private:
        std::vector<std::pair<Element, Element>> _pairs; // sorted by pigeon
    };

    /// Checks vertex bounds (< n) and the cap on vertex count.
    void check_tournament(const TournamentCondition & t, const Universe & u);

    /// Checks pigeons < n, holes < 2n and the cap on pair count.
    void check_partial_fn(const PartialFnCondition & f, const Universe & u);

    /// 2^|t| tournaments, one per orientation vector of v's edges, ordered by mask.
    [[nodiscard]] auto tournament_extensions(const TournamentCondition & t, Element v, const Universe & u)
        -> std::vector<TournamentCondition>;

    /// Adds the smallest vertex outside X and outside t, beating every X-vertex already in t;
    /// edges to non-X vertices point toward the new vertex.
    [[nodiscard]] auto domination_player_move(const TournamentCondition & t, std::span<const Element> X, const Universe & u)
        -> TournamentCondition;

    /// True iff every vertex outside X is beaten by some member of X. Requires X ⊆ vertices.
    [[nodiscard]] auto dominating_set_check(const TournamentCondition & t, std::span<const Element> X) -> bool;

    /// Queue of holes the surjection player still has to put into the range.
    struct HoleQueue
    {
        std::deque<Element> pending;

        static auto full(const Universe & u) -> HoleQueue;
    };

    struct SurjectionMove
    {
        PartialFnCondition next;
        HoleQueue queue;
        bool exhausted = false; ///< no unmapped pigeon or no pending hole was left; `next` is unchanged
    };

    /// Maps the smallest unmapped pigeon to the first queued hole not yet in the range.
    [[nodiscard]] auto surjection_player_move(const PartialFnCondition & f, HoleQueue queue, const Universe & u)
        -> SurjectionMove;

    struct TournamentFrame
    {
        using condition_type = TournamentCondition;

        static auto name() -> std::string_view { return "tournament"; }
        static auto extends(const TournamentCondition & strong, const TournamentCondition & weak) -> bool;
        static auto compatible(const TournamentCondition & a, const TournamentCondition & b) -> bool;
        static auto size(const TournamentCondition & t) -> std::size_t { return t.size(); }
        static auto grow(const TournamentCondition & t, const Universe & u) -> std::vector<TournamentCondition>;
        static auto extensions_of_size(const TournamentCondition & base, std::size_t size, const Universe & u)
            -> std::vector<TournamentCondition>;
        /// 2^|t| * 2^(|t|+1) * ... * 2^(|t|+d-1)
        static auto tree_size(std::size_t base_size, std::size_t d, const Universe & u) -> BigInt;
        static auto antichain_bound(std::size_t base_size, std::size_t d, const Universe & u) -> BigInt;
    };

    struct PartialFnFrame
    {
        using condition_type = PartialFnCondition;

        static auto name() -> std::string_view { return "partialfn"; }
        static auto extends(const PartialFnCondition & strong, const PartialFnCondition & weak) -> bool;
        static auto compatible(const PartialFnCondition & a, const PartialFnCondition & b) -> bool;
        static auto size(const PartialFnCondition & f) -> std::size_t { return f.size(); }
        /// Queries the smallest unmapped pigeon, branching over all 2n holes.
        static auto grow(const PartialFnCondition & f, const Universe & u) -> std::vector<PartialFnCondition>;
        static auto extensions_of_size(const PartialFnCondition & base, std::size_t size, const Universe & u)
            -> std::vector<PartialFnCondition>;
        /// (2n)^d
        static auto tree_size(std::size_t base_size, std::size_t d, const Universe & u) -> BigInt;
        static auto antichain_bound(std::size_t base_size, std::size_t d, const Universe & u) -> BigInt;
    };

    static_assert(Frame<TournamentFrame>);
    static_assert(Frame<PartialFnFrame>);
}
