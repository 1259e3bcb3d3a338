#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace forcing
{
    using Element = std::uint32_t;

    class Condition;

    /// The ground interval [0, n) together with the cap on condition length.
    class Universe
    {
    public:
        Universe(std::size_t n, std::size_t length_cap);

        [[nodiscard]] auto n() const noexcept -> std::size_t { return _n; }
        [[nodiscard]] auto length_cap() const noexcept -> std::size_t { return _length_cap; }

        [[nodiscard]] auto contains(Element x) const noexcept -> bool { return x < _n; }

        /// True iff every entry is below n and the length is within the cap.
        [[nodiscard]] auto admits(const Condition & c) const noexcept -> bool;

        /// Throws InvalidCondition or CapExceeded when admits() would be false.
        void check(const Condition & c) const;

        auto operator==(const Universe &) const -> bool = default;

    private:
        std::size_t _n;
        std::size_t _length_cap;
    };

    /// A sequence of distinct elements. Listing order is the induced strict order.
    class Condition
    {
    public:
        Condition() = default;
        explicit Condition(std::vector<Element> seq);
        Condition(std::initializer_list<Element> seq);

        [[nodiscard]] auto seq() const noexcept -> const std::vector<Element> & { return _seq; }
        [[nodiscard]] auto size() const noexcept -> std::size_t { return _seq.size(); }
        [[nodiscard]] auto empty() const noexcept -> bool { return _seq.empty(); }
        [[nodiscard]] auto operator[](std::size_t i) const -> Element { return _seq[i]; }
        [[nodiscard]] auto begin() const noexcept { return _seq.begin(); }
        [[nodiscard]] auto end() const noexcept { return _seq.end(); }

        [[nodiscard]] auto contains(Element x) const noexcept -> bool;
        [[nodiscard]] auto position(Element x) const noexcept -> std::optional<std::size_t>;

        /// el(o), sorted ascending.
        [[nodiscard]] auto elements() const -> std::vector<Element>;

        /// True iff x strictly precedes y in this condition (both must be present).
        [[nodiscard]] auto precedes(Element x, Element y) const noexcept -> bool;

        [[nodiscard]] auto inserted(std::size_t position, Element x) const -> Condition;

        auto operator<=>(const Condition &) const = default;
        auto operator==(const Condition &) const -> bool = default;

    private:
        struct Unchecked
        {
        };
        Condition(Unchecked, std::vector<Element> seq) noexcept : _seq(std::move(seq)) {}

        std::vector<Element> _seq;

        friend auto restrict(const Condition &, std::span<const Element>) -> Condition;
        friend class CompatWitness;
        friend auto merge_compatible(const Condition &, const Condition &) -> std::optional<Condition>;
    };

    /// (length, lexicographic) order, used for every deterministic tie-break.
    [[nodiscard]] auto shortlex_less(const Condition & a, const Condition & b) noexcept -> bool;

    struct ConflictPair
    {
        Element first;  ///< precedes `second` in the first argument of compatible()
        Element second;

        auto operator==(const ConflictPair &) const -> bool = default;
    };

    class CompatWitness
    {
    public:
        explicit CompatWitness(Condition merged) : _value(std::move(merged)) {}
        explicit CompatWitness(ConflictPair conflict) : _value(conflict) {}

        [[nodiscard]] auto compatible() const noexcept -> bool { return std::holds_alternative<Condition>(_value); }
        [[nodiscard]] auto merged() const -> const Condition & { return std::get<Condition>(_value); }
        [[nodiscard]] auto conflict() const -> ConflictPair { return std::get<ConflictPair>(_value); }

    private:
        std::variant<Condition, ConflictPair> _value;
    };

    /// strong ⪯ weak: the order of `weak` is contained in the order of `strong`,
    /// i.e. weak is a (not necessarily contiguous) subsequence of strong.
    [[nodiscard]] auto extends(const Condition & strong, const Condition & weak) noexcept -> bool;

    /// Universe-checked variant; throws when either condition lies outside `u`.
    [[nodiscard]] auto extends(const Universe & u, const Condition & strong, const Condition & weak) -> bool;

    /// Agreement test on common elements; cheaper than compatible() when no witness is needed.
    [[nodiscard]] auto is_compatible(const Condition & a, const Condition & b) noexcept -> bool;

    /// The canonical common extension, or nullopt if the conditions disagree.
    [[nodiscard]] auto merge_compatible(const Condition & a, const Condition & b) -> std::optional<Condition>;

    /// Merged witness (stable merge, b's new elements placed as early as both orders allow)
    /// or the first conflicting pair in a's order.
    [[nodiscard]] auto compatible(const Condition & a, const Condition & b) -> CompatWitness;

    /// All conditions obtained by inserting a into o, one per position, in position order.
    [[nodiscard]] auto one_point_extensions(const Condition & o, Element a, const Universe & u) -> std::vector<Condition>;

    /// The subsequence of o whose entries lie in keep.
    [[nodiscard]] auto restrict(const Condition & o, std::span<const Element> keep) -> Condition;

    /// |el(a) ∩ el(b)|
    [[nodiscard]] auto common_count(const Condition & a, const Condition & b) noexcept -> std::size_t;

    /// Sorted el(a) ∪ el(b).
    [[nodiscard]] auto union_elements(const Condition & a, const Condition & b) -> std::vector<Element>;

    /// Smallest elements of [0, n) not in el(o), at most `count` of them.
    [[nodiscard]] auto smallest_unused(const Condition & o, std::size_t count, const Universe & u) -> std::vector<Element>;

    /// Visits every condition extending `base` of length in [base.size(), max_length]
    /// over the universe, shortest first, lexicographically within a length.
    void for_each_extension(const Condition & base, std::size_t max_length, const Universe & u,
        const std::function<void(const Condition &)> & visit);

    [[nodiscard]] auto extensions_up_to(const Condition & base, std::size_t max_length, const Universe & u)
        -> std::vector<Condition>;

    /// Extensions of `base` of length exactly `length`, lexicographic.
    [[nodiscard]] auto extensions_of_length(const Condition & base, std::size_t length, const Universe & u)
        -> std::vector<Condition>;
}

template <>
struct std::hash<forcing::Condition>
{
    auto operator()(const forcing::Condition & c) const noexcept -> std::size_t
    {
        std::size_t h = 1469598103934665603ULL;
        for (auto x : c)
            h = (h ^ x) * 1099511628211ULL;
        return h ^ c.size();
    }
};
