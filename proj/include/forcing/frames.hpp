#pragma once

#include "forcing/bigint.hpp"
#include "forcing/error.hpp"
#include "forcing/poset.hpp"

#include <concepts>
#include <string>
#include <string_view>
#include <vector>

namespace forcing
{
    /// What the generic tree/array/game machinery needs from a forcing frame:
    /// the extension and compatibility tests, the one-step branching rule, and the
    /// two counting formulas whose equality drives the p <= h argument.
    template <class F>
    concept Frame = requires(const typename F::condition_type & c, const Universe & u, std::size_t k) {
        { F::name() } -> std::convertible_to<std::string_view>;
        { F::extends(c, c) } -> std::same_as<bool>;
        { F::compatible(c, c) } -> std::same_as<bool>;
        { F::size(c) } -> std::same_as<std::size_t>;
        { F::grow(c, u) } -> std::same_as<std::vector<typename F::condition_type>>;
        { F::extensions_of_size(c, k, u) } -> std::same_as<std::vector<typename F::condition_type>>;
        { F::tree_size(k, k, u) } -> std::same_as<BigInt>;
        { F::antichain_bound(k, k, u) } -> std::same_as<BigInt>;
    };

    struct OrderFrame
    {
        using condition_type = Condition;

        static auto name() -> std::string_view { return "order"; }
        static auto extends(const Condition & strong, const Condition & weak) -> bool { return forcing::extends(strong, weak); }
        static auto compatible(const Condition & a, const Condition & b) -> bool { return is_compatible(a, b); }
        static auto size(const Condition & c) -> std::size_t { return c.size(); }

        /// Inserts the smallest unused element at every position.
        static auto grow(const Condition & c, const Universe & u) -> std::vector<Condition>
        {
            auto fresh = smallest_unused(c, 1, u);
            if (fresh.empty())
                throw CapExceeded("no unused element left to grow " + std::to_string(c.size()) + "-element condition");
            return one_point_extensions(c, fresh.front(), u);
        }

        static auto extensions_of_size(const Condition & base, std::size_t size, const Universe & u) -> std::vector<Condition>
        {
            return extensions_of_length(base, size, u);
        }

        static auto tree_size(std::size_t base_size, std::size_t d, const Universe &) -> BigInt
        {
            return rising_product(base_size, d);
        }

        static auto antichain_bound(std::size_t base_size, std::size_t d, const Universe &) -> BigInt
        {
            return rising_product(base_size, d);
        }
    };

    static_assert(Frame<OrderFrame>);

    /// Leaves of the uniform depth-d tree over `base`, growing one fresh element per level.
    template <Frame F>
    auto uniform_frame_tree(const typename F::condition_type & base, std::size_t depth, const Universe & u)
        -> std::vector<typename F::condition_type>
    {
        std::vector<typename F::condition_type> level{base};
        for (std::size_t i = 0; i < depth; ++i) {
            std::vector<typename F::condition_type> next;
            for (const auto & c : level)
                for (auto & child : F::grow(c, u))
                    next.push_back(std::move(child));
            level = std::move(next);
        }
        return level;
    }
}
