#include "forcing/poset.hpp"

#include "forcing/error.hpp"

#include <algorithm>
#include <string>

namespace forcing
{
    namespace
    {
        auto describe(const Condition & c) -> std::string
        {
            std::string out = "(";
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i)
                    out += ",";
                out += std::to_string(c[i]);
            }
            return out + ")";
        }
    }

    Universe::Universe(std::size_t n, std::size_t length_cap) :
        _n(n),
        _length_cap(length_cap)
    {
        if (n < 1)
            throw InvalidArgument("universe size n must be at least 1");
        if (length_cap < 1)
            throw InvalidArgument("length cap must be at least 1");
        if (length_cap > n)
            throw InvalidArgument("length cap " + std::to_string(length_cap) + " exceeds universe size " + std::to_string(n));
    }

    auto Universe::admits(const Condition & c) const noexcept -> bool
    {
        if (c.size() > _length_cap)
            return false;
        return std::all_of(c.begin(), c.end(), [&](Element x) { return x < _n; });
    }

    void Universe::check(const Condition & c) const
    {
        for (auto x : c)
            if (x >= _n)
                throw InvalidCondition("element " + std::to_string(x) + " of " + describe(c) + " is outside [0," + std::to_string(_n) + ")");
        if (c.size() > _length_cap)
            throw CapExceeded("condition " + describe(c) + " exceeds length cap " + std::to_string(_length_cap));
    }

    Condition::Condition(std::vector<Element> seq) :
        _seq(std::move(seq))
    {
        auto sorted = _seq;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidCondition("condition " + describe(*this) + " repeats an element");
    }

    Condition::Condition(std::initializer_list<Element> seq) :
        Condition(std::vector<Element>(seq))
    {
    }

    auto Condition::contains(Element x) const noexcept -> bool
    {
        return std::find(_seq.begin(), _seq.end(), x) != _seq.end();
    }

    auto Condition::position(Element x) const noexcept -> std::optional<std::size_t>
    {
        auto it = std::find(_seq.begin(), _seq.end(), x);
        if (it == _seq.end())
            return std::nullopt;
        return static_cast<std::size_t>(it - _seq.begin());
    }

    auto Condition::elements() const -> std::vector<Element>
    {
        auto result = _seq;
        std::sort(result.begin(), result.end());
        return result;
    }

    auto Condition::precedes(Element x, Element y) const noexcept -> bool
    {
        auto px = position(x), py = position(y);
        return px && py && *px < *py;
    }

    auto Condition::inserted(std::size_t pos, Element x) const -> Condition
    {
        if (contains(x))
            throw InvalidCondition("element " + std::to_string(x) + " already in " + describe(*this));
        auto seq = _seq;
        seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(pos), x);
        return Condition{Unchecked{}, std::move(seq)};
    }

    auto shortlex_less(const Condition & a, const Condition & b) noexcept -> bool
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.seq() < b.seq();
    }

    auto extends(const Condition & strong, const Condition & weak) noexcept -> bool
    {
        auto it = strong.begin();
        for (auto x : weak) {
            it = std::find(it, strong.end(), x);
            if (it == strong.end())
                return false;
            ++it;
        }
        return true;
    }

    auto extends(const Universe & u, const Condition & strong, const Condition & weak) -> bool
    {
        u.check(strong);
        u.check(weak);
        return extends(strong, weak);
    }

    auto is_compatible(const Condition & a, const Condition & b) noexcept -> bool
    {
        // positions in b of a's common elements must increase along a
        std::ptrdiff_t last = -1;
        for (auto x : a) {
            auto it = std::find(b.begin(), b.end(), x);
            if (it == b.end())
                continue;
            auto pos = it - b.begin();
            if (pos < last)
                return false;
            last = pos;
        }
        return true;
    }

    auto merge_compatible(const Condition & a, const Condition & b) -> std::optional<Condition>
    {
        if (! is_compatible(a, b))
            return std::nullopt;

        std::vector<Element> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j < b.size() && ! a.contains(b[j])) {
                out.push_back(b[j++]);
            }
            else if (j < b.size() && std::find(out.begin(), out.end(), b[j]) != out.end()) {
                ++j;
            }
            else if (i < a.size()) {
                out.push_back(a[i++]);
            }
            else {
                throw InvariantViolation("merge of " + describe(a) + " and " + describe(b) + " stalled");
            }
        }
        return Condition{Condition::Unchecked{}, std::move(out)};
    }

    auto compatible(const Condition & a, const Condition & b) -> CompatWitness
    {
        if (auto merged = merge_compatible(a, b))
            return CompatWitness{std::move(*merged)};

        std::vector<Element> common;
        for (auto x : a)
            if (b.contains(x))
                common.push_back(x);
        for (std::size_t i = 0; i < common.size(); ++i)
            for (std::size_t k = i + 1; k < common.size(); ++k)
                if (*b.position(common[i]) > *b.position(common[k]))
                    return CompatWitness{ConflictPair{common[i], common[k]}};
        throw InvariantViolation("no conflict pair found for incompatible " + describe(a) + " and " + describe(b));
    }

    auto one_point_extensions(const Condition & o, Element a, const Universe & u) -> std::vector<Condition>
    {
        if (! u.contains(a))
            throw InvalidCondition("element " + std::to_string(a) + " is outside the universe");
        if (o.contains(a))
            throw InvalidCondition("element " + std::to_string(a) + " already in " + describe(o));
        if (o.size() + 1 > u.length_cap())
            throw CapExceeded("inserting " + std::to_string(a) + " into " + describe(o) + " exceeds length cap " + std::to_string(u.length_cap()));

        std::vector<Condition> result;
        result.reserve(o.size() + 1);
        for (std::size_t pos = 0; pos <= o.size(); ++pos)
            result.push_back(o.inserted(pos, a));
        return result;
    }

    auto restrict(const Condition & o, std::span<const Element> keep) -> Condition
    {
        std::vector<Element> out;
        for (auto x : o)
            if (std::find(keep.begin(), keep.end(), x) != keep.end())
                out.push_back(x);
        return Condition{Condition::Unchecked{}, std::move(out)};
    }

    auto common_count(const Condition & a, const Condition & b) noexcept -> std::size_t
    {
        return static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [&](Element x) { return b.contains(x); }));
    }

    auto union_elements(const Condition & a, const Condition & b) -> std::vector<Element>
    {
        auto ea = a.elements(), eb = b.elements();
        std::vector<Element> out;
        std::set_union(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(out));
        return out;
    }

    auto smallest_unused(const Condition & o, std::size_t count, const Universe & u) -> std::vector<Element>
    {
        std::vector<Element> out;
        for (Element x = 0; x < u.n() && out.size() < count; ++x)
            if (! o.contains(x))
                out.push_back(x);
        return out;
    }

    namespace
    {
        void extend_rec(const Condition & base, std::size_t target, const Universe & u, std::vector<Element> & seq,
            std::vector<bool> & used, std::size_t matched, const std::function<void(const Condition &)> & visit)
        {
            if (seq.size() == target) {
                if (matched == base.size())
                    visit(Condition{seq});
                return;
            }
            auto slots_left = target - seq.size();
            for (Element x = 0; x < u.n(); ++x) {
                if (used[x])
                    continue;
                auto next_matched = matched;
                if (base.contains(x)) {
                    if (matched == base.size() || base[matched] != x)
                        continue;
                    ++next_matched;
                }
                else if (slots_left - 1 < base.size() - matched) {
                    continue;
                }
                used[x] = true;
                seq.push_back(x);
                extend_rec(base, target, u, seq, used, next_matched, visit);
                seq.pop_back();
                used[x] = false;
            }
        }
    }

    void for_each_extension(const Condition & base, std::size_t max_length, const Universe & u,
        const std::function<void(const Condition &)> & visit)
    {
        u.check(base);
        auto cap = std::min({max_length, u.length_cap(), u.n()});
        for (auto length = base.size(); length <= cap; ++length) {
            std::vector<Element> seq;
            std::vector<bool> used(u.n(), false);
            extend_rec(base, length, u, seq, used, 0, visit);
        }
    }

    auto extensions_up_to(const Condition & base, std::size_t max_length, const Universe & u) -> std::vector<Condition>
    {
        std::vector<Condition> out;
        for_each_extension(base, max_length, u, [&](const Condition & c) { out.push_back(c); });
        return out;
    }

    auto extensions_of_length(const Condition & base, std::size_t length, const Universe & u) -> std::vector<Condition>
    {
        std::vector<Condition> out;
        if (length < base.size() || length > u.n() || length > u.length_cap())
            return out;
        std::vector<Element> seq;
        std::vector<bool> used(u.n(), false);
        u.check(base);
        extend_rec(base, length, u, seq, used, 0, [&](const Condition & c) { out.push_back(c); });
        return out;
    }
}
