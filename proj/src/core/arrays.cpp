#include "forcing/arrays.hpp"

#include "forcing/error.hpp"

#include <algorithm>

namespace forcing
{
    namespace
    {
        auto length_then_lex(const Condition & a, const Condition & b) -> bool
        {
            return shortlex_less(a, b);
        }

        void check_stage(const std::vector<Condition> & leaves, const std::vector<Condition> & row, std::size_t base_size,
            StageRecord & record)
        {
            for (const auto & q : leaves)
                for (const auto & s : row) {
                    if (! is_compatible(q, s))
                        continue;
                    ++record.pairs_checked;
                    auto need = std::min(base_size + record.stage, s.size());
                    if (common_count(q, s) < need) {
                        record.invariant_held = false;
                        throw InvariantViolation("row " + std::to_string(record.row) + " stage " + std::to_string(record.stage)
                            + ": leaf shares " + std::to_string(common_count(q, s)) + " elements with a compatible member, expected "
                            + std::to_string(need));
                    }
                }
        }
    }

    auto uniformize_rows(const PhpArray & A, std::optional<std::size_t> depth, const Universe & u) -> Uniformization
    {
        A.check_shape();
        u.check(A.base);
        const auto base_size = A.base.size();

        std::size_t longest = base_size;
        for (const auto & r : A.cells)
            for (const auto & cell : r)
                for (const auto & s : cell) {
                    u.check(s);
                    if (! extends(s, A.base))
                        throw InvalidArgument("array member does not extend the base");
                    longest = std::max(longest, s.size());
                }

        Uniformization out;
        out.stages = longest - base_size;
        std::vector<std::vector<Condition>> staged(A.pigeons);

        for (std::size_t a = 0; a < A.pigeons; ++a) {
            std::vector<Condition> row;
            for (const auto & cell : A.cells[a])
                row.insert(row.end(), cell.begin(), cell.end());
            std::sort(row.begin(), row.end(), length_then_lex);

            std::vector<Condition> leaves{A.base};
            StageRecord initial{a, 0, 1};
            check_stage(leaves, row, base_size, initial);
            out.records.push_back(initial);

            for (std::size_t i = 1; i <= out.stages; ++i) {
                std::vector<Condition> next;
                for (const auto & q : leaves) {
                    if (std::any_of(row.begin(), row.end(), [&](const Condition & s) { return extends(q, s); })) {
                        next.push_back(q);
                        continue;
                    }
                    auto s = std::find_if(row.begin(), row.end(), [&](const Condition & s) { return is_compatible(q, s); });
                    if (s == row.end())
                        throw InvalidArgument("row " + std::to_string(a) + " has no member compatible with a stage leaf; density fails");
                    for (auto & leaf : envelope(q, *s, u).tree.leaves)
                        next.push_back(std::move(leaf));
                }
                leaves = std::move(next);
                StageRecord record{a, i, leaves.size()};
                check_stage(leaves, row, base_size, record);
                out.records.push_back(record);
            }

            for (const auto & q : leaves)
                if (std::none_of(row.begin(), row.end(), [&](const Condition & s) { return extends(q, s); }))
                    throw InvariantViolation("row " + std::to_string(a) + ": leaf extends no member after the final stage");
            for (const auto & q : leaves)
                out.required_depth = std::max(out.required_depth, q.size() - base_size);
            staged[a] = std::move(leaves);
        }

        out.depth = depth.value_or(out.required_depth);
        if (out.depth < out.required_depth)
            throw InvalidArgument("depth " + std::to_string(out.depth) + " is below the staged depth "
                + std::to_string(out.required_depth));
        if (base_size + out.depth > u.length_cap() || base_size + out.depth > u.n())
            throw CapExceeded("uniform depth " + std::to_string(out.depth) + " over a base of length " + std::to_string(base_size)
                + " does not fit universe n=" + std::to_string(u.n()) + " L=" + std::to_string(u.length_cap()));

        out.array = PhpArray::empty(A.base, A.pigeons, A.holes);
        for (std::size_t a = 0; a < A.pigeons; ++a) {
            MinTree tree{A.base, {}, out.depth};
            for (const auto & q : staged[a]) {
                auto padded = build_uniform_tree(q, base_size + out.depth - q.size(), u);
                for (auto & leaf : padded.leaves) {
                    std::optional<std::size_t> hole;
                    for (std::size_t b = 0; b < A.holes; ++b)
                        for (const auto & s : A.cell(a, b))
                            if (extends(leaf, s)) {
                                if (hole && *hole != b)
                                    throw InvalidArgument("row " + std::to_string(a) + " has compatible members in two cells");
                                hole = b;
                            }
                    if (! hole)
                        throw InvariantViolation("row " + std::to_string(a) + ": padded leaf extends no member");
                    out.array.cell(a, *hole).push_back(leaf);
                    tree.leaves.push_back(std::move(leaf));
                }
            }
            out.rows.push_back(std::move(tree));
        }
        return out;
    }

    auto antichain_upper_bound_check(const std::vector<Condition> & S, const Condition & o, std::size_t d, std::size_t m,
        const bruteforce::EnumerationBudget & budget) -> AntichainReport
    {
        for (const auto & s : S) {
            if (s.size() != o.size() + d)
                throw InvalidArgument("member of length " + std::to_string(s.size()) + ", expected " + std::to_string(o.size() + d));
            if (! extends(s, o))
                throw InvalidArgument("member does not extend the base");
            for (auto x : s.seq())
                if (x >= m)
                    throw InvalidArgument("member uses element " + std::to_string(x) + " outside [0, " + std::to_string(m) + ")");
        }

        AntichainReport report;
        report.bound = tree_size(o.size(), d);

        CheckResult incompatible{"pairwise_incompatible"};
        for (std::size_t i = 0; i < S.size() && incompatible.passed; ++i)
            for (std::size_t k = i + 1; k < S.size(); ++k)
                if (is_compatible(S[i], S[k])) {
                    incompatible.passed = false;
                    incompatible.counterexample = Json{{"first", S[i]}, {"second", S[k]}};
                    break;
                }

        CheckResult bounded{"size_bound"};
        bounded.passed = BigInt(S.size()) <= report.bound;
        bounded.detail = std::to_string(S.size()) + " <= " + report.bound.str();

        std::vector<bruteforce::Sequence> members;
        for (const auto & s : S)
            members.push_back(s.seq());
        std::vector<BigInt> per_member(S.size());
        CheckResult disjoint{"extension_sets_disjoint"};
        bruteforce::for_each_total_order(m, o, budget, [&](const bruteforce::Sequence & total) {
            ++report.total_orders;
            std::optional<std::size_t> first;
            for (std::size_t i = 0; i < members.size(); ++i)
                if (bruteforce::lists_in_order(total, members[i])) {
                    ++per_member[i];
                    if (first && disjoint.passed) {
                        disjoint.passed = false;
                        disjoint.counterexample = Json{{"total_order", total}, {"first", S[*first]}, {"second", S[i]}};
                    }
                    first = first.value_or(i);
                }
        });

        CheckResult total{"total_count"};
        auto expected_total = factorial(m) / factorial(o.size());
        total.passed = report.total_orders == expected_total;
        total.detail = report.total_orders.str() + " vs " + expected_total.str();

        CheckResult each{"per_member_count"};
        report.per_member_orders = factorial(m) / factorial(o.size() + d);
        for (std::size_t i = 0; i < S.size(); ++i)
            if (per_member[i] != report.per_member_orders && each.passed) {
                each.passed = false;
                each.counterexample = Json{{"member", S[i]}, {"count", per_member[i].str()}};
            }
        each.detail = "expected " + report.per_member_orders.str();

        report.checks = {incompatible, bounded, total, each, disjoint};
        return report;
    }
}
