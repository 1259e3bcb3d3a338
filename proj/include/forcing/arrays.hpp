#pragma once

#include "forcing/bruteforce.hpp"
#include "forcing/frames.hpp"
#include "forcing/json_io.hpp"
#include "forcing/trees.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace forcing
{
    /// A p x h indexed family of condition sets, cells[pigeon][hole].
    template <class C>
    struct CellArray
    {
        C base;
        std::size_t pigeons = 0;
        std::size_t holes = 0;
        std::vector<std::vector<std::vector<C>>> cells;

        static auto empty(C base, std::size_t p, std::size_t h) -> CellArray
        {
            return CellArray{std::move(base), p, h, std::vector<std::vector<std::vector<C>>>(p, std::vector<std::vector<C>>(h))};
        }

        [[nodiscard]] auto cell(std::size_t a, std::size_t b) const -> const std::vector<C> & { return cells.at(a).at(b); }
        [[nodiscard]] auto cell(std::size_t a, std::size_t b) -> std::vector<C> & { return cells.at(a).at(b); }

        /// Throws InvalidArgument when the cell grid is not p x h.
        void check_shape() const
        {
            if (cells.size() != pigeons)
                throw InvalidArgument("array has " + std::to_string(cells.size()) + " rows, expected " + std::to_string(pigeons));
            for (const auto & r : cells)
                if (r.size() != holes)
                    throw InvalidArgument("array row has " + std::to_string(r.size()) + " cells, expected " + std::to_string(holes));
        }

        auto operator==(const CellArray &) const -> bool = default;
    };

    using PhpArray = CellArray<Condition>;

    template <class C>
    auto array_to_json(const CellArray<C> & A) -> Json
    {
        Json cells = Json::array();
        for (const auto & row : A.cells) {
            Json r = Json::array();
            for (const auto & cell : row)
                r.push_back(cell);
            cells.push_back(std::move(r));
        }
        return Json{{"base", A.base}, {"p", A.pigeons}, {"h", A.holes}, {"cells", std::move(cells)}};
    }

    /// Reads {"base", "p", "h", "cells"}; the cell grid must be p x h.
    template <class C>
    auto array_from_json(const Json & j) -> CellArray<C>
    {
        CellArray<C> A{field<C>(j, "base"), field<std::size_t>(j, "p"), field<std::size_t>(j, "h"), {}};
        A.cells = field<std::vector<std::vector<std::vector<C>>>>(j, "cells");
        try {
            A.check_shape();
        }
        catch (const InvalidArgument & e) {
            throw ParseError(e.what());
        }
        return A;
    }

    struct ArrayReport
    {
        std::vector<CheckResult> checks;
        std::size_t probes = 0;        ///< conditions q ⪯ base enumerated for the density axiom
        std::size_t probe_length = 0;  ///< their maximal length (the certificate's bound)

        [[nodiscard]] auto passed() const -> bool
        {
            return std::all_of(checks.begin(), checks.end(), [](const CheckResult & c) { return c.passed; });
        }
    };

    /// Checks the five array axioms. The density axiom is checked against every
    /// extension of the base up to the universe's length cap.
    template <Frame F>
    auto validate_array(const CellArray<typename F::condition_type> & A, const Universe & u) -> ArrayReport
    {
        using C = typename F::condition_type;
        A.check_shape();
        ArrayReport report;

        CheckResult extends_base{"axiom1_extends_base"};
        CheckResult within_cell{"axiom2_cell_incompatible"};
        CheckResult within_column{"axiom3_column_incompatible"};
        CheckResult within_row{"axiom4_row_incompatible"};
        CheckResult density{"axiom5_density"};

        auto fail = [](CheckResult & check, Json example) {
            if (check.passed) {
                check.passed = false;
                check.counterexample = std::move(example);
            }
        };

        for (std::size_t a = 0; a < A.pigeons; ++a)
            for (std::size_t b = 0; b < A.holes; ++b) {
                const auto & cell = A.cell(a, b);
                for (std::size_t i = 0; i < cell.size(); ++i) {
                    if (! F::extends(cell[i], A.base))
                        fail(extends_base, Json{{"pigeon", a}, {"hole", b}, {"member", cell[i]}});
                    for (std::size_t k = i + 1; k < cell.size(); ++k)
                        if (F::compatible(cell[i], cell[k]))
                            fail(within_cell, Json{{"pigeon", a}, {"hole", b}, {"first", cell[i]}, {"second", cell[k]}});
                }
            }

        for (std::size_t b = 0; b < A.holes; ++b)
            for (std::size_t a = 0; a < A.pigeons; ++a)
                for (std::size_t a2 = a + 1; a2 < A.pigeons; ++a2)
                    for (const auto & q : A.cell(a, b))
                        for (const auto & r : A.cell(a2, b))
                            if (F::compatible(q, r))
                                fail(within_column, Json{{"hole", b}, {"pigeons", {a, a2}}, {"first", q}, {"second", r}});

        for (std::size_t a = 0; a < A.pigeons; ++a)
            for (std::size_t b = 0; b < A.holes; ++b)
                for (std::size_t b2 = b + 1; b2 < A.holes; ++b2)
                    for (const auto & q : A.cell(a, b))
                        for (const auto & r : A.cell(a, b2))
                            if (F::compatible(q, r))
                                fail(within_row, Json{{"pigeon", a}, {"holes", {b, b2}}, {"first", q}, {"second", r}});

        report.probe_length = u.length_cap();
        for (auto k = F::size(A.base); k <= u.length_cap(); ++k)
            for (const C & q : F::extensions_of_size(A.base, k, u)) {
                ++report.probes;
                if (! density.passed)
                    continue;
                for (std::size_t a = 0; a < A.pigeons; ++a) {
                    bool hit = false;
                    for (std::size_t b = 0; b < A.holes && ! hit; ++b)
                        hit = std::any_of(A.cell(a, b).begin(), A.cell(a, b).end(), [&](const C & r) { return F::compatible(q, r); });
                    if (! hit) {
                        fail(density, Json{{"pigeon", a}, {"probe", q}});
                        break;
                    }
                }
            }
        density.detail = std::to_string(report.probes) + " probes up to size " + std::to_string(report.probe_length);

        report.checks = {extends_base, within_cell, within_column, within_row, density};
        return report;
    }

    inline auto validate_array(const PhpArray & A, const Universe & u) -> ArrayReport
    {
        return validate_array<OrderFrame>(A, u);
    }

    /// |A| summed over cells, and recomputed over distinct row and column members.
    struct ArraySize
    {
        BigInt total;
        BigInt by_rows;
        BigInt by_columns;

        [[nodiscard]] auto consistent() const -> bool { return total == by_rows && total == by_columns; }
    };

    template <class C>
    auto array_size(const CellArray<C> & A) -> ArraySize
    {
        A.check_shape();
        ArraySize size;
        auto distinct = [](std::vector<C> members) {
            std::sort(members.begin(), members.end());
            return static_cast<std::size_t>(std::unique(members.begin(), members.end()) - members.begin());
        };
        for (std::size_t a = 0; a < A.pigeons; ++a) {
            std::vector<C> row;
            for (std::size_t b = 0; b < A.holes; ++b) {
                size.total += A.cell(a, b).size();
                row.insert(row.end(), A.cell(a, b).begin(), A.cell(a, b).end());
            }
            size.by_rows += distinct(std::move(row));
        }
        for (std::size_t b = 0; b < A.holes; ++b) {
            std::vector<C> column;
            for (std::size_t a = 0; a < A.pigeons; ++a)
                column.insert(column.end(), A.cell(a, b).begin(), A.cell(a, b).end());
            size.by_columns += distinct(std::move(column));
        }
        return size;
    }

    /// True iff every member of every cell of `finer` extends some member of the same cell of `coarser`.
    template <Frame F>
    auto array_extends(const CellArray<typename F::condition_type> & finer, const CellArray<typename F::condition_type> & coarser) -> bool
    {
        if (finer.pigeons != coarser.pigeons || finer.holes != coarser.holes)
            return false;
        for (std::size_t a = 0; a < finer.pigeons; ++a)
            for (std::size_t b = 0; b < finer.holes; ++b)
                for (const auto & q : finer.cell(a, b))
                    if (std::none_of(coarser.cell(a, b).begin(), coarser.cell(a, b).end(), [&](const auto & r) { return F::extends(q, r); }))
                        return false;
        return true;
    }

    /// One stage of one row's construction.
    struct StageRecord
    {
        std::size_t row = 0;
        std::size_t stage = 0;       ///< i in T_i; stage 0 is {o}
        std::size_t leaves = 0;
        std::size_t pairs_checked = 0; ///< (q, s) pairs with q ∥ s tested against the invariant
        bool invariant_held = true;
    };

    struct Uniformization
    {
        PhpArray array;
        std::size_t depth = 0;           ///< uniform depth d of every row
        std::size_t stages = 0;          ///< d', the number of envelope stages per row
        std::size_t required_depth = 0;  ///< smallest d the staged trees allowed
        std::vector<StageRecord> records;
        std::vector<MinTree> rows;       ///< the uniform o-tree T^a for each row
    };

    /// Extends A so that every row is a uniform o-tree of depth `depth` (or the smallest
    /// feasible depth when nullopt). Envelope stages keep |el(q) ∩ el(s)| >= min(|o|+i, |s|)
    /// for every compatible pair; a violation throws InvariantViolation. Padding uses the
    /// smallest unused elements.
    [[nodiscard]] auto uniformize_rows(const PhpArray & A, std::optional<std::size_t> depth, const Universe & u) -> Uniformization;

    struct AntichainReport
    {
        std::vector<CheckResult> checks;
        BigInt bound;
        BigInt total_orders;       ///< total orders of [0, m) extending o
        BigInt per_member_orders;  ///< expected m!/(|o|+d)!

        [[nodiscard]] auto passed() const -> bool
        {
            return std::all_of(checks.begin(), checks.end(), [](const CheckResult & c) { return c.passed; });
        }
    };

    /// Pairwise incompatibility and |S| <= (|o|+d)!/|o|!, plus the counting identity over
    /// all total orders of [0, m): m!/|o|! of them extend o, each member extends to
    /// exactly m!/(|o|+d)!, and no total order extends two members.
    [[nodiscard]] auto antichain_upper_bound_check(const std::vector<Condition> & S, const Condition & o, std::size_t d,
        std::size_t m, const bruteforce::EnumerationBudget & budget) -> AntichainReport;

    template <class C>
    struct ArraySearchResult
    {
        bool exists = false;
        std::optional<CellArray<C>> witness;
        std::uint64_t nodes = 0;
        std::size_t candidates = 0; ///< conditions allowed as cell members
        std::size_t probes = 0;     ///< maximal conditions the density axiom was checked against
    };

    namespace detail
    {
        template <Frame F>
        struct ArraySearch
        {
            using C = typename F::condition_type;

            std::size_t pigeons, holes;
            std::vector<C> candidates;
            std::vector<std::vector<char>> compatible;
            std::vector<std::vector<char>> covers; // covers[r][q]
            bruteforce::NodeCounter nodes;

            struct Placed
            {
                std::size_t row, candidate, hole;
            };
            std::vector<Placed> placed;

            auto row_search(std::size_t a, std::vector<char> covered, std::size_t row_start, int max_hole) -> bool
            {
                nodes.tick();
                auto open = std::find(covered.begin(), covered.end(), char{0});
                if (open == covered.end()) {
                    if (a + 1 == pigeons)
                        return true;
                    return row_search(a + 1, std::vector<char>(covered.size(), 0), placed.size(), max_hole);
                }
                auto q = static_cast<std::size_t>(open - covered.begin());
                for (std::size_t r = 0; r < candidates.size(); ++r) {
                    if (! covers[r][q])
                        continue;
                    bool clash = false;
                    for (auto i = row_start; i < placed.size() && ! clash; ++i)
                        clash = compatible[r][placed[i].candidate];
                    if (clash)
                        continue;
                    // holes are interchangeable: a new hole index may exceed the largest used by one
                    for (std::size_t b = 0; b < holes && static_cast<int>(b) <= max_hole + 1; ++b) {
                        bool column_clash = false;
                        for (std::size_t i = 0; i < row_start && ! column_clash; ++i)
                            column_clash = placed[i].hole == b && compatible[r][placed[i].candidate];
                        if (column_clash)
                            continue;
                        placed.push_back({a, r, b});
                        auto next = covered;
                        for (std::size_t k = 0; k < next.size(); ++k)
                            next[k] = next[k] || covers[r][k];
                        if (row_search(a, std::move(next), row_start, std::max(max_hole, static_cast<int>(b))))
                            return true;
                        placed.pop_back();
                    }
                }
                return false;
            }
        };
    }

    /// Exhaustive search for an (base, p, h)-array whose members have size <= max_size.
    /// Density only needs checking on maximal probes: a smaller q extends to a maximal
    /// one, and compatibility with a member passes from the extension to q.
    template <Frame F>
    auto search_array(const typename F::condition_type & base, std::size_t p, std::size_t h, std::size_t max_size,
        const Universe & u, std::uint64_t node_budget) -> ArraySearchResult<typename F::condition_type>
    {
        using C = typename F::condition_type;
        if (p == 0 || h == 0)
            throw InvalidArgument("array search needs p >= 1 and h >= 1");

        detail::ArraySearch<F> search{p, h, {}, {}, {}, bruteforce::NodeCounter{node_budget}, {}};
        for (auto k = F::size(base); k <= std::min(max_size, u.length_cap()); ++k)
            for (auto & c : F::extensions_of_size(base, k, u))
                search.candidates.push_back(std::move(c));

        std::vector<C> probes;
        for (auto k = u.length_cap(); k + 1 > F::size(base) && probes.empty(); --k) {
            probes = F::extensions_of_size(base, k, u);
            if (k == 0)
                break;
        }

        auto count = search.candidates.size();
        search.compatible.assign(count, std::vector<char>(count, 0));
        search.covers.assign(count, std::vector<char>(probes.size(), 0));
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = 0; j < count; ++j)
                search.compatible[i][j] = F::compatible(search.candidates[i], search.candidates[j]);
            for (std::size_t k = 0; k < probes.size(); ++k)
                search.covers[i][k] = F::compatible(search.candidates[i], probes[k]);
        }

        ArraySearchResult<C> result;
        result.candidates = count;
        result.probes = probes.size();
        result.exists = search.row_search(0, std::vector<char>(probes.size(), 0), 0, -1);
        result.nodes = search.nodes.count();
        if (result.exists) {
            auto A = CellArray<C>::empty(base, p, h);
            for (const auto & pl : search.placed)
                A.cell(pl.row, pl.hole).push_back(search.candidates[pl.candidate]);
            result.witness = std::move(A);
        }
        return result;
    }
}
