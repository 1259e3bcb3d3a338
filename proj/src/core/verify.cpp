#include "forcing/verify.hpp"

#include "forcing/arrays.hpp"
#include "forcing/error.hpp"
#include "forcing/game.hpp"
#include "forcing/machines.hpp"
#include "forcing/trees.hpp"
#include "forcing/variants.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <map>
#include <random>

namespace forcing
{
    namespace
    {
        auto prefix(std::size_t k) -> Condition
        {
            std::vector<Element> seq(k);
            for (std::size_t i = 0; i < k; ++i)
                seq[i] = static_cast<Element>(i);
            return Condition{std::move(seq)};
        }

        auto all_pass(const std::vector<CheckResult> & checks) -> bool
        {
            return std::all_of(checks.begin(), checks.end(), [](const CheckResult & c) { return c.passed; });
        }

        auto max_element_of(const MinTree & t) -> std::size_t
        {
            std::size_t top = 0;
            for (auto x : t.root)
                top = std::max<std::size_t>(top, x + 1);
            for (const auto & leaf : t.leaves)
                for (auto x : leaf)
                    top = std::max<std::size_t>(top, x + 1);
            return std::max<std::size_t>(top, 1);
        }

        auto tree_props(const VerifyConfig & cfg) -> Json
        {
            Json instances = Json::array();
            if (cfg.input) {
                auto tree = cfg.input->get<MinTree>();
                auto n = cfg.n.value_or(max_element_of(tree));
                Universe u{n, cfg.length_cap.value_or(n)};
                auto report = validate_tree(tree, u, u.length_cap());
                instances.push_back(Json{{"source", "input"}, {"root", tree.root}, {"depth", tree.depth}, {"leaves", tree.leaves.size()},
                    {"n", n}, {"size", report.size.str()}, {"bound", report.bound.str()}, {"equality", report.equality},
                    {"checks", report.checks}, {"passed", report.passed()}});
                return instances;
            }
            for (std::size_t lo = 0; lo <= 3; ++lo) {
                if (cfg.o_length && *cfg.o_length != lo)
                    continue;
                for (std::size_t d = 0; d <= 3; ++d) {
                    if (cfg.depth && *cfg.depth != d)
                        continue;
                    auto n = cfg.n.value_or(std::max<std::size_t>(1, lo + d));
                    auto cap = std::min(cfg.length_cap.value_or(n), n);
                    if (lo + d > cap)
                        continue;
                    Universe u{n, cap};
                    auto o = prefix(lo);
                    auto tree = build_uniform_tree(o, d, u);
                    auto report = validate_tree(tree, u, cap);
                    bool uniform = is_uniform(tree);
                    instances.push_back(Json{{"o_length", lo}, {"depth", d}, {"n", n}, {"length_cap", cap},
                        {"size", report.size.str()}, {"bound", report.bound.str()}, {"equality", report.equality},
                        {"uniform", uniform}, {"checks", report.checks}, {"passed", report.passed() && report.equality && uniform}});
                }
            }
            return instances;
        }

        auto mask_of(const Condition & c) -> std::uint32_t
        {
            std::uint32_t m = 0;
            for (auto x : c)
                m |= std::uint32_t{1} << x;
            return m;
        }

        auto envelope_suite(const VerifyConfig & cfg) -> Json
        {
            auto n = cfg.n.value_or(5);
            auto max_length = std::min(cfg.length_cap.value_or(4), n);
            cfg.budget.require_universe(n);
            Universe u{n, n};
            auto conditions = extensions_up_to(Condition{}, max_length, u);
            std::vector<std::uint32_t> masks;
            for (const auto & c : conditions)
                masks.push_back(mask_of(c));

            std::uint64_t pairs = 0, leaves = 0, gains = 0, failures = 0;
            Json counterexample;
            auto fail = [&](Json where) {
                if (failures++ == 0)
                    counterexample = std::move(where);
            };
            for (std::size_t iq = 0; iq < conditions.size(); ++iq)
                for (std::size_t is = 0; is < conditions.size(); ++is) {
                    const auto & q = conditions[iq];
                    const auto & s = conditions[is];
                    if (! is_compatible(q, s))
                        continue;
                    ++pairs;
                    auto env = envelope(q, s, u);
                    auto domain = masks[iq] | masks[is];
                    leaves += env.tree.leaves.size();
                    auto expected = tree_size(q.size(), static_cast<std::size_t>(__builtin_popcount(domain)) - q.size());
                    if (expected != env.tree.leaves.size())
                        fail(Json{{"q", q}, {"s", s}, {"leaf_count", env.tree.leaves.size()}, {"expected", expected.str()}});
                    bool hits_s = false;
                    for (const auto & r : env.tree.leaves) {
                        if (mask_of(r) != domain || r.size() != static_cast<std::size_t>(__builtin_popcount(domain)) || ! extends(r, q))
                            fail(Json{{"q", q}, {"s", s}, {"leaf", r}, {"property", "domain"}});
                        hits_s = hits_s || extends(r, s);
                    }
                    if (! hits_s)
                        fail(Json{{"q", q}, {"s", s}, {"property", "some leaf extends s"}});

                    for (std::size_t i2 = 0; i2 < conditions.size(); ++i2) {
                        const auto & s2 = conditions[i2];
                        if (is_compatible(s2, s) || ! is_compatible(s2, q))
                            continue;
                        auto before = static_cast<std::size_t>(__builtin_popcount(masks[iq] & masks[i2]));
                        for (const auto & r : env.tree.leaves) {
                            if (! is_compatible(r, s2))
                                continue;
                            ++gains;
                            if (static_cast<std::size_t>(__builtin_popcount(mask_of(r) & masks[i2])) < before + 1)
                                fail(Json{{"q", q}, {"s", s}, {"s_prime", s2}, {"leaf", r}, {"property", "gain"}});
                        }
                    }
                }
            return Json::array({Json{{"n", n}, {"max_length", max_length}, {"conditions", conditions.size()}, {"compatible_pairs", pairs},
                {"leaves", leaves}, {"gain_checks", gains}, {"counterexamples", failures}, {"first_counterexample", counterexample},
                {"passed", failures == 0}}});
        }

        // Every non-tree row below is built deterministically: ragged trees grow a chosen
        // leaf repeatedly, and greedy antichains take candidates in a fixed pseudo-random order.
        auto ragged_tree(const Condition & o, std::size_t growths, const Universe & u) -> std::vector<Condition>
        {
            std::vector<Condition> leaves{o};
            for (std::size_t g = 0; g < growths; ++g) {
                auto pick = (g * 7) % leaves.size();
                auto grown = OrderFrame::grow(leaves[pick], u);
                leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(pick));
                leaves.insert(leaves.end(), grown.begin(), grown.end());
            }
            return leaves;
        }

        auto greedy_antichain(const Condition & o, const Universe & u, std::uint32_t seed) -> std::vector<Condition>
        {
            auto pool = extensions_up_to(o, u.length_cap(), u);
            pool.erase(pool.begin()); // o itself would make the row trivial
            std::mt19937 rng{seed};
            std::vector<std::pair<std::uint32_t, std::size_t>> keyed;
            for (std::size_t i = 0; i < pool.size(); ++i)
                keyed.emplace_back(rng(), i);
            std::sort(keyed.begin(), keyed.end());
            std::vector<Condition> chosen;
            for (auto [key, i] : keyed)
                if (std::none_of(chosen.begin(), chosen.end(), [&](const Condition & c) { return is_compatible(c, pool[i]); }))
                    chosen.push_back(pool[i]);
            std::sort(chosen.begin(), chosen.end(), shortlex_less);
            return chosen;
        }

        /// Same antichain in every row, member i of row a in hole (i + a) mod h. Needs p <= h.
        auto latin(const Condition & o, std::size_t p, std::size_t h, const std::vector<Condition> & members) -> PhpArray
        {
            auto A = PhpArray::empty(o, p, h);
            for (std::size_t a = 0; a < p; ++a)
                for (std::size_t i = 0; i < members.size(); ++i)
                    A.cell(a, (i + a) % h).push_back(members[i]);
            return A;
        }

        /// Row a puts its whole antichain into hole a. Needs p <= h.
        auto diagonal(const Condition & o, std::size_t h, const std::vector<std::vector<Condition>> & rows) -> PhpArray
        {
            auto A = PhpArray::empty(o, rows.size(), h);
            for (std::size_t a = 0; a < rows.size(); ++a)
                A.cell(a, a) = rows[a];
            return A;
        }
    }

    auto uniformize_corpus() -> std::vector<CorpusArray>
    {
        std::vector<CorpusArray> corpus;
        auto add = [&](std::string name, std::size_t n, const PhpArray & A) {
            corpus.push_back({std::move(name), Universe{n, n}, array_to_json(A)});
        };

        for (auto [o, n] : std::vector<std::pair<Condition, std::size_t>>{{Condition{}, 3}, {Condition{0}, 3}, {Condition{1, 0}, 4}}) {
            auto A = PhpArray::empty(o, 1, 1);
            A.cell(0, 0) = {o};
            add("singleton-" + std::to_string(o.size()), n, A);
        }
        {
            auto A = PhpArray::empty(Condition{}, 1, 2);
            A.cell(0, 0) = {Condition{0, 1}};
            A.cell(0, 1) = {Condition{1, 0}};
            add("split-pair", 3, A);
        }
        {
            Universe u{4, 4};
            add("split-depth1", 4, latin(Condition{2}, 1, 2, one_point_extensions(Condition{2}, 0, u)));
        }

        struct LatinSpec
        {
            Condition o;
            std::size_t d, p, h, n;
        };
        for (const auto & s : std::vector<LatinSpec>{
                 {Condition{}, 2, 2, 2, 4}, {Condition{0}, 2, 2, 3, 5}, {Condition{}, 3, 3, 3, 5}, {Condition{1, 0}, 1, 3, 3, 4}}) {
            Universe u{s.n, s.n};
            add("latin-uniform-" + std::to_string(s.o.size()) + "-" + std::to_string(s.d) + "-" + std::to_string(s.p) + "x" + std::to_string(s.h),
                s.n, latin(s.o, s.p, s.h, build_uniform_tree(s.o, s.d, u).leaves));
        }

        struct RaggedSpec
        {
            Condition o;
            std::size_t p, h, n;
        };
        for (const auto & s : std::vector<RaggedSpec>{
                 {Condition{}, 2, 2, 4}, {Condition{}, 3, 3, 5}, {Condition{0}, 2, 3, 5}, {Condition{2, 1}, 3, 3, 6}}) {
            Universe u{s.n, s.n};
            std::vector<std::vector<Condition>> rows;
            for (std::size_t a = 0; a < s.p; ++a)
                rows.push_back(ragged_tree(s.o, a + 1, u));
            add("diagonal-ragged-" + std::to_string(s.o.size()) + "-" + std::to_string(s.p) + "x" + std::to_string(s.h), s.n,
                diagonal(s.o, s.h, rows));
        }
        for (const auto & s : std::vector<RaggedSpec>{{Condition{}, 2, 3, 5}, {Condition{0, 1}, 3, 3, 6}}) {
            Universe u{s.n, s.n};
            add("latin-ragged-" + std::to_string(s.o.size()) + "-" + std::to_string(s.p) + "x" + std::to_string(s.h), s.n,
                latin(s.o, s.p, s.h, ragged_tree(s.o, 3, u)));
        }

        struct GreedySpec
        {
            Condition o;
            std::size_t p, h, n;
            std::uint32_t seed;
        };
        for (const auto & s : std::vector<GreedySpec>{{Condition{}, 1, 2, 3, 1}, {Condition{}, 2, 2, 4, 2}, {Condition{0}, 2, 3, 4, 3},
                 {Condition{}, 3, 3, 5, 4}, {Condition{1}, 1, 3, 5, 5}, {Condition{0, 1}, 2, 2, 6, 6}}) {
            Universe u{s.n, s.n};
            auto name = "greedy-" + std::to_string(s.seed);
            if (s.p == 1)
                add(name, s.n, latin(s.o, 1, s.h, greedy_antichain(s.o, u, s.seed)));
            else {
                std::vector<std::vector<Condition>> rows;
                for (std::size_t a = 0; a < s.p; ++a)
                    rows.push_back(greedy_antichain(s.o, u, s.seed * 100 + static_cast<std::uint32_t>(a)));
                add(name, s.n, diagonal(s.o, s.h, rows));
            }
        }

        for (auto [o, p, h] : std::vector<std::tuple<Condition, std::size_t, std::size_t>>{{Condition{}, 2, 3}, {Condition{0}, 3, 3}}) {
            Universe u{4, 4};
            auto found = search_array<OrderFrame>(o, p, h, 3, u, 10'000'000);
            add("search-" + std::to_string(o.size()) + "-" + std::to_string(p) + "x" + std::to_string(h), 4, *found.witness);
        }
        return corpus;
    }

    auto uniformize_instance(const std::string & name, const Json & universe, const Json & array, std::optional<std::size_t> depth)
        -> Json
    {
        auto u = universe_from_json(universe);
        auto A = array_from_json<Condition>(array);
        Json instance{{"name", name}, {"p", A.pigeons}, {"h", A.holes}, {"base", A.base}, {"universe", universe}};

        auto input = validate_array(A, u);
        std::vector<CheckResult> checks;
        CheckResult valid_input{"input_valid"};
        valid_input.passed = input.passed();
        checks.push_back(valid_input);
        if (! input.passed()) {
            instance["checks"] = checks;
            instance["input_checks"] = input.checks;
            instance["passed"] = false;
            return instance;
        }

        CheckResult stages{"stage_invariant"};
        Uniformization out;
        try {
            out = uniformize_rows(A, depth, u);
        }
        catch (const InvariantViolation & e) {
            stages.passed = false;
            stages.detail = e.what();
            checks.push_back(stages);
            instance["checks"] = checks;
            instance["passed"] = false;
            return instance;
        }
        std::size_t pairs = 0;
        for (const auto & r : out.records) {
            pairs += r.pairs_checked;
            stages.passed = stages.passed && r.invariant_held;
        }
        stages.detail = std::to_string(out.records.size()) + " stages, " + std::to_string(pairs) + " pairs";
        checks.push_back(stages);

        auto output = validate_array(out.array, u);
        CheckResult valid_output{"output_valid"};
        valid_output.passed = output.passed();
        if (! output.passed())
            valid_output.counterexample = output.checks;
        checks.push_back(valid_output);

        CheckResult extends_input{"extends_input"};
        extends_input.passed = array_extends<OrderFrame>(out.array, A);
        checks.push_back(extends_input);

        auto row_size = tree_size(A.base.size(), out.depth);
        CheckResult uniform{"rows_uniform"};
        for (std::size_t a = 0; a < out.rows.size() && uniform.passed; ++a)
            if (! is_uniform(out.rows[a]) || row_size != out.rows[a].leaves.size()) {
                uniform.passed = false;
                uniform.counterexample = Json{{"row", a}, {"leaves", out.rows[a].leaves.size()}};
            }
        checks.push_back(uniform);

        CheckResult unique{"unique_member"};
        for (std::size_t a = 0; a < out.rows.size() && unique.passed; ++a)
            for (const auto & leaf : out.rows[a].leaves) {
                std::size_t hits = 0;
                for (const auto & cell : A.cells[a])
                    hits += static_cast<std::size_t>(std::count_if(cell.begin(), cell.end(), [&](const Condition & s) { return extends(leaf, s); }));
                if (hits != 1) {
                    unique.passed = false;
                    unique.counterexample = Json{{"row", a}, {"leaf", leaf}, {"members_extended", hits}};
                    break;
                }
            }
        checks.push_back(unique);

        auto size = array_size(out.array);
        CheckResult law{"size_law"};
        BigInt lower = BigInt(A.pigeons) * row_size;
        BigInt upper = BigInt(A.holes) * row_size;
        law.passed = size.consistent() && size.total == lower && size.total <= upper;
        law.detail = size.total.str() + " = " + std::to_string(A.pigeons) + " * " + row_size.str() + " <= " + upper.str();
        checks.push_back(law);

        instance["depth"] = out.depth;
        instance["required_depth"] = out.required_depth;
        instance["stages"] = out.stages;
        instance["size"] = size.total.str();
        instance["checks"] = checks;
        instance["passed"] = all_pass(checks);
        return instance;
    }

    namespace
    {
        auto uniformize_suite(const VerifyConfig & cfg) -> Json
        {
            Json instances = Json::array();
            if (cfg.input) {
                auto n = cfg.n.value_or(6);
                Json universe{{"n", n}, {"length_cap", cfg.length_cap.value_or(n)}};
                instances.push_back(uniformize_instance("input", universe, *cfg.input, cfg.depth));
                return instances;
            }
            for (const auto & entry : uniformize_corpus()) {
                auto first = uniformize_instance(entry.name, entry.universe, entry.array, cfg.depth);
                instances.push_back(first);
                if (cfg.depth || ! first.contains("depth"))
                    continue;
                auto padded = first["depth"].get<std::size_t>() + 1;
                auto base = entry.array["base"].size();
                if (base + padded <= entry.universe["n"].get<std::size_t>())
                    instances.push_back(uniformize_instance(entry.name + "+1", entry.universe, entry.array, padded));
            }
            return instances;
        }

        auto upper_bound_suite(const VerifyConfig & cfg) -> Json
        {
            auto m = cfg.m.value_or(6);
            if (m == 0)
                throw InvalidArgument("upper-bound needs m >= 1");
            cfg.budget.require_universe(m);
            Json instances = Json::array();
            for (std::size_t lo = 0; lo <= std::min<std::size_t>(3, m); ++lo) {
                if (cfg.o_length && *cfg.o_length != lo)
                    continue;
                for (std::size_t d = 0; d <= 3 && lo + d <= m; ++d) {
                    if (cfg.depth && *cfg.depth != d)
                        continue;
                    Universe u{m, m};
                    auto o = prefix(lo);
                    auto S = build_uniform_tree(o, d, u).leaves;
                    auto report = antichain_upper_bound_check(S, o, d, m, cfg.budget);
                    auto exact_m = std::max<std::size_t>(1, lo + d);
                    auto antichain = bruteforce::max_antichain(o, d, exact_m, cfg.budget);
                    CheckResult exact{"max_antichain_equals_bound"};
                    exact.passed = report.bound == antichain;
                    exact.detail = std::to_string(antichain) + " over universe " + std::to_string(exact_m);
                    auto checks = report.checks;
                    checks.push_back(exact);
                    instances.push_back(Json{{"o_length", lo}, {"depth", d}, {"m", m}, {"bound", report.bound.str()},
                        {"size", S.size()}, {"total_orders", report.total_orders.str()},
                        {"per_member_orders", report.per_member_orders.str()}, {"max_antichain", antichain},
                        {"checks", checks}, {"passed", all_pass(checks)}});
                }
            }
            return instances;
        }

        auto array_inequality_suite(const VerifyConfig & cfg) -> Json
        {
            auto n_max = cfg.n.value_or(4);
            auto max_length = cfg.max_length.value_or(3);
            std::vector<Condition> bases;
            if (cfg.o_length)
                bases.push_back(prefix(*cfg.o_length));
            else
                bases = {Condition{}, Condition{0}};
            std::vector<std::pair<std::size_t, std::size_t>> shapes;
            if (cfg.p && cfg.h)
                shapes.emplace_back(*cfg.p, *cfg.h);
            else
                shapes = {{2, 1}, {3, 1}, {3, 2}, {1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 3}};

            Json instances = Json::array();
            for (const auto & o : bases)
                for (auto n = std::max<std::size_t>(1, o.size()); n <= n_max; ++n) {
                    if (cfg.n && n != *cfg.n)
                        continue;
                    Universe u{n, cfg.length_cap.value_or(n)};
                    for (auto [p, h] : shapes) {
                        auto found = search_array<OrderFrame>(o, p, h, max_length, u, cfg.budget.max_nodes);
                        bool expected = p <= h;
                        bool witness_valid = found.exists && validate_array(*found.witness, u).passed();
                        Json instance{{"base", o}, {"n", n}, {"p", p}, {"h", h}, {"max_length", max_length}, {"exists", found.exists},
                            {"expected", expected}, {"nodes", found.nodes}, {"candidates", found.candidates}, {"probes", found.probes},
                            {"passed", found.exists == expected && (! found.exists || witness_valid)}};
                        if (found.exists) {
                            instance["witness"] = array_to_json(*found.witness);
                            instance["witness_valid"] = witness_valid;
                        }
                        instances.push_back(instance);
                    }
                }
            return instances;
        }

        template <Frame F>
        auto frame_instance(const typename F::condition_type & base, std::size_t d, const Universe & u, std::size_t antichain_m,
            const bruteforce::EnumerationBudget & budget) -> Json
        {
            auto leaves = uniform_frame_tree<F>(base, d, u);
            auto formula = F::tree_size(F::size(base), d, u);
            auto bound = F::antichain_bound(F::size(base), d, u);
            auto antichain = bruteforce::max_antichain(base, d, antichain_m, budget);
            bool tree_ok = formula == leaves.size();
            bool bound_ok = BigInt(antichain) <= bound;
            return Json{{"frame", std::string(F::name())}, {"base", base}, {"depth", d}, {"n", u.n()}, {"formula", formula.str()},
                {"tree_size", leaves.size()}, {"antichain_bound", bound.str()}, {"max_antichain", antichain},
                {"equality", BigInt(antichain) == bound}, {"tree_matches", tree_ok}, {"antichain_within", bound_ok},
                {"passed", tree_ok && bound_ok && formula == bound}};
        }

        auto transitive(std::size_t k) -> TournamentCondition
        {
            std::vector<Element> vertices;
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < k; ++i) {
                vertices.push_back(static_cast<Element>(i));
                for (std::size_t j = i + 1; j < k; ++j)
                    edges.emplace_back(static_cast<Element>(i), static_cast<Element>(j));
            }
            return TournamentCondition{vertices, edges};
        }

        auto frame_bounds_suite(const VerifyConfig & cfg) -> Json
        {
            auto wants = [&](const std::string & f) { return cfg.frame.empty() || cfg.frame == f; };
            if (! cfg.frame.empty() && ! wants("order") && ! wants("tournament") && ! wants("partialfn"))
                throw InvalidArgument("unknown frame \"" + cfg.frame + "\"");
            auto d_max = cfg.depth.value_or(2);
            Json instances = Json::array();
            if (wants("order"))
                for (std::size_t lo = 0; lo <= 2; ++lo)
                    for (std::size_t d = 0; d <= d_max; ++d) {
                        auto n = std::max<std::size_t>(1, lo + d);
                        instances.push_back(frame_instance<OrderFrame>(prefix(lo), d, Universe{n, n}, n, cfg.budget));
                    }
            if (wants("tournament"))
                for (std::size_t k = 0; k <= 2; ++k)
                    for (std::size_t d = 0; d <= d_max; ++d) {
                        auto n = std::max<std::size_t>(1, k + d);
                        instances.push_back(frame_instance<TournamentFrame>(transitive(k), d, Universe{n, n}, n, cfg.budget));
                    }
            if (wants("partialfn"))
                for (std::size_t n = 1; n <= cfg.n.value_or(3); ++n)
                    for (std::size_t k = 0; k <= 1; ++k)
                        for (std::size_t d = 0; d <= d_max && k + d <= n; ++d) {
                            auto base = k == 0 ? PartialFnCondition{} : PartialFnCondition{{{0, 0}}};
                            instances.push_back(frame_instance<PartialFnFrame>(base, d, Universe{n, n}, n, cfg.budget));
                        }
            return instances;
        }

        auto single_cell(std::size_t depth_cap, const DecisionTree & t) -> OracleProgram
        {
            return OracleProgram{depth_cap, {{{0, 0}, t}}};
        }

        auto compile_soundness_suite(const VerifyConfig & cfg) -> Json
        {
            auto n = cfg.n.value_or(4);
            auto depth = cfg.depth.value_or(2);
            cfg.budget.require_universe(n);
            Universe u{n, cfg.length_cap.value_or(n)};
            auto trees = programs::all_trees(n, depth);
            Json instances = Json::array();
            for (const auto & o : extensions_of_length(Condition{}, cfg.o_length.value_or(0), u)) {
                std::uint64_t leaves = 0, orders = 0, failures = 0;
                Json counterexample;
                auto fail = [&](Json where) {
                    if (failures++ == 0)
                        counterexample = std::move(where);
                };
                for (const auto & t : trees) {
                    auto prog = single_cell(depth, t);
                    auto family = compile(prog, o, 1, 1, u);
                    auto tree = family.cell_tree(0, 0);
                    leaves += tree.leaves.size();
                    if (tree.depth > 2 * depth)
                        fail(Json{{"program", prog}, {"property", "depth"}});
                    auto report = validate_tree(tree, u, u.length_cap());
                    if (! report.passed())
                        fail(Json{{"program", prog}, {"property", "tree"}, {"checks", report.checks}});
                    for (bool accept : {true, false})
                        for (const auto & r : (accept ? family.plus : family.minus).cell(0, 0))
                            bruteforce::for_each_total_order(n, r, cfg.budget, [&](const bruteforce::Sequence & total) {
                                ++orders;
                                if (evaluate(prog, 0, 0, Condition{total}) != accept)
                                    fail(Json{{"program", prog}, {"member", r}, {"total_order", total}, {"expected", accept}});
                            });
                }
                instances.push_back(Json{{"base", o}, {"n", n}, {"depth", depth}, {"programs", trees.size()}, {"leaves", leaves},
                    {"total_orders", orders}, {"failures", failures}, {"first_counterexample", counterexample}, {"passed", failures == 0}});
            }
            return instances;
        }

        auto single_step_suite(const VerifyConfig & cfg) -> Json
        {
            auto n = cfg.n.value_or(4);
            auto depth = cfg.depth.value_or(2);
            auto p = cfg.p.value_or(2);
            auto h = cfg.h.value_or(1);
            if (p <= h)
                throw InvalidArgument("single-step needs p > h");
            cfg.budget.require_universe(n);
            Universe u{n, cfg.length_cap.value_or(n)};
            auto o = prefix(cfg.o_length.value_or(0));
            u.check(o);

            // A program's T⁺ determines its verdict on every total order (soundness plus
            // covering, checked by compile-soundness), so one tree per distinct T⁺ suffices.
            auto trees = programs::all_trees(n, depth);
            std::map<std::vector<Condition>, std::size_t> classes;
            for (std::size_t i = 0; i < trees.size(); ++i) {
                auto accepted = compile(single_cell(depth, trees[i]), o, 1, 1, u).plus.cell(0, 0);
                std::sort(accepted.begin(), accepted.end());
                classes.emplace(std::move(accepted), i);
            }
            std::vector<std::size_t> reps;
            for (const auto & [key, i] : classes)
                reps.push_back(i);

            auto cells = p * h;
            BigInt combinations = 1;
            for (std::size_t c = 0; c < cells; ++c)
                combinations *= reps.size();
            if (combinations > cfg.budget.max_nodes)
                throw BudgetExceeded(combinations.str() + " programs exceed the node budget " + std::to_string(cfg.budget.max_nodes));

            std::map<std::string, std::uint64_t> kinds;
            std::uint64_t programs_run = 0, orders = 0, failures = 0;
            Json counterexample;
            std::vector<std::size_t> choice(cells, 0);
            while (true) {
                OracleProgram prog{depth, {}};
                for (std::size_t c = 0; c < cells; ++c)
                    prog.table[{c / h, c % h}] = trees[reps[choice[c]]];
                ++programs_run;
                try {
                    auto alt = single_step_search(compile(prog, o, p, h, u), u, u.length_cap());
                    ++kinds[to_string(alt.kind)];
                    if (! extends(alt.extension, o) && failures++ == 0)
                        counterexample = Json{{"program", prog}, {"alternative", alt}, {"property", "extends base"}};
                    bruteforce::for_each_total_order(n, alt.extension, cfg.budget, [&](const bruteforce::Sequence & total) {
                        ++orders;
                        if (! php_instance_check(prog, p, h, Condition{total}).violation() && failures++ == 0)
                            counterexample = Json{{"program", prog}, {"alternative", alt}, {"total_order", total}};
                    });
                }
                catch (const SearchExhausted & e) {
                    if (failures++ == 0)
                        counterexample = Json{{"program", prog}, {"error", e.what()}};
                }
                std::size_t c = 0;
                while (c < cells && ++choice[c] == reps.size())
                    choice[c++] = 0;
                if (c == cells)
                    break;
            }
            return Json::array({Json{{"base", o}, {"n", n}, {"depth", depth}, {"p", p}, {"h", h}, {"trees", trees.size()},
                {"classes", reps.size()}, {"programs", programs_run}, {"kinds", kinds}, {"total_orders", orders}, {"failures", failures},
                {"first_counterexample", counterexample}, {"passed", failures == 0}}});
        }

        auto game_suite(const VerifyConfig & cfg) -> Json
        {
            auto rounds = cfg.rounds.value_or(30);
            std::vector<std::pair<std::string, Json>> scenarios;
            auto n_min = cfg.n.value_or(std::max<std::size_t>(rounds, 1));
            scenarios.emplace_back("min", Json{{"universe", {{"n", n_min}}}, {"schedule", {"MIN"}}, {"rounds", rounds}});
            scenarios.emplace_back("empty", Json{{"universe", {{"n", 4}}}, {"schedule", {"MIN", "PASS"}}, {"rounds", 0}});
            Json evens = Json::array();
            for (Element x = 0; x < 32; x += 2)
                evens.push_back(x);
            scenarios.emplace_back("dlo", Json{{"universe", {{"n", 40}}}, {"schedule", {"MIN", "DLO"}}, {"rounds", 16},
                {"players", {{"DLO", {{"X", evens}}}}}});
            scenarios.emplace_back("php", Json{{"universe", {{"n", 5}}}, {"schedule", {"MIN", "PASS", "PHP"}}, {"rounds", 9},
                {"players", {{"PHP", {{"requirements", {{{"generator", "modular"}, {"p", 3}, {"h", 2}},
                                                           {{"generator", "comparator"}, {"p", 3}, {"h", 2}},
                                                           {{"generator", "constant-reject"}, {"p", 2}, {"h", 1}}}}}}}}});
            scenarios.emplace_back("tournament", Json{{"frame", "tournament"}, {"universe", {{"n", 6}}}, {"schedule", {"GROW", "DOM"}},
                {"rounds", 6}, {"players", {{"DOM", {{"X", {0, 1, 2}}}}}}});
            scenarios.emplace_back("surjection", Json{{"frame", "partialfn"}, {"universe", {{"n", 3}}}, {"schedule", {"SURJ", "PASS"}},
                {"rounds", 8}});

            Json instances = Json::array();
            for (const auto & [name, config] : scenarios) {
                auto result = run_game_from_config(config, cfg.budget);
                instances.push_back(Json{{"scenario", name}, {"config", config}, {"rounds", result["rounds"].size()},
                    {"halted", result["halted"]}, {"halt_reason", result["halt_reason"]}, {"final", result["final"]},
                    {"checks", result["checks"]}, {"passed", result["passed"]}});
            }
            return instances;
        }
    }

    void to_json(Json & j, const VerifyConfig & c)
    {
        j = Json::object();
        j["suite"] = c.suite;
        if (! c.frame.empty())
            j["frame"] = c.frame;
        auto put = [&](const char * name, const std::optional<std::size_t> & v) {
            if (v)
                j[name] = *v;
        };
        put("n", c.n);
        put("length_cap", c.length_cap);
        put("p", c.p);
        put("h", c.h);
        put("depth", c.depth);
        put("m", c.m);
        put("o_length", c.o_length);
        put("rounds", c.rounds);
        put("max_length", c.max_length);
        if (c.input)
            j["input"] = *c.input;
        j["budget"] = Json{{"max_universe", c.budget.max_universe}, {"max_length", c.budget.max_length}, {"max_nodes", c.budget.max_nodes}};
    }

    void from_json(const Json & j, VerifyConfig & c)
    {
        if (! j.is_object())
            throw ParseError("verify config must be an object");
        c = VerifyConfig{};
        c.suite = field<std::string>(j, "suite");
        c.frame = field_or<std::string>(j, "frame", "");
        auto get = [&](const char * name, std::optional<std::size_t> & v) {
            if (j.contains(name) && ! j.at(name).is_null())
                v = field<std::size_t>(j, name);
        };
        get("n", c.n);
        get("length_cap", c.length_cap);
        get("p", c.p);
        get("h", c.h);
        get("depth", c.depth);
        get("m", c.m);
        get("o_length", c.o_length);
        get("rounds", c.rounds);
        get("max_length", c.max_length);
        if (j.contains("input") && ! j.at("input").is_null())
            c.input = j.at("input");
        if (j.contains("budget")) {
            const auto & b = j.at("budget");
            c.budget.max_universe = field_or<std::size_t>(b, "max_universe", c.budget.max_universe);
            c.budget.max_length = field_or<std::size_t>(b, "max_length", c.budget.max_length);
            c.budget.max_nodes = field_or<std::uint64_t>(b, "max_nodes", c.budget.max_nodes);
        }
    }

    auto suite_names() -> std::vector<std::string>
    {
        return {"tree-props", "envelope", "uniformize", "upper-bound", "array-inequality", "frame-bounds", "compile-soundness",
            "single-step", "game"};
    }

    auto report_digest(const Json & report) -> std::string
    {
        auto copy = report;
        copy.erase("digest");
        auto text = copy.dump();
        unsigned char md[EVP_MAX_MD_SIZE];
        unsigned int length = 0;
        if (EVP_Digest(text.data(), text.size(), md, &length, EVP_sha256(), nullptr) != 1)
            throw Error("SHA-256 digest failed");
        std::string hex;
        char byte[3];
        for (unsigned int i = 0; i < length; ++i) {
            std::snprintf(byte, sizeof byte, "%02x", md[i]);
            hex += byte;
        }
        return hex;
    }

    auto verify(const VerifyConfig & config) -> Json
    {
        config.budget.validate();
        Json instances;
        const auto & s = config.suite;
        if (s == "tree-props")
            instances = tree_props(config);
        else if (s == "envelope")
            instances = envelope_suite(config);
        else if (s == "uniformize")
            instances = uniformize_suite(config);
        else if (s == "upper-bound")
            instances = upper_bound_suite(config);
        else if (s == "array-inequality")
            instances = array_inequality_suite(config);
        else if (s == "frame-bounds")
            instances = frame_bounds_suite(config);
        else if (s == "compile-soundness")
            instances = compile_soundness_suite(config);
        else if (s == "single-step")
            instances = single_step_suite(config);
        else if (s == "game")
            instances = game_suite(config);
        else
            throw InvalidArgument("unknown suite \"" + s + "\"");

        bool passed = ! instances.empty()
            && std::all_of(instances.begin(), instances.end(), [](const Json & i) { return i["passed"].get<bool>(); });
        Json report{{"suite", s}, {"config", config}, {"instances", instances}, {"passed", passed}};
        report["digest"] = report_digest(report);
        return report;
    }

    auto frame_counts(const std::string & frame, std::size_t m, std::size_t base_size, std::size_t depth,
        const bruteforce::EnumerationBudget & budget) -> Json
    {
        budget.validate();
        if (m == 0)
            throw InvalidArgument("universe must be non-empty");
        if (base_size + depth > m)
            throw CapExceeded("base size " + std::to_string(base_size) + " plus depth " + std::to_string(depth)
                + " exceeds universe " + std::to_string(m));
        Universe u{m, m};
        Json row;
        if (frame == "order")
            row = frame_instance<OrderFrame>(prefix(base_size), depth, u, m, budget);
        else if (frame == "tournament")
            row = frame_instance<TournamentFrame>(transitive(base_size), depth, u, m, budget);
        else if (frame == "partialfn") {
            std::vector<std::pair<Element, Element>> pairs;
            for (std::size_t i = 0; i < base_size; ++i)
                pairs.emplace_back(static_cast<Element>(i), static_cast<Element>(i));
            row = frame_instance<PartialFnFrame>(PartialFnCondition{pairs}, depth, u, m, budget);
        }
        else
            throw InvalidArgument("unknown frame \"" + frame + "\"");
        row["m"] = m;
        row["base_size"] = base_size;
        row.erase("n");
        return row;
    }
}
