#include "forcing_lab/forcing_lab.h"

#include "forcing/arrays.hpp"
#include "forcing/error.hpp"
#include "forcing/game.hpp"
#include "forcing/json_io.hpp"
#include "forcing/machines.hpp"
#include "forcing/trees.hpp"
#include "forcing/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

using namespace forcing;

struct flab_condition
{
    Condition value;
};

struct flab_tree
{
    MinTree value;
};

struct flab_array
{
    PhpArray value;
};

struct flab_program
{
    OracleProgram value;
};

namespace
{
    thread_local std::string last_error;

    auto fail(flab_status status, const std::string & message) -> flab_status
    {
        last_error = message;
        return status;
    }

    /// Runs body, mapping library exceptions onto status codes.
    template <class Body>
    auto guarded(Body && body) -> flab_status
    {
        try {
            last_error.clear();
            return body();
        }
        catch (const InvalidCondition & e) {
            return fail(FLAB_INVALID_CONDITION, e.what());
        }
        catch (const CapExceeded & e) {
            return fail(FLAB_CAP_EXCEEDED, e.what());
        }
        catch (const InvalidArgument & e) {
            return fail(FLAB_INVALID_ARGUMENT, e.what());
        }
        catch (const BudgetExceeded & e) {
            return fail(FLAB_BUDGET_EXCEEDED, e.what());
        }
        catch (const ParseError & e) {
            return fail(FLAB_PARSE_ERROR, e.what());
        }
        catch (const InvariantViolation & e) {
            return fail(FLAB_INVARIANT_VIOLATION, e.what());
        }
        catch (const ContractBreach & e) {
            return fail(FLAB_CONTRACT_BREACH, e.what());
        }
        catch (const SearchExhausted & e) {
            return fail(FLAB_SEARCH_EXHAUSTED, e.what());
        }
        catch (const nlohmann::json::exception & e) {
            return fail(FLAB_PARSE_ERROR, e.what());
        }
        catch (const std::bad_alloc &) {
            return fail(FLAB_INTERNAL, "out of memory");
        }
        catch (const std::exception & e) {
            return fail(FLAB_INTERNAL, e.what());
        }
        catch (...) {
            return fail(FLAB_INTERNAL, "unknown exception");
        }
    }

    auto dup(const std::string & s) -> char *
    {
        auto * out = static_cast<char *>(std::malloc(s.size() + 1));
        if (! out)
            throw std::bad_alloc();
        std::memcpy(out, s.c_str(), s.size() + 1);
        return out;
    }

    void emit(const Json & j, char ** out)
    {
        *out = dup(j.dump());
    }

    auto parse(const char * text) -> Json
    {
        if (! text)
            throw InvalidArgument("null JSON text");
        try {
            return Json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw ParseError(e.what());
        }
    }

    template <class... P>
    void require(const P *... ptrs)
    {
        if (((ptrs == nullptr) || ...))
            throw InvalidArgument("null pointer argument");
    }

    auto budget_with(std::uint64_t nodes) -> bruteforce::EnumerationBudget
    {
        bruteforce::EnumerationBudget b;
        if (nodes != 0)
            b.max_nodes = nodes;
        return b;
    }
}

extern "C" {

const char * flab_last_error(void)
{
    return last_error.c_str();
}

const char * flab_status_name(flab_status status)
{
    switch (status) {
    case FLAB_OK: return "ok";
    case FLAB_INVALID_ARGUMENT: return "invalid argument";
    case FLAB_INVALID_CONDITION: return "invalid condition";
    case FLAB_PARSE_ERROR: return "parse error";
    case FLAB_CAP_EXCEEDED: return "cap exceeded";
    case FLAB_BUDGET_EXCEEDED: return "budget exceeded";
    case FLAB_INVARIANT_VIOLATION: return "invariant violation";
    case FLAB_CONTRACT_BREACH: return "contract breach";
    case FLAB_SEARCH_EXHAUSTED: return "search exhausted";
    case FLAB_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char * flab_version(void)
{
    return "0.1.0";
}

void flab_string_free(char * s)
{
    std::free(s);
}

flab_status flab_condition_new(const uint32_t * seq, size_t length, flab_condition ** out)
{
    return guarded([&] {
        require(out);
        if (length > 0)
            require(seq);
        std::vector<Element> v(seq, seq + length);
        *out = new flab_condition{Condition{std::move(v)}};
        return FLAB_OK;
    });
}

flab_status flab_condition_from_json(const char * json, flab_condition ** out)
{
    return guarded([&] {
        require(out);
        auto j = parse(json);
        Condition c;
        try {
            c = j.get<Condition>();
        }
        catch (const nlohmann::json::exception & e) {
            throw ParseError(e.what());
        }
        *out = new flab_condition{std::move(c)};
        return FLAB_OK;
    });
}

flab_status flab_condition_to_json(const flab_condition * c, char ** out)
{
    return guarded([&] {
        require(c, out);
        emit(Json(c->value), out);
        return FLAB_OK;
    });
}

size_t flab_condition_length(const flab_condition * c)
{
    return c ? c->value.size() : 0;
}

flab_status flab_extends(const flab_condition * strong, const flab_condition * weak, int * out)
{
    return guarded([&] {
        require(strong, weak, out);
        *out = extends(strong->value, weak->value) ? 1 : 0;
        return FLAB_OK;
    });
}

flab_status flab_compatible(const flab_condition * a, const flab_condition * b, char ** witness_json)
{
    return guarded([&] {
        require(a, b, witness_json);
        auto w = compatible(a->value, b->value);
        Json j{{"compatible", w.compatible()}};
        if (w.compatible())
            j["merged"] = w.merged();
        else
            j["conflict"] = Json::array({w.conflict().first, w.conflict().second});
        emit(j, witness_json);
        return FLAB_OK;
    });
}

void flab_condition_free(flab_condition * c)
{
    delete c;
}

flab_status flab_tree_uniform(const flab_condition * root, size_t depth, size_t n, size_t length_cap, flab_tree ** out)
{
    return guarded([&] {
        require(root, out);
        Universe u{n, length_cap};
        u.check(root->value);
        *out = new flab_tree{build_uniform_tree(root->value, depth, u)};
        return FLAB_OK;
    });
}

flab_status flab_tree_from_json(const char * json, flab_tree ** out)
{
    return guarded([&] {
        require(out);
        auto j = parse(json);
        MinTree t;
        try {
            t = j.get<MinTree>();
        }
        catch (const nlohmann::json::exception & e) {
            throw ParseError(e.what());
        }
        *out = new flab_tree{std::move(t)};
        return FLAB_OK;
    });
}

flab_status flab_tree_to_json(const flab_tree * t, char ** out)
{
    return guarded([&] {
        require(t, out);
        emit(Json(t->value), out);
        return FLAB_OK;
    });
}

size_t flab_tree_leaf_count(const flab_tree * t)
{
    return t ? t->value.leaves.size() : 0;
}

flab_status flab_tree_validate(const flab_tree * t, size_t n, size_t length_cap, char ** report_json, int * passed)
{
    return guarded([&] {
        require(t, report_json, passed);
        Universe u{n, length_cap};
        auto report = validate_tree(t->value, u, length_cap);
        *passed = report.passed() ? 1 : 0;
        emit(Json{{"checks", report.checks}, {"size", report.size.str()}, {"bound", report.bound.str()},
                 {"equality", report.equality}, {"passed", report.passed()}},
            report_json);
        return FLAB_OK;
    });
}

void flab_tree_free(flab_tree * t)
{
    delete t;
}

flab_status flab_array_from_json(const char * json, flab_array ** out)
{
    return guarded([&] {
        require(out);
        *out = new flab_array{array_from_json<Condition>(parse(json))};
        return FLAB_OK;
    });
}

flab_status flab_array_to_json(const flab_array * a, char ** out)
{
    return guarded([&] {
        require(a, out);
        emit(array_to_json(a->value), out);
        return FLAB_OK;
    });
}

flab_status flab_array_validate(const flab_array * a, size_t n, size_t length_cap, char ** report_json, int * passed)
{
    return guarded([&] {
        require(a, report_json, passed);
        auto report = validate_array(a->value, Universe{n, length_cap});
        *passed = report.passed() ? 1 : 0;
        emit(Json{{"checks", report.checks}, {"probes", report.probes}, {"probe_length", report.probe_length},
                 {"passed", report.passed()}},
            report_json);
        return FLAB_OK;
    });
}

flab_status flab_array_uniformize(const flab_array * a, size_t n, size_t length_cap, long depth, flab_array ** out,
    char ** report_json)
{
    return guarded([&] {
        require(a, out, report_json);
        Json universe{{"n", n}, {"length_cap", length_cap}};
        std::optional<std::size_t> d;
        if (depth >= 0)
            d = static_cast<std::size_t>(depth);
        auto report = uniformize_instance("input", universe, array_to_json(a->value), d);
        if (! report["checks"][0]["passed"].get<bool>())
            throw InvalidArgument("input is not a valid array over the universe");
        auto result = uniformize_rows(a->value, d, universe_from_json(universe));
        Json records = Json::array();
        for (const auto & r : result.records)
            records.push_back(Json{{"row", r.row}, {"stage", r.stage}, {"leaves", r.leaves}, {"pairs_checked", r.pairs_checked},
                {"invariant_held", r.invariant_held}});
        report["records"] = records;
        report["stages"] = result.stages;
        report["required_depth"] = result.required_depth;
        *out = new flab_array{std::move(result.array)};
        emit(report, report_json);
        return FLAB_OK;
    });
}

flab_status flab_array_search(const char * base_json, size_t p, size_t h, size_t max_length, size_t n, size_t length_cap,
    uint64_t node_budget, char ** result_json, int * exists)
{
    return guarded([&] {
        require(result_json, exists);
        Condition base = base_json ? parse(base_json).get<Condition>() : Condition{};
        Universe u{n, length_cap};
        u.check(base);
        auto found = search_array<OrderFrame>(base, p, h, max_length, u, node_budget == 0 ? budget_with(0).max_nodes : node_budget);
        Json j{{"base", base}, {"p", p}, {"h", h}, {"max_length", max_length}, {"universe", u}, {"exists", found.exists},
            {"nodes", found.nodes}, {"candidates", found.candidates}, {"probes", found.probes}};
        if (found.witness) {
            j["witness"] = array_to_json(*found.witness);
            j["witness_valid"] = validate_array(*found.witness, u).passed();
        }
        *exists = found.exists ? 1 : 0;
        emit(j, result_json);
        return FLAB_OK;
    });
}

void flab_array_free(flab_array * a)
{
    delete a;
}

flab_status flab_program_from_json(const char * json, flab_program ** out)
{
    return guarded([&] {
        require(out);
        auto j = parse(json);
        OracleProgram prog;
        from_json(j, prog);
        *out = new flab_program{std::move(prog)};
        return FLAB_OK;
    });
}

flab_status flab_program_generate(const char * name, size_t p, size_t h, flab_program ** out)
{
    return guarded([&] {
        require(name, out);
        auto req = requirement_from_json(Json{{"p", p}, {"h", h}, {"generator", name}});
        *out = new flab_program{std::move(req.program)};
        return FLAB_OK;
    });
}

flab_status flab_program_random(size_t p, size_t h, size_t n, size_t depth, uint64_t seed, flab_program ** out)
{
    return guarded([&] {
        require(out);
        *out = new flab_program{programs::random(p, h, n, depth, seed)};
        return FLAB_OK;
    });
}

flab_status flab_program_to_json(const flab_program * prog, char ** out)
{
    return guarded([&] {
        require(prog, out);
        emit(Json(prog->value), out);
        return FLAB_OK;
    });
}

flab_status flab_program_evaluate(const flab_program * prog, size_t a, size_t b, const flab_condition * order, int * out)
{
    return guarded([&] {
        require(prog, order, out);
        *out = evaluate(prog->value, a, b, order->value) ? 1 : 0;
        return FLAB_OK;
    });
}

flab_status flab_program_compile(const flab_program * prog, const flab_condition * base, size_t p, size_t h, size_t n,
    size_t length_cap, char ** family_json)
{
    return guarded([&] {
        require(prog, base, family_json);
        Universe u{n, length_cap};
        u.check(base->value);
        prog->value.check(u);
        auto family = compile(prog->value, base->value, p, h, u);
        emit(Json{{"base", family.base()}, {"p", p}, {"h", h}, {"plus", array_to_json(family.plus)},
                 {"minus", array_to_json(family.minus)}},
            family_json);
        return FLAB_OK;
    });
}

flab_status flab_php_check(const flab_program * prog, size_t p, size_t h, const flab_condition * order, char ** verdict_json)
{
    return guarded([&] {
        require(prog, order, verdict_json);
        emit(Json(php_instance_check(prog->value, p, h, order->value)), verdict_json);
        return FLAB_OK;
    });
}

flab_status flab_single_step(const flab_program * prog, const flab_condition * base, size_t p, size_t h, size_t n,
    size_t length_cap, char ** alternative_json)
{
    return guarded([&] {
        require(prog, base, alternative_json);
        Universe u{n, length_cap};
        u.check(base->value);
        prog->value.check(u);
        auto family = compile(prog->value, base->value, p, h, u);
        emit(Json(single_step_search(family, u, length_cap)), alternative_json);
        return FLAB_OK;
    });
}

void flab_program_free(flab_program * prog)
{
    delete prog;
}

flab_status flab_verify(const char * config_json, char ** report_json, int * passed)
{
    return guarded([&] {
        require(report_json, passed);
        auto config = parse(config_json).get<VerifyConfig>();
        auto report = verify(config);
        *passed = report["passed"].get<bool>() ? 1 : 0;
        emit(report, report_json);
        return FLAB_OK;
    });
}

flab_status flab_run_game(const char * config_json, uint64_t node_budget, char ** transcript_json, int * passed)
{
    return guarded([&] {
        require(transcript_json, passed);
        *transcript_json = nullptr;
        *passed = 0;
        auto config = parse(config_json);
        try {
            auto result = run_game_from_config(config, budget_with(node_budget));
            *passed = result["passed"].get<bool>() ? 1 : 0;
            emit(result, transcript_json);
            return FLAB_OK;
        }
        catch (const GameAborted & e) {
            auto partial = e.transcript();
            partial["config"] = config;
            partial["aborted"] = e.what();
            partial["passed"] = false;
            emit(partial, transcript_json);
            return fail(e.cause() == GameAborted::Cause::cap_exceeded ? FLAB_CAP_EXCEEDED : FLAB_CONTRACT_BREACH, e.what());
        }
    });
}

flab_status flab_counts(const char * frame, size_t m, size_t base_size, size_t depth, uint64_t node_budget, char ** table_json)
{
    return guarded([&] {
        require(frame, table_json);
        emit(frame_counts(frame, m, base_size, depth, budget_with(node_budget)), table_json);
        return FLAB_OK;
    });
}

}
