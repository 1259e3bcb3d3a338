#include "forcing_lab/forcing_lab.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using Json = nlohmann::json;

namespace
{
    enum Exit
    {
        exit_pass = 0,
        exit_fail = 1,
        exit_usage = 2,
        exit_budget = 3,
        exit_error = 4,
    };

    struct Owned
    {
        char * text = nullptr;
        ~Owned() { flab_string_free(text); }
        [[nodiscard]] auto json() const -> Json { return Json::parse(text); }
    };

    auto exit_for(flab_status s) -> int
    {
        switch (s) {
        case FLAB_OK: return exit_pass;
        case FLAB_INVALID_ARGUMENT:
        case FLAB_INVALID_CONDITION:
        case FLAB_PARSE_ERROR: return exit_usage;
        case FLAB_BUDGET_EXCEEDED: return exit_budget;
        default: return exit_error;
        }
    }

    auto report_error(flab_status s) -> int
    {
        std::cerr << "error (" << flab_status_name(s) << "): " << flab_last_error() << "\n";
        return exit_for(s);
    }

    auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path);
        if (! in)
            throw std::runtime_error("cannot read " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    /// --out FILE writes there, --out - writes to stdout, no --out writes nothing.
    void write_out(const std::string & out, const Json & j)
    {
        if (out.empty())
            return;
        if (out == "-") {
            std::cout << j.dump(2) << "\n";
            return;
        }
        std::ofstream f(out);
        if (! f)
            throw std::runtime_error("cannot write " + out);
        f << j.dump(2) << "\n";
    }

    struct Options
    {
        std::string frame;
        std::optional<std::size_t> n, length_cap, p, h, depth, m, o_length, rounds, max_len;
        std::optional<std::uint64_t> budget_nodes;
        std::optional<std::uint64_t> seed;
        std::string input;
        std::string out;
        std::string base = "[]";
        std::string schedule;
        std::string x;
        std::string requirements;
        std::string config;
        std::string generator;
        std::string format = "csv";
        std::string suite;
    };

    // Human-readable lines move to stderr when the JSON report takes stdout.
    auto summary(const Options & o) -> std::ostream & { return o.out == "-" ? std::cerr : std::cout; }

    /// Explicit --budget-nodes first, then FORCING_LAB_BUDGET, else 0 for the library default.
    auto node_budget(const Options & o) -> std::uint64_t
    {
        if (o.budget_nodes)
            return *o.budget_nodes;
        if (const char * env = std::getenv("FORCING_LAB_BUDGET"); env && *env) {
            char * end = nullptr;
            auto v = std::strtoull(env, &end, 10);
            if (*end != '\0' || v == 0)
                throw CLI::ValidationError("FORCING_LAB_BUDGET", std::string("not a positive integer: ") + env);
            return v;
        }
        return 0;
    }

    auto universe_n(const Options & o, std::size_t fallback) -> std::size_t { return o.n.value_or(fallback); }
    auto universe_cap(const Options & o, std::size_t n) -> std::size_t { return o.length_cap.value_or(n); }

    auto first_failure(const Json & instances) -> Json
    {
        for (const auto & inst : instances)
            if (! inst.value("passed", true))
                return inst;
        return nullptr;
    }

    auto cmd_verify(const Options & o) -> int
    {
        Json config{{"suite", o.suite}};
        if (! o.frame.empty())
            config["frame"] = o.frame;
        auto put = [&](const char * name, const std::optional<std::size_t> & v) {
            if (v)
                config[name] = *v;
        };
        put("n", o.n);
        put("length_cap", o.length_cap);
        put("p", o.p);
        put("h", o.h);
        put("depth", o.depth);
        put("m", o.m);
        put("o_length", o.o_length);
        put("rounds", o.rounds);
        put("max_length", o.max_len);
        if (! o.input.empty())
            config["input"] = Json::parse(read_file(o.input));
        if (auto b = node_budget(o))
            config["budget"] = Json{{"max_nodes", b}};

        Owned report;
        int passed = 0;
        auto s = flab_verify(config.dump().c_str(), &report.text, &passed);
        if (s != FLAB_OK)
            return report_error(s);
        auto j = report.json();
        write_out(o.out, j);
        summary(o) << o.suite << ": " << (passed ? "PASS" : "FAIL") << ", " << j["instances"].size() << " instances, digest "
                  << j["digest"].get<std::string>() << "\n";
        if (! passed)
            summary(o) << "first failing instance: " << first_failure(j["instances"]).dump() << "\n";
        return passed ? exit_pass : exit_fail;
    }

    auto cmd_run_game(const Options & o) -> int
    {
        Json config = o.config.empty() ? Json::object() : Json::parse(read_file(o.config));
        if (! o.frame.empty())
            config["frame"] = o.frame;
        if (o.n || ! config.contains("universe")) {
            auto n = universe_n(o, 10);
            config["universe"] = Json{{"n", n}, {"length_cap", universe_cap(o, n)}};
        }
        if (! o.schedule.empty()) {
            std::vector<std::string> ids;
            std::stringstream ss(o.schedule);
            for (std::string id; std::getline(ss, id, ',');)
                if (! id.empty())
                    ids.push_back(id);
            config["schedule"] = ids;
        }
        if (! o.x.empty()) {
            std::vector<unsigned> X;
            std::stringstream ss(o.x);
            for (std::string v; std::getline(ss, v, ',');)
                if (! v.empty())
                    X.push_back(static_cast<unsigned>(std::stoul(v)));
            for (const auto * id : {"DLO", "DOM"})
                config["players"][id]["X"] = X;
        }
        if (o.rounds)
            config["rounds"] = *o.rounds;
        if (! config.contains("rounds"))
            config["rounds"] = 0;
        if (! o.requirements.empty())
            config["players"]["PHP"]["requirements"] = Json::parse(read_file(o.requirements));

        Owned transcript;
        int passed = 0;
        auto s = flab_run_game(config.dump().c_str(), node_budget(o), &transcript.text, &passed);
        if (transcript.text) {
            auto j = transcript.json();
            write_out(o.out, j);
            std::size_t discharged = 0;
            for (const auto & r : j["rounds"])
                if (r["player"] == "PHP" && r["tag"] != "idle")
                    ++discharged;
            const auto & final = j["final"];
            auto length = final.is_object() ? (final.contains("vertices") ? final["vertices"].size() : final["pairs"].size())
                                            : final.size();
            summary(o) << "rounds: " << j["rounds"].size() << ", requirements discharged: " << discharged
                      << ", final length: " << length;
            if (j.value("halted", false))
                summary(o) << ", halted: " << j["halt_reason"].get<std::string>();
            summary(o) << "\n";
            if (j.contains("checks"))
                for (const auto & c : j["checks"])
                    summary(o) << "  " << c["property"].get<std::string>() << ": " << (c["passed"].get<bool>() ? "pass" : "FAIL")
                              << "\n";
        }
        if (s != FLAB_OK)
            return report_error(s);
        return passed ? exit_pass : exit_fail;
    }

    auto cmd_counts(const Options & o) -> int
    {
        auto frame = o.frame.empty() ? std::string("order") : o.frame;
        auto m = o.m.value_or(o.n.value_or(4));
        Owned table;
        auto s = flab_counts(frame.c_str(), m, o.o_length.value_or(0), o.depth.value_or(0), node_budget(o), &table.text);
        if (s != FLAB_OK)
            return report_error(s);
        auto j = table.json();
        write_out(o.out, j);
        if (o.format == "json")
            summary(o) << j.dump() << "\n";
        else {
            summary(o) << "frame,m,base_size,depth,formula,tree_size,max_antichain,tree_matches,antichain_within,equality\n";
            summary(o) << frame << "," << m << "," << j["base_size"] << "," << j["depth"] << "," << j["formula"].get<std::string>()
                      << "," << j["tree_size"] << "," << j["max_antichain"] << "," << j["tree_matches"] << ","
                      << j["antichain_within"] << "," << j["equality"] << "\n";
        }
        return j["passed"].get<bool>() ? exit_pass : exit_fail;
    }

    auto cmd_search_array(const Options & o) -> int
    {
        auto n = universe_n(o, 3);
        Owned result;
        int exists = 0;
        auto s = flab_array_search(o.base.c_str(), o.p.value_or(1), o.h.value_or(1), o.max_len.value_or(3), n, universe_cap(o, n),
            node_budget(o), &result.text, &exists);
        if (s != FLAB_OK)
            return report_error(s);
        auto j = result.json();
        write_out(o.out, j);
        summary(o) << (exists ? "array found" : "no array exists") << " (p=" << j["p"] << ", h=" << j["h"] << ", base "
                  << j["base"].dump() << ", " << j["nodes"] << " nodes, " << j["candidates"] << " candidates)\n";
        if (exists)
            summary(o) << j["witness"].dump() << "\n";
        return exit_pass;
    }

    struct ProgramDeleter
    {
        void operator()(flab_program * p) const { flab_program_free(p); }
    };
    struct ConditionDeleter
    {
        void operator()(flab_condition * c) const { flab_condition_free(c); }
    };

    auto cmd_compile(const Options & o) -> int
    {
        auto p = o.p.value_or(1), h = o.h.value_or(1);
        auto n = universe_n(o, 4);
        flab_program * raw = nullptr;
        flab_status s;
        if (! o.input.empty())
            s = flab_program_from_json(read_file(o.input).c_str(), &raw);
        else if (o.generator == "random" || o.generator.empty())
            s = flab_program_random(p, h, n, o.depth.value_or(2), o.seed.value_or(1), &raw);
        else
            s = flab_program_generate(o.generator.c_str(), p, h, &raw);
        if (s != FLAB_OK)
            return report_error(s);
        std::unique_ptr<flab_program, ProgramDeleter> prog(raw);

        flab_condition * base_raw = nullptr;
        if ((s = flab_condition_from_json(o.base.c_str(), &base_raw)) != FLAB_OK)
            return report_error(s);
        std::unique_ptr<flab_condition, ConditionDeleter> base(base_raw);

        Owned family, program;
        if ((s = flab_program_compile(prog.get(), base.get(), p, h, n, universe_cap(o, n), &family.text)) != FLAB_OK)
            return report_error(s);
        if ((s = flab_program_to_json(prog.get(), &program.text)) != FLAB_OK)
            return report_error(s);
        auto j = family.json();
        j["program"] = program.json();
        write_out(o.out, j);
        std::size_t plus = 0, minus = 0;
        for (const auto & row : j["plus"]["cells"])
            for (const auto & cell : row)
                plus += cell.size();
        for (const auto & row : j["minus"]["cells"])
            for (const auto & cell : row)
                minus += cell.size();
        summary(o) << "compiled " << p << "x" << h << " program over base " << j["base"].dump() << ": " << plus << " accepting, "
                  << minus << " rejecting leaves\n";
        return exit_pass;
    }

    struct ArrayDeleter
    {
        void operator()(flab_array * a) const { flab_array_free(a); }
    };

    auto cmd_uniformize(const Options & o) -> int
    {
        if (o.input.empty())
            throw CLI::RequiredError("--input");
        flab_array * raw = nullptr;
        auto s = flab_array_from_json(read_file(o.input).c_str(), &raw);
        if (s != FLAB_OK)
            return report_error(s);
        std::unique_ptr<flab_array, ArrayDeleter> in(raw);
        auto n = universe_n(o, 6);
        flab_array * out_raw = nullptr;
        Owned report;
        long depth = o.depth ? static_cast<long>(*o.depth) : -1;
        if ((s = flab_array_uniformize(in.get(), n, universe_cap(o, n), depth, &out_raw, &report.text)) != FLAB_OK)
            return report_error(s);
        std::unique_ptr<flab_array, ArrayDeleter> out(out_raw);
        Owned array;
        if ((s = flab_array_to_json(out.get(), &array.text)) != FLAB_OK)
            return report_error(s);
        auto j = report.json();
        j["output"] = array.json();
        write_out(o.out, j);
        bool passed = j["passed"].get<bool>();
        summary(o) << "uniformize: " << (passed ? "PASS" : "FAIL") << ", depth " << j["depth"] << ", " << j["stages"]
                  << " envelope stages";
        if (j.contains("size"))
            summary(o) << ", size " << j["size"].get<std::string>();
        summary(o) << "\n";
        return passed ? exit_pass : exit_fail;
    }

    void universe_flags(CLI::App * c, Options & o)
    {
        c->add_option("--n", o.n, "Universe size");
        c->add_option("--length-cap", o.length_cap, "Longest admissible condition (default n)");
    }

    void common_flags(CLI::App * c, Options & o)
    {
        c->add_option("--budget-nodes", o.budget_nodes, "Search node budget (overrides FORCING_LAB_BUDGET)");
        c->add_option("--out", o.out, "Write the JSON result to this file ('-' for stdout)");
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Exhaustive checks for forcing constructions over finite orders"};
    app.set_version_flag("--version", std::string(flab_version()));
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    Options o;

    auto * verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", o.suite, "tree-props, envelope, uniformize, upper-bound, array-inequality, frame-bounds, "
                                         "compile-soundness, single-step or game")
        ->required();
    verify->add_option("--frame", o.frame, "Restrict frame-bounds to one frame");
    universe_flags(verify, o);
    verify->add_option("--p", o.p);
    verify->add_option("--h", o.h);
    verify->add_option("--depth", o.depth);
    verify->add_option("--m", o.m, "Universe for the counting checks");
    verify->add_option("--o-length", o.o_length, "Base length");
    verify->add_option("--rounds", o.rounds);
    verify->add_option("--max-len", o.max_len, "Longest cell member for array search");
    verify->add_option("--input", o.input, "Tree or array JSON to check instead of the built-in grid")->check(CLI::ExistingFile);
    common_flags(verify, o);

    auto * game = app.add_subcommand("run-game", "Play a game and write its transcript");
    game->add_option("--config", o.config, "Game config JSON; flags override its fields")->check(CLI::ExistingFile);
    game->add_option("--frame", o.frame, "order, tournament or partialfn");
    universe_flags(game, o);
    game->add_option("--schedule", o.schedule, "Comma-separated player ids, e.g. MIN,PASS,PHP");
    game->add_option("--rounds", o.rounds);
    game->add_option("--x", o.x, "Comma-separated set X for the DLO and DOM players");
    game->add_option("--requirements", o.requirements, "JSON list of PHP requirements")->check(CLI::ExistingFile);
    common_flags(game, o);

    auto * counts = app.add_subcommand("counts", "Tree size formula against enumeration");
    counts->add_option("--frame", o.frame, "order, tournament or partialfn");
    counts->add_option("--m", o.m, "Universe size (pigeons for partialfn)");
    counts->add_option("--n", o.n, "Alias of --m");
    counts->add_option("--o-length", o.o_length, "Base size");
    counts->add_option("--depth", o.depth);
    counts->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
    common_flags(counts, o);

    auto * search = app.add_subcommand("search-array", "Exhaustive search for a PHP-array");
    search->add_option("--base", o.base, "Base condition as JSON, e.g. [0]");
    search->add_option("--p", o.p);
    search->add_option("--h", o.h);
    search->add_option("--max-len", o.max_len, "Longest cell member");
    universe_flags(search, o);
    common_flags(search, o);

    auto * comp = app.add_subcommand("compile", "Compile an oracle program into its accept/reject arrays");
    comp->add_option("--input", o.input, "Program JSON")->check(CLI::ExistingFile);
    comp->add_option("--generator", o.generator, "modular, identity, comparator, constant-accept, constant-reject or random");
    comp->add_option("--seed", o.seed, "Seed for --generator random");
    comp->add_option("--depth", o.depth, "Tree depth for --generator random");
    comp->add_option("--base", o.base, "Base condition as JSON");
    comp->add_option("--p", o.p);
    comp->add_option("--h", o.h);
    universe_flags(comp, o);
    common_flags(comp, o);

    auto * unif = app.add_subcommand("uniformize", "Make every row of an array a uniform tree");
    unif->add_option("--input", o.input, "Array JSON")->check(CLI::ExistingFile);
    unif->add_option("--depth", o.depth, "Target depth (default: smallest feasible)");
    universe_flags(unif, o);
    common_flags(unif, o);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (*verify)
            return cmd_verify(o);
        if (*game)
            return cmd_run_game(o);
        if (*counts)
            return cmd_counts(o);
        if (*search)
            return cmd_search_array(o);
        if (*comp)
            return cmd_compile(o);
        if (*unif)
            return cmd_uniformize(o);
    }
    catch (const CLI::Error & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const nlohmann::json::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_usage;
}
