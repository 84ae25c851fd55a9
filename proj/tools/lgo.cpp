#include <lgo/constructions.hpp>
#include <lgo/core.hpp>
#include <lgo/edge_coloring.hpp>
#include <lgo/embedding.hpp>
#include <lgo/generators.hpp>
#include <lgo/hom.hpp>
#include <lgo/io.hpp>
#include <lgo/realize.hpp>
#include <lgo/verification.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace lgo;
using std::cerr;
using std::cout;
using std::string;
using std::vector;

namespace
{
    // Exit codes. hom, color --k and core use found/none/budget; everything
    // else uses ok/failed.
    enum Exit : int
    {
        exit_ok = 0,
        exit_none = 1,
        exit_budget = 2,
        exit_parse = 3,
        exit_too_large = 4,
        exit_usage = 64
    };

    struct UsageError : std::invalid_argument
    {
        using std::invalid_argument::invalid_argument;
    };

    struct BudgetFlags
    {
        std::optional<double> seconds;
        std::optional<std::uint64_t> nodes;

        auto add_to(CLI::App * app) -> void
        {
            app->add_option("--time-limit", seconds, "Search time limit in seconds");
            app->add_option("--node-limit", nodes, "Search node limit");
        }

        auto budget(SearchBudget fallback = {}) const -> SearchBudget
        {
            auto b = fallback;
            if (seconds)
                b.time_limit = std::chrono::duration<double>(*seconds);
            if (nodes)
                b.node_limit = *nodes;
            try {
                b.validate();
            }
            catch (const std::invalid_argument & e) {
                throw UsageError(e.what());
            }
            return b;
        }
    };

    auto emit(const std::optional<string> & path, const string & text) -> void
    {
        if (path)
            write_text_file(*path, text);
        else
            cout << text;
    }

    auto stats_line(const SearchStats & s) -> string
    {
        return "nodes=" + std::to_string(s.nodes) + " time=" + std::to_string(s.seconds) + "s";
    }

    // Keeps poset labels usable as file names.
    auto file_stem(const string & label) -> string
    {
        string result;
        for (auto c : label)
            result += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
        return result.empty() ? "_" : result;
    }

    auto parse_labels(const string & text) -> vector<std::uint64_t>
    {
        vector<std::uint64_t> result;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find(',', start);
            auto piece = text.substr(start, end == string::npos ? string::npos : end - start);
            try {
                std::size_t used = 0;
                result.push_back(std::stoull(piece, &used));
                if (used != piece.size())
                    throw std::invalid_argument(piece);
            }
            catch (const std::exception &) {
                throw UsageError("--labels must be a comma-separated list of primes, got '" + text + "'");
            }
            if (end == string::npos)
                break;
            start = end + 1;
        }
        return result;
    }

    struct GenArgs
    {
        string kind;
        std::optional<int> n, d;
        std::optional<string> input, out, line_out, dot;
    };

    auto require(const std::optional<int> & value, const string & flag, const string & kind) -> int
    {
        if (! value)
            throw UsageError("gen " + kind + " needs " + flag);
        return *value;
    }

    auto cmd_gen(const GenArgs & a) -> int
    {
        std::optional<Graph> graph;
        std::optional<LineGraph> line;

        try {
            if (a.kind == "complete")
                graph = complete_graph(require(a.n, "--n", a.kind));
            else if (a.kind == "cycle")
                graph = cycle_graph(require(a.n, "--n", a.kind));
            else if (a.kind == "sunlet")
                graph = sunlet(require(a.n, "--n", a.kind));
            else if (a.kind == "dragon")
                graph = dragon(require(a.d, "--d", a.kind));
            else if (a.kind == "indicator")
                graph = indicator(require(a.d, "--d", a.kind)).graph;
            else if (a.kind == "gnd") {
                auto instance = build_gnd(require(a.n, "--n", a.kind), require(a.d, "--d", a.kind));
                graph = instance.graph;
                line = instance.line;
            }
            else if (a.kind == "linegraph") {
                if (a.input)
                    graph = load_graph(*a.input);
                else if (a.n && a.d)
                    graph = build_gnd(*a.n, *a.d).graph;
                else
                    throw UsageError("gen linegraph needs --input, or --n and --d for G_{n,d}");
                line = a.n && a.d && ! a.input ? build_gnd(*a.n, *a.d).line : line_graph(*graph);
                graph = line->graph;
            }
        }
        catch (const UsageError &) {
            throw;
        }
        catch (const ParseError &) {
            throw;
        }
        catch (const std::invalid_argument & e) {
            throw UsageError(e.what());
        }

        auto json = line && a.kind == "linegraph" ? line_graph_to_json(*line) : graph_to_json(*graph);
        emit(a.out, json.dump() + "\n");
        if (a.line_out) {
            if (! line)
                line = line_graph(*graph);
            write_text_file(*a.line_out, line_graph_to_json(*line).dump() + "\n");
        }
        if (a.dot)
            write_text_file(*a.dot, to_dot(*graph, line && a.kind == "linegraph" ? &line->annotation : nullptr));

        cerr << graph->name() << ": " << graph->vertex_count() << " vertices, " << graph->edge_count() << " edges";
        if (line && a.kind == "gnd")
            cerr << "; line graph " << line->graph.vertex_count() << " nodes";
        cerr << "\n";
        return exit_ok;
    }

    struct HomArgs
    {
        string src, dst;
        bool locally_injective = false;
        BudgetFlags budget;
        std::optional<string> out;
    };

    auto cmd_hom(const HomArgs & a) -> int
    {
        auto source = load_graph(a.src);
        auto target = load_graph(a.dst);
        auto result = a.locally_injective ? locally_injective_hom(source, target, a.budget.budget())
                                          : find_hom(source, target, a.budget.budget());
        cerr << to_string(result.outcome) << " " << stats_line(result.stats) << "\n";
        switch (result.outcome) {
            case SearchOutcome::found:
                emit(a.out, mapping_to_json(*result.mapping).dump() + "\n");
                return exit_ok;
            case SearchOutcome::none:
                emit(a.out, "\"none\"\n");
                return exit_none;
            case SearchOutcome::budget_exceeded:
                emit(a.out, "\"budget_exceeded\"\n");
                return exit_budget;
        }
        return exit_budget;
    }

    struct ColorArgs
    {
        string graph;
        std::optional<int> k;
        BudgetFlags budget;
        std::optional<string> out;
    };

    auto coloring_json(const EdgeColoring & c) -> Json
    {
        return Json{{"k", c.k}, {"colors", c.colors}};
    }

    auto cmd_color(const ColorArgs & a) -> int
    {
        auto g = load_graph(a.graph);
        auto budget = a.budget.budget();

        if (a.k) {
            if (*a.k < 0)
                throw UsageError("--k must be non-negative");
            auto result = edge_color(g, *a.k, budget);
            cerr << to_string(result.outcome) << " " << stats_line(result.stats) << "\n";
            if (result.coloring)
                emit(a.out, coloring_json(*result.coloring).dump() + "\n");
            else
                emit(a.out, "\"" + to_string(result.outcome) + "\"\n");
            return result.outcome == SearchOutcome::found ? exit_ok
                : result.outcome == SearchOutcome::none   ? exit_none
                                                          : exit_budget;
        }

        if (g.edge_count() == 0) {
            emit(a.out, Json{{"chromatic_index", 0}, {"max_degree", 0}}.dump() + "\n");
            return exit_ok;
        }
        try {
            auto index = chromatic_index(g, budget);
            auto witness = edge_color(g, index, budget);
            Json j{{"chromatic_index", index}, {"max_degree", g.max_degree()}, {"vizing_class", index == g.max_degree() ? 1 : 2}};
            if (witness.coloring)
                j["coloring"] = coloring_json(*witness.coloring);
            emit(a.out, j.dump() + "\n");
            return exit_ok;
        }
        catch (const BudgetExhausted & e) {
            cerr << "budget_exceeded: " << e.what() << "\n";
            return exit_budget;
        }
    }

    struct CoreArgs
    {
        string graph;
        BudgetFlags budget;
        std::optional<string> out;
    };

    auto cmd_core(const CoreArgs & a) -> int
    {
        auto g = load_graph(a.graph);
        auto result = is_core(g, a.budget.budget());
        cerr << stats_line(result.stats) << "\n";
        switch (result.outcome) {
            case CoreOutcome::core:
                emit(a.out, Json{{"core", true}}.dump() + "\n");
                return exit_ok;
            case CoreOutcome::not_core: {
                Json j{{"core", false}, {"missed_vertex", result.missed_vertex}};
                if (result.witness)
                    j["witness"] = mapping_to_json(*result.witness);
                emit(a.out, j.dump() + "\n");
                return exit_none;
            }
            case CoreOutcome::budget_exceeded:
                emit(a.out, "\"budget_exceeded\"\n");
                return exit_budget;
        }
        return exit_budget;
    }

    struct EmbedArgs
    {
        string poset;
        int d = 3;
        std::optional<string> labels;
        string out;
        bool verify = false;
        long long max_nodes = default_component_node_limit;
        BudgetFlags budget;
    };

    auto cmd_embed(const EmbedArgs & a) -> int
    {
        if (a.d < 3)
            throw UsageError("--d must be at least 3");
        if (a.max_nodes < 1)
            throw UsageError("--max-nodes must be positive");
        auto q = poset_from_json(read_json_file(a.poset));

        PrimeLabeling labels;
        try {
            labels = prime_labeling(q, a.labels ? std::optional(parse_labels(*a.labels)) : std::nullopt);
        }
        catch (const UsageError &) {
            throw;
        }
        catch (const std::invalid_argument & e) {
            throw UsageError(e.what());
        }

        std::filesystem::path dir = a.out;
        std::filesystem::create_directories(dir);
        write_text_file(dir / "embedding.json", embedding_to_json(q, labels).dump(2) + "\n");

        bool oversized = false;
        for (auto & element : realize_graphs(q, labels, a.d, a.max_nodes)) {
            auto stem = file_stem(element.label);
            if (element.graph) {
                write_text_file(dir / "graphs" / (stem + ".json"), graph_to_json(*element.graph).dump() + "\n");
                continue;
            }
            oversized = true;
            cerr << "element " << element.label << ": components over " << a.max_nodes << " nodes:";
            for (auto & o : element.oversized)
                cerr << " " << o;
            cerr << "\n";
        }
        if (oversized)
            return exit_too_large;

        if (! a.verify)
            return exit_ok;
        auto report = verify_realization(q, labels, a.d, a.budget.budget(), a.max_nodes);
        write_text_file(dir / "report.json", report_to_json(report).dump(2) + "\n");
        for (auto & p : report.pairs)
            cerr << p.src << " -> " << p.dst << ": expected " << (p.expected ? "exists" : "none") << ", got "
                 << to_string(p.found) << "\n";
        return report.ok ? exit_ok : exit_none;
    }

    struct VerifyArgs
    {
        string suite;
        BudgetFlags budget;
        int max_n = 6;
        std::uint64_t seed = 1;
        int random_graphs = 100;
        std::optional<string> out;
    };

    auto cmd_verify(const VerifyArgs & a) -> int
    {
        VerifyOptions options;
        options.budget = a.budget.budget(options.budget);
        options.max_n = a.max_n;
        options.seed = a.seed;
        options.random_graphs = a.random_graphs;
        if (options.max_n < 3)
            throw UsageError("--max-n must be at least 3");

        auto report = run_suite(a.suite, options);
        for (auto & c : report.checks)
            cerr << to_string(c.outcome) << "  " << c.name << " " << c.parameters.dump() << "  (" << c.seconds << "s)\n";
        emit(a.out, report.to_json().dump(2) + "\n");
        return report.passed() ? exit_ok : exit_none;
    }

    struct ExportArgs
    {
        string input;
        std::optional<string> out;
    };

    auto cmd_export(const ExportArgs & a) -> int
    {
        auto j = read_json_file(a.input);
        auto g = graph_from_json(j);
        auto annotation = annotation_from_json(j);
        bool annotated = ! annotation.base_edge_of_node.empty();
        emit(a.out, to_dot(g, annotated ? &annotation : nullptr));
        return exit_ok;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Line graph homomorphism toolkit"};
    app.require_subcommand(1);

    GenArgs gen;
    auto * gen_cmd = app.add_subcommand("gen", "Generate a graph as JSON");
    gen_cmd->add_option("kind", gen.kind, "complete|cycle|sunlet|dragon|indicator|gnd|linegraph")
        ->required()
        ->check(CLI::IsMember({"complete", "cycle", "sunlet", "dragon", "indicator", "gnd", "linegraph"}));
    gen_cmd->add_option("--n", gen.n, "Size parameter");
    gen_cmd->add_option("--d", gen.d, "Degree parameter");
    gen_cmd->add_option("--input", gen.input, "Graph JSON (linegraph)");
    gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");
    gen_cmd->add_option("--line-out", gen.line_out, "Also write the annotated line graph here");
    gen_cmd->add_option("--dot", gen.dot, "Also write DOT here");

    HomArgs hom;
    auto * hom_cmd = app.add_subcommand("hom", "Search for a homomorphism src -> dst");
    hom_cmd->add_option("src", hom.src)->required();
    hom_cmd->add_option("dst", hom.dst)->required();
    hom_cmd->add_flag("--locally-injective", hom.locally_injective);
    hom_cmd->add_option("--out", hom.out);
    hom.budget.add_to(hom_cmd);

    ColorArgs color;
    auto * color_cmd = app.add_subcommand("color", "Edge colouring; chromatic index when --k is absent");
    color_cmd->add_option("graph", color.graph)->required();
    color_cmd->add_option("--k", color.k, "Number of colours");
    color_cmd->add_option("--out", color.out);
    color.budget.add_to(color_cmd);

    CoreArgs core;
    auto * core_cmd = app.add_subcommand("core", "Decide whether a graph is a core");
    core_cmd->add_option("graph", core.graph)->required();
    core_cmd->add_option("--out", core.out);
    core.budget.add_to(core_cmd);

    EmbedArgs embed;
    auto * embed_cmd = app.add_subcommand("embed", "Embed a poset into line graphs");
    embed_cmd->add_option("poset", embed.poset)->required();
    embed_cmd->add_option("--d", embed.d, "Degree (>= 3)");
    embed_cmd->add_option("--labels", embed.labels, "Comma-separated primes, one per element");
    embed_cmd->add_option("--out", embed.out, "Output directory")->required();
    embed_cmd->add_flag("--verify", embed.verify, "Check homomorphisms between all realized graphs");
    embed_cmd->add_option("--max-nodes", embed.max_nodes, "Largest component to realize");
    embed.budget.add_to(embed_cmd);

    VerifyArgs verify;
    auto * verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", verify.suite)->required()->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--max-n", verify.max_n, "Largest n for the G_{n,3} suites");
    verify_cmd->add_option("--seed", verify.seed, "Seed for random graphs");
    verify_cmd->add_option("--random-graphs", verify.random_graphs, "Number of random graphs");
    verify_cmd->add_option("--out", verify.out, "Report file (default stdout)");
    verify.budget.add_to(verify_cmd);

    ExportArgs exp;
    auto * export_cmd = app.add_subcommand("export", "Convert graph JSON to DOT");
    export_cmd->add_option("input", exp.input)->required();
    export_cmd->add_option("--out", exp.out);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }

    auto * active = app.get_subcommands().front();
    try {
        if (active == gen_cmd)
            return cmd_gen(gen);
        if (active == hom_cmd)
            return cmd_hom(hom);
        if (active == color_cmd)
            return cmd_color(color);
        if (active == core_cmd)
            return cmd_core(core);
        if (active == embed_cmd)
            return cmd_embed(embed);
        if (active == verify_cmd)
            return cmd_verify(verify);
        return cmd_export(exp);
    }
    catch (const ParseError & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_parse;
    }
    catch (const UsageError & e) {
        cerr << "error: " << e.what() << "\n\n" << active->help();
        return exit_usage;
    }
    catch (const std::exception & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
