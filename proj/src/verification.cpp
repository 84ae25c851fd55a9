#include <lgo/constructions.hpp>
#include <lgo/core.hpp>
#include <lgo/cyclic.hpp>
#include <lgo/edge_coloring.hpp>
#include <lgo/embedding.hpp>
#include <lgo/equitable_partition.hpp>
#include <lgo/generators.hpp>
#include <lgo/interval.hpp>
#include <lgo/roles.hpp>
#include <lgo/verification.hpp>

#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

using nlohmann::json;
using std::string;
using std::vector;
using std::chrono::duration;
using std::chrono::steady_clock;

namespace lgo
{
    auto to_string(CheckOutcome o) -> string
    {
        switch (o) {
            case CheckOutcome::pass: return "pass";
            case CheckOutcome::fail: return "fail";
            case CheckOutcome::budget_exceeded: return "budget_exceeded";
        }
        return "?";
    }

    auto VerificationReport::passed() const -> bool
    {
        for (auto & c : checks)
            if (c.outcome != CheckOutcome::pass)
                return false;
        return true;
    }

    auto VerificationReport::to_json() const -> json
    {
        auto list = json::array();
        for (auto & c : checks)
            list.push_back({{"name", c.name},
                {"claim", c.claim},
                {"parameters", c.parameters},
                {"outcome", to_string(c.outcome)},
                {"time", c.seconds},
                {"nodes", c.nodes},
                {"detail", c.detail}});
        return json{{"status", passed() ? "pass" : "fail"}, {"checks", list}};
    }

    namespace
    {
        using Suite = std::function<void(const VerifyOptions &, VerificationReport &)>;

        // Runs `body`, which fills outcome/nodes/detail; times it and turns a
        // BudgetExhausted into the matching outcome.
        auto check(VerificationReport & report, string name, string claim, json parameters,
            const std::function<void(CheckRecord &)> & body) -> void
        {
            CheckRecord record;
            record.name = std::move(name);
            record.claim = std::move(claim);
            record.parameters = std::move(parameters);
            auto start = steady_clock::now();
            try {
                body(record);
            }
            catch (const BudgetExhausted & e) {
                record.outcome = CheckOutcome::budget_exceeded;
                record.detail = e.what();
            }
            record.seconds = duration<double>(steady_clock::now() - start).count();
            report.checks.push_back(std::move(record));
        }

        auto pass_if(bool ok) -> CheckOutcome
        {
            return ok ? CheckOutcome::pass : CheckOutcome::fail;
        }

        auto outcome_of(const HomResult & r, bool expected) -> CheckOutcome
        {
            if (r.outcome == SearchOutcome::budget_exceeded)
                return CheckOutcome::budget_exceeded;
            return pass_if(r.found() == expected);
        }

        auto dragons(const VerifyOptions & options, VerificationReport & report) -> void
        {
            for (int d = 3; d <= 8; ++d)
                check(report, "dragon-size", "D_d has d+2 vertices and d(d+1)/2+1 edges", {{"d", d}}, [&](CheckRecord & r) {
                    auto g = dragon(d);
                    r.outcome = pass_if(g.vertex_count() == d + 2 && g.edge_count() == d * (d + 1) / 2 + 1);
                });

            for (int d = 3; d <= 5; ++d)
                check(report, "dragon-chromatic-index", "D_d is Vizing class 2 with chromatic index d+1", {{"d", d}},
                    [&](CheckRecord & r) {
                        auto g = dragon(d);
                        auto below = edge_color(g, d, options.budget);
                        auto at = edge_color(g, d + 1, options.budget);
                        r.nodes = below.stats.nodes + at.stats.nodes;
                        if (below.outcome == SearchOutcome::budget_exceeded || at.outcome == SearchOutcome::budget_exceeded)
                            r.outcome = CheckOutcome::budget_exceeded;
                        else
                            r.outcome = pass_if(below.outcome == SearchOutcome::none && at.coloring &&
                                is_proper_edge_coloring(g, *at.coloring));
                    });
        }

        auto cores(const VerifyOptions & options, VerificationReport & report) -> void
        {
            for (int d = 3; d <= 5; ++d)
                check(report, "dragon-line-graph-core", "L(D_d) is a core", {{"d", d}}, [&](CheckRecord & r) {
                    auto result = is_core(line_graph(dragon(d)).graph, options.budget);
                    r.nodes = result.stats.nodes;
                    r.outcome = result.outcome == CoreOutcome::budget_exceeded ? CheckOutcome::budget_exceeded
                                                                              : pass_if(result.outcome == CoreOutcome::core);
                });

            check(report, "dragon-line-graph-critical",
                "L(D_3) is not 3-colourable but every single-node-deleted subgraph is", {{"d", 3}}, [&](CheckRecord & r) {
                    auto line = line_graph(dragon(3)).graph;
                    auto k3 = complete_graph(3);
                    auto whole = find_hom(line, k3, options.budget);
                    r.nodes += whole.stats.nodes;
                    bool ok = whole.outcome == SearchOutcome::none;
                    for (Vertex v = 0; v < line.vertex_count(); ++v) {
                        auto part = line.without_vertex(v);
                        auto result = find_hom(part, k3, options.budget);
                        r.nodes += result.stats.nodes;
                        if (! result.mapping || ! verify_mapping(part, k3, result.mapping->map))
                            ok = false;
                    }
                    r.outcome = pass_if(ok);
                });
        }

        auto intervals(const VerifyOptions & options, VerificationReport & report) -> void
        {
            for (int n = 3; n <= 5; ++n)
                check(report, "gnd-in-interval", "L(G_{n,3}) lies in [K_3, K_4)", {{"n", n}, {"d", 3}}, [&](CheckRecord & r) {
                    r.outcome = pass_if(interval_check(build_gnd(n, 3).graph, 3, options.budget));
                });

            check(report, "interval-degree-agreement",
                "interval membership of L(G) matches the maximum degree of G (up to L(K_3) = L(K_1,3))",
                {{"graphs", options.random_graphs}, {"max_vertices", 9}, {"seed", options.seed}, {"d", {3, 4, 5}}},
                [&](CheckRecord & r) {
                    int disagreements = 0;
                    for (auto & g : random_graph_batch(options.random_graphs, 9, options.seed))
                        for (int d = 3; d <= 5; ++d)
                            if (interval_check(g, d, options.budget) != interval_degree_criterion(g, d)) {
                                ++disagreements;
                                r.detail += g.name() + " d=" + std::to_string(d) + "; ";
                            }
                    r.outcome = pass_if(disagreements == 0);
                });
        }

        auto prop8(const VerifyOptions & options, VerificationReport & report) -> void
        {
            std::map<int, GndInstance> instances;
            for (int n = 3; n <= options.max_n; ++n)
                instances.emplace(n, build_gnd(n, 3));

            for (int n = 3; n <= options.max_n; ++n)
                for (int m = 3; m <= options.max_n; ++m)
                    check(report, "gnd-hom-iff-divisible", "L(G_{n,3}) -> L(G_{m,3}) iff m divides n",
                        {{"n", n}, {"m", m}, {"d", 3}}, [&](CheckRecord & r) {
                            auto & a = instances.at(n).line.graph;
                            auto & b = instances.at(m).line.graph;
                            auto result = find_hom(a, b, options.budget);
                            r.nodes = result.stats.nodes;
                            r.outcome = outcome_of(result, n % m == 0);
                            if (result.mapping && ! verify_mapping(a, b, result.mapping->map))
                                r.outcome = CheckOutcome::fail;
                            if (n % m == 0) {
                                auto cyclic = cyclic_hom(n, m, 3);
                                if (! verify_mapping(a, b, cyclic.map))
                                    r.outcome = CheckOutcome::fail;
                            }
                        });
        }

        auto roles(const VerifyOptions & options, VerificationReport & report) -> void
        {
            std::map<int, GndInstance> instances;
            for (int n = 3; n <= options.max_n; ++n)
                instances.emplace(n, build_gnd(n, 3));

            for (int n = 3; n <= options.max_n; ++n)
                for (int m = 3; m <= options.max_n; ++m) {
                    if (n % m != 0)
                        continue;
                    check(report, "roles-preserved",
                        "homomorphisms between L(G_{n,3}) graphs keep special nodes and connecting triangles",
                        {{"n", n}, {"m", m}, {"d", 3}}, [&](CheckRecord & r) {
                            auto & a = instances.at(n).line;
                            auto & b = instances.at(m).line;
                            auto found = find_hom(a.graph, b.graph, options.budget);
                            r.nodes = found.stats.nodes;
                            if (found.outcome == SearchOutcome::budget_exceeded) {
                                r.outcome = CheckOutcome::budget_exceeded;
                                return;
                            }
                            auto cyclic = cyclic_hom(n, m, 3);
                            bool ok = found.mapping && check_roles(a.annotation, b.annotation, found.mapping->map).ok() &&
                                check_roles(a.annotation, b.annotation, cyclic.map).ok();
                            r.outcome = pass_if(ok);
                        });
                }
        }

        auto sunlets(const VerifyOptions & options, VerificationReport & report) -> void
        {
            for (int n = 3; n <= 9; ++n)
                for (int m = 3; m <= 9; ++m)
                    check(report, "sunlet-locally-injective", "S_n -> S_m locally injectively iff m divides n",
                        {{"n", n}, {"m", m}}, [&](CheckRecord & r) {
                            auto a = sunlet(n), b = sunlet(m);
                            auto result = locally_injective_hom(a, b, options.budget);
                            r.nodes = result.stats.nodes;
                            r.outcome = outcome_of(result, n % m == 0);
                            if (result.mapping && ! verify_locally_injective(a, b, result.mapping->map))
                                r.outcome = CheckOutcome::fail;
                        });
        }

        auto refinement(const VerifyOptions &, VerificationReport & report) -> void
        {
            vector<std::pair<Graph, int>> regular{{complete_graph(4), 3}, {cycle_graph(6), 2}, {petersen_graph(), 3}};
            for (auto & [g, d] : regular)
                check(report, "refinement-regular", "a d-regular graph has degree refinement matrix (d)",
                    {{"graph", g.name()}}, [&](CheckRecord & r) {
                        auto p = degree_refinement_matrix(g);
                        r.outcome = pass_if(p.matrix == vector<vector<int>>{{d}});
                    });

            for (int n = 3; n <= 6; ++n)
                check(report, "refinement-sunlet", "S_n has degree refinement matrix [[2,1],[1,0]]", {{"n", n}},
                    [&](CheckRecord & r) {
                        auto p = degree_refinement_matrix(sunlet(n));
                        r.outcome = pass_if(p.matrix == vector<vector<int>>{{2, 1}, {1, 0}});
                    });
        }

        auto example(const VerifyOptions &, VerificationReport & report) -> void
        {
            check(report, "example-embedding", "worked four-element example reproduces E and U",
                {{"labels", {3, 5, 7, 11}}}, [&](CheckRecord & r) {
                    Poset q({"3", "5", "7", "11"}, {{"7", "3"}, {"7", "5"}, {"7", "11"}, {"11", "5"}, {"3", "5"}});
                    auto labels = prime_labeling(q, vector<std::uint64_t>{3, 5, 7, 11});
                    auto e = embed_divisibility(q, labels);
                    auto u = embed_universal(q, labels);

                    vector<string> e_text, u_text;
                    for (int x = 0; x < q.size(); ++x) {
                        e_text.push_back(e[x].to_string());
                        u_text.push_back(to_string(u[x]));
                    }
                    r.detail = json{{"E", e_text}, {"U", u_text}}.dump();
                    r.outcome = pass_if(e_text == vector<string>{"3", "5", "3x5x7", "5x11"} &&
                        u_text == vector<string>{"{3}", "{3,5}", "{3x5x7}", "{3x5x7,5x11}"});
                });
        }

        auto suites() -> const std::map<string, Suite> &
        {
            static const std::map<string, Suite> table{{"dragons", dragons},
                {"cores", cores},
                {"intervals", intervals},
                {"prop8", prop8},
                {"roles", roles},
                {"sunlets", sunlets},
                {"refinement", refinement},
                {"example", example}};
            return table;
        }
    }

    auto suite_names() -> vector<string>
    {
        vector<string> result;
        for (auto & [name, _] : suites())
            result.push_back(name);
        result.push_back("all");
        return result;
    }

    auto run_suite(const string & suite, const VerifyOptions & options) -> VerificationReport
    {
        VerificationReport report;
        if (suite == "all") {
            for (auto & name : {"dragons", "cores", "intervals", "prop8", "roles", "sunlets", "refinement", "example"})
                suites().at(name)(options, report);
            return report;
        }
        auto it = suites().find(suite);
        if (it == suites().end())
            throw std::invalid_argument("unknown verification suite '" + suite + "'");
        it->second(options, report);
        return report;
    }
}
