// One line per acceptance criterion; exit status is nonzero if any fails.

#include "oracles.hpp"

#include <lgo/constructions.hpp>
#include <lgo/core.hpp>
#include <lgo/cyclic.hpp>
#include <lgo/edge_coloring.hpp>
#include <lgo/embedding.hpp>
#include <lgo/equitable_partition.hpp>
#include <lgo/generators.hpp>
#include <lgo/interval.hpp>
#include <lgo/realize.hpp>
#include <lgo/roles.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

using namespace lgo;
using std::string;
using std::vector;

namespace
{
    struct Outcome
    {
        bool ok = true;
        std::ostringstream note;

        auto expect(bool condition, const string & what) -> void
        {
            if (! condition) {
                ok = false;
                note << " [failed: " << what << "]";
            }
        }
    };

    int failures = 0;

    auto criterion(int number, const string & title, const std::function<void(Outcome &)> & body) -> void
    {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            body(o);
        }
        catch (const std::exception & e) {
            o.ok = false;
            o.note << " [exception: " << e.what() << "]";
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += ! o.ok;
        std::printf("%s  %2d  %s (%.2fs)%s\n", o.ok ? "PASS" : "FAIL", number, title.c_str(), seconds, o.note.str().c_str());
        std::fflush(stdout);
    }

    auto pair_text(int n, int m) -> string
    {
        return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
    }

    // Canonical form of a partial order under relabelling, for counting
    // isomorphism types.
    auto canonical(const vector<vector<bool>> & r) -> vector<bool>
    {
        int n = static_cast<int>(r.size());
        vector<int> perm(n);
        for (int i = 0; i < n; ++i)
            perm[i] = i;
        vector<bool> best;
        do {
            vector<bool> code;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    code.push_back(r[perm[x]][perm[y]]);
            if (best.empty() || code < best)
                best = code;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }
}

int main()
{
    const auto ten_minutes = SearchBudget::with_seconds(600);

    criterion(1, "dragon D_d has d+2 vertices and d(d+1)/2+1 edges, d=3..8", [](Outcome & o) {
        for (int d = 3; d <= 8; ++d) {
            auto g = dragon(d);
            o.expect(g.vertex_count() == d + 2 && g.edge_count() == d * (d + 1) / 2 + 1, "d=" + std::to_string(d));
        }
    });

    criterion(2, "chromatic index of D_d is d+1 and Vizing class is 2, d=3..5", [](Outcome & o) {
        for (int d = 3; d <= 5; ++d) {
            auto g = dragon(d);
            o.expect(chromatic_index(g) == d + 1, "chi' d=" + std::to_string(d));
            o.expect(vizing_class(g) == 2, "class d=" + std::to_string(d));
        }
        // independent check by exhaustive colouring
        o.expect(oracle::chromatic_index(dragon(3)) == 4, "oracle d=3");
    });

    criterion(3, "Vizing bound on 200 seeded random graphs with at most 10 vertices", [](Outcome & o) {
        int checked = 0;
        for (auto & g : random_graph_batch(200, 10, 3)) {
            if (g.edge_count() == 0)
                continue;
            ++checked;
            int k = chromatic_index(g);
            o.expect(g.max_degree() <= k && k <= g.max_degree() + 1, g.name());
        }
        o.note << " " << checked << " graphs with edges";
    });

    criterion(4, "L(D_d) is a core for d=3..5; L(D_3) minus any node is 3-colourable", [](Outcome & o) {
        for (int d = 3; d <= 5; ++d)
            o.expect(is_core(line_graph(dragon(d)).graph).outcome == CoreOutcome::core, "core d=" + std::to_string(d));
        auto line = line_graph(dragon(3)).graph;
        auto k3 = complete_graph(3);
        o.expect(! oracle::hom_exists(line, k3), "L(D_3) itself 3-colourable");
        for (Vertex v = 0; v < line.vertex_count(); ++v) {
            auto part = line.without_vertex(v);
            auto r = find_hom(part, k3);
            o.expect(r.found() && verify_mapping(part, k3, r.mapping->map), "node " + std::to_string(v));
            o.expect(oracle::hom_exists(part, k3), "oracle node " + std::to_string(v));
        }
    });

    criterion(5, "L(G_{n,3}) in [K_3,K_4) for n=3..5; interval check matches degree criterion on 100 random graphs",
        [](Outcome & o) {
            for (int n = 3; n <= 5; ++n)
                o.expect(interval_check(build_gnd(n, 3).graph, 3), "n=" + std::to_string(n));

            int triangle_cases = 0, agreements = 0;
            for (auto & g : random_graph_batch(100, 9, 5)) {
                bool in = interval_check(g, 3);
                bool criterion = interval_degree_criterion(g, 3);
                o.expect(in == criterion, g.name());
                agreements += in == criterion;
                // L(K_3) = L(K_1,3): a triangle component with maximum degree 2
                // also lands in the interval
                triangle_cases += g.max_degree() == 2 && has_triangle_component(g);
            }
            o.note << " " << agreements << "/100 agree, " << triangle_cases << " via a triangle component";
        });

    std::map<int, LineGraph> lines;
    auto line_of = [&](int n) -> const LineGraph & {
        auto it = lines.find(n);
        if (it == lines.end())
            it = lines.emplace(n, build_gnd(n, 3).line).first;
        return it->second;
    };

    vector<std::tuple<int, int, vector<Vertex>>> mappings;

    criterion(6, "cyclic homomorphisms L(G_{n,3}) -> L(G_{n',3}) pass verify_mapping", [&](Outcome & o) {
        for (auto [n, m] : {std::pair{3, 3}, {6, 3}, {9, 3}, {8, 4}}) {
            auto c = cyclic_hom(n, m, 3);
            o.expect(verify_mapping(line_of(n).graph, line_of(m).graph, c.map), pair_text(n, m));
            o.expect(oracle::is_hom(line_of(n).graph, line_of(m).graph, c.map), "oracle " + pair_text(n, m));
            mappings.emplace_back(n, m, c.map);
        }
    });

    criterion(7, "complete search refutes L(G_{n,3}) -> L(G_{n',3}) for (3,4),(4,3),(4,6),(5,3)", [&](Outcome & o) {
        for (auto [n, m] : {std::pair{3, 4}, {4, 3}, {4, 6}, {5, 3}}) {
            auto r = find_hom(line_of(n).graph, line_of(m).graph, ten_minutes);
            o.expect(r.outcome == SearchOutcome::none, pair_text(n, m) + " " + to_string(r.outcome));
            o.note << " " << pair_text(n, m) << ":" << r.stats.nodes << " nodes";
        }
    });

    criterion(8, "found mappings send special nodes to special nodes and connecting triangles to connecting triangles",
        [&](Outcome & o) {
            for (int n = 3; n <= 6; ++n)
                for (int m = 3; m <= 6; ++m) {
                    auto r = find_hom(line_of(n).graph, line_of(m).graph, ten_minutes);
                    o.expect(r.outcome != SearchOutcome::budget_exceeded, "budget " + pair_text(n, m));
                    o.expect(r.found() == (n % m == 0), "existence " + pair_text(n, m));
                    if (r.mapping)
                        mappings.emplace_back(n, m, r.mapping->map);
                }
            for (auto & [n, m, map] : mappings) {
                auto roles = check_roles(line_of(n).annotation, line_of(m).annotation, map);
                o.expect(roles.special_to_special, "special " + pair_text(n, m));
                o.expect(roles.triangle_to_triangle, "triangles " + pair_text(n, m));
            }
            o.note << " " << mappings.size() << " mappings";
        });

    criterion(9, "locally injective S_n -> S_m exists iff m divides n, n,m=3..9", [](Outcome & o) {
        for (int n = 3; n <= 9; ++n)
            for (int m = 3; m <= 9; ++m) {
                auto a = sunlet(n), b = sunlet(m);
                auto r = locally_injective_hom(a, b, SearchBudget::with_seconds(120));
                o.expect(r.outcome != SearchOutcome::budget_exceeded, "budget " + pair_text(n, m));
                o.expect(r.found() == (n % m == 0), pair_text(n, m));
                if (r.mapping)
                    o.expect(oracle::is_hom(a, b, r.mapping->map) && oracle::is_locally_injective(a, r.mapping->map),
                        "mapping " + pair_text(n, m));
            }
    });

    criterion(10, "degree refinement: (d) for K_4, C_6, Petersen; [[2,1],[1,0]] for sunlets", [](Outcome & o) {
        o.expect(degree_refinement_matrix(complete_graph(4)).matrix == vector<vector<int>>{{3}}, "K_4");
        o.expect(degree_refinement_matrix(cycle_graph(6)).matrix == vector<vector<int>>{{2}}, "C_6");
        o.expect(degree_refinement_matrix(petersen_graph()).matrix == vector<vector<int>>{{3}}, "Petersen");
        for (int n = 3; n <= 9; ++n)
            o.expect(degree_refinement_matrix(sunlet(n)).matrix == vector<vector<int>>{{2, 1}, {1, 0}},
                "S_" + std::to_string(n));
    });

    criterion(11, "worked example with labels 3,5,7,11 reproduces E and U", [](Outcome & o) {
        Poset q({"3", "5", "7", "11"}, {{"7", "3"}, {"7", "5"}, {"7", "11"}, {"11", "5"}, {"3", "5"}});
        auto labels = prime_labeling(q, vector<std::uint64_t>{3, 5, 7, 11});
        auto e = embed_divisibility(q, labels);
        auto u = embed_universal(q, labels);

        vector<std::uint64_t> e_values;
        for (auto & s : e)
            e_values.push_back(s.value().value_or(0));
        o.expect(e_values == vector<std::uint64_t>{3, 5, 105, 55}, "E");

        auto values = [](const UniversalImage & image) {
            std::set<std::uint64_t> result;
            for (auto & s : image)
                result.insert(s.value().value_or(0));
            return result;
        };
        o.expect(values(u[0]) == std::set<std::uint64_t>{3}, "U(3)");
        o.expect(values(u[1]) == std::set<std::uint64_t>{5, 3}, "U(5)");
        o.expect(values(u[2]) == std::set<std::uint64_t>{105}, "U(7)");
        o.expect(values(u[3]) == std::set<std::uint64_t>{105, 55}, "U(11)");
    });

    criterion(12, "U(x) <=_P U(y) iff x <=_Q y on every poset with at most 4 elements", [](Outcome & o) {
        int posets = 0;
        std::set<vector<bool>> types;
        for (int n = 1; n <= 4; ++n)
            for (auto & r : oracle::all_partial_orders(n)) {
                ++posets;
                if (n == 4)
                    types.insert(canonical(r));
                vector<string> elements;
                vector<std::pair<int, int>> pairs;
                for (int x = 0; x < n; ++x) {
                    elements.push_back(std::to_string(x));
                    for (int y = 0; y < n; ++y)
                        if (x != y && r[x][y])
                            pairs.emplace_back(x, y);
                }
                auto q = Poset::from_indices(elements, pairs);
                auto u = embed_universal(q, prime_labeling(q));
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        if (leq_p(u[x], u[y]) != r[x][y])
                            o.expect(false, "poset #" + std::to_string(posets) + " pair " + pair_text(x, y));
            }
        o.expect(types.size() == 16, "16 isomorphism types on 4 elements");
        o.note << " " << posets << " labelled posets, " << types.size() << " types on 4 elements";
    });

    criterion(13, "realized 2-chain and 2-antichain (labels 3,5, d=3) match the order exactly", [](Outcome & o) {
        auto budget = SearchBudget::with_seconds(900);
        Poset chain({"x", "y"}, {{"x", "y"}});
        Poset antichain({"x", "y"}, {});
        for (auto * q : {&chain, &antichain}) {
            auto report = verify_realization(*q, prime_labeling(*q, vector<std::uint64_t>{3, 5}), 3, budget);
            o.expect(report.ok, q == &chain ? "chain" : "antichain");
            for (auto & p : report.pairs)
                o.expect(p.found != SearchOutcome::budget_exceeded, "budget " + p.src + "->" + p.dst);
        }
    });

    criterion(14, "find_hom agrees with brute-force enumeration on 100 seeded random pairs", [](Outcome & o) {
        auto sources = random_graph_batch(100, 6, 14);
        auto targets = random_graph_batch(100, 5, 41);
        int exists = 0;
        for (int i = 0; i < 100; ++i) {
            auto r = find_hom(sources[i], targets[i]);
            bool truth = oracle::hom_exists(sources[i], targets[i]);
            exists += truth;
            o.expect(r.outcome != SearchOutcome::budget_exceeded && r.found() == truth, "pair " + std::to_string(i));
            if (r.mapping)
                o.expect(oracle::is_hom(sources[i], targets[i], r.mapping->map), "mapping " + std::to_string(i));
        }
        o.note << " " << exists << " with a homomorphism";
    });

    std::printf("%d of 14 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
