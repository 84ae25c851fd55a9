#include "oracles.hpp"

#include <lgo/constructions.hpp>
#include <lgo/equitable_partition.hpp>
#include <lgo/generators.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace lgo;

namespace
{
    auto degree_sequence(const Graph & g) -> std::vector<int>
    {
        std::vector<int> result;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            result.push_back(g.degree(v));
        std::sort(result.rbegin(), result.rend());
        return result;
    }

    auto connected_random_graphs(int count, int max_vertices, std::uint64_t seed) -> std::vector<Graph>
    {
        std::vector<Graph> result;
        for (auto & g : random_graph_batch(count, max_vertices, seed))
            if (g.is_connected())
                result.push_back(g);
        return result;
    }
}

TEST_CASE("graph rejects malformed edge lists")
{
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric and matches the edge set")
{
    for (auto & g : random_graph_batch(30, 9, 11)) {
        std::set<Edge> edges(g.edges().begin(), g.edges().end());
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                bool expected = edges.contains({std::min(u, v), std::max(u, v)}) && u != v;
                CHECK(g.adjacent(u, v) == expected);
                CHECK(g.adjacent(u, v) == g.adjacent(v, u));
            }
    }
}

TEST_CASE("complete graphs")
{
    CHECK(complete_graph(1).vertex_count() == 1);
    CHECK(complete_graph(1).edge_count() == 0);
    CHECK(complete_graph(4).vertex_count() == 4);
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK_THROWS_AS(complete_graph(0), std::invalid_argument);

    auto triangle = complete_graph(3);
    CHECK(oracle::isomorphic(line_graph(triangle).graph, triangle));
}

TEST_CASE("sunlets")
{
    auto s5 = sunlet(5);
    CHECK(s5.vertex_count() == 10);
    CHECK(s5.edge_count() == 10);

    auto s3 = sunlet(3);
    CHECK(s3.vertex_count() == 6);
    CHECK(s3.edge_count() == 6);
    CHECK(degree_sequence(s3) == std::vector<int>{3, 3, 3, 1, 1, 1});

    CHECK_THROWS_AS(sunlet(2), std::invalid_argument);
}

TEST_CASE("dragons")
{
    CHECK(dragon(3).vertex_count() == 5);
    CHECK(dragon(3).edge_count() == 7);
    CHECK(dragon(4).vertex_count() == 6);
    CHECK(dragon(4).edge_count() == 11);
    CHECK_THROWS_AS(dragon(2), std::invalid_argument);

    // With vertices numbered from 1, vertex d+2 has degree 2 and touches 1
    // and d+1. Here that is vertex d+1 touching 0 and d.
    auto d4 = dragon(4);
    CHECK(d4.degree(5) == 2);
    CHECK(d4.adjacent(5, 0));
    CHECK(d4.adjacent(5, 4));

    for (int d = 3; d <= 8; ++d) {
        auto g = dragon(d);
        CHECK(g.vertex_count() == d + 2);
        CHECK(g.edge_count() == d * (d + 1) / 2 + 1);
        CHECK(g.max_degree() == d);
        int degree_two = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            degree_two += g.degree(v) == 2;
        CHECK(degree_two == 1);
    }
}

TEST_CASE("indicators")
{
    auto i3 = indicator(3);
    CHECK(i3.graph.vertex_count() == 8);
    CHECK(i3.graph.edge_count() == 10);
    CHECK(i3.graph.degree(i3.a) == 1);
    CHECK(i3.graph.degree(i3.b) == 1);

    auto i4 = indicator(4);
    CHECK(i4.graph.vertex_count() == 9);
    CHECK(i4.graph.edge_count() == 14);

    CHECK_THROWS_AS(indicator(2), std::invalid_argument);

    // swapping a and b is an automorphism
    for (int d = 3; d <= 5; ++d) {
        auto ind = indicator(d);
        std::vector<Vertex> swap(ind.graph.vertex_count());
        for (Vertex v = 0; v < ind.graph.vertex_count(); ++v)
            swap[v] = v == ind.a ? ind.b : v == ind.b ? ind.a : v;
        CHECK(oracle::is_hom(ind.graph, ind.graph, swap));
    }
}

TEST_CASE("line graphs of small graphs")
{
    auto p3 = line_graph(path_graph(3)).graph;
    CHECK(p3.vertex_count() == 2);
    CHECK(p3.edge_count() == 1);

    auto d3 = line_graph(dragon(3)).graph;
    CHECK(d3.vertex_count() == 7);
    CHECK(d3.edge_count() == 13);

    CHECK(line_graph(Graph(4, {})).graph.vertex_count() == 0);
}

TEST_CASE("line graph matches the pairwise definition on random graphs")
{
    for (auto & g : random_graph_batch(60, 10, 5)) {
        auto l = line_graph(g);
        auto expected = oracle::line_graph_edges(g);
        CHECK(l.graph.vertex_count() == g.edge_count());
        CHECK(std::set<Edge>(l.graph.edges().begin(), l.graph.edges().end()) == expected);

        int degree_pairs = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            degree_pairs += g.degree(v) * (g.degree(v) - 1) / 2;
        CHECK(l.graph.edge_count() == degree_pairs);

        // base_edge_of_node is a bijection onto E(G)
        std::set<Edge> base(l.annotation.base_edge_of_node.begin(), l.annotation.base_edge_of_node.end());
        CHECK(base == std::set<Edge>(g.edges().begin(), g.edges().end()));
        CHECK(static_cast<int>(l.annotation.base_edge_of_node.size()) == g.edge_count());
    }
}

TEST_CASE("indicator product examples")
{
    auto i3 = indicator(3);
    auto g53 = indicator_product(sunlet(5), i3.graph, i3.a, i3.b).graph;
    CHECK(g53.vertex_count() == 70);
    CHECK(g53.edge_count() == 100);

    // a single edge as indicator gives G back
    for (auto & g : {sunlet(3), cycle_graph(5), dragon(3)}) {
        auto same = indicator_product(g, complete_graph(2), 0, 1).graph;
        CHECK(oracle::isomorphic(same, g));
    }

    // one edge of G gives one copy of I
    for (int d = 3; d <= 4; ++d) {
        auto ind = indicator(d);
        auto copy = indicator_product(complete_graph(2), ind.graph, ind.a, ind.b).graph;
        CHECK(brute_force_isomorphic(copy, ind.graph));
    }

    CHECK_THROWS_AS(indicator_product(sunlet(3), i3.graph, i3.a, i3.a), std::invalid_argument);
    CHECK_THROWS_AS(indicator_product(sunlet(3), i3.graph, i3.a, 99), std::invalid_argument);
    CHECK_THROWS_AS(indicator_product(sunlet(3), i3.graph, -1, i3.b), std::invalid_argument);
}

TEST_CASE("indicator product vertex and edge counts")
{
    auto i3 = indicator(3);
    for (auto & g : random_graph_batch(40, 7, 17)) {
        auto p = indicator_product(g, i3.graph, i3.a, i3.b).graph;
        CHECK(p.vertex_count() == g.vertex_count() + g.edge_count() * (i3.graph.vertex_count() - 2));
        CHECK(p.edge_count() == g.edge_count() * i3.graph.edge_count());
    }
}

TEST_CASE("indicator product is unchanged up to isomorphism when a and b swap")
{
    auto i3 = indicator(3);
    for (auto & g : {path_graph(3), complete_graph(3), star_graph(3)}) {
        auto ab = indicator_product(g, i3.graph, i3.a, i3.b).graph;
        auto ba = indicator_product(g, i3.graph, i3.b, i3.a).graph;
        CHECK(brute_force_isomorphic(ab, ba));
    }
}

TEST_CASE("degree-pruned isomorphism agrees with the permutation oracle")
{
    auto graphs = random_graph_batch(40, 6, 23);
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i; j < graphs.size(); j += 3)
            CHECK(brute_force_isomorphic(graphs[i], graphs[j]) == oracle::isomorphic(graphs[i], graphs[j]));
}

TEST_CASE("G_{n,d} instances")
{
    auto g53 = build_gnd(5, 3);
    CHECK(g53.graph.vertex_count() == 70);
    CHECK(g53.line.graph.vertex_count() == 100);
    CHECK(g53.line.annotation.special_nodes.size() == 10);
    CHECK(g53.line.annotation.connecting_triangles.size() == 5);

    auto g33 = build_gnd(3, 3);
    CHECK(g33.line.graph.vertex_count() == 60);
    CHECK(g33.line.annotation.special_nodes.size() == 6);
    CHECK(g33.line.annotation.connecting_triangles.size() == 3);

    CHECK_THROWS_AS(build_gnd(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_gnd(2, 3), std::invalid_argument);
}

TEST_CASE("G_{n,d} has maximum degree exactly d and consistent roles")
{
    for (int d = 3; d <= 5; ++d)
        for (int n = 3; n <= 6; ++n) {
            auto inst = build_gnd(n, d);
            CHECK(inst.graph.max_degree() == d);
            CHECK(inst.line.graph.vertex_count() == gnd_line_node_count(n, d));
            CHECK(inst.line.graph.vertex_count() == 2 * n * (d * (d + 1) / 2 + 4));

            auto & ann = inst.line.annotation;
            std::set<Vertex> triangle_nodes;
            for (auto & t : ann.connecting_triangles) {
                CHECK(inst.line.graph.adjacent(t[0], t[1]));
                CHECK(inst.line.graph.adjacent(t[0], t[2]));
                CHECK(inst.line.graph.adjacent(t[1], t[2]));
                triangle_nodes.insert(t.begin(), t.end());
            }
            CHECK(triangle_nodes.size() == 3 * ann.connecting_triangles.size());
            for (auto s : ann.special_nodes)
                CHECK_FALSE(triangle_nodes.contains(s));
        }
    CHECK(gnd_line_node_count(315, 3) == 6300);
}

TEST_CASE("disjoint unions")
{
    auto empty = disjoint_union({});
    CHECK(empty.graph.vertex_count() == 0);
    CHECK(empty.offsets == std::vector<int>{0});

    auto two = disjoint_union({complete_graph(3), complete_graph(3)});
    CHECK(two.graph.vertex_count() == 6);
    CHECK(two.graph.edge_count() == 6);
    CHECK(two.graph.components().size() == 2);

    auto big = disjoint_union({build_gnd(9, 3).line.graph, build_gnd(15, 3).line.graph});
    CHECK(big.graph.vertex_count() == 480);
    CHECK(big.offsets == std::vector<int>{0, 180, 480});
}

TEST_CASE("degree refinement examples")
{
    auto single = [](const Graph & g, int d) {
        auto p = degree_refinement_matrix(g);
        CHECK(p.blocks.size() == 1);
        CHECK(p.matrix == std::vector<std::vector<int>>{{d}});
    };
    single(complete_graph(4), 3);
    single(cycle_graph(6), 2);
    single(petersen_graph(), 3);

    for (int n = 3; n <= 7; ++n) {
        auto p = degree_refinement_matrix(sunlet(n));
        CHECK(p.matrix == std::vector<std::vector<int>>{{2, 1}, {1, 0}});
        CHECK(p.blocks[0].size() == static_cast<std::size_t>(n));
    }

    auto star = degree_refinement_matrix(star_graph(3));
    CHECK(star.blocks == std::vector<std::vector<Vertex>>{{0}, {1, 2, 3}});
    CHECK(star.matrix == std::vector<std::vector<int>>{{0, 3}, {1, 0}});

    CHECK_THROWS_AS(degree_refinement_matrix(Graph(2, {})), std::invalid_argument);
    CHECK_THROWS_AS(degree_refinement_matrix(Graph(0, {})), std::invalid_argument);
}

TEST_CASE("degree refinement is equitable, coarsest and sums to degrees")
{
    for (auto & g : connected_random_graphs(80, 9, 31)) {
        auto p = degree_refinement_matrix(g);
        CHECK(is_equitable(g, p.blocks));

        for (std::size_t i = 0; i < p.blocks.size(); ++i) {
            int sum = 0;
            for (auto x : p.matrix[i])
                sum += x;
            for (auto v : p.blocks[i])
                CHECK(g.degree(v) == sum);
        }

        for (std::size_t i = 0; i < p.blocks.size(); ++i)
            for (std::size_t j = i + 1; j < p.blocks.size(); ++j) {
                auto merged = p.blocks;
                merged[i].insert(merged[i].end(), merged[j].begin(), merged[j].end());
                merged.erase(merged.begin() + j);
                CHECK_FALSE(is_equitable(g, merged));
            }
    }
}

TEST_CASE("isomorphic graphs give identical refinement matrices")
{
    for (auto & g : connected_random_graphs(40, 8, 37)) {
        // reverse the vertex numbering
        int n = g.vertex_count();
        std::vector<Edge> edges;
        for (auto & [u, v] : g.edges())
            edges.emplace_back(n - 1 - u, n - 1 - v);
        Graph h(n, edges);
        CHECK(degree_refinement_matrix(g).matrix == degree_refinement_matrix(h).matrix);
    }
}
