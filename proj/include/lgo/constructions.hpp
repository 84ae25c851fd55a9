#ifndef LGO_CONSTRUCTIONS_HPP
#define LGO_CONSTRUCTIONS_HPP

#include <lgo/generators.hpp>
#include <lgo/graph.hpp>

#include <array>
#include <vector>

namespace lgo
{
    using Triangle = std::array<Vertex, 3>;

    /// Where each line-graph node came from, plus the roles used by the
    /// rigidity arguments. Roles are empty unless the line graph was built by
    /// build_gnd().
    struct LineGraphAnnotation
    {
        std::vector<Edge> base_edge_of_node;
        std::vector<Vertex> special_nodes;             // sorted
        std::vector<Triangle> connecting_triangles;    // each sorted, list sorted
    };

    struct LineGraph
    {
        Graph graph;
        LineGraphAnnotation annotation;
    };

    /// Node i of the result is edge i of g (in g.edges() order).
    auto line_graph(const Graph & g) -> LineGraph;

    /// G * I(a, b). Every edge {x, y} of g (x < y) is replaced by a copy of the
    /// indicator with a glued to x and b glued to y. Vertices 0..|V_G|-1 of the
    /// result are the vertices of g; the remaining vertices of copy e are
    /// |V_G| + e * (|V_I| - 2) + rank, ranking indicator vertices other than a
    /// and b by index.
    struct IndicatorProduct
    {
        Graph graph;
        /// For each product edge (in graph.edges() order): the g-edge whose copy
        /// it lies in and the indicator edge it is a copy of.
        std::vector<std::pair<int, int>> edge_origin;
    };

    auto indicator_product(const Graph & g, const Graph & indicator, Vertex a, Vertex b) -> IndicatorProduct;

    /// G_{n,d} = S_n * I_d(a, b) together with its annotated line graph.
    struct GndInstance
    {
        int n, d;
        Graph graph;
        LineGraph line;
        /// For each line-graph node: the sunlet edge whose indicator copy it
        /// lies in and the indicator edge it copies.
        std::vector<std::pair<int, int>> node_origin;
    };

    auto build_gnd(int n, int d) -> GndInstance;

    /// Number of nodes of L(G_{n,d}), without building it.
    auto gnd_line_node_count(long long n, int d) -> long long;

    struct DisjointUnion
    {
        Graph graph;
        std::vector<int> offsets;  // first vertex of each part; size = parts + 1
    };

    auto disjoint_union(const std::vector<Graph> & parts) -> DisjointUnion;
}

#endif
