#ifndef LGO_GENERATORS_HPP
#define LGO_GENERATORS_HPP

#include <lgo/graph.hpp>

#include <cstdint>
#include <vector>

namespace lgo
{
    auto complete_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;
    auto star_graph(int leaves) -> Graph;
    auto petersen_graph() -> Graph;

    /// Cycle 0..n-1 with the pendant vertex n+i hanging off cycle vertex i.
    auto sunlet(int n) -> Graph;

    /// K_{d+1} on vertices 0..d with the edge {0, d} replaced by the path
    /// 0 - (d+1) - d. Vertex d+1 is the unique vertex of degree 2.
    auto dragon(int d) -> Graph;

    /// Dragon plus the path a - c - b, with c joined to the dragon's degree-2
    /// vertex. Swapping a and b (fixing everything else) is an automorphism.
    struct Indicator
    {
        Graph graph;
        Vertex a, b, c;
        Vertex dragon_tip;  // degree-2 vertex of the dragon
    };

    auto indicator(int d) -> Indicator;

    /// G(n, p) with a fixed seed; identical seeds give identical graphs.
    auto random_graph(int n, double p, std::uint64_t seed) -> Graph;

    /// `count` graphs with 2..max_vertices vertices and edge densities spread
    /// over [0.1, 0.9], all derived from one seed.
    auto random_graph_batch(int count, int max_vertices, std::uint64_t seed) -> std::vector<Graph>;
}

#endif
