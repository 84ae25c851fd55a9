#ifndef LGO_EDGE_COLORING_HPP
#define LGO_EDGE_COLORING_HPP

#include <lgo/graph.hpp>
#include <lgo/hom.hpp>

#include <optional>
#include <span>
#include <vector>

namespace lgo
{
    /// colors[i] is the colour of edge i of the graph, in [0, k).
    struct EdgeColoring
    {
        int k = 0;
        std::vector<int> colors;
    };

    struct EdgeColoringResult
    {
        SearchOutcome outcome = SearchOutcome::none;
        std::optional<EdgeColoring> coloring;
        SearchStats stats;
    };

    /// Proper k-edge-colouring found as a homomorphism L(G) -> K_k, or an
    /// exhaustive refutation. Overfull odd subgraphs are ruled out up front.
    auto edge_color(const Graph & g, int k, const SearchBudget & budget = {}) -> EdgeColoringResult;

    auto is_proper_edge_coloring(const Graph & g, const EdgeColoring & coloring) -> bool;

    /// True if some odd vertex set S spans more than k * (|S| - 1) / 2
    /// edges, which rules out a k-edge-colouring. Only checked exhaustively
    /// for graphs with at most `max_vertices` non-isolated vertices.
    auto has_overfull_subgraph(const Graph & g, int k, int max_vertices = 16) -> bool;

    /// Throws std::invalid_argument on an edgeless graph, BudgetExhausted if
    /// the search runs out.
    auto chromatic_index(const Graph & g, const SearchBudget & budget = {}) -> int;

    /// 1 when the chromatic index equals the maximum degree, otherwise 2.
    auto vizing_class(const Graph & g, const SearchBudget & budget = {}) -> int;
}

#endif
