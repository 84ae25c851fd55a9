#include <lgo/constructions.hpp>
#include <lgo/edge_coloring.hpp>
#include <lgo/generators.hpp>

#include <bit>
#include <cstdint>
#include <stdexcept>

using std::vector;

namespace lgo
{
    auto has_overfull_subgraph(const Graph & g, int k, int max_vertices) -> bool
    {
        vector<Vertex> active;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) > 0)
                active.push_back(v);
        if (static_cast<int>(active.size()) > max_vertices)
            return false;

        vector<int> position(g.vertex_count(), -1);
        for (std::size_t i = 0; i < active.size(); ++i)
            position[active[i]] = static_cast<int>(i);

        std::uint32_t subsets = 1u << active.size();
        for (std::uint32_t s = 1; s < subsets; ++s) {
            int size = std::popcount(s);
            if (size % 2 == 0)
                continue;
            long long spanned = 0;
            for (auto & [u, v] : g.edges())
                if ((s >> position[u] & 1u) && (s >> position[v] & 1u))
                    ++spanned;
            if (spanned > static_cast<long long>(k) * (size - 1) / 2)
                return true;
        }
        return false;
    }

    auto is_proper_edge_coloring(const Graph & g, const EdgeColoring & coloring) -> bool
    {
        if (static_cast<int>(coloring.colors.size()) != g.edge_count())
            return false;
        for (auto c : coloring.colors)
            if (c < 0 || c >= coloring.k)
                return false;
        vector<vector<bool>> seen(g.vertex_count(), vector<bool>(coloring.k, false));
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edges()[e];
            auto c = coloring.colors[e];
            if (seen[u][c] || seen[v][c])
                return false;
            seen[u][c] = seen[v][c] = true;
        }
        return true;
    }

    auto edge_color(const Graph & g, int k, const SearchBudget & budget) -> EdgeColoringResult
    {
        if (k < 0)
            throw std::invalid_argument("number of colours must be non-negative");

        EdgeColoringResult result;
        if (g.edge_count() == 0) {
            result.outcome = SearchOutcome::found;
            result.coloring = EdgeColoring{k, {}};
            return result;
        }
        if (k == 0 || g.max_degree() > k || has_overfull_subgraph(g, k))
            return result;

        auto line = line_graph(g).graph;
        auto hom = find_hom(line, complete_graph(k), budget);
        result.outcome = hom.outcome;
        result.stats = hom.stats;
        if (hom.mapping)
            result.coloring = EdgeColoring{k, hom.mapping->map};
        return result;
    }

    auto chromatic_index(const Graph & g, const SearchBudget & budget) -> int
    {
        if (g.edge_count() == 0)
            throw std::invalid_argument("chromatic index of an edgeless graph");

        int delta = g.max_degree();
        for (int k = delta; k <= delta + 1; ++k) {
            auto attempt = edge_color(g, k, budget);
            if (attempt.outcome == SearchOutcome::budget_exceeded)
                throw BudgetExhausted("edge colouring search ran out of budget");
            if (attempt.outcome == SearchOutcome::found)
                return k;
        }
        throw std::logic_error("no (max degree + 1)-edge-colouring found");
    }

    auto vizing_class(const Graph & g, const SearchBudget & budget) -> int
    {
        return chromatic_index(g, budget) == g.max_degree() ? 1 : 2;
    }
}
