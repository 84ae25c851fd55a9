#ifndef LGO_GRAPH_HPP
#define LGO_GRAPH_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lgo
{
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;

    /// Immutable undirected simple graph. Edges are stored normalised (u < v)
    /// and sorted lexicographically, so two graphs built from the same edge set
    /// compare equal regardless of insertion order.
    class Graph
    {
    public:
        Graph() = default;

        /// Throws std::invalid_argument on self-loops, duplicate edges or
        /// out-of-range endpoints.
        Graph(int vertex_count, std::vector<Edge> edges, std::string name = "");

        auto vertex_count() const -> int { return _vertex_count; }
        auto edge_count() const -> int { return static_cast<int>(_edges.size()); }
        auto edges() const -> const std::vector<Edge> & { return _edges; }
        auto name() const -> const std::string & { return _name; }

        auto neighbours(Vertex v) const -> std::span<const Vertex> { return _adjacency[v]; }
        auto degree(Vertex v) const -> int { return static_cast<int>(_adjacency[v].size()); }
        auto adjacent(Vertex u, Vertex v) const -> bool;

        auto max_degree() const -> int;

        /// Index of the edge {u, v} in edges(), or -1.
        auto edge_index(Vertex u, Vertex v) const -> int;

        /// Connected components, each sorted, ordered by smallest vertex.
        auto components() const -> std::vector<std::vector<Vertex>>;
        auto is_connected() const -> bool;

        /// Subgraph induced by `keep`; vertex i of the result is keep[i].
        auto induced(std::span<const Vertex> keep) const -> Graph;
        auto without_vertex(Vertex v) const -> Graph;

        auto with_name(std::string name) const -> Graph;

        friend auto operator==(const Graph & a, const Graph & b) -> bool
        {
            return a._vertex_count == b._vertex_count && a._edges == b._edges;
        }

    private:
        int _vertex_count = 0;
        std::vector<Edge> _edges;
        std::vector<std::vector<Vertex>> _adjacency;
        std::string _name;
    };

    /// Brute-force isomorphism test, only meant for graphs of a dozen or so
    /// vertices.
    auto brute_force_isomorphic(const Graph & a, const Graph & b) -> bool;
}

#endif
