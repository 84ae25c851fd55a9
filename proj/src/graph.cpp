#include <lgo/graph.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

using std::invalid_argument;
using std::string;
using std::to_string;
using std::vector;

namespace lgo
{
    Graph::Graph(int vertex_count, vector<Edge> edges, string name) :
        _vertex_count(vertex_count),
        _edges(std::move(edges)),
        _adjacency(vertex_count < 0 ? 0 : vertex_count),
        _name(std::move(name))
    {
        if (vertex_count < 0)
            throw invalid_argument("negative vertex count");

        for (auto & [u, v] : _edges) {
            if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
                throw invalid_argument("edge {" + to_string(u) + ", " + to_string(v) + "} out of range for " + to_string(vertex_count) + " vertices");
            if (u == v)
                throw invalid_argument("self-loop at vertex " + to_string(u));
            if (u > v)
                std::swap(u, v);
        }

        std::sort(_edges.begin(), _edges.end());
        auto dup = std::adjacent_find(_edges.begin(), _edges.end());
        if (dup != _edges.end())
            throw invalid_argument("duplicate edge {" + to_string(dup->first) + ", " + to_string(dup->second) + "}");

        for (auto & [u, v] : _edges) {
            _adjacency[u].push_back(v);
            _adjacency[v].push_back(u);
        }
        for (auto & a : _adjacency)
            std::sort(a.begin(), a.end());
    }

    auto Graph::adjacent(Vertex u, Vertex v) const -> bool
    {
        if (u < 0 || u >= _vertex_count)
            return false;
        return std::binary_search(_adjacency[u].begin(), _adjacency[u].end(), v);
    }

    auto Graph::max_degree() const -> int
    {
        int result = 0;
        for (auto & a : _adjacency)
            result = std::max(result, static_cast<int>(a.size()));
        return result;
    }

    auto Graph::edge_index(Vertex u, Vertex v) const -> int
    {
        if (u > v)
            std::swap(u, v);
        auto it = std::lower_bound(_edges.begin(), _edges.end(), Edge{u, v});
        if (it == _edges.end() || *it != Edge{u, v})
            return -1;
        return static_cast<int>(it - _edges.begin());
    }

    auto Graph::components() const -> vector<vector<Vertex>>
    {
        vector<vector<Vertex>> result;
        vector<bool> seen(_vertex_count, false);
        for (Vertex s = 0; s < _vertex_count; ++s) {
            if (seen[s])
                continue;
            vector<Vertex> component{s};
            seen[s] = true;
            for (std::size_t i = 0; i < component.size(); ++i)
                for (auto w : _adjacency[component[i]])
                    if (! seen[w]) {
                        seen[w] = true;
                        component.push_back(w);
                    }
            std::sort(component.begin(), component.end());
            result.push_back(std::move(component));
        }
        return result;
    }

    auto Graph::is_connected() const -> bool
    {
        return components().size() <= 1;
    }

    auto Graph::induced(std::span<const Vertex> keep) const -> Graph
    {
        vector<int> index(_vertex_count, -1);
        for (std::size_t i = 0; i < keep.size(); ++i) {
            if (keep[i] < 0 || keep[i] >= _vertex_count || index[keep[i]] != -1)
                throw invalid_argument("bad vertex list for induced subgraph");
            index[keep[i]] = static_cast<int>(i);
        }

        vector<Edge> edges;
        for (auto & [u, v] : _edges)
            if (index[u] != -1 && index[v] != -1)
                edges.emplace_back(index[u], index[v]);
        return Graph(static_cast<int>(keep.size()), std::move(edges), _name);
    }

    auto Graph::without_vertex(Vertex v) const -> Graph
    {
        vector<Vertex> keep;
        for (Vertex u = 0; u < _vertex_count; ++u)
            if (u != v)
                keep.push_back(u);
        return induced(keep);
    }

    auto Graph::with_name(string name) const -> Graph
    {
        Graph result = *this;
        result._name = std::move(name);
        return result;
    }

    auto brute_force_isomorphic(const Graph & a, const Graph & b) -> bool
    {
        if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
            return false;

        vector<int> da, db;
        for (Vertex v = 0; v < a.vertex_count(); ++v) {
            da.push_back(a.degree(v));
            db.push_back(b.degree(v));
        }
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db)
            return false;

        // Vertex-by-vertex extension keeping degrees and adjacency consistent.
        int n = a.vertex_count();
        vector<Vertex> image(n, -1);
        vector<bool> used(n, false);
        auto extend = [&](auto & self, Vertex v) -> bool {
            if (v == n)
                return true;
            for (Vertex t = 0; t < n; ++t) {
                if (used[t] || a.degree(v) != b.degree(t))
                    continue;
                bool ok = true;
                for (Vertex u = 0; u < v && ok; ++u)
                    ok = a.adjacent(u, v) == b.adjacent(image[u], t);
                if (! ok)
                    continue;
                image[v] = t;
                used[t] = true;
                if (self(self, v + 1))
                    return true;
                used[t] = false;
            }
            return false;
        };
        return extend(extend, 0);
    }
}
