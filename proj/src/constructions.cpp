#include <lgo/constructions.hpp>

#include <boost/pending/disjoint_sets.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

using std::invalid_argument;
using std::string;
using std::to_string;
using std::vector;

namespace lgo
{
    auto line_graph(const Graph & g) -> LineGraph
    {
        vector<vector<int>> incident(g.vertex_count());
        for (int e = 0; e < g.edge_count(); ++e) {
            incident[g.edges()[e].first].push_back(e);
            incident[g.edges()[e].second].push_back(e);
        }

        vector<Edge> edges;
        for (auto & list : incident)
            for (std::size_t i = 0; i < list.size(); ++i)
                for (std::size_t j = i + 1; j < list.size(); ++j)
                    edges.emplace_back(list[i], list[j]);

        LineGraph result{Graph(g.edge_count(), std::move(edges), "L(" + g.name() + ")"), {}};
        result.annotation.base_edge_of_node = g.edges();
        return result;
    }

    auto indicator_product(const Graph & g, const Graph & indicator, Vertex a, Vertex b) -> IndicatorProduct
    {
        int ni = indicator.vertex_count();
        if (a == b)
            throw invalid_argument("indicator terminals must differ");
        if (a < 0 || b < 0 || a >= ni || b >= ni)
            throw invalid_argument("indicator terminal out of range");

        int copies = g.edge_count();
        auto element = [&](int e, Vertex x) { return e * ni + x; };

        // Quotient of (oriented edges) x V_I under the three gluing rules.
        // Orientation: each edge runs from its lower to its higher endpoint.
        boost::disjoint_sets_with_storage<> classes(copies * ni);
        for (int e = 0; e < copies * ni; ++e)
            classes.make_set(e);

        for (int e = 0; e < copies; ++e)
            for (int f = 0; f < copies; ++f) {
                auto [x, y] = g.edges()[e];
                auto [x2, y2] = g.edges()[f];
                if (x == x2)
                    classes.union_set(element(e, a), element(f, a));
                if (y == y2)
                    classes.union_set(element(e, b), element(f, b));
                if (y == x2)
                    classes.union_set(element(e, b), element(f, a));
            }

        int interior = ni - 2;
        vector<int> index_of_class(copies * ni, -1);
        auto assign = [&](int elem, int index) {
            auto root = static_cast<int>(classes.find_set(elem));
            if (index_of_class[root] != -1 && index_of_class[root] != index)
                throw std::logic_error("indicator quotient merged distinct vertices");
            index_of_class[root] = index;
        };

        for (int e = 0; e < copies; ++e) {
            assign(element(e, a), g.edges()[e].first);
            assign(element(e, b), g.edges()[e].second);
            int rank = 0;
            for (Vertex x = 0; x < ni; ++x)
                if (x != a && x != b)
                    assign(element(e, x), g.vertex_count() + e * interior + rank++);
        }

        auto vertex_of = [&](int e, Vertex x) { return index_of_class[classes.find_set(element(e, x))]; };

        vector<Edge> edges;
        vector<std::pair<int, int>> origin_unsorted;
        for (int e = 0; e < copies; ++e)
            for (int t = 0; t < indicator.edge_count(); ++t) {
                auto [s, u] = indicator.edges()[t];
                edges.emplace_back(vertex_of(e, s), vertex_of(e, u));
                origin_unsorted.emplace_back(e, t);
            }

        IndicatorProduct result{
            Graph(g.vertex_count() + copies * interior, edges, g.name() + "*" + indicator.name()), {}};

        result.edge_origin.resize(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i)
            result.edge_origin[result.graph.edge_index(edges[i].first, edges[i].second)] = origin_unsorted[i];
        return result;
    }

    auto build_gnd(int n, int d) -> GndInstance
    {
        if (n < 3)
            throw invalid_argument("G_{n,d} needs n >= 3, got " + to_string(n));
        if (d < 3)
            throw invalid_argument("G_{n,d} needs d >= 3, got " + to_string(d));

        auto base = sunlet(n);
        auto ind = indicator(d);
        auto product = indicator_product(base, ind.graph, ind.a, ind.b);
        auto name = "G" + to_string(n) + "_" + to_string(d);

        GndInstance result{n, d, product.graph.with_name(name), line_graph(product.graph), product.edge_origin};
        result.line.graph = result.line.graph.with_name("L(" + name + ")");

        int connector = ind.graph.edge_index(ind.c, ind.dragon_tip);
        auto & roles = result.line.annotation;
        for (int node = 0; node < product.graph.edge_count(); ++node)
            if (product.edge_origin[node].second == connector)
                roles.special_nodes.push_back(node);

        // Sunlet vertices of degree 3 are the cycle vertices 0..n-1; in the
        // product they keep their index and are met by exactly three edges.
        for (Vertex v = 0; v < n; ++v) {
            vector<Vertex> nodes;
            for (auto w : result.graph.neighbours(v))
                nodes.push_back(result.graph.edge_index(v, w));
            if (nodes.size() != 3)
                throw std::logic_error("cycle vertex of G_{n,d} without degree 3");
            std::sort(nodes.begin(), nodes.end());
            roles.connecting_triangles.push_back({nodes[0], nodes[1], nodes[2]});
        }
        std::sort(roles.connecting_triangles.begin(), roles.connecting_triangles.end());
        return result;
    }

    auto gnd_line_node_count(long long n, int d) -> long long
    {
        long long indicator_edges = static_cast<long long>(d) * (d + 1) / 2 + 1 + 3;
        return 2 * n * indicator_edges;
    }

    auto disjoint_union(const vector<Graph> & parts) -> DisjointUnion
    {
        DisjointUnion result;
        vector<Edge> edges;
        string name;
        int offset = 0;
        for (auto & part : parts) {
            result.offsets.push_back(offset);
            for (auto & [u, v] : part.edges())
                edges.emplace_back(u + offset, v + offset);
            offset += part.vertex_count();
            name += (name.empty() ? "" : "+") + part.name();
        }
        result.offsets.push_back(offset);
        result.graph = Graph(offset, std::move(edges), name);
        return result;
    }
}
