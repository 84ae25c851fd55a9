#include <lgo/generators.hpp>

#include <random>
#include <stdexcept>
#include <string>

using std::invalid_argument;
using std::to_string;
using std::vector;

namespace lgo
{
    auto complete_graph(int n) -> Graph
    {
        if (n < 1)
            throw invalid_argument("complete graph needs at least one vertex");
        vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph(n, std::move(edges), "K" + to_string(n));
    }

    auto cycle_graph(int n) -> Graph
    {
        if (n < 3)
            throw invalid_argument("cycle needs at least three vertices");
        vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return Graph(n, std::move(edges), "C" + to_string(n));
    }

    auto path_graph(int n) -> Graph
    {
        if (n < 1)
            throw invalid_argument("path needs at least one vertex");
        vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i)
            edges.emplace_back(i, i + 1);
        return Graph(n, std::move(edges), "P" + to_string(n));
    }

    auto star_graph(int leaves) -> Graph
    {
        if (leaves < 1)
            throw invalid_argument("star needs at least one leaf");
        vector<Edge> edges;
        for (int i = 1; i <= leaves; ++i)
            edges.emplace_back(0, i);
        return Graph(leaves + 1, std::move(edges), "K1," + to_string(leaves));
    }

    auto petersen_graph() -> Graph
    {
        vector<Edge> edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(i, i + 5);
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
        return Graph(10, std::move(edges), "Petersen");
    }

    auto sunlet(int n) -> Graph
    {
        if (n < 3)
            throw invalid_argument("sunlet S_n needs n >= 3, got " + to_string(n));
        vector<Edge> edges;
        for (int i = 0; i < n; ++i) {
            edges.emplace_back(i, (i + 1) % n);
            edges.emplace_back(i, n + i);
        }
        return Graph(2 * n, std::move(edges), "S" + to_string(n));
    }

    auto dragon(int d) -> Graph
    {
        if (d < 3)
            throw invalid_argument("dragon D_d needs d >= 3, got " + to_string(d));
        vector<Edge> edges;
        for (int u = 0; u <= d; ++u)
            for (int v = u + 1; v <= d; ++v)
                if (! (u == 0 && v == d))
                    edges.emplace_back(u, v);
        edges.emplace_back(0, d + 1);
        edges.emplace_back(d, d + 1);
        return Graph(d + 2, std::move(edges), "D" + to_string(d));
    }

    auto indicator(int d) -> Indicator
    {
        auto base = dragon(d);
        Vertex tip = d + 1, a = d + 2, c = d + 3, b = d + 4;
        auto edges = base.edges();
        edges.emplace_back(a, c);
        edges.emplace_back(c, b);
        edges.emplace_back(c, tip);
        return Indicator{Graph(d + 5, std::move(edges), "I" + to_string(d)), a, b, c, tip};
    }

    auto random_graph(int n, double p, std::uint64_t seed) -> Graph
    {
        if (n < 0 || p < 0.0 || p > 1.0)
            throw invalid_argument("bad random graph parameters");
        std::mt19937_64 rng(seed);
        std::bernoulli_distribution coin(p);
        vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    edges.emplace_back(u, v);
        return Graph(n, std::move(edges), "G(" + to_string(n) + ",seed=" + to_string(seed) + ")");
    }

    auto random_graph_batch(int count, int max_vertices, std::uint64_t seed) -> vector<Graph>
    {
        if (max_vertices < 2)
            throw invalid_argument("random graphs need room for two vertices");
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> size(2, max_vertices);
        std::uniform_int_distribution<int> density(1, 9);
        vector<Graph> result;
        for (int i = 0; i < count; ++i) {
            int n = size(rng);
            double p = density(rng) / 10.0;
            result.push_back(random_graph(n, p, rng()));
        }
        return result;
    }
}
