#include <lgo/constructions.hpp>
#include <lgo/cyclic.hpp>
#include <lgo/generators.hpp>

#include <map>
#include <stdexcept>

namespace lgo
{
    auto cyclic_hom(int n, int n_prime, int d) -> HomMapping
    {
        if (n < 3 || n_prime < 3 || d < 3)
            throw std::invalid_argument("cyclic homomorphism needs n, n', d >= 3");
        if (n % n_prime != 0)
            throw std::invalid_argument(std::to_string(n_prime) + " does not divide " + std::to_string(n));

        auto source = build_gnd(n, d);
        auto target = build_gnd(n_prime, d);
        auto small = sunlet(n_prime);
        auto ind = indicator(d);

        auto wrap = [&](Vertex v) { return v < n ? v % n_prime : n_prime + (v - n) % n_prime; };

        // The a <-> b swap permutes the indicator's edges.
        auto swapped_edge = [&](int t) {
            auto flip = [&](Vertex x) { return x == ind.a ? ind.b : x == ind.b ? ind.a : x; };
            auto [x, y] = ind.graph.edges()[t];
            return ind.graph.edge_index(flip(x), flip(y));
        };

        std::map<std::pair<int, int>, Vertex> target_node;
        for (Vertex node = 0; node < target.line.graph.vertex_count(); ++node)
            target_node[target.node_origin[node]] = node;

        auto big = sunlet(n);
        HomMapping result{source.line.graph.name(), target.line.graph.name(), {}};
        for (Vertex node = 0; node < source.line.graph.vertex_count(); ++node) {
            auto [copy, t] = source.node_origin[node];
            auto [x, y] = big.edges()[copy];
            auto fx = wrap(x), fy = wrap(y);
            int image_copy = small.edge_index(fx, fy);
            int image_edge = fx < fy ? t : swapped_edge(t);
            result.map.push_back(target_node.at({image_copy, image_edge}));
        }
        return result;
    }
}
