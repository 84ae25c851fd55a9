#include <lgo/equitable_partition.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

using std::vector;

namespace lgo
{
    namespace
    {
        auto counts_per_block(const Graph & g, const vector<int> & colour, int blocks, Vertex v) -> vector<int>
        {
            vector<int> counts(blocks, 0);
            for (auto w : g.neighbours(v))
                ++counts[colour[w]];
            return counts;
        }
    }

    auto degree_refinement_matrix(const Graph & g) -> EquitablePartition
    {
        if (g.vertex_count() == 0 || ! g.is_connected())
            throw std::invalid_argument("degree refinement needs a connected non-empty graph");

        int n = g.vertex_count();
        vector<int> colour(n);

        // Start from the degree partition, highest degree first.
        vector<int> degrees;
        for (Vertex v = 0; v < n; ++v)
            degrees.push_back(g.degree(v));
        std::sort(degrees.begin(), degrees.end(), std::greater<>());
        degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
        for (Vertex v = 0; v < n; ++v)
            colour[v] = static_cast<int>(std::find(degrees.begin(), degrees.end(), g.degree(v)) - degrees.begin());
        int blocks = static_cast<int>(degrees.size());

        while (true) {
            using Signature = std::pair<int, vector<int>>;
            auto order = [](const Signature & x, const Signature & y) {
                if (x.first != y.first)
                    return x.first < y.first;
                return x.second > y.second;
            };
            std::map<Signature, int, decltype(order)> ranks(order);
            vector<Signature> signatures;
            for (Vertex v = 0; v < n; ++v) {
                signatures.emplace_back(colour[v], counts_per_block(g, colour, blocks, v));
                ranks.emplace(signatures.back(), 0);
            }

            int next = 0;
            for (auto & [_, rank] : ranks)
                rank = next++;

            for (Vertex v = 0; v < n; ++v)
                colour[v] = ranks.at(signatures[v]);

            if (next == blocks)
                break;
            blocks = next;
        }

        EquitablePartition result;
        result.blocks.resize(blocks);
        for (Vertex v = 0; v < n; ++v)
            result.blocks[colour[v]].push_back(v);
        for (auto & block : result.blocks)
            result.matrix.push_back(counts_per_block(g, colour, blocks, block.front()));
        return result;
    }

    auto is_equitable(const Graph & g, const vector<vector<Vertex>> & blocks) -> bool
    {
        vector<int> colour(g.vertex_count(), -1);
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (auto v : blocks[i]) {
                if (v < 0 || v >= g.vertex_count() || colour[v] != -1)
                    return false;
                colour[v] = static_cast<int>(i);
            }
        if (std::count(colour.begin(), colour.end(), -1) != 0)
            return false;

        int k = static_cast<int>(blocks.size());
        for (auto & block : blocks) {
            if (block.empty())
                return false;
            auto expected = counts_per_block(g, colour, k, block.front());
            for (auto v : block)
                if (counts_per_block(g, colour, k, v) != expected)
                    return false;
        }
        return true;
    }
}
