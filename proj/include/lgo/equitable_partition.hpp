#ifndef LGO_EQUITABLE_PARTITION_HPP
#define LGO_EQUITABLE_PARTITION_HPP

#include <lgo/graph.hpp>

#include <vector>

namespace lgo
{
    /// Coarsest equitable partition (degree refinement) of a connected graph.
    /// matrix[i][j] is the number of neighbours every vertex of blocks[i] has
    /// in blocks[j].
    struct EquitablePartition
    {
        std::vector<std::vector<Vertex>> blocks;
        std::vector<std::vector<int>> matrix;
    };

    /// Blocks are ordered canonically: higher degree first, then refinement
    /// history (isomorphic graphs give identical matrices). Throws
    /// std::invalid_argument on a disconnected graph.
    auto degree_refinement_matrix(const Graph & g) -> EquitablePartition;

    auto is_equitable(const Graph & g, const std::vector<std::vector<Vertex>> & blocks) -> bool;
}

#endif
