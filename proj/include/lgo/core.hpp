#ifndef LGO_CORE_HPP
#define LGO_CORE_HPP

#include <lgo/graph.hpp>
#include <lgo/hom.hpp>

#include <optional>

namespace lgo
{
    enum class CoreOutcome
    {
        core,
        not_core,
        budget_exceeded
    };

    struct CoreResult
    {
        CoreOutcome outcome = CoreOutcome::core;
        /// For not_core: an endomorphism of g that misses `missed_vertex`.
        std::optional<HomMapping> witness;
        Vertex missed_vertex = -1;
        SearchStats stats;
    };

    /// Any homomorphism to a proper subgraph misses some vertex, so it is
    /// enough to try every vertex-deleted subgraph. The budget applies to each
    /// of those searches separately.
    auto is_core(const Graph & g, const SearchBudget & budget = {}) -> CoreResult;
}

#endif
