#include <lgo/core.hpp>

namespace lgo
{
    auto is_core(const Graph & g, const SearchBudget & budget) -> CoreResult
    {
        CoreResult result;
        bool exhausted = false;

        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            auto smaller = g.without_vertex(v);
            auto attempt = find_hom(g, smaller, budget);
            result.stats.nodes += attempt.stats.nodes;
            result.stats.seconds += attempt.stats.seconds;

            if (attempt.outcome == SearchOutcome::budget_exceeded)
                exhausted = true;
            else if (attempt.outcome == SearchOutcome::found) {
                // Vertex i of the deleted graph is i if i < v, else i + 1.
                HomMapping witness{g.name(), g.name(), attempt.mapping->map};
                for (auto & t : witness.map)
                    if (t >= v)
                        ++t;
                result.outcome = CoreOutcome::not_core;
                result.witness = std::move(witness);
                result.missed_vertex = v;
                return result;
            }
        }

        result.outcome = exhausted ? CoreOutcome::budget_exceeded : CoreOutcome::core;
        return result;
    }
}
