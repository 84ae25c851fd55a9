#include <lgo/constructions.hpp>
#include <lgo/edge_coloring.hpp>
#include <lgo/generators.hpp>
#include <lgo/interval.hpp>

#include <stdexcept>

namespace lgo
{
    namespace
    {
        auto decide(const HomResult & r) -> bool
        {
            if (r.outcome == SearchOutcome::budget_exceeded)
                throw BudgetExhausted("interval check ran out of budget");
            return r.found();
        }
    }

    auto interval_check(const Graph & g, int d, const SearchBudget & budget) -> bool
    {
        if (d < 1)
            throw std::invalid_argument("interval check needs d >= 1");

        auto line = line_graph(g).graph;
        if (! decide(find_hom(complete_graph(d), line, budget)))
            return false;

        auto colouring = edge_color(g, d + 1, budget);
        if (colouring.outcome == SearchOutcome::budget_exceeded)
            throw BudgetExhausted("interval check ran out of budget");
        if (colouring.outcome != SearchOutcome::found)
            return false;

        return ! decide(find_hom(complete_graph(d + 1), line, budget));
    }

    auto has_triangle_component(const Graph & g) -> bool
    {
        for (auto & component : g.components())
            if (component.size() == 3 && g.induced(component).edge_count() == 3)
                return true;
        return false;
    }

    auto interval_degree_criterion(const Graph & g, int d) -> bool
    {
        if (d < 3)
            throw std::invalid_argument("degree criterion only holds for d >= 3");
        int delta = g.max_degree();
        if (delta == d)
            return true;
        return d == 3 && delta == 2 && has_triangle_component(g);
    }
}
