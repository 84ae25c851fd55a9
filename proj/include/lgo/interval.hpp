#ifndef LGO_INTERVAL_HPP
#define LGO_INTERVAL_HPP

#include <lgo/graph.hpp>
#include <lgo/hom.hpp>

namespace lgo
{
    /// K_d -> L(G), L(G) -> K_{d+1} and not K_{d+1} -> L(G), each decided by
    /// search. Throws BudgetExhausted if any of the searches runs out.
    auto interval_check(const Graph & g, int d, const SearchBudget & budget = {}) -> bool;

    /// The same membership read off the degrees, for d >= 3: L(G) lies in
    /// [K_d, K_{d+1}) iff it is the line graph of some graph of maximum degree
    /// d. Since L(K_3) = L(K_{1,3}), a triangle component of G may stand in for
    /// a claw, so at d = 3 a graph of maximum degree 2 with a triangle
    /// component also qualifies.
    auto interval_degree_criterion(const Graph & g, int d) -> bool;

    /// True when g has a connected component isomorphic to K_3.
    auto has_triangle_component(const Graph & g) -> bool;
}

#endif
