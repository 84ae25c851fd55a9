#ifndef LGO_REALIZE_HPP
#define LGO_REALIZE_HPP

#include <lgo/embedding.hpp>
#include <lgo/graph.hpp>
#include <lgo/hom.hpp>
#include <lgo/poset.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgo
{
    inline constexpr long long default_component_node_limit = 2000;

    /// Raised when some component L(G_{3a,d}) would exceed the node limit.
    class RealizationTooLarge : public std::runtime_error
    {
    public:
        RealizationTooLarge(std::vector<std::string> offending, long long limit);

        /// The values a (as prime products) whose components are too big.
        const std::vector<std::string> offending;
    };

    /// Disjoint union of L(G_{3a,d}) over a in the image. Components are laid
    /// out in the image's order.
    auto realize_image(const UniversalImage & image, int d, long long max_component_nodes = default_component_node_limit)
        -> Graph;

    struct RealizedElement
    {
        std::string label;
        std::optional<Graph> graph;
        std::vector<std::string> oversized;  // set when graph is empty
    };

    auto realize_graphs(const Poset & q, const PrimeLabeling & labels, int d,
        long long max_component_nodes = default_component_node_limit) -> std::vector<RealizedElement>;

    struct PairRecord
    {
        std::string src, dst;
        bool expected;
        SearchOutcome found;
        std::uint64_t nodes_explored;
        double seconds;
    };

    struct RealizationReport
    {
        std::vector<PairRecord> pairs;  // sorted by (src, dst) index
        bool ok = true;
    };

    /// For every ordered pair (x, y) checks that realize(x) -> realize(y)
    /// exactly when x <=_Q y. Any disagreement or exhausted budget clears ok.
    /// Throws RealizationTooLarge if an element cannot be realized.
    auto verify_realization(const Poset & q, const PrimeLabeling & labels, int d, const SearchBudget & budget = {},
        long long max_component_nodes = default_component_node_limit) -> RealizationReport;
}

#endif
