#ifndef LGO_HOM_HPP
#define LGO_HOM_HPP

#include <lgo/graph.hpp>

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgo
{
    /// Limits on a single search. Running out is reported as its own outcome,
    /// never as "no homomorphism".
    struct SearchBudget
    {
        std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max();
        std::chrono::duration<double> time_limit = std::chrono::hours(24 * 365);

        static auto unlimited() -> SearchBudget { return {}; }
        static auto with_nodes(std::uint64_t nodes) -> SearchBudget;
        static auto with_seconds(double seconds) -> SearchBudget;

        /// Throws std::invalid_argument unless both limits are positive.
        auto validate() const -> void;
    };

    enum class SearchOutcome
    {
        found,
        none,
        budget_exceeded
    };

    auto to_string(SearchOutcome o) -> std::string;

    struct SearchStats
    {
        std::uint64_t nodes = 0;
        double seconds = 0.0;
    };

    /// map[v] is the image of source vertex v.
    struct HomMapping
    {
        std::string from, to;
        std::vector<Vertex> map;
    };

    struct HomResult
    {
        SearchOutcome outcome = SearchOutcome::none;
        std::optional<HomMapping> mapping;
        SearchStats stats;

        auto found() const -> bool { return outcome == SearchOutcome::found; }
    };

    struct HomOptions
    {
        /// Additionally require the mapping to be injective on every
        /// neighbourhood.
        bool locally_injective = false;

        /// Before branching, every source vertex v keeps only the targets t
        /// for which the ball of this radius around v maps with v fixed at t.
        /// Zero disables the filter.
        int ball_radius = 2;
    };

    /// Complete backtracking search with arc consistency. "none" is only
    /// returned after the whole tree has been refuted; the result is
    /// deterministic for fixed inputs and budget.
    auto find_hom(const Graph & source, const Graph & target, const SearchBudget & budget = {}, const HomOptions & options = {})
        -> HomResult;

    auto locally_injective_hom(const Graph & source, const Graph & target, const SearchBudget & budget = {}) -> HomResult;

    /// Checks the mapping edge by edge against the target; shares nothing
    /// with the search code.
    auto verify_mapping(const Graph & source, const Graph & target, std::span<const Vertex> map) -> bool;
    auto verify_locally_injective(const Graph & source, const Graph & target, std::span<const Vertex> map) -> bool;

    auto compose(std::span<const Vertex> first, std::span<const Vertex> second) -> std::vector<Vertex>;

    /// Thrown by operations that return a plain answer when the search
    /// behind them runs out of budget.
    class BudgetExhausted : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Size of the largest clique containing each vertex.
    auto clique_number_per_vertex(const Graph & g) -> std::vector<int>;
}

#endif
