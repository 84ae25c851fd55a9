#ifndef LGO_VERIFICATION_HPP
#define LGO_VERIFICATION_HPP

#include <lgo/hom.hpp>

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace lgo
{
    enum class CheckOutcome
    {
        pass,
        fail,
        budget_exceeded
    };

    auto to_string(CheckOutcome o) -> std::string;

    struct CheckRecord
    {
        std::string name;
        std::string claim;          // the property being checked, in words
        nlohmann::json parameters;
        CheckOutcome outcome = CheckOutcome::pass;
        double seconds = 0.0;
        std::uint64_t nodes = 0;
        std::string detail;
    };

    struct VerificationReport
    {
        std::vector<CheckRecord> checks;

        auto passed() const -> bool;
        auto to_json() const -> nlohmann::json;
    };

    struct VerifyOptions
    {
        SearchBudget budget = SearchBudget::with_seconds(600);
        int max_n = 6;              // sunlet sizes 3..max_n for the G_{n,d} suites
        std::uint64_t seed = 1;
        int random_graphs = 100;
    };

    /// Suite names: dragons, cores, intervals, prop8, roles, sunlets,
    /// refinement, example, all. Throws std::invalid_argument otherwise.
    auto run_suite(const std::string & suite, const VerifyOptions & options) -> VerificationReport;

    auto suite_names() -> std::vector<std::string>;
}

#endif
