#include <lgo/constructions.hpp>
#include <lgo/realize.hpp>

using std::string;
using std::vector;

namespace lgo
{
    namespace
    {
        auto describe(const vector<string> & offending, long long limit) -> string
        {
            string list;
            for (auto & a : offending)
                list += (list.empty() ? "" : ", ") + a;
            return "realization exceeds " + std::to_string(limit) + " line-graph nodes per component for a = " + list;
        }

        // Node count of L(G_{3a,d}), or -1 if it does not fit.
        auto component_nodes(const PrimeSet & a, int d) -> long long
        {
            auto value = a.value();
            if (! value || *value > static_cast<std::uint64_t>(1) << 40)
                return -1;
            return gnd_line_node_count(3 * static_cast<long long>(*value), d);
        }

        auto oversized_members(const UniversalImage & image, int d, long long limit) -> vector<string>
        {
            vector<string> result;
            for (auto & a : image) {
                auto nodes = component_nodes(a, d);
                if (nodes < 0 || nodes > limit)
                    result.push_back(a.to_string());
            }
            return result;
        }
    }

    RealizationTooLarge::RealizationTooLarge(vector<string> offending_, long long limit) :
        std::runtime_error(describe(offending_, limit)),
        offending(std::move(offending_))
    {
    }

    auto realize_image(const UniversalImage & image, int d, long long max_component_nodes) -> Graph
    {
        if (d < 3)
            throw std::invalid_argument("realization needs d >= 3");
        auto oversized = oversized_members(image, d, max_component_nodes);
        if (! oversized.empty())
            throw RealizationTooLarge(oversized, max_component_nodes);

        vector<Graph> parts;
        for (auto & a : image)
            parts.push_back(build_gnd(3 * static_cast<int>(*a.value()), d).line.graph);
        return disjoint_union(parts).graph.with_name("L(" + std::to_string(d) + "," + to_string(image) + ")");
    }

    auto realize_graphs(const Poset & q, const PrimeLabeling & labels, int d, long long max_component_nodes)
        -> vector<RealizedElement>
    {
        auto images = embed_universal(q, labels);
        vector<RealizedElement> result;
        for (int x = 0; x < q.size(); ++x) {
            RealizedElement element{q.label(x), std::nullopt, {}};
            try {
                element.graph = realize_image(images[x], d, max_component_nodes);
            }
            catch (const RealizationTooLarge & e) {
                element.oversized = e.offending;
            }
            result.push_back(std::move(element));
        }
        return result;
    }

    auto verify_realization(const Poset & q, const PrimeLabeling & labels, int d, const SearchBudget & budget,
        long long max_component_nodes) -> RealizationReport
    {
        auto images = embed_universal(q, labels);
        vector<Graph> graphs;
        for (auto & image : images)
            graphs.push_back(realize_image(image, d, max_component_nodes));

        RealizationReport report;
        for (int x = 0; x < q.size(); ++x)
            for (int y = 0; y < q.size(); ++y) {
                auto result = find_hom(graphs[x], graphs[y], budget);
                PairRecord record{q.label(x), q.label(y), q.leq(x, y), result.outcome, result.stats.nodes, result.stats.seconds};
                if (result.outcome == SearchOutcome::budget_exceeded || result.found() != record.expected)
                    report.ok = false;
                report.pairs.push_back(std::move(record));
            }
        return report;
    }
}
