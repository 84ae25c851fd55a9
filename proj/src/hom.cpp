#include <lgo/hom.hpp>

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <set>

using std::chrono::duration;
using std::chrono::steady_clock;
using std::span;
using std::string;
using std::vector;

namespace lgo
{
    auto SearchBudget::with_nodes(std::uint64_t nodes) -> SearchBudget
    {
        SearchBudget result;
        result.node_limit = nodes;
        return result;
    }

    auto SearchBudget::with_seconds(double seconds) -> SearchBudget
    {
        SearchBudget result;
        result.time_limit = duration<double>(seconds);
        return result;
    }

    auto SearchBudget::validate() const -> void
    {
        if (node_limit == 0 || time_limit.count() <= 0.0)
            throw std::invalid_argument("search budget limits must be positive");
    }

    auto to_string(SearchOutcome o) -> string
    {
        switch (o) {
            case SearchOutcome::found: return "found";
            case SearchOutcome::none: return "none";
            case SearchOutcome::budget_exceeded: return "budget_exceeded";
        }
        return "?";
    }

    auto verify_mapping(const Graph & source, const Graph & target, span<const Vertex> map) -> bool
    {
        if (static_cast<int>(map.size()) != source.vertex_count())
            return false;
        for (auto t : map)
            if (t < 0 || t >= target.vertex_count())
                return false;
        for (auto & [u, v] : source.edges())
            if (! target.adjacent(map[u], map[v]))
                return false;
        return true;
    }

    auto verify_locally_injective(const Graph & source, const Graph & target, span<const Vertex> map) -> bool
    {
        if (! verify_mapping(source, target, map))
            return false;
        for (Vertex w = 0; w < source.vertex_count(); ++w) {
            std::set<Vertex> images;
            for (auto u : source.neighbours(w))
                if (! images.insert(map[u]).second)
                    return false;
        }
        return true;
    }

    auto compose(span<const Vertex> first, span<const Vertex> second) -> vector<Vertex>
    {
        vector<Vertex> result;
        for (auto v : first)
            result.push_back(second[v]);
        return result;
    }

    namespace
    {
        using Bitset = boost::dynamic_bitset<std::uint64_t>;

        auto adjacency_rows(const Graph & g) -> vector<Bitset>
        {
            vector<Bitset> rows(g.vertex_count(), Bitset(g.vertex_count()));
            for (auto & [u, v] : g.edges()) {
                rows[u].set(v);
                rows[v].set(u);
            }
            return rows;
        }

        auto largest_clique_within(const vector<Bitset> & rows, Bitset candidates, int size, int & best) -> void
        {
            if (candidates.none()) {
                best = std::max(best, size);
                return;
            }
            while (candidates.any()) {
                if (size + static_cast<int>(candidates.count()) <= best)
                    return;
                auto v = candidates.find_first();
                candidates.reset(v);
                largest_clique_within(rows, candidates & rows[v], size + 1, best);
            }
        }

        struct OutOfBudget
        {
        };

        /// Node and time accounting shared by a search and its sub-searches.
        struct BudgetTracker
        {
            SearchBudget budget;
            steady_clock::time_point start = steady_clock::now();
            std::uint64_t nodes = 0;

            auto tick() -> void
            {
                ++nodes;
                if (nodes > budget.node_limit)
                    throw OutOfBudget{};
                if ((nodes & 0xff) == 0 && steady_clock::now() - start > budget.time_limit)
                    throw OutOfBudget{};
            }
        };

        struct TargetData
        {
            const Graph & graph;
            vector<Bitset> rows;
            vector<int> cliques;
            bool complete;

            explicit TargetData(const Graph & g) :
                graph(g),
                rows(adjacency_rows(g)),
                cliques(clique_number_per_vertex(g)),
                complete(true)
            {
                for (Vertex t = 0; t < g.vertex_count(); ++t)
                    if (g.degree(t) != g.vertex_count() - 1)
                        complete = false;
            }
        };

        class Solver
        {
        public:
            Solver(const Graph & source, const TargetData & target, BudgetTracker & tracker, const HomOptions & options) :
                _source(source),
                _target(target),
                _tracker(tracker),
                _options(options)
            {
                int n = source.vertex_count();
                _unequal.resize(n);
                if (options.locally_injective) {
                    vector<std::set<Vertex>> partners(n);
                    for (Vertex w = 0; w < n; ++w)
                        for (auto u : source.neighbours(w))
                            for (auto v : source.neighbours(w))
                                if (u != v)
                                    partners[u].insert(v);
                    for (Vertex v = 0; v < n; ++v)
                        _unequal[v].assign(partners[v].begin(), partners[v].end());
                }
            }

            auto initial_domains() const -> vector<Bitset>
            {
                int n = _source.vertex_count(), m = _target.graph.vertex_count();

                // A clique maps injectively onto a clique, so a vertex can only
                // go where an equally large clique lives.
                auto source_cliques = clique_number_per_vertex(_source);

                vector<Bitset> domains(n, Bitset(m));
                for (Vertex v = 0; v < n; ++v)
                    for (Vertex t = 0; t < m; ++t) {
                        if (source_cliques[v] > _target.cliques[t])
                            continue;
                        if (_options.locally_injective && _source.degree(v) > _target.graph.degree(t))
                            continue;
                        domains[v].set(t);
                    }
                return domains;
            }

            /// Solves from the given domains; on success solution() holds a
            /// complete assignment.
            auto solve(vector<Bitset> domains, int ball_radius) -> bool
            {
                int n = _source.vertex_count();
                _solution.assign(n, -1);
                if (n == 0)
                    return true;
                if (_target.graph.vertex_count() == 0)
                    return false;

                vector<Vertex> all(n);
                for (Vertex v = 0; v < n; ++v)
                    all[v] = v;

                if (! propagate(domains, all))
                    return false;
                // All targets of a complete graph look alike, so the ball filter
                // cannot tell them apart.
                if (ball_radius > 0 && ! _target.complete && ! ball_filter(domains, ball_radius))
                    return false;
                return solve_all(domains, all);
            }

            auto solution() const -> const vector<Vertex> & { return _solution; }

        private:
            const Graph & _source;
            const TargetData & _target;
            BudgetTracker & _tracker;
            HomOptions _options;
            vector<vector<Vertex>> _unequal;
            vector<Vertex> _solution;

            auto ball_around(Vertex centre, int radius) const -> vector<Vertex>
            {
                vector<int> distance(_source.vertex_count(), -1);
                vector<Vertex> ball{centre};
                distance[centre] = 0;
                for (std::size_t i = 0; i < ball.size(); ++i) {
                    auto v = ball[i];
                    if (distance[v] == radius)
                        continue;
                    for (auto w : _source.neighbours(v))
                        if (distance[w] == -1) {
                            distance[w] = distance[v] + 1;
                            ball.push_back(w);
                        }
                }
                return ball;
            }

            // The restriction of a homomorphism to the ball around v is itself
            // a homomorphism, so v -> t needs the ball to map with v fixed at t.
            auto ball_filter(vector<Bitset> & domains, int radius) -> bool
            {
                vector<Vertex> changed;
                for (Vertex v = 0; v < _source.vertex_count(); ++v) {
                    auto ball = ball_around(v, radius);
                    auto local = _source.induced(ball);
                    Solver sub(local, _target, _tracker, _options);

                    vector<Bitset> local_domains;
                    for (auto w : ball)
                        local_domains.push_back(domains[w]);

                    bool removed = false;
                    for (auto t = domains[v].find_first(); t != Bitset::npos; t = domains[v].find_next(t)) {
                        auto trial = local_domains;
                        trial[0].reset();
                        trial[0].set(t);
                        if (! sub.solve(std::move(trial), 0)) {
                            domains[v].reset(t);
                            removed = true;
                        }
                    }
                    if (domains[v].none())
                        return false;
                    if (removed)
                        changed.push_back(v);
                }
                return changed.empty() || propagate(domains, changed);
            }

            // Arc consistency on the edge constraints, plus forward checking on
            // the neighbourhood-injectivity constraints.
            auto propagate(vector<Bitset> & domains, const vector<Vertex> & changed) -> bool
            {
                vector<Vertex> queue(changed);
                vector<bool> queued(domains.size(), false);
                for (auto v : queue)
                    queued[v] = true;

                Bitset support(_target.graph.vertex_count());
                while (! queue.empty()) {
                    auto v = queue.back();
                    queue.pop_back();
                    queued[v] = false;

                    support.reset();
                    for (auto t = domains[v].find_first(); t != Bitset::npos; t = domains[v].find_next(t))
                        support |= _target.rows[t];

                    auto restrict_to = [&](Vertex u, auto && change) -> bool {
                        auto before = domains[u].count();
                        change(domains[u]);
                        auto after = domains[u].count();
                        if (after == 0)
                            return false;
                        if (after != before && ! queued[u]) {
                            queued[u] = true;
                            queue.push_back(u);
                        }
                        return true;
                    };

                    for (auto u : _source.neighbours(v))
                        if (! restrict_to(u, [&](Bitset & d) { d &= support; }))
                            return false;

                    if (domains[v].count() == 1) {
                        auto value = domains[v].find_first();
                        for (auto u : _unequal[v])
                            if (! restrict_to(u, [&](Bitset & d) { d.reset(value); }))
                                return false;
                    }
                }
                return true;
            }

            // Splits the still-open variables into groups with no constraint
            // between them; each group can then be solved on its own.
            auto open_components(const vector<Bitset> & domains, const vector<Vertex> & vars) -> vector<vector<Vertex>>
            {
                vector<char> open(domains.size(), 0);
                for (auto v : vars)
                    if (domains[v].count() > 1)
                        open[v] = 1;

                vector<vector<Vertex>> result;
                for (auto s : vars) {
                    if (open[s] != 1)
                        continue;
                    vector<Vertex> component{s};
                    open[s] = 2;
                    for (std::size_t i = 0; i < component.size(); ++i) {
                        auto visit = [&](Vertex w) {
                            if (open[w] == 1) {
                                open[w] = 2;
                                component.push_back(w);
                            }
                        };
                        for (auto w : _source.neighbours(component[i]))
                            visit(w);
                        for (auto w : _unequal[component[i]])
                            visit(w);
                    }
                    result.push_back(std::move(component));
                }
                return result;
            }

            auto record_singletons(const vector<Bitset> & domains, const vector<Vertex> & vars) -> void
            {
                for (auto v : vars)
                    if (domains[v].count() == 1)
                        _solution[v] = static_cast<Vertex>(domains[v].find_first());
            }

            auto solve_all(const vector<Bitset> & domains, const vector<Vertex> & vars) -> bool
            {
                for (auto & component : open_components(domains, vars))
                    if (! solve_component(domains, component))
                        return false;
                record_singletons(domains, vars);
                return true;
            }

            auto choose_variable(const vector<Bitset> & domains, const vector<Vertex> & vars) -> Vertex
            {
                Vertex best = -1;
                std::size_t best_size = 0;
                for (auto v : vars) {
                    auto size = domains[v].count();
                    if (best == -1 || size < best_size ||
                        (size == best_size && (_source.degree(v) > _source.degree(best) ||
                                                  (_source.degree(v) == _source.degree(best) && v < best)))) {
                        best = v;
                        best_size = size;
                    }
                }
                return best;
            }

            // With a complete target every value not yet taken by a fixed
            // variable is interchangeable, so only the first of them is tried.
            auto unused_values(const vector<Bitset> & domains) -> Bitset
            {
                Bitset unused(_target.graph.vertex_count());
                unused.set();
                for (auto & d : domains)
                    if (d.count() == 1)
                        unused.reset(d.find_first());
                return unused;
            }

            auto solve_component(const vector<Bitset> & domains, const vector<Vertex> & vars) -> bool
            {
                auto var = choose_variable(domains, vars);

                Bitset unused;
                if (_target.complete)
                    unused = unused_values(domains);
                bool tried_unused = false;

                for (auto t = domains[var].find_first(); t != Bitset::npos; t = domains[var].find_next(t)) {
                    if (_target.complete && unused.test(t)) {
                        if (tried_unused)
                            continue;
                        tried_unused = true;
                    }

                    _tracker.tick();

                    auto next = domains;
                    next[var].reset();
                    next[var].set(t);
                    if (! propagate(next, {var}))
                        continue;

                    if (solve_all(next, vars))
                        return true;
                }
                return false;
            }
        };
    }

    auto clique_number_per_vertex(const Graph & g) -> vector<int>
    {
        auto rows = adjacency_rows(g);
        vector<int> result(g.vertex_count(), 1);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            int best = 0;
            largest_clique_within(rows, rows[v], 0, best);
            result[v] = best + 1;
        }
        return result;
    }

    auto find_hom(const Graph & source, const Graph & target, const SearchBudget & budget, const HomOptions & options) -> HomResult
    {
        budget.validate();
        BudgetTracker tracker{budget};
        HomResult result;
        try {
            TargetData target_data(target);
            Solver solver(source, target_data, tracker, options);
            if (solver.solve(solver.initial_domains(), options.ball_radius)) {
                result.outcome = SearchOutcome::found;
                result.mapping = HomMapping{source.name(), target.name(), solver.solution()};
            }
            else
                result.outcome = SearchOutcome::none;
        }
        catch (const OutOfBudget &) {
            result.outcome = SearchOutcome::budget_exceeded;
        }
        result.stats.nodes = tracker.nodes;
        result.stats.seconds = duration<double>(steady_clock::now() - tracker.start).count();
        return result;
    }

    auto locally_injective_hom(const Graph & source, const Graph & target, const SearchBudget & budget) -> HomResult
    {
        return find_hom(source, target, budget, HomOptions{.locally_injective = true});
    }
}
