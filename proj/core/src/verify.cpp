#include <homoglab/canonical.hpp>
#include <homoglab/errors.hpp>
#include <homoglab/graph_io.hpp>
#include <homoglab/homogeneity.hpp>
#include <homoglab/parallel.hpp>
#include <homoglab/presentation.hpp>
#include <homoglab/structure.hpp>
#include <homoglab/verify.hpp>

#include <algorithm>
#include <functional>
#include <random>

namespace homoglab
{
    auto SuiteReport::failures_with_clause(const std::string & name) const -> long
    {
        return long(std::count_if(failures.begin(), failures.end(),
                    [&] (const SuiteFailure & f) { return f.clause == name; }));
    }

    auto SuiteReport::stat(const std::string & name) const -> long
    {
        for (auto & [key, value] : stats)
            if (key == name)
                return value;
        return 0;
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        auto since(Clock::time_point start) -> std::chrono::milliseconds
        {
            return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
        }

        auto bump(SuiteReport & report, const std::string & name, long by = 1) -> void
        {
            for (auto & [key, value] : report.stats)
                if (key == name) {
                    value += by;
                    return;
                }
            report.stats.emplace_back(name, by);
        }

        /// Every subset of members with exactly k elements, lexicographically.
        auto for_each_k_subset(const std::vector<int> & members, int k, int universe,
                const std::function<void (const VertexSet &)> & visit) -> void
        {
            VertexSet s(universe);
            std::function<void (std::size_t, int)> choose = [&] (std::size_t from, int remaining) {
                if (remaining == 0) {
                    visit(s);
                    return;
                }
                for (std::size_t p = from ; p + std::size_t(remaining) <= members.size() ; ++p) {
                    s.set(members[p]);
                    choose(p + 1, remaining - 1);
                    s.reset(members[p]);
                }
            };
            choose(0, k);
        }

        auto checked_sigma(const Graph & g, const VertexSet & i) -> int
        {
            require_directory_base(g, i);
            int sigma = star_number(g).value;
            if (sigma < 1)
                throw StarNumberZero("star number is 0: the graph has no edges");
            return sigma;
        }

        class LemmaChecker
        {
            public:
                LemmaChecker(const Graph & g, const VertexSet & i, std::string instance, SuiteReport & report) :
                    _g(g), _i(i), _instance(std::move(instance)), _graph6(to_graph6(g)), _report(report)
                {
                    _sigma = checked_sigma(g, i);
                    for (int v = 0 ; v < g.order() ; ++v)
                        _address.push_back(address(g, i, v));
                }

                auto run(int x_cap) -> void
                {
                    exact_equals_common();
                    disjoint_addresses();
                    cone_addresses(x_cap);
                }

            private:
                const Graph & _g;
                const VertexSet & _i;
                std::string _instance;
                std::string _graph6;
                SuiteReport & _report;
                int _sigma = 0;
                std::vector<VertexSet> _address;

                auto fail(const std::string & clause, WitnessFields witness) -> void
                {
                    _report.failures.push_back({_instance, _graph6, clause, std::move(witness)});
                }

                // supersets of an S with empty N(S) have K_S = N(S) = ∅, so the search prunes there
                auto exact_equals_common() -> void
                {
                    auto members = _i.members();
                    VertexSet s(_g.order());
                    std::function<void (std::size_t, const VertexSet &)> extend = [&] (std::size_t from, const VertexSet & common) {
                        if (s.count() == _sigma) {
                            bump(_report, "sigma_sets_checked");
                            auto exact = exact_neighbourhood(_g, _i, s);
                            if (exact != common)
                                fail(clause::exact_equals_common, {{"S", s.members()},
                                        {"exact", exact.members()}, {"common", common.members()}});
                            return;
                        }
                        for (std::size_t p = from ; p < members.size() ; ++p) {
                            auto narrowed = common & _g.neighbours(members[p]);
                            if (narrowed.empty())
                                continue;
                            s.set(members[p]);
                            extend(p + 1, narrowed);
                            s.reset(members[p]);
                        }
                    };
                    extend(0, _g.all_vertices());
                }

                auto disjoint_addresses() -> void
                {
                    std::vector<VertexSet> seen;
                    for (int v = 0 ; v < _g.order() ; ++v)
                        if (! _i.test(v) && _address[v].count() == _sigma
                                && std::find(seen.begin(), seen.end(), _address[v]) == seen.end())
                            seen.push_back(_address[v]);

                    for (std::size_t a = 0 ; a < seen.size() ; ++a)
                        for (std::size_t b = a + 1 ; b < seen.size() ; ++b) {
                            if (seen[a].intersects(seen[b]))
                                continue;
                            bump(_report, "disjoint_pairs_checked");
                            auto ka = exact_neighbourhood(_g, _i, seen[a]);
                            auto kb = exact_neighbourhood(_g, _i, seen[b]);
                            ka.for_each([&] (int v) {
                                    auto across = _g.neighbours(v) & kb;
                                    if (across.any())
                                        fail(clause::disjoint_no_edges, {{"S", seen[a].members()},
                                                {"T", seen[b].members()}, {"edge", {v, across.first()}}});
                                    });
                        }
                }

                auto cone_addresses(int x_cap) -> void
                {
                    std::vector<int> pool;
                    for (int v = 0 ; v < _g.order() ; ++v)
                        if (_address[v].count() == _sigma)
                            pool.push_back(v);

                    VertexSet x(_g.order());
                    std::function<void (std::size_t, const VertexSet &, const VertexSet &)> extend =
                        [&] (std::size_t from, const VertexSet & cones, const VertexSet & x_address) {
                            if (x.any())
                                check_cones(x, cones, x_address);
                            if (x.count() == x_cap)
                                return;
                            for (std::size_t p = from ; p < pool.size() ; ++p) {
                                auto narrowed = cones & _g.neighbours(pool[p]);
                                if (narrowed.empty())
                                    continue;
                                x.set(pool[p]);
                                extend(p + 1, narrowed, x_address | _address[pool[p]]);
                                x.reset(pool[p]);
                            }
                        };
                    extend(0, _g.all_vertices(), VertexSet(_g.order()));
                }

                auto check_cones(const VertexSet & x, const VertexSet & cones, const VertexSet & x_address) -> void
                {
                    bump(_report, "cone_sets_checked");
                    bool off_base = ! x.intersects(_i);
                    cones.for_each([&] (int z) {
                            x.for_each([&] (int v) {
                                    if (! _address[z].intersects(_address[v]))
                                        fail(clause::cone_address_meets, {{"X", x.members()}, {"z", {z}}, {"x", {v}}});
                                    });
                            // a base vertex is its own address and cannot be dominated by it
                            if (off_base) {
                                auto d = _address[z] & x_address;
                                if (! dominates(_g, d, x))
                                    fail(clause::cone_address_dominates, {{"X", x.members()}, {"z", {z}},
                                            {"D", d.members()}});
                            }
                            });
                }
        };
    }

    auto verify_directory_lemmas(const Graph & g, const VertexSet & i, const std::string & instance, int x_cap) -> SuiteReport
    {
        auto start = Clock::now();
        SuiteReport report;
        report.suite = "directory-lemmas";
        LemmaChecker(g, i, instance, report).run(x_cap);
        report.instances = 1;
        report.elapsed = since(start);
        return report;
    }

    auto verify_directory_lemmas_random(const RandomLemmaOptions & options) -> SuiteReport
    {
        auto start = Clock::now();
        SuiteReport report;
        report.suite = "directory-lemmas";
        report.seed = options.seed;
        if (options.count < 0 || options.max_order < 2)
            throw InvalidInput("random lemma suite needs count >= 0 and max order >= 2");

        std::vector<SuiteReport> parts(std::size_t(options.count));
        parallel_for(parts.size(), [&] (std::size_t k) {
                std::seed_seq seq{std::uint64_t(options.seed), std::uint64_t(k)};
                std::mt19937_64 rng(seq);
                const double probabilities[] = {0.2, 0.5, 0.8};
                std::uniform_int_distribution<int> order_of(2, options.max_order);
                std::uniform_int_distribution<int> p_of(0, 2);
                std::bernoulli_distribution coin;
                while (true) {
                    int n = order_of(rng);
                    coin = std::bernoulli_distribution(probabilities[p_of(rng)]);
                    auto g = Graph::from_predicate(n, [&] (int, int) { return coin(rng); });
                    if (g.edge_count() == 0)
                        continue;
                    auto i = independence_number(g).witness;
                    LemmaChecker(g, i, "er-" + std::to_string(k), parts[k]).run(4);
                    bump(parts[k], "vertices", n);
                    return;
                }
                });

        for (auto & part : parts) {
            ++report.instances;
            report.failures.insert(report.failures.end(), part.failures.begin(), part.failures.end());
            for (auto & [key, value] : part.stats)
                bump(report, key, value);
        }
        report.notes.push_back("Erdos-Renyi graphs, p drawn from {0.2, 0.5, 0.8}, directory = least maximum independent set");
        report.elapsed = since(start);
        return report;
    }

    auto verify_neighbour_richness(const Graph & g, const VertexSet & i, int threshold,
            const std::string & instance) -> SuiteReport
    {
        auto start = Clock::now();
        SuiteReport report;
        report.suite = "neighbour-richness";
        report.instances = 1;
        int sigma = checked_sigma(g, i);
        auto graph6 = to_graph6(g);

        std::vector<VertexSet> sets;
        for_each_k_subset(i.members(), sigma, g.order(), [&] (const VertexSet & s) {
                if (sets.size() > 100000)
                    throw OrderTooLarge("too many star-number-sized subsets of the directory");
                sets.push_back(s);
                });
        std::vector<VertexSet> exact;
        for (auto & s : sets)
            exact.push_back(exact_neighbourhood(g, i, s));

        for (std::size_t a = 0 ; a < sets.size() ; ++a)
            for (std::size_t b = 0 ; b < sets.size() ; ++b) {
                if (! sets[a].intersects(sets[b])) {
                    bump(report, "disjoint_pairs_skipped");
                    continue;
                }
                bump(report, "pairs_checked");
                exact[a].for_each([&] (int v) {
                        int count = (g.neighbours(v) & exact[b]).count();
                        if (count < threshold)
                            report.failures.push_back({instance, graph6, clause::richness,
                                    {{"S", sets[a].members()}, {"T", sets[b].members()}, {"v", {v}},
                                    {"count", {count}}, {"threshold", {threshold}}}});
                        });
            }
        report.notes.push_back("a shortfall on a finite graph is a finding, not a refutation");
        report.elapsed = since(start);
        return report;
    }

    auto find_triangle_dom2(const Graph & g, const VertexSet & i) -> TriangleDom2
    {
        require_directory_base(g, i);
        TriangleDom2 result;
        int sigma = star_number(g).value;
        if (sigma < 2) {
            result.note = "star number " + std::to_string(sigma) + " is below 2";
            return result;
        }
        int n = g.order();
        for (int a = 0 ; a < n ; ++a)
            for (int b = a + 1 ; b < n ; ++b) {
                if (! g.adjacent(a, b))
                    continue;
                for (int c = b + 1 ; c < n ; ++c) {
                    if (! g.adjacent(a, c) || ! g.adjacent(b, c))
                        continue;
                    int d = domination_number(g, i, VertexSet::of(n, {a, b, c}));
                    if (d == 2) {
                        result.triangle = std::vector<int>{a, b, c};
                        result.value = 2;
                        return result;
                    }
                }
            }
        return result;
    }

    auto alpha_bound(int sigma) -> int
    {
        return 2 * sigma + (sigma + 1) / 2 - 1;
    }

    auto verify_alpha_bound_family(int first, int last, std::vector<int> part_sizes) -> SuiteReport
    {
        auto start = Clock::now();
        if (first < 3 || last > 8 || first > last)
            throw InvalidInput("range must lie within [3, 8]");
        if (part_sizes.empty() || std::any_of(part_sizes.begin(), part_sizes.end(), [] (int m) { return m < 2; }))
            throw InvalidInput("part sizes must be at least 2");

        SuiteReport report;
        report.suite = "alpha-bound";
        for (int n = first ; n <= last ; ++n) {
            auto family = families::rs(n);
            std::optional<std::pair<int, int>> reference;
            for (int m : part_sizes) {
                auto g = truncate(family, n + n * m);
                int alpha = independence_number(g).size;
                int sigma = star_number(g).value;
                int bound = alpha_bound(sigma);
                auto instance = "rs:" + std::to_string(n) + "/m=" + std::to_string(m);
                auto graph6 = to_graph6(g);
                ++report.instances;
                WitnessFields fields{{"alpha", {alpha}}, {"sigma", {sigma}}, {"bound", {bound}}};

                if (! (alpha < bound))
                    report.failures.push_back({instance, graph6, clause::alpha_bound, fields});
                if (n == 3 && alpha != bound - 1)
                    report.failures.push_back({instance, graph6, clause::alpha_tight, fields});
                if (reference && *reference != std::pair{alpha, sigma})
                    report.failures.push_back({instance, graph6, clause::alpha_invariant, fields});
                if (! reference) {
                    reference = std::pair{alpha, sigma};
                    report.stats.emplace_back("alpha_n" + std::to_string(n), alpha);
                    report.stats.emplace_back("sigma_n" + std::to_string(n), sigma);
                    report.stats.emplace_back("bound_n" + std::to_string(n), bound);
                }
            }
        }
        report.elapsed = since(start);
        return report;
    }

    auto cross_validate_hh(int n_max) -> SuiteReport
    {
        auto start = Clock::now();
        if (n_max > 7)
            throw OrderTooLarge("cross-validation is limited to 7 vertices");
        if (n_max < 1)
            throw InvalidInput("cross-validation needs at least one vertex");

        SuiteReport report;
        report.suite = "cross-validate";
        for (int n = 1 ; n <= n_max ; ++n) {
            auto graphs = enumerate_graphs(n);
            std::vector<SuiteReport> parts(graphs.size());
            std::vector<char> positive(graphs.size(), 0);

            parallel_for(graphs.size(), [&] (std::size_t k) {
                    const auto & g = graphs[k];
                    auto graph6 = to_graph6(g);
                    auto instance = "n" + std::to_string(n) + "-" + std::to_string(k);
                    auto direct = decide_xy(g, LocalKind::H, MorphismKind::H);
                    auto conditions = decide_hh_conditions(g);
                    if (direct.verdict != conditions.verdict) {
                        WitnessFields fields{{"direct", {direct.verdict}}, {"conditions", {conditions.verdict}}};
                        if (direct.counterexample)
                            for (auto [s, t] : direct.counterexample->local.pairs)
                                fields.push_back({"local", {s, t}});
                        parts[k].failures.push_back({instance, graph6, clause::decider_disagreement, fields});
                        return;
                    }
                    if (! direct.verdict)
                        return;
                    positive[k] = 1;

                    for (int a = 0 ; a < n ; ++a)
                        for (int b = a ; b < n ; ++b) {
                            auto s = a == b ? VertexSet::of(n, {a}) : VertexSet::of(n, {a, b});
                            auto common = common_neighbourhood(g, s);
                            if (common.empty())
                                continue;
                            auto sub = induced_subgraph(g, common).graph;
                            if (! decide_xy(sub, LocalKind::H, MorphismKind::H).verdict)
                                parts[k].failures.push_back({instance, graph6, clause::neighbourhood_closure,
                                        {{"S", s.members()}, {"N(S)", common.members()}}});
                        }
                    });

            long hh = 0;
            for (std::size_t k = 0 ; k < graphs.size() ; ++k) {
                ++report.instances;
                hh += positive[k];
                report.failures.insert(report.failures.end(), parts[k].failures.begin(), parts[k].failures.end());
            }
            report.stats.emplace_back("classes_n" + std::to_string(n), long(graphs.size()));
            report.stats.emplace_back("hh_n" + std::to_string(n), hh);
        }
        report.elapsed = since(start);
        return report;
    }
}
