#include <homoglab/errors.hpp>
#include <homoglab/homogeneity.hpp>
#include <homoglab/structure.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace homoglab
{
    auto AgePartition::in_kk(std::size_t cls) const -> bool
    {
        return std::find(kk.begin(), kk.end(), cls) != kk.end();
    }

    auto AgePartition::in_okk(std::size_t cls) const -> bool
    {
        return std::find(okk.begin(), okk.end(), cls) != okk.end();
    }

    namespace
    {
        /// Calls visit on every k-subset of 0..n-1 in lexicographic order; stops when visit returns false.
        auto for_each_subset(int n, int k, const std::function<bool (const VertexSet &)> & visit) -> bool
        {
            VertexSet s(n);
            std::function<bool (int, int)> choose = [&] (int from, int remaining) -> bool {
                if (remaining == 0)
                    return visit(s);
                for (int v = from ; v + remaining <= n ; ++v) {
                    s.set(v);
                    bool go_on = choose(v + 1, remaining - 1);
                    s.reset(v);
                    if (! go_on)
                        return false;
                }
                return true;
            };
            return choose(0, k);
        }

        auto check_age_bounds(const Graph & g, int k, int code_limit) -> void
        {
            if (k < 0 || k > g.order())
                throw InvalidInput("age size bound " + std::to_string(k) + " outside 0.." + std::to_string(g.order()));
            if (k > code_limit)
                throw OrderTooLarge("age size bound " + std::to_string(k) + " exceeds canonical code limit "
                        + std::to_string(code_limit));
        }

        struct ConeRecord
        {
            std::optional<VertexSet> coned;
            int cone = -1;
            std::optional<VertexSet> coneless;
        };

        /// Builds the age and, for every class, the first coned and first coneless embedding.
        auto scan_age(const Graph & g, int k, const AgeOptions & options,
                std::vector<AgeClass> & classes, std::vector<ConeRecord> & cones) -> void
        {
            check_age_bounds(g, k, options.code_limit);
            std::map<std::pair<int, CanonicalCode>, std::size_t> index;
            std::vector<AgeClass> found;
            std::vector<ConeRecord> records;

            for (int size = 1 ; size <= k ; ++size)
                for_each_subset(g.order(), size, [&] (const VertexSet & s) {
                        auto sub = induced_subgraph(g, s);
                        auto code = canonical_code(sub.graph, options.code_limit);
                        auto [it, inserted] = index.try_emplace({size, code}, found.size());
                        if (inserted) {
                            found.push_back(AgeClass{sub.graph, code, {}});
                            records.emplace_back();
                        }
                        auto & cls = found[it->second];
                        if (options.embedding_cap == 0 || cls.embeddings.size() < options.embedding_cap)
                            cls.embeddings.push_back(s);

                        auto & rec = records[it->second];
                        auto cones_over = common_neighbourhood(g, s);
                        if (cones_over.any()) {
                            if (! rec.coned) {
                                rec.coned = s;
                                rec.cone = cones_over.first();
                            }
                        }
                        else if (! rec.coneless)
                            rec.coneless = s;
                        return true;
                        });

            // order by (size, code)
            classes.clear();
            cones.clear();
            for (auto & [key, at] : index) {
                classes.push_back(std::move(found[at]));
                cones.push_back(std::move(records[at]));
            }
        }

        auto pairs_through(const InducedSubgraph & from, const InducedSubgraph & to, const TotalMap & map) -> PartialMap
        {
            PartialMap f;
            for (std::size_t i = 0 ; i < map.size() ; ++i)
                f.pairs.emplace_back(from.original[i], to.original[map[i]]);
            return f;
        }

        auto local_constraints(LocalKind x) -> MorphismConstraints
        {
            switch (x) {
                case LocalKind::H: return {};
                case LocalKind::M: return {.injective = true};
                case LocalKind::I: return {.injective = true, .respect_nonedges = true};
            }
            return {};
        }
    }

    auto age(const Graph & g, int k, const AgeOptions & options) -> std::vector<AgeClass>
    {
        std::vector<AgeClass> classes;
        std::vector<ConeRecord> cones;
        scan_age(g, k, options, classes, cones);
        return classes;
    }

    auto kk_okk(const Graph & g, int k, const AgeOptions & options) -> AgePartition
    {
        AgePartition partition;
        partition.k = k;
        std::vector<ConeRecord> cones;
        scan_age(g, k, options, partition.classes, cones);
        for (std::size_t c = 0 ; c < cones.size() ; ++c) {
            if (cones[c].coned)
                partition.kk.push_back(c);
            if (cones[c].coneless)
                partition.okk.push_back(c);
            if (cones[c].coned && cones[c].coneless)
                partition.conflicts.push_back(AgeConflict{partition.classes[c].code,
                        *cones[c].coned, cones[c].cone, *cones[c].coneless});
        }
        return partition;
    }

    auto preceq(const Graph & a, const Graph & b) -> bool
    {
        if (a.order() < b.order())
            return false;
        return search_morphism(a, b, {}, {.surjective = true}).has_value();
    }

    auto decide_xy(const Graph & g, LocalKind x, MorphismKind y, DirectStrategy strategy) -> HomogReport
    {
        if (g.order() > decision_limit)
            throw OrderTooLarge("direct decider limited to " + std::to_string(decision_limit) + " vertices");

        HomogReport report;
        report.x = x;
        report.y = y;
        report.method = DecisionMethod::direct;
        if (y == MorphismKind::B)
            report.notes.push_back("finite graph: bijective endomorphisms are automorphisms, so B is decided as A");

        bool one_point = strategy == DirectStrategy::accelerated
            && ((x == LocalKind::H && y == MorphismKind::H) || (x == LocalKind::M && y == MorphismKind::M));
        if (one_point)
            report.notes.push_back("one-point extension check");

        int n = g.order();
        auto constraints = local_constraints(x);
        std::optional<HomogCounterexample> failure;

        for (int k = 0 ; k <= n && ! failure ; ++k)
            for_each_subset(n, k, [&] (const VertexSet & domain) {
                    auto sub = induced_subgraph(g, domain);
                    for_each_morphism(sub.graph, g, {}, constraints, [&] (const TotalMap & map) {
                            PartialMap f;
                            for (std::size_t i = 0 ; i < map.size() ; ++i)
                                f.pairs.emplace_back(sub.original[i], map[i]);
                            if (one_point) {
                                VertexSet image = f.image(n);
                                for (int v = 0 ; v < n ; ++v) {
                                    if (domain.test(v))
                                        continue;
                                    VertexSet candidates = g.all_vertices();
                                    for (auto [s, t] : f.pairs)
                                        if (g.adjacent(v, s))
                                            candidates &= g.neighbours(t);
                                    if (y == MorphismKind::M)
                                        candidates -= image;
                                    if (candidates.empty()) {
                                        failure = HomogCounterexample{f, v};
                                        return false;
                                    }
                                }
                                return true;
                            }
                            if (! extends_in(g, f, y)) {
                                failure = HomogCounterexample{f, std::nullopt};
                                return false;
                            }
                            return true;
                            });
                    return ! failure;
                    });

        report.verdict = ! failure;
        report.counterexample = failure;
        return report;
    }

    auto decide_hh_conditions(const Graph & g, std::optional<int> k) -> HomogReport
    {
        int bound = k.value_or(g.order());
        if (bound > decision_limit)
            throw OrderTooLarge("conditions decider limited to " + std::to_string(decision_limit) + " vertices");

        HomogReport report;
        report.method = DecisionMethod::conditions;
        if (bound < g.order())
            report.notes.push_back("age truncated at size " + std::to_string(bound) + ": verdict covers only those classes");

        auto partition = kk_okk(g, bound);

        if (! partition.conflicts.empty()) {
            const auto & c = partition.conflicts.front();
            auto from = induced_subgraph(g, c.coned_embedding);
            auto to = induced_subgraph(g, c.coneless_embedding);
            auto iso = search_morphism(from.graph, to.graph, {}, {.injective = true, .respect_nonedges = true});
            report.violation = ConditionViolation{1, c.code, c.code, c.coned_embedding, c.cone, c.coneless_embedding};
            if (iso)
                report.counterexample = HomogCounterexample{pairs_through(from, to, *iso), c.cone};
            report.verdict = false;
            return report;
        }

        std::vector<ConeRecord> cones;
        {
            // kk_okk keeps only witnesses for conflicts; recover the coned/coneless embeddings per class
            std::vector<AgeClass> classes;
            scan_age(g, bound, {}, classes, cones);
        }

        const auto & classes = partition.classes;
        for (std::size_t a = 0 ; a < classes.size() ; ++a) {
            if (! cones[a].coned)
                continue;
            for (std::size_t b = 0 ; b < classes.size() ; ++b) {
                if (cones[b].coned || classes[b].size() > classes[a].size())
                    continue;
                if (! preceq(classes[a].representative, classes[b].representative))
                    continue;

                auto from = induced_subgraph(g, *cones[a].coned);
                auto to = induced_subgraph(g, *cones[b].coneless);
                auto hom = search_morphism(from.graph, to.graph, {}, {.surjective = true});
                report.violation = ConditionViolation{2, classes[a].code, classes[b].code,
                    *cones[a].coned, cones[a].cone, *cones[b].coneless};
                if (hom)
                    report.counterexample = HomogCounterexample{pairs_through(from, to, *hom), cones[a].cone};
                report.verdict = false;
                return report;
            }
        }

        report.verdict = true;
        return report;
    }

    auto replays(const Graph & g, const HomogReport & report) -> bool
    {
        if (report.verdict || ! report.counterexample)
            return false;
        const auto & f = report.counterexample->local;
        if (! is_local(g, g, f, report.x))
            return false;
        return ! extends_in(g, f, report.y).has_value();
    }
}
