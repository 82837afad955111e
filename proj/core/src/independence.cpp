#include <homoglab/errors.hpp>
#include <homoglab/structure.hpp>

#include <climits>
#include <functional>

namespace homoglab
{
    namespace
    {
        // Maximum independent set size by branch and bound. Colour classes of
        // the greedy bound are cliques of g, so an independent set takes at
        // most one vertex from each.
        class IndependentSetSearch
        {
            public:
                IndependentSetSearch(const Graph & g, int best, int target) :
                    _g(g),
                    _best(best),
                    _target(target)
                {
                    _non_adjacent.reserve(std::size_t(g.order()));
                    for (int v = 0 ; v < g.order() ; ++v) {
                        VertexSet r = g.neighbours(v).complement();
                        r.reset(v);
                        _non_adjacent.push_back(std::move(r));
                    }
                }

                auto run(const VertexSet & candidates) -> int
                {
                    if (candidates.any() && _best < _target)
                        expand(0, candidates);
                    return _best;
                }

            private:
                const Graph & _g;
                std::vector<VertexSet> _non_adjacent;
                int _best;
                int _target;
                bool _done = false;

                auto colour(VertexSet uncoloured, std::vector<int> & order, std::vector<int> & bounds) const -> void
                {
                    int c = 0;
                    while (uncoloured.any()) {
                        ++c;
                        VertexSet q = uncoloured;
                        while (q.any()) {
                            int v = q.first();
                            q.reset(v);
                            q &= _g.neighbours(v);
                            uncoloured.reset(v);
                            order.push_back(v);
                            bounds.push_back(c);
                        }
                    }
                }

                auto expand(int size, VertexSet p) -> void
                {
                    std::vector<int> order, bounds;
                    colour(p, order, bounds);
                    for (int n = int(order.size()) - 1 ; n >= 0 ; --n) {
                        if (size + bounds[n] <= _best)
                            return;
                        int v = order[n];
                        VertexSet np = p & _non_adjacent[v];
                        if (np.empty()) {
                            if (size + 1 > _best) {
                                _best = size + 1;
                                if (_best >= _target)
                                    _done = true;
                            }
                        }
                        else
                            expand(size + 1, np);
                        if (_done)
                            return;
                        p.reset(v);
                    }
                }
        };

        auto non_neighbours(const Graph & g, int v) -> VertexSet
        {
            VertexSet r = g.neighbours(v).complement();
            r.reset(v);
            return r;
        }

        auto max_independent_size(const Graph & g, const VertexSet & candidates) -> int
        {
            return IndependentSetSearch(g, 0, INT_MAX).run(candidates);
        }
    }

    auto has_independent_set(const Graph & g, const VertexSet & candidates, int k) -> bool
    {
        g.check_set(candidates);
        if (k <= 0)
            return true;
        if (candidates.count() < k)
            return false;
        if (k == 1)
            return true;
        return IndependentSetSearch(g, k - 1, k).run(candidates) >= k;
    }

    auto independence_number_within(const Graph & g, const VertexSet & candidates) -> IndependenceResult
    {
        g.check_set(candidates);
        IndependenceResult result;
        result.size = max_independent_size(g, candidates);
        result.witness = VertexSet(g.order());

        // Greedy lexicographic reconstruction: keep v iff the rest can still be completed.
        VertexSet p = candidates;
        int chosen = 0;
        for (int v = p.first() ; v != -1 && chosen < result.size ; v = p.next(v)) {
            int need = result.size - chosen - 1;
            VertexSet rest = p & non_neighbours(g, v);
            rest -= VertexSet::prefix(g.order(), v + 1);
            if (need == 0 || has_independent_set(g, rest, need)) {
                result.witness.set(v);
                ++chosen;
                rest.set(v);
                p = rest;
            }
        }
        return result;
    }

    auto independence_number(const Graph & g) -> IndependenceResult
    {
        return independence_number_within(g, g.all_vertices());
    }

    auto star_number(const Graph & g) -> StarNumberResult
    {
        StarNumberResult result;
        result.witness = VertexSet(g.order());
        for (int v = 0 ; v < g.order() ; ++v) {
            if (g.degree(v) == 0 || g.degree(v) <= result.value)
                continue;
            int value = max_independent_size(g, g.neighbours(v));
            if (value > result.value) {
                result.value = value;
                result.centre = v;
            }
        }
        if (result.centre)
            result.witness = independence_number_within(g, g.neighbours(*result.centre)).witness;
        return result;
    }

    auto is_directory(const Graph & g, const VertexSet & d, DirectoryMode mode) -> bool
    {
        g.check_set(d);
        if (! is_independent_dominating(g, d))
            return false;
        int sigma = star_number(g).value;
        if (sigma < 1)
            return false;
        switch (mode) {
            case DirectoryMode::exact:
                return d.count() == independence_number(g).size;
            case DirectoryMode::truncation:
                return d.count() >= 2 * sigma - 1;
        }
        return false;
    }

    auto directories(const Graph & g, DirectoryMode mode, std::size_t max_count) -> std::vector<VertexSet>
    {
        int sigma = star_number(g).value;
        if (sigma < 1)
            throw StarNumberZero("graph has no edges, so it has no directory");

        std::vector<VertexSet> result;
        auto full = [&] { return max_count != 0 && result.size() >= max_count; };

        if (mode == DirectoryMode::exact) {
            // Maximum independent sets are maximal, hence dominating.
            int alpha = independence_number(g).size;
            std::function<void (VertexSet &, VertexSet, int)> extend = [&] (VertexSet & chosen, VertexSet p, int need) {
                if (need == 0) {
                    if (is_dominating_set(g, chosen))
                        result.push_back(chosen);
                    return;
                }
                for (int v = p.first() ; v != -1 && ! full() ; v = p.next(v)) {
                    VertexSet rest = p & non_neighbours(g, v);
                    rest -= VertexSet::prefix(g.order(), v + 1);
                    if (has_independent_set(g, rest, need - 1)) {
                        chosen.set(v);
                        extend(chosen, rest, need - 1);
                        chosen.reset(v);
                    }
                }
            };
            VertexSet chosen(g.order());
            extend(chosen, g.all_vertices(), alpha);
            return result;
        }

        // Maximal independent sets in lexicographic order, kept when large enough.
        // skipped holds smaller vertices left out that no chosen vertex covers yet.
        int minimum = 2 * sigma - 1;
        std::function<void (VertexSet &, VertexSet, VertexSet)> extend = [&] (VertexSet & chosen, VertexSet p, VertexSet skipped) {
            if (p.empty()) {
                if (skipped.empty() && chosen.count() >= minimum)
                    result.push_back(chosen);
                return;
            }
            bool hopeless = false;
            skipped.for_each([&] (int u) { if (! g.neighbours(u).intersects(p)) hopeless = true; });
            if (hopeless || chosen.count() + p.count() < minimum)
                return;
            VertexSet skip = skipped;
            for (int v = p.first() ; v != -1 && ! full() ; v = p.next(v)) {
                VertexSet rest = p & non_neighbours(g, v);
                rest -= VertexSet::prefix(g.order(), v + 1);
                chosen.set(v);
                extend(chosen, rest, skip & non_neighbours(g, v));
                chosen.reset(v);
                skip.set(v);
            }
        };
        VertexSet chosen(g.order());
        extend(chosen, g.all_vertices(), VertexSet(g.order()));
        return result;
    }
}
