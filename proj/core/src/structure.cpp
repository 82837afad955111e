#include <homoglab/errors.hpp>
#include <homoglab/structure.hpp>

#include <deque>
#include <functional>

namespace homoglab
{
    auto complement(const Graph & g) -> Graph
    {
        return Graph::from_predicate(g.order(), [&] (int u, int v) { return ! g.adjacent(u, v); });
    }

    auto lex_product(const Graph & g, const Graph & h) -> Graph
    {
        int m = h.order();
        return Graph::from_predicate(g.order() * m, [&] (int p, int q) {
                int a = p / m, x = p % m, b = q / m, y = q % m;
                return g.adjacent(a, b) || (a == b && h.adjacent(x, y));
                });
    }

    auto induced_subgraph(const Graph & g, const VertexSet & s) -> InducedSubgraph
    {
        g.check_set(s);
        InducedSubgraph result;
        result.original = s.members();
        result.new_index.assign(std::size_t(g.order()), -1);
        for (std::size_t i = 0 ; i < result.original.size() ; ++i)
            result.new_index[result.original[i]] = int(i);

        int n = int(result.original.size());
        result.graph = Graph::from_predicate(n, [&] (int u, int v) {
                return g.adjacent(result.original[u], result.original[v]);
                });
        return result;
    }

    auto common_neighbourhood(const Graph & g, const VertexSet & s) -> VertexSet
    {
        g.check_set(s);
        VertexSet result = g.all_vertices();
        s.for_each([&] (int v) { result &= g.neighbours(v); });
        return result;
    }

    auto cone_set(const Graph & g, const VertexSet & x, Polarity polarity) -> VertexSet
    {
        g.check_set(x);
        if (polarity == Polarity::cone)
            return common_neighbourhood(g, x);

        VertexSet result = g.all_vertices() - x;
        x.for_each([&] (int v) { result -= g.neighbours(v); });
        return result;
    }

    auto is_independent(const Graph & g, const VertexSet & s) -> bool
    {
        g.check_set(s);
        bool ok = true;
        s.for_each([&] (int v) { if (g.neighbours(v).intersects(s)) ok = false; });
        return ok;
    }

    auto is_clique(const Graph & g, const VertexSet & s) -> bool
    {
        g.check_set(s);
        bool ok = true;
        s.for_each([&] (int v) {
                VertexSet others = s;
                others.reset(v);
                if (! others.is_subset_of(g.neighbours(v)))
                    ok = false;
                });
        return ok;
    }

    auto dominates(const Graph & g, const VertexSet & d, const VertexSet & x) -> bool
    {
        g.check_set(d);
        g.check_set(x);
        VertexSet covered(g.order());
        d.for_each([&] (int v) { covered |= g.neighbours(v); });
        return x.is_subset_of(covered);
    }

    auto is_dominating_set(const Graph & g, const VertexSet & d) -> bool
    {
        return dominates(g, d, g.all_vertices() - d);
    }

    auto is_independent_dominating(const Graph & g, const VertexSet & d) -> bool
    {
        return is_independent(g, d) && is_dominating_set(g, d);
    }

    auto is_connected(const Graph & g) -> bool
    {
        if (g.order() == 0)
            return true;
        VertexSet seen(g.order());
        std::deque<int> queue{0};
        seen.set(0);
        while (! queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            (g.neighbours(v) - seen).for_each([&] (int w) {
                    seen.set(w);
                    queue.push_back(w);
                    });
        }
        return seen.count() == g.order();
    }

    auto require_directory_base(const Graph & g, const VertexSet & d) -> void
    {
        g.check_set(d);
        if (! is_independent(g, d))
            throw NotADirectoryBase("base set " + d.to_string() + " is not independent");
        if (! is_dominating_set(g, d))
            throw NotADirectoryBase("base set " + d.to_string() + " does not dominate the graph");
    }

    auto address(const Graph & g, const VertexSet & i, int x) -> VertexSet
    {
        require_directory_base(g, i);
        g.check_vertex(x);
        if (i.test(x)) {
            VertexSet result(g.order());
            result.set(x);
            return result;
        }
        return g.neighbours(x) & i;
    }

    auto address_of_set(const Graph & g, const VertexSet & i, const VertexSet & xs) -> VertexSet
    {
        require_directory_base(g, i);
        g.check_set(xs);
        VertexSet result(g.order());
        xs.for_each([&] (int x) {
                if (i.test(x))
                    result.set(x);
                else
                    result |= g.neighbours(x) & i;
                });
        return result;
    }

    auto exact_neighbourhood(const Graph & g, const VertexSet & i, const VertexSet & s) -> VertexSet
    {
        require_directory_base(g, i);
        g.check_set(s);
        if (! s.is_subset_of(i))
            throw InvalidInput("exact neighbourhood of " + s.to_string() + " which is not inside the base set");
        VertexSet result(g.order());
        for (int v = 0 ; v < g.order() ; ++v)
            if ((g.neighbours(v) & i) == s)
                result.set(v);
        return result;
    }

    namespace
    {
        // Smallest number of directory vertices hitting every address; s misses i.
        auto minimum_cover(const Graph & g, const VertexSet & i, const VertexSet & s) -> int
        {
            std::vector<VertexSet> addresses;
            VertexSet candidates(g.order());
            s.for_each([&] (int x) {
                    addresses.push_back(g.neighbours(x) & i);
                    candidates |= addresses.back();
                    });
            if (addresses.empty())
                return 0;

            std::vector<int> pool = candidates.members();
            VertexSet chosen(g.order());
            std::function<bool (std::size_t, int)> choose = [&] (std::size_t from, int remaining) -> bool {
                if (remaining == 0) {
                    for (auto & a : addresses)
                        if (! a.intersects(chosen))
                            return false;
                    return true;
                }
                for (std::size_t p = from ; p + std::size_t(remaining) <= pool.size() ; ++p) {
                    chosen.set(pool[p]);
                    bool ok = choose(p + 1, remaining - 1);
                    chosen.reset(pool[p]);
                    if (ok)
                        return true;
                }
                return false;
            };

            for (int k = 1 ; k <= int(pool.size()) ; ++k)
                if (choose(0, k))
                    return k;
            return int(pool.size());
        }

        auto domination_recursive(const Graph & g, const VertexSet & i, const VertexSet & s) -> int
        {
            if (s.empty())
                return 0;
            VertexSet in_base = s & i;
            if (in_base.empty())
                return minimum_cover(g, i, s);

            VertexSet blocked = in_base;
            in_base.for_each([&] (int x) { blocked |= g.neighbours(x); });
            return in_base.count() + domination_recursive(g, i, s - blocked);
        }
    }

    auto domination_number(const Graph & g, const VertexSet & i, const VertexSet & s) -> int
    {
        require_directory_base(g, i);
        g.check_set(s);
        s.for_each([&] (int x) {
                if (! i.test(x) && ! g.neighbours(x).intersects(i))
                    throw Undominated("vertex " + std::to_string(x) + " has no neighbour in " + i.to_string());
                });
        return domination_recursive(g, i, s);
    }

    auto analyze(const Graph & g, std::size_t max_directories) -> AnalysisReport
    {
        AnalysisReport report;
        report.order = g.order();
        report.edge_count = g.edge_count();

        auto alpha = independence_number(g);
        report.independence_number = alpha.size;
        report.alpha_witness = alpha.witness;

        auto sigma = star_number(g);
        report.star_number = sigma.value;
        report.sigma_centre = sigma.centre;
        report.sigma_witness = sigma.witness;

        if (sigma.value >= 1)
            report.directories = directories(g, DirectoryMode::exact, max_directories);
        else
            report.directory_note = "star number is 0: directories are defined only for graphs with an edge";

        report.is_connected = is_connected(g);
        return report;
    }
}
