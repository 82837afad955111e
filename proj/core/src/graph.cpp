#include <homoglab/errors.hpp>
#include <homoglab/graph.hpp>

#include <string>

namespace homoglab
{
    Graph::Graph(int order)
    {
        if (order < 0)
            throw InvalidInput("negative graph order");
        _rows.assign(std::size_t(order), VertexSet(order));
    }

    auto Graph::from_edges(int order, const std::vector<Edge> & edges) -> Graph
    {
        Graph g(order);
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }

    auto Graph::check_vertex(int v) const -> void
    {
        if (v < 0 || v >= order())
            throw InvalidInput("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order()));
    }

    auto Graph::check_set(const VertexSet & s) const -> void
    {
        if (s.universe() != order())
            throw InvalidInput("vertex set universe " + std::to_string(s.universe())
                    + " does not match graph order " + std::to_string(order()));
    }

    auto Graph::add_edge(int u, int v) -> void
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw InvalidInput("loop at vertex " + std::to_string(u));
        _rows[u].set(v);
        _rows[v].set(u);
    }

    auto Graph::edge_count() const -> long
    {
        long twice = 0;
        for (auto & r : _rows)
            twice += r.count();
        return twice / 2;
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        for (int u = 0 ; u < order() ; ++u)
            _rows[u].for_each([&] (int v) {
                    if (u < v)
                        result.emplace_back(u, v);
                    });
        return result;
    }

    namespace named
    {
        auto complete(int n) -> Graph
        {
            return Graph::from_predicate(n, [] (int, int) { return true; });
        }

        auto empty(int n) -> Graph
        {
            return Graph(n);
        }

        auto path(int n) -> Graph
        {
            return Graph::from_predicate(n, [] (int u, int v) { return v == u + 1; });
        }

        auto cycle(int n) -> Graph
        {
            return Graph::from_predicate(n, [n] (int u, int v) { return v == u + 1 || (u == 0 && v == n - 1 && n > 2); });
        }

        auto petersen() -> Graph
        {
            // outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5..9
            Graph g(10);
            for (int i = 0 ; i < 5 ; ++i) {
                g.add_edge(i, (i + 1) % 5);
                g.add_edge(i, i + 5);
                g.add_edge(5 + i, 5 + (i + 2) % 5);
            }
            return g;
        }

        auto disjoint_union(const Graph & a, const Graph & b) -> Graph
        {
            Graph g(a.order() + b.order());
            for (auto [u, v] : a.edges())
                g.add_edge(u, v);
            for (auto [u, v] : b.edges())
                g.add_edge(a.order() + u, a.order() + v);
            return g;
        }
    }
}
