#pragma once

#include <homoglab/vertex_set.hpp>

#include <utility>
#include <vector>

namespace homoglab
{
    using Edge = std::pair<int, int>;

    /**
     * A finite simple graph on the vertices 0..order-1.
     *
     * Adjacency is kept as one VertexSet row per vertex, so neighbourhood
     * intersections are word-parallel. The relation is always symmetric and
     * irreflexive; add_edge rejects loops and out-of-range endpoints.
     */
    class Graph
    {
        public:
            Graph() = default;
            explicit Graph(int order);

            static auto from_edges(int order, const std::vector<Edge> & edges) -> Graph;

            /// Builds the graph whose edges are the pairs u<v for which adjacent(u, v) holds.
            template <typename F_>
            static auto from_predicate(int order, F_ && adjacent) -> Graph
            {
                Graph g(order);
                for (int v = 1 ; v < order ; ++v)
                    for (int u = 0 ; u < v ; ++u)
                        if (adjacent(u, v))
                            g.add_edge(u, v);
                return g;
            }

            auto order() const -> int { return int(_rows.size()); }

            auto adjacent(int u, int v) const -> bool { return _rows[u].test(v); }
            auto neighbours(int v) const -> const VertexSet & { return _rows[v]; }
            auto degree(int v) const -> int { return _rows[v].count(); }

            auto edge_count() const -> long;
            auto edges() const -> std::vector<Edge>;

            auto add_edge(int u, int v) -> void;

            auto no_vertices() const -> VertexSet { return VertexSet(order()); }
            auto all_vertices() const -> VertexSet { return VertexSet::full(order()); }

            auto check_vertex(int v) const -> void;
            auto check_set(const VertexSet & s) const -> void;

            auto operator== (const Graph & other) const -> bool = default;

        private:
            std::vector<VertexSet> _rows;
    };

    /// Named small graphs used throughout tests and examples.
    namespace named
    {
        auto complete(int n) -> Graph;
        auto empty(int n) -> Graph;
        auto path(int n) -> Graph;
        auto cycle(int n) -> Graph;
        auto petersen() -> Graph;
        /// Disjoint union; vertices of b follow those of a.
        auto disjoint_union(const Graph & a, const Graph & b) -> Graph;
    }
}
