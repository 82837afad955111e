#pragma once

#include <homoglab/graph.hpp>

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace homoglab
{
    /// Opaque isomorphism-class code: equal iff the graphs are isomorphic.
    class CanonicalCode
    {
        public:
            CanonicalCode() = default;
            explicit CanonicalCode(std::string bytes) : _bytes(std::move(bytes)) { }

            auto bytes() const -> const std::string & { return _bytes; }
            /// Lower-case hex rendering, used in reports.
            auto hex() const -> std::string;

            auto operator<=> (const CanonicalCode &) const = default;

        private:
            std::string _bytes;
    };

    struct CanonicalCodeHash
    {
        auto operator() (const CanonicalCode & c) const -> std::size_t
        {
            return std::hash<std::string>{}(c.bytes());
        }
    };

    inline constexpr int default_canonical_limit = 10;

    /**
     * Minimum adjacency string over all vertex orders consistent with a
     * colour-refinement partition, with twin pruning. Throws OrderTooLarge
     * beyond limit.
     */
    auto canonical_code(const Graph & g, int limit = default_canonical_limit) -> CanonicalCode;

    /// The canonical labelling behind canonical_code: order[p] is the vertex placed at position p.
    auto canonical_order(const Graph & g, int limit = default_canonical_limit) -> std::vector<int>;

    /// Relabels g so that vertex v becomes perm[v].
    auto relabel(const Graph & g, const std::vector<int> & perm) -> Graph;

    inline constexpr int enumeration_limit = 8;

    /**
     * One graph per isomorphism class on n vertices, ordered by canonical
     * code. Classes on n vertices are produced by adding a vertex with every
     * possible neighbourhood to each class on n-1 vertices.
     */
    auto enumerate_graphs(int n) -> std::vector<Graph>;
}
