#pragma once

#include <homoglab/graph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace homoglab
{
    auto complement(const Graph & g) -> Graph;

    /// g[h]: vertex (a, x) has index a * h.order() + x.
    auto lex_product(const Graph & g, const Graph & h) -> Graph;

    struct InducedSubgraph
    {
        Graph graph;
        /// original[i] is the vertex of the host that became vertex i.
        std::vector<int> original;
        /// new_index[v] is the index of host vertex v, or -1 if v was dropped.
        std::vector<int> new_index;
    };

    /// Induced subgraph on s; vertices keep their relative order.
    auto induced_subgraph(const Graph & g, const VertexSet & s) -> InducedSubgraph;

    /// Vertices adjacent to every member of s; all vertices when s is empty.
    auto common_neighbourhood(const Graph & g, const VertexSet & s) -> VertexSet;

    enum class Polarity
    {
        cone,
        cocone
    };

    /// Cones over x (common neighbourhood) or co-cones (outside x, adjacent to nothing in x).
    auto cone_set(const Graph & g, const VertexSet & x, Polarity polarity) -> VertexSet;

    auto is_independent(const Graph & g, const VertexSet & s) -> bool;
    auto is_clique(const Graph & g, const VertexSet & s) -> bool;

    /// True when every member of x has a neighbour in d.
    auto dominates(const Graph & g, const VertexSet & d, const VertexSet & x) -> bool;
    auto is_dominating_set(const Graph & g, const VertexSet & d) -> bool;
    auto is_independent_dominating(const Graph & g, const VertexSet & d) -> bool;

    auto is_connected(const Graph & g) -> bool;

    struct IndependenceResult
    {
        int size = 0;
        /// Lexicographically least maximum independent set.
        VertexSet witness;
    };

    /**
     * Exact independence number by branch and bound over the complement,
     * with a greedy clique-cover bound. The witness is the lexicographically
     * least maximum independent set.
     */
    auto independence_number(const Graph & g) -> IndependenceResult;

    /// Independence number of the subgraph induced by candidates, witness in host indices.
    auto independence_number_within(const Graph & g, const VertexSet & candidates) -> IndependenceResult;

    /// True iff the subgraph induced by candidates has an independent set of size at least k.
    auto has_independent_set(const Graph & g, const VertexSet & candidates, int k) -> bool;

    struct StarNumberResult
    {
        int value = 0;
        /// Least vertex attaining the maximum; empty for edgeless graphs.
        std::optional<int> centre;
        VertexSet witness;
    };

    /// max over v of alpha(N(v)); 0 when g has no edges.
    auto star_number(const Graph & g) -> StarNumberResult;

    enum class DirectoryMode
    {
        /// Independent dominating sets of size exactly alpha(g).
        exact,
        /// Independent dominating sets of size at least 2*sigma-1, for finite windows
        /// onto infinite graphs ("truncation-directory").
        truncation
    };

    /// Throws NotADirectoryBase unless d is independent and dominating.
    auto require_directory_base(const Graph & g, const VertexSet & d) -> void;

    auto is_directory(const Graph & g, const VertexSet & d, DirectoryMode mode = DirectoryMode::exact) -> bool;

    /**
     * All directories of g in lexicographic order, at most max_count of them
     * (0 = unlimited). Throws StarNumberZero for edgeless graphs.
     */
    auto directories(const Graph & g, DirectoryMode mode = DirectoryMode::exact,
            std::size_t max_count = 0) -> std::vector<VertexSet>;

    /// N(x) ∩ i for x outside i, {x} otherwise.
    auto address(const Graph & g, const VertexSet & i, int x) -> VertexSet;
    auto address_of_set(const Graph & g, const VertexSet & i, const VertexSet & xs) -> VertexSet;

    /// K_S = {v : N(v) ∩ i = s}.
    auto exact_neighbourhood(const Graph & g, const VertexSet & i, const VertexSet & s) -> VertexSet;

    /**
     * The recursive I-domination number: an exhaustive minimum set cover
     * when s misses i, otherwise |s ∩ i| + d(s \ B_s) with
     * B_s = (s ∩ i) ∪ N(s ∩ i).
     */
    auto domination_number(const Graph & g, const VertexSet & i, const VertexSet & s) -> int;

    struct AnalysisReport
    {
        int order = 0;
        long edge_count = 0;
        int independence_number = 0;
        VertexSet alpha_witness;
        int star_number = 0;
        std::optional<int> sigma_centre;
        VertexSet sigma_witness;
        std::vector<VertexSet> directories;
        /// Set when directories could not be computed (edgeless graph).
        std::optional<std::string> directory_note;
        bool is_connected = false;
    };

    auto analyze(const Graph & g, std::size_t max_directories = 0) -> AnalysisReport;
}
