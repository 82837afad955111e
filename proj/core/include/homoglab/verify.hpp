#pragma once

#include <homoglab/graph.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homoglab
{
    /// Named integer lists that, together with the instance graph, replay a failure.
    using WitnessFields = std::vector<std::pair<std::string, std::vector<int>>>;

    struct SuiteFailure
    {
        std::string instance;
        /// graph6 of the instance, so the failure replays without the generator.
        std::string graph6;
        std::string clause;
        WitnessFields witness;
    };

    struct SuiteReport
    {
        std::string suite;
        long instances = 0;
        std::vector<SuiteFailure> failures;
        /// Named counters (e.g. classes per order, HH-positive count).
        std::vector<std::pair<std::string, long>> stats;
        std::vector<std::string> notes;
        std::optional<std::uint64_t> seed;
        std::chrono::milliseconds elapsed{0};

        auto passed() const -> bool { return failures.empty(); }
        auto failures_with_clause(const std::string & clause) const -> long;
        auto stat(const std::string & name) const -> long;
    };

    /// Clause names used in SuiteFailure::clause.
    namespace clause
    {
        inline const std::string exact_equals_common = "exact-neighbourhood-equals-common";
        inline const std::string disjoint_no_edges = "disjoint-addresses-no-edges";
        inline const std::string cone_address_meets = "cone-address-intersects";
        inline const std::string cone_address_dominates = "cone-address-dominates";
        inline const std::string richness = "neighbour-richness";
        inline const std::string alpha_bound = "alpha-bound";
        inline const std::string alpha_tight = "alpha-bound-tight";
        inline const std::string alpha_invariant = "alpha-sigma-part-size-invariant";
        inline const std::string decider_disagreement = "decider-disagreement";
        inline const std::string neighbourhood_closure = "neighbourhood-closure";
        inline const std::string class_count = "class-count";
    }

    /// Checks K_S = N(S), no edges between disjoint exact neighbourhoods, and the cone-address lemma
    /// (X up to x_cap vertices with star-number-sized addresses).
    auto verify_directory_lemmas(const Graph & g, const VertexSet & i, const std::string & instance = "graph",
            int x_cap = 4) -> SuiteReport;

    struct RandomLemmaOptions
    {
        int count = 1000;
        int max_order = 40;
        std::uint64_t seed = 20191;
    };

    /// The directory-lemma suite over seeded Erdos-Renyi graphs with p ∈ {0.2, 0.5, 0.8}.
    auto verify_directory_lemmas_random(const RandomLemmaOptions & options) -> SuiteReport;

    /// For intersecting S, T of star-number size and v ∈ K_S: |N(v) ∩ K_T| >= threshold.
    auto verify_neighbour_richness(const Graph & g, const VertexSet & i, int threshold,
            const std::string & instance = "graph") -> SuiteReport;

    struct TriangleDom2
    {
        std::optional<std::vector<int>> triangle;
        int value = 0;
        /// Set when the star number is below 2.
        std::optional<std::string> note;
    };

    auto find_triangle_dom2(const Graph & g, const VertexSet & i) -> TriangleDom2;

    /// ceil-division form of 2σ + ⌈σ/2⌉ - 1.
    auto alpha_bound(int sigma) -> int;

    /// For n in [first, last] ⊆ [3, 8]: alpha < bound on rs(n) truncations, tight at n = 3,
    /// and the same alpha/sigma for every part size listed.
    auto verify_alpha_bound_family(int first, int last, std::vector<int> part_sizes = {2, 3}) -> SuiteReport;

    /// Both HH deciders on every class with 1..n_max vertices, plus neighbourhood closure for |S| <= 2.
    auto cross_validate_hh(int n_max) -> SuiteReport;
}
