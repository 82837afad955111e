#pragma once

#include <homoglab/canonical.hpp>
#include <homoglab/graph.hpp>
#include <homoglab/morphism.hpp>

#include <optional>
#include <string>
#include <vector>

namespace homoglab
{
    /// One isomorphism type of induced subgraph, with the vertex sets realising it.
    struct AgeClass
    {
        Graph representative;
        CanonicalCode code;
        std::vector<VertexSet> embeddings;

        auto size() const -> int { return representative.order(); }
    };

    struct AgeOptions
    {
        /// Maximum embeddings kept per class; 0 keeps all.
        std::size_t embedding_cap = 0;
        int code_limit = default_canonical_limit;
    };

    /// Isomorphism types of induced subgraphs on 1..k vertices, ordered by (size, code).
    auto age(const Graph & g, int k, const AgeOptions & options = {}) -> std::vector<AgeClass>;

    struct AgeConflict
    {
        CanonicalCode code;
        VertexSet coned_embedding;
        int cone = -1;
        VertexSet coneless_embedding;
    };

    struct AgePartition
    {
        int k = 0;
        std::vector<AgeClass> classes;
        /// Indices into classes.
        std::vector<std::size_t> kk;
        std::vector<std::size_t> okk;
        std::vector<AgeConflict> conflicts;

        auto in_kk(std::size_t cls) const -> bool;
        auto in_okk(std::size_t cls) const -> bool;
    };

    /**
     * Splits the age into classes with a coned embedding (kk) and classes with
     * a coneless embedding (okk). Every embedding is scanned, whatever the cap.
     */
    auto kk_okk(const Graph & g, int k, const AgeOptions & options = {}) -> AgePartition;

    /// a ⪯ b: there is a surjective homomorphism a -> b.
    auto preceq(const Graph & a, const Graph & b) -> bool;

    enum class DecisionMethod
    {
        direct,
        conditions
    };

    struct HomogCounterexample
    {
        /// A local X-morphism of the graph with no Y-extension.
        PartialMap local;
        /// A vertex to which local has no one-point extension, when one was identified.
        std::optional<int> vertex;
    };

    /// Which condition of the kk/okk characterisation failed, with witnesses.
    struct ConditionViolation
    {
        /// 1: kk ∩ okk ≠ ∅;  2: kk not upward closed under ⪯.
        int condition = 0;
        CanonicalCode class_a;
        CanonicalCode class_b;
        VertexSet coned_embedding;
        int cone = -1;
        VertexSet coneless_embedding;
    };

    struct HomogReport
    {
        bool verdict = false;
        LocalKind x = LocalKind::H;
        MorphismKind y = MorphismKind::H;
        DecisionMethod method = DecisionMethod::direct;
        std::optional<HomogCounterexample> counterexample;
        std::optional<ConditionViolation> violation;
        std::vector<std::string> notes;
    };

    enum class DirectStrategy
    {
        /// One-point extension for X = Y ∈ {H, M}; full search otherwise.
        accelerated,
        /// Full endomorphism search for every local morphism.
        full
    };

    inline constexpr int decision_limit = default_canonical_limit;

    /**
     * Decides XY-homogeneity by enumerating local X-morphisms (domain size
     * ascending, then lexicographic) and extending each. The reported
     * counterexample is the first failure in that order.
     */
    auto decide_xy(const Graph & g, LocalKind x, MorphismKind y,
            DirectStrategy strategy = DirectStrategy::accelerated) -> HomogReport;

    /// HH-homogeneity via kk ∩ okk = ∅ and upward closure of kk under ⪯.
    auto decide_hh_conditions(const Graph & g, std::optional<int> k = std::nullopt) -> HomogReport;

    /// True iff the counterexample's map is a local X-morphism of g without a Y-extension.
    auto replays(const Graph & g, const HomogReport & report) -> bool;
}
