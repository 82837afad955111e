#pragma once

#include <homoglab/graph.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace homoglab
{
    using Natural = std::uint64_t;
    /// A finite set of naturals, sorted ascending without repeats.
    using NaturalSet = std::vector<Natural>;

    /**
     * A countable graph on the naturals given by a pure adjacency oracle.
     *
     * The oracle is only ever called with i < j; symmetry and irreflexivity
     * are enforced here. Metadata is descriptive and never consulted by
     * verifiers. A family may attach a certificate: a predicate that returns
     * true only when no vertex at all is a cone over a and a co-cone over b.
     */
    class Presentation
    {
        public:
            using Oracle = std::function<bool (Natural, Natural)>;
            using Certificate = std::function<bool (const NaturalSet & a, const NaturalSet & b)>;

            struct Metadata
            {
                std::string family;
                std::string realisation;
                std::vector<std::string> declared;
            };

            Presentation(std::string name, Oracle adjacency, Metadata metadata, Certificate certificate = {});

            auto name() const -> const std::string & { return _name; }
            auto metadata() const -> const Metadata & { return *_metadata; }

            auto adjacent(Natural i, Natural j) const -> bool
            {
                if (i == j)
                    return false;
                return i < j ? (*_adjacency)(i, j) : (*_adjacency)(j, i);
            }

            /// True only if no witness exists anywhere (not merely within a budget).
            auto proves_no_witness(const NaturalSet & a, const NaturalSet & b) const -> bool;

            auto oracle() const -> const Oracle & { return *_adjacency; }
            auto certificate() const -> const Certificate & { return _certificate; }

        private:
            std::string _name;
            std::shared_ptr<const Oracle> _adjacency;
            std::shared_ptr<const Metadata> _metadata;
            Certificate _certificate;
    };

    namespace families
    {
        /// BIT graph: i < j adjacent iff bit i of j is set.
        auto rado_bit() -> Presentation;
        /// RS(n): directory a_0..a_{n-1} first, then clique vertices round-robin over C_0..C_{n-1}.
        auto rs(int n) -> Presentation;
        auto k_omega() -> Presentation;
        auto null_graph() -> Presentation;
        /// Disjoint union of countably many countable cliques (lex(null, k_omega)).
        auto i_omega_k_omega() -> Presentation;
        /// Complement of K_1 ⊎ K_2 ⊎ K_3 ⊎ ..., cliques laid out consecutively.
        auto union_cliques_complement() -> Presentation;
        /// Two-way infinite path, naturals enumerated as 0, 1, -1, 2, -2, ...
        auto two_way_path() -> Presentation;
        auto complement_of(const Presentation & p) -> Presentation;
        /// p[q] with pairs enumerated by the Cantor pairing.
        auto lex(const Presentation & p, const Presentation & q) -> Presentation;

        /// Index -> (part, position) helpers shared by families and tests.
        auto cantor_unpair(Natural k) -> std::pair<Natural, Natural>;
        auto zigzag_integer(Natural k) -> std::int64_t;
    }

    /**
     * Builds a presentation from a textual family spec: "rado_bit", "rs:3",
     * "k_omega", "null", "i_omega_k_omega", "union_cliques_complement",
     * "two_way_path", "complement:<spec>", "complement(<spec>)",
     * "lex:<spec>,<spec>", "lex(<spec>,<spec>)". Throws BadParams.
     */
    auto make_presentation(const std::string & spec) -> Presentation;

    /// Induced graph on 0..n-1.
    auto truncate(const Presentation & p, int n) -> Graph;

    enum class WitnessStatus
    {
        found,
        exhausted,
        proven_absent
    };

    auto to_string(WitnessStatus s) -> std::string;

    struct WitnessResult
    {
        WitnessStatus status = WitnessStatus::exhausted;
        std::optional<Natural> vertex;
    };

    /**
     * Least x < budget outside a ∪ b (and outside exclude) adjacent to all of
     * a and to none of b. Absence is "exhausted" unless the family
     * certificate proves it. Throws InvalidInput if a and b overlap or reach
     * past the budget.
     */
    auto extension_witness(const Presentation & p, const NaturalSet & a, const NaturalSet & b,
            Natural budget, const NaturalSet & exclude = {}) -> WitnessResult;

    enum class BoundedProperty
    {
        triangle,  ///< every finite set has a cone
        cocone     ///< every finite set has a co-cone
    };

    struct BoundedFailure
    {
        NaturalSet set;
        WitnessStatus status = WitnessStatus::exhausted;
    };

    struct BoundedPropertyReport
    {
        BoundedProperty property = BoundedProperty::triangle;
        int set_size = 0;
        Natural base = 0;
        Natural budget = 0;
        long sets_checked = 0;
        std::vector<BoundedFailure> failures;

        auto all_witnessed() const -> bool { return failures.empty(); }
    };

    /// Runs extension_witness for every nonempty subset of size <= k of the first base vertices.
    auto check_property_bounded(const Presentation & p, BoundedProperty prop, int k,
            Natural base, Natural budget) -> BoundedPropertyReport;

    enum class MbVerdict
    {
        k_omega,
        null,
        i_omega_of_k_omega,
        k_omega_of_i_omega,
        rado,
        not_mb_evidence,
        unknown
    };

    auto to_string(MbVerdict v) -> std::string;

    struct MbClassification
    {
        MbVerdict verdict = MbVerdict::unknown;
        Natural budget = 0;
        /// Human-readable probe results backing the verdict; never a proof.
        std::vector<std::string> evidence;
    };

    auto classify_mb(const Presentation & p, Natural budget) -> MbClassification;
}
