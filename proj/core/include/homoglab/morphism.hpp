#pragma once

#include <homoglab/graph.hpp>

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homoglab
{
    /// A finite partial vertex map, kept as (source, target) pairs with distinct sources.
    struct PartialMap
    {
        std::vector<std::pair<int, int>> pairs;

        auto size() const -> std::size_t { return pairs.size(); }
        auto domain(int universe) const -> VertexSet;
        auto image(int universe) const -> VertexSet;
        auto to_string() const -> std::string;

        auto operator== (const PartialMap &) const -> bool = default;
    };

    /// Image of every source vertex; index = source.
    using TotalMap = std::vector<int>;

    struct MorphismConstraints
    {
        bool injective = false;
        bool surjective = false;
        /// Non-edges must go to non-edges (isomorphism onto the image); implies injective.
        bool respect_nonedges = false;
    };

    /// Endomorphism classes that a local morphism may be asked to extend to.
    enum class MorphismKind
    {
        H,  ///< homomorphism
        M,  ///< monomorphism
        E,  ///< epimorphism (surjective)
        B,  ///< bimorphism (bijective)
        A,  ///< automorphism
        I   ///< isomorphic embedding
    };

    /// Classes of local morphisms.
    enum class LocalKind
    {
        H,
        M,
        I
    };

    auto to_char(MorphismKind k) -> char;
    auto to_char(LocalKind k) -> char;
    auto parse_morphism_kind(char c) -> MorphismKind;
    auto parse_local_kind(char c) -> LocalKind;

    /// The constraints a total endomorphism must honour for the given kind. B is realised as A.
    auto constraints_for(MorphismKind k) -> MorphismConstraints;

    /// Throws MalformedSeed on repeated sources or out-of-range pairs.
    auto validate_seed(const Graph & a, const Graph & b, const PartialMap & seed) -> void;

    auto is_local_homomorphism(const Graph & a, const Graph & b, const PartialMap & f) -> bool;
    auto is_local_monomorphism(const Graph & a, const Graph & b, const PartialMap & f) -> bool;
    auto is_local_isomorphism(const Graph & a, const Graph & b, const PartialMap & f) -> bool;
    auto is_local(const Graph & a, const Graph & b, const PartialMap & f, LocalKind kind) -> bool;

    /**
     * Independent validator used on every witness: returns a description of
     * the first violated condition, or nullopt if map is a morphism a -> b
     * honouring the constraints and agreeing with the seed.
     */
    auto morphism_violation(const Graph & a, const Graph & b, const TotalMap & map,
            const MorphismConstraints & c, const PartialMap & seed = {}) -> std::optional<std::string>;

    /**
     * Calls visit on every total map a -> b extending seed and honouring c,
     * in lexicographic order of (map[0], map[1], ...), until visit returns
     * false. Returns false iff the enumeration was stopped by visit.
     */
    auto for_each_morphism(const Graph & a, const Graph & b, const PartialMap & seed,
            const MorphismConstraints & c, const std::function<bool (const TotalMap &)> & visit) -> bool;

    /// Lexicographically least total morphism a -> b extending seed, if any.
    auto search_morphism(const Graph & a, const Graph & b, const PartialMap & seed,
            const MorphismConstraints & c) -> std::optional<TotalMap>;

    /**
     * Extends a local morphism f of g to a total endomorphism of the given
     * kind. f must be a local homomorphism of g (SeedNotLocalMorphism
     * otherwise); a seed too weak for the kind simply has no extension.
     */
    auto extends_in(const Graph & g, const PartialMap & f, MorphismKind kind) -> std::optional<TotalMap>;
}
