#pragma once

#include <homoglab/errors.hpp>
#include <homoglab/presentation.hpp>

#include <string>
#include <utility>
#include <vector>

namespace homoglab
{
    /// Find a vertex adjacent to every member of a and to no member of b.
    struct Requirement
    {
        NaturalSet a;
        NaturalSet b;

        auto to_string() const -> std::string;
        auto operator== (const Requirement &) const -> bool = default;
    };

    struct ScheduledRequirement
    {
        Requirement requirement;
        Natural witness = 0;
        /// True when the witness was newly placed for this requirement.
        bool fresh = false;
    };

    using NaturalEdge = std::pair<Natural, Natural>;

    struct RadoConstruction
    {
        std::string host;
        std::vector<Natural> placed;
        /// Pairs (u, v) with u < v.
        std::vector<NaturalEdge> selected_edges;
        std::vector<ScheduledRequirement> schedule;
    };

    class BudgetExhausted : public Error
    {
        public:
            BudgetExhausted(Requirement requirement, bool proven_absent, RadoConstruction partial);

            auto requirement() const -> const Requirement & { return _requirement; }
            auto proven_absent() const -> bool { return _proven_absent; }
            auto partial() const -> const RadoConstruction & { return _partial; }

        private:
            Requirement _requirement;
            bool _proven_absent;
            RadoConstruction _partial;
    };

    struct SpanningOptions
    {
        /// Requirements are pairs (A, B) of placed vertices with |A ∪ B| at most this.
        int max_requirement_size = 3;
    };

    /**
     * Greedy back-and-forth construction of a spanning subgraph with the
     * extension property. Alternates placing the least unplaced host vertex
     * with serving the next requirement; requirements are dovetailed by the
     * placement stage at which they appear, then by size, then
     * lexicographically. A requirement (A, B) is served by an already placed
     * vertex when one qualifies in the selected graph, otherwise by the least
     * unplaced host vertex below budget that is a host cone over A; the
     * witness is joined to exactly A. Stops once at least n vertices are
     * placed and every host vertex below n is placed. Throws BudgetExhausted
     * at the first requirement that cannot be served.
     */
    auto spanning_rado(const Presentation & p, int n, Natural budget,
            const SpanningOptions & options = {}) -> RadoConstruction;

    /// Replays the construction against the host oracle; returns violations (empty = valid).
    auto verify_construction(const Presentation & p, const RadoConstruction & c) -> std::vector<std::string>;
}
