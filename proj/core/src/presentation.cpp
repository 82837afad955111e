#include <homoglab/errors.hpp>
#include <homoglab/presentation.hpp>
#include <homoglab/structure.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>

namespace homoglab
{
    Presentation::Presentation(std::string name, Oracle adjacency, Metadata metadata, Certificate certificate) :
        _name(std::move(name)),
        _adjacency(std::make_shared<const Oracle>(std::move(adjacency))),
        _metadata(std::make_shared<const Metadata>(std::move(metadata))),
        _certificate(std::move(certificate))
    {
    }

    auto Presentation::proves_no_witness(const NaturalSet & a, const NaturalSet & b) const -> bool
    {
        return _certificate && _certificate(a, b);
    }

    namespace families
    {
        auto cantor_unpair(Natural k) -> std::pair<Natural, Natural>
        {
            auto w = Natural((std::sqrt(8.0L * (long double)(k) + 1.0L) - 1.0L) / 2.0L);
            while (w * (w + 1) / 2 > k)
                --w;
            while ((w + 1) * (w + 2) / 2 <= k)
                ++w;
            Natural y = k - w * (w + 1) / 2;
            return {w - y, y};
        }

        auto zigzag_integer(Natural k) -> std::int64_t
        {
            if (k % 2 == 1)
                return std::int64_t((k + 1) / 2);
            return -std::int64_t(k / 2);
        }

        auto rado_bit() -> Presentation
        {
            return Presentation("rado_bit",
                    [] (Natural i, Natural j) { return i < 64 && ((j >> i) & 1) != 0; },
                    {"rado_bit", "i < j adjacent iff bit i of j is set", {"triangle", "cocone", "rado"}});
        }

        auto rs(int n) -> Presentation
        {
            if (n < 3)
                throw BadParams("rs requires n >= 3, got " + std::to_string(n));
            Natural m = Natural(n);
            // indices below n are the directory; above, clique vertices round-robin over the parts
            auto oracle = [m] (Natural i, Natural j) {
                if (j < m)
                    return false;
                if (i < m)
                    return (j - m) % m != i;
                return true;
            };
            auto certificate = [m] (const NaturalSet & a, const NaturalSet &) {
                for (Natural v = 0 ; v < m ; ++v)
                    if (! std::binary_search(a.begin(), a.end(), v))
                        return false;
                return true;
            };
            return Presentation("rs:" + std::to_string(n), oracle,
                    {"rs", "a_0..a_{n-1} then clique vertices round-robin over C_0..C_{n-1}; a_j ~ c iff c not in C_j",
                    {"triangle fails at the directory"}}, certificate);
        }

        auto k_omega() -> Presentation
        {
            return Presentation("k_omega", [] (Natural, Natural) { return true; },
                    {"k_omega", "every pair adjacent", {"mb"}},
                    [] (const NaturalSet &, const NaturalSet & b) { return ! b.empty(); });
        }

        auto null_graph() -> Presentation
        {
            return Presentation("null", [] (Natural, Natural) { return false; },
                    {"null", "no edges", {"mb"}},
                    [] (const NaturalSet & a, const NaturalSet &) { return ! a.empty(); });
        }

        auto lex(const Presentation & p, const Presentation & q) -> Presentation
        {
            auto oracle = [p, q] (Natural i, Natural j) {
                auto [x, y] = cantor_unpair(i);
                auto [u, v] = cantor_unpair(j);
                if (x != u)
                    return p.adjacent(x, u);
                return q.adjacent(y, v);
            };
            return Presentation("lex(" + p.name() + "," + q.name() + ")", oracle,
                    {"lex", "vertex k is the pair cantor_unpair(k) = (outer, inner)", {}});
        }

        auto i_omega_k_omega() -> Presentation
        {
            auto inner = lex(null_graph(), k_omega());
            return Presentation("i_omega_k_omega", inner.oracle(),
                    {"i_omega_k_omega", "lex(null, k_omega) under the Cantor pairing", {"mb"}});
        }

        namespace
        {
            /// Clique m >= 1 occupies [m(m-1)/2, m(m+1)/2).
            auto clique_of(Natural v) -> Natural
            {
                auto m = Natural((1.0L + std::sqrt(1.0L + 8.0L * (long double)(v))) / 2.0L);
                while (m > 1 && m * (m - 1) / 2 > v)
                    --m;
                while (m * (m + 1) / 2 <= v)
                    ++m;
                return m;
            }
        }

        auto union_cliques_complement() -> Presentation
        {
            return Presentation("union_cliques_complement",
                    [] (Natural i, Natural j) { return clique_of(i) != clique_of(j); },
                    {"union_cliques_complement", "complement of K_1 + K_2 + K_3 + ..., cliques consecutive", {"triangle"}});
        }

        auto two_way_path() -> Presentation
        {
            return Presentation("two_way_path",
                    [] (Natural i, Natural j) {
                        auto d = zigzag_integer(i) - zigzag_integer(j);
                        return d == 1 || d == -1;
                    },
                    {"two_way_path", "k -> 0, 1, -1, 2, -2, ...; adjacent iff the integers differ by one", {}});
        }

        auto complement_of(const Presentation & p) -> Presentation
        {
            auto oracle = [p] (Natural i, Natural j) { return ! p.adjacent(i, j); };
            Presentation::Certificate certificate;
            if (p.certificate())
                certificate = [p] (const NaturalSet & a, const NaturalSet & b) { return p.proves_no_witness(b, a); };
            return Presentation("complement(" + p.name() + ")", oracle,
                    {"complement", "complement of " + p.name(), {}}, certificate);
        }
    }

    namespace
    {
        auto trim(const std::string & s) -> std::string
        {
            auto first = s.find_first_not_of(" \t");
            if (first == std::string::npos)
                return "";
            auto last = s.find_last_not_of(" \t");
            return s.substr(first, last - first + 1);
        }

        /// Splits on commas that are not nested in parentheses.
        auto split_top_level(const std::string & s) -> std::vector<std::string>
        {
            std::vector<std::string> parts;
            int depth = 0;
            std::string current;
            for (char c : s) {
                if (c == '(')
                    ++depth;
                else if (c == ')')
                    --depth;
                if (c == ',' && depth == 0) {
                    parts.push_back(trim(current));
                    current.clear();
                }
                else
                    current += c;
            }
            if (depth != 0)
                throw BadParams("unbalanced parentheses in '" + s + "'");
            parts.push_back(trim(current));
            return parts;
        }

        /// Returns the argument text of "name:args" or "name(args)", if spec has that head.
        auto arguments_of(const std::string & spec, const std::string & head) -> std::optional<std::string>
        {
            if (spec.rfind(head + ":", 0) == 0)
                return spec.substr(head.size() + 1);
            if (spec.rfind(head + "(", 0) == 0 && spec.back() == ')')
                return spec.substr(head.size() + 1, spec.size() - head.size() - 2);
            return std::nullopt;
        }
    }

    auto make_presentation(const std::string & raw) -> Presentation
    {
        auto spec = trim(raw);
        if (spec == "rado_bit" || spec == "rado")
            return families::rado_bit();
        if (spec == "k_omega")
            return families::k_omega();
        if (spec == "null" || spec == "i_omega")
            return families::null_graph();
        if (spec == "i_omega_k_omega")
            return families::i_omega_k_omega();
        if (spec == "union_cliques_complement")
            return families::union_cliques_complement();
        if (spec == "two_way_path")
            return families::two_way_path();

        if (auto args = arguments_of(spec, "rs")) {
            std::size_t used = 0;
            int n = 0;
            try {
                n = std::stoi(*args, &used);
            }
            catch (const std::exception &) {
                throw BadParams("rs expects an integer parameter, got '" + *args + "'");
            }
            if (used != args->size())
                throw BadParams("rs expects an integer parameter, got '" + *args + "'");
            return families::rs(n);
        }
        if (auto args = arguments_of(spec, "complement"))
            return families::complement_of(make_presentation(*args));
        if (auto args = arguments_of(spec, "lex")) {
            auto parts = split_top_level(*args);
            if (parts.size() != 2)
                throw BadParams("lex expects two families, got '" + *args + "'");
            return families::lex(make_presentation(parts[0]), make_presentation(parts[1]));
        }
        throw BadParams("unknown family '" + spec + "'");
    }

    auto truncate(const Presentation & p, int n) -> Graph
    {
        if (n < 0)
            throw InvalidInput("truncation size must be nonnegative");
        return Graph::from_predicate(n, [&] (int u, int v) { return p.oracle()(Natural(u), Natural(v)); });
    }

    auto to_string(WitnessStatus s) -> std::string
    {
        switch (s) {
            case WitnessStatus::found: return "found";
            case WitnessStatus::exhausted: return "exhausted";
            case WitnessStatus::proven_absent: return "proven_absent";
        }
        return "?";
    }

    auto extension_witness(const Presentation & p, const NaturalSet & a, const NaturalSet & b,
            Natural budget, const NaturalSet & exclude) -> WitnessResult
    {
        auto contains = [] (const NaturalSet & s, Natural v) { return std::binary_search(s.begin(), s.end(), v); };
        for (auto * s : {&a, &b, &exclude})
            if (! std::is_sorted(s->begin(), s->end()) || std::adjacent_find(s->begin(), s->end()) != s->end())
                throw InvalidInput("vertex sets must be sorted without repeats");
        for (auto v : a) {
            if (contains(b, v))
                throw InvalidInput("cone and co-cone sets overlap at " + std::to_string(v));
            if (v >= budget)
                throw InvalidInput("vertex " + std::to_string(v) + " lies beyond the budget");
        }
        for (auto v : b)
            if (v >= budget)
                throw InvalidInput("vertex " + std::to_string(v) + " lies beyond the budget");

        for (Natural x = 0 ; x < budget ; ++x) {
            if (contains(a, x) || contains(b, x) || contains(exclude, x))
                continue;
            if (std::all_of(a.begin(), a.end(), [&] (Natural v) { return p.adjacent(x, v); })
                    && std::none_of(b.begin(), b.end(), [&] (Natural v) { return p.adjacent(x, v); }))
                return {WitnessStatus::found, x};
        }
        return {p.proves_no_witness(a, b) ? WitnessStatus::proven_absent : WitnessStatus::exhausted, std::nullopt};
    }

    auto check_property_bounded(const Presentation & p, BoundedProperty prop, int k,
            Natural base, Natural budget) -> BoundedPropertyReport
    {
        BoundedPropertyReport report;
        report.property = prop;
        report.set_size = k;
        report.base = base;
        report.budget = budget;
        if (base > budget)
            throw InvalidInput("base exceeds budget");

        NaturalSet current;
        std::function<void (Natural)> extend = [&] (Natural from) {
            if (! current.empty()) {
                ++report.sets_checked;
                auto result = prop == BoundedProperty::triangle
                    ? extension_witness(p, current, {}, budget)
                    : extension_witness(p, {}, current, budget);
                if (result.status != WitnessStatus::found)
                    report.failures.push_back({current, result.status});
            }
            if (int(current.size()) == k)
                return;
            for (Natural v = from ; v < base ; ++v) {
                current.push_back(v);
                extend(v + 1);
                current.pop_back();
            }
        };
        extend(0);
        return report;
    }

    auto to_string(MbVerdict v) -> std::string
    {
        switch (v) {
            case MbVerdict::k_omega: return "K_omega";
            case MbVerdict::null: return "I_omega";
            case MbVerdict::i_omega_of_k_omega: return "I_omega_of_K_omega";
            case MbVerdict::k_omega_of_i_omega: return "K_omega_of_I_omega";
            case MbVerdict::rado: return "Rado";
            case MbVerdict::not_mb_evidence: return "not_MB_evidence";
            case MbVerdict::unknown: return "unknown";
        }
        return "?";
    }

    namespace
    {
        struct CliqueUnionShape
        {
            bool is_union = false;
            int components = 0;
            std::vector<int> component_size;
        };

        /// Whether every component is a clique; component_size is indexed by vertex.
        auto clique_union_shape(const Graph & g) -> CliqueUnionShape
        {
            CliqueUnionShape shape;
            shape.is_union = true;
            shape.component_size.assign(std::size_t(g.order()), 0);
            VertexSet seen(g.order());
            for (int v = 0 ; v < g.order() ; ++v) {
                if (seen.test(v))
                    continue;
                VertexSet component = g.neighbours(v);
                component.set(v);
                ++shape.components;
                int size = component.count();
                component.for_each([&] (int u) {
                        seen.set(u);
                        shape.component_size[u] = size;
                        VertexSet closed = g.neighbours(u);
                        closed.set(u);
                        if (closed != component)
                            shape.is_union = false;
                        });
            }
            return shape;
        }

        auto grows_as_clique_union(const Graph & small, const Graph & large, int probes,
                std::vector<std::string> & evidence, const std::string & label) -> bool
        {
            auto before = clique_union_shape(small), after = clique_union_shape(large);
            if (! before.is_union || ! after.is_union)
                return false;
            if (after.components <= before.components) {
                evidence.push_back(label + ": clique count stays at " + std::to_string(after.components));
                return false;
            }
            for (int v = 0 ; v < probes && v < small.order() ; ++v)
                if (after.component_size[v] <= before.component_size[v]) {
                    evidence.push_back(label + ": clique of vertex " + std::to_string(v) + " stays at size "
                            + std::to_string(after.component_size[v]));
                    return false;
                }
            evidence.push_back(label + ": " + std::to_string(before.components) + " -> "
                    + std::to_string(after.components) + " cliques, early cliques growing");
            return true;
        }
    }

    auto classify_mb(const Presentation & p, Natural budget) -> MbClassification
    {
        MbClassification result;
        result.budget = budget;
        auto & evidence = result.evidence;

        if (budget < 8) {
            evidence.push_back("budget too small to probe");
            return result;
        }
        int size = int(std::min<Natural>(budget, 1u << 14));
        int half = size / 2;
        int probes = std::max(1, int(std::bit_width(budget)) - 2);

        auto large = truncate(p, size);
        auto small = induced_subgraph(large, VertexSet::prefix(size, half)).graph;
        long pairs = long(size) * (size - 1) / 2;

        if (large.edge_count() == pairs) {
            evidence.push_back("truncation to " + std::to_string(size) + " is complete");
            result.verdict = MbVerdict::k_omega;
            return result;
        }
        if (large.edge_count() == 0) {
            evidence.push_back("truncation to " + std::to_string(size) + " has no edges");
            result.verdict = MbVerdict::null;
            return result;
        }

        if (grows_as_clique_union(small, large, probes, evidence, "disjoint cliques")) {
            result.verdict = MbVerdict::i_omega_of_k_omega;
            return result;
        }
        if (grows_as_clique_union(complement(small), complement(large), probes, evidence, "complement disjoint cliques")) {
            result.verdict = MbVerdict::k_omega_of_i_omega;
            return result;
        }

        // heuristic: an MB graph that is not one of the above needs infinite degree and co-degree
        for (int v = 0 ; v < probes ; ++v) {
            int d_small = small.degree(v), d_large = large.degree(v);
            int c_small = half - 1 - d_small, c_large = size - 1 - d_large;
            if (d_small == d_large || c_small == c_large) {
                bool degree = d_small == d_large;
                evidence.push_back("vertex " + std::to_string(v) + (degree ? " degree" : " co-degree")
                        + " stabilises at " + std::to_string(degree ? d_large : c_large)
                        + " between truncations " + std::to_string(half) + " and " + std::to_string(size)
                        + " (heuristic)");
                result.verdict = MbVerdict::not_mb_evidence;
                return result;
            }
        }
        evidence.push_back("degrees and co-degrees of vertices below " + std::to_string(probes) + " keep growing");

        Natural base = Natural(probes);
        auto triangle = check_property_bounded(p, BoundedProperty::triangle, 3, base, budget);
        auto cocone = check_property_bounded(p, BoundedProperty::cocone, 3, base, budget);
        evidence.push_back("bounded cone probe: " + std::to_string(triangle.sets_checked) + " sets, "
                + std::to_string(triangle.failures.size()) + " failures");
        evidence.push_back("bounded co-cone probe: " + std::to_string(cocone.sets_checked) + " sets, "
                + std::to_string(cocone.failures.size()) + " failures");
        if (triangle.all_witnessed() && cocone.all_witnessed())
            result.verdict = MbVerdict::rado;
        return result;
    }
}
