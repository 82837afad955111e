#include <homoglab/errors.hpp>
#include <homoglab/morphism.hpp>

#include <sstream>

namespace homoglab
{
    auto PartialMap::domain(int universe) const -> VertexSet
    {
        VertexSet s(universe);
        for (auto [x, y] : pairs)
            s.set(x);
        return s;
    }

    auto PartialMap::image(int universe) const -> VertexSet
    {
        VertexSet s(universe);
        for (auto [x, y] : pairs)
            s.set(y);
        return s;
    }

    auto PartialMap::to_string() const -> std::string
    {
        std::ostringstream out;
        out << '{';
        for (std::size_t k = 0 ; k < pairs.size() ; ++k)
            out << (k ? "," : "") << pairs[k].first << "->" << pairs[k].second;
        out << '}';
        return out.str();
    }

    auto to_char(MorphismKind k) -> char
    {
        switch (k) {
            case MorphismKind::H: return 'H';
            case MorphismKind::M: return 'M';
            case MorphismKind::E: return 'E';
            case MorphismKind::B: return 'B';
            case MorphismKind::A: return 'A';
            case MorphismKind::I: return 'I';
        }
        return '?';
    }

    auto to_char(LocalKind k) -> char
    {
        switch (k) {
            case LocalKind::H: return 'H';
            case LocalKind::M: return 'M';
            case LocalKind::I: return 'I';
        }
        return '?';
    }

    auto parse_morphism_kind(char c) -> MorphismKind
    {
        switch (c) {
            case 'H': return MorphismKind::H;
            case 'M': return MorphismKind::M;
            case 'E': return MorphismKind::E;
            case 'B': return MorphismKind::B;
            case 'A': return MorphismKind::A;
            case 'I': return MorphismKind::I;
        }
        throw InvalidInput(std::string("unknown morphism kind '") + c + "' (expected one of H M E B A I)");
    }

    auto parse_local_kind(char c) -> LocalKind
    {
        switch (c) {
            case 'H': return LocalKind::H;
            case 'M': return LocalKind::M;
            case 'I': return LocalKind::I;
        }
        throw InvalidInput(std::string("unknown local morphism kind '") + c + "' (expected one of H M I)");
    }

    auto constraints_for(MorphismKind k) -> MorphismConstraints
    {
        switch (k) {
            case MorphismKind::H: return {};
            case MorphismKind::M: return {.injective = true};
            case MorphismKind::E: return {.surjective = true};
            // a bijective endomorphism of a finite graph is an automorphism
            case MorphismKind::B:
            case MorphismKind::A: return {.injective = true, .surjective = true, .respect_nonedges = true};
            case MorphismKind::I: return {.injective = true, .respect_nonedges = true};
        }
        return {};
    }

    auto validate_seed(const Graph & a, const Graph & b, const PartialMap & seed) -> void
    {
        VertexSet seen(a.order());
        for (auto [x, y] : seed.pairs) {
            if (x < 0 || x >= a.order() || y < 0 || y >= b.order())
                throw MalformedSeed("seed pair " + std::to_string(x) + "->" + std::to_string(y) + " out of range");
            if (seen.test(x))
                throw MalformedSeed("seed maps vertex " + std::to_string(x) + " twice");
            seen.set(x);
        }
    }

    auto is_local_homomorphism(const Graph & a, const Graph & b, const PartialMap & f) -> bool
    {
        for (auto [x1, y1] : f.pairs)
            for (auto [x2, y2] : f.pairs)
                if (a.adjacent(x1, x2) && ! b.adjacent(y1, y2))
                    return false;
        return true;
    }

    auto is_local_monomorphism(const Graph & a, const Graph & b, const PartialMap & f) -> bool
    {
        if (! is_local_homomorphism(a, b, f))
            return false;
        for (std::size_t i = 0 ; i < f.pairs.size() ; ++i)
            for (std::size_t j = i + 1 ; j < f.pairs.size() ; ++j)
                if (f.pairs[i].second == f.pairs[j].second)
                    return false;
        return true;
    }

    auto is_local_isomorphism(const Graph & a, const Graph & b, const PartialMap & f) -> bool
    {
        if (! is_local_monomorphism(a, b, f))
            return false;
        for (auto [x1, y1] : f.pairs)
            for (auto [x2, y2] : f.pairs)
                if (x1 != x2 && ! a.adjacent(x1, x2) && b.adjacent(y1, y2))
                    return false;
        return true;
    }

    auto is_local(const Graph & a, const Graph & b, const PartialMap & f, LocalKind kind) -> bool
    {
        switch (kind) {
            case LocalKind::H: return is_local_homomorphism(a, b, f);
            case LocalKind::M: return is_local_monomorphism(a, b, f);
            case LocalKind::I: return is_local_isomorphism(a, b, f);
        }
        return false;
    }

    auto morphism_violation(const Graph & a, const Graph & b, const TotalMap & map,
            const MorphismConstraints & c, const PartialMap & seed) -> std::optional<std::string>
    {
        if (int(map.size()) != a.order())
            return "map has " + std::to_string(map.size()) + " entries for " + std::to_string(a.order()) + " vertices";
        for (int x = 0 ; x < a.order() ; ++x)
            if (map[x] < 0 || map[x] >= b.order())
                return "image of " + std::to_string(x) + " out of range";
        for (auto [x, y] : seed.pairs)
            if (map[x] != y)
                return "map disagrees with seed at " + std::to_string(x);
        for (auto [x, y] : a.edges())
            if (! b.adjacent(map[x], map[y]))
                return "edge " + std::to_string(x) + "-" + std::to_string(y) + " not preserved";
        bool injective = c.injective || c.respect_nonedges;
        if (injective)
            for (int x = 0 ; x < a.order() ; ++x)
                for (int y = x + 1 ; y < a.order() ; ++y)
                    if (map[x] == map[y])
                        return "vertices " + std::to_string(x) + " and " + std::to_string(y) + " collide";
        if (c.respect_nonedges)
            for (int x = 0 ; x < a.order() ; ++x)
                for (int y = x + 1 ; y < a.order() ; ++y)
                    if (! a.adjacent(x, y) && b.adjacent(map[x], map[y]))
                        return "non-edge " + std::to_string(x) + "-" + std::to_string(y) + " mapped to an edge";
        if (c.surjective) {
            std::vector<bool> hit(std::size_t(b.order()), false);
            for (int y : map)
                hit[y] = true;
            for (int t = 0 ; t < b.order() ; ++t)
                if (! hit[t])
                    return "target vertex " + std::to_string(t) + " not covered";
        }
        return std::nullopt;
    }

    namespace
    {
        // Backtracking in vertex order with forward checking; values tried in
        // ascending order, so solutions arrive in lexicographic order.
        class MorphismSearch
        {
            public:
                MorphismSearch(const Graph & a, const Graph & b, const MorphismConstraints & c,
                        const std::function<bool (const TotalMap &)> & visit) :
                    _a(a), _b(b), _visit(visit),
                    _injective(c.injective || c.respect_nonedges),
                    _surjective(c.surjective),
                    _nonedges(c.respect_nonedges),
                    _map(std::size_t(a.order()), -1)
                {
                    if (_nonedges)
                        for (int t = 0 ; t < b.order() ; ++t) {
                            VertexSet r = b.neighbours(t).complement();
                            r.reset(t);
                            _b_non_adjacent.push_back(std::move(r));
                        }
                }

                auto run(const PartialMap & seed) -> bool
                {
                    int n = _a.order();
                    if (_injective && n > _b.order())
                        return true;
                    if (_surjective && n < _b.order())
                        return true;
                    if (n > 0 && _b.order() == 0)
                        return true;

                    std::vector<VertexSet> domains(std::size_t(n), _b.all_vertices());
                    for (auto [x, y] : seed.pairs) {
                        VertexSet single(_b.order());
                        single.set(y);
                        domains[x] &= single;
                    }
                    for (auto [x, y] : seed.pairs)
                        if (! restrict(domains, x, y, 0))
                            return true;
                    return search(0, domains);
                }

            private:
                const Graph & _a;
                const Graph & _b;
                const std::function<bool (const TotalMap &)> & _visit;
                bool _injective, _surjective, _nonedges;
                std::vector<VertexSet> _b_non_adjacent;
                TotalMap _map;

                // Restricts domains of vertices >= from (other than x) after x -> y.
                auto restrict(std::vector<VertexSet> & domains, int x, int y, int from) const -> bool
                {
                    for (int u = from ; u < _a.order() ; ++u) {
                        if (u == x)
                            continue;
                        auto & d = domains[u];
                        if (_a.adjacent(x, u))
                            d &= _b.neighbours(y);
                        else if (_nonedges)
                            d &= _b_non_adjacent[y];
                        if (_injective)
                            d.reset(y);
                        if (d.empty())
                            return false;
                    }
                    return true;
                }

                auto surjection_possible(const std::vector<VertexSet> & domains, int pos) const -> bool
                {
                    VertexSet uncovered = _b.all_vertices();
                    for (int u = 0 ; u < pos ; ++u)
                        uncovered.reset(_map[u]);
                    if (uncovered.count() > _a.order() - pos)
                        return false;
                    VertexSet reachable(_b.order());
                    for (int u = pos ; u < _a.order() ; ++u)
                        reachable |= domains[u];
                    return uncovered.is_subset_of(reachable);
                }

                auto search(int pos, const std::vector<VertexSet> & domains) -> bool
                {
                    if (_surjective && ! surjection_possible(domains, pos))
                        return true;
                    if (pos == _a.order())
                        return _visit(_map);

                    const VertexSet & d = domains[pos];
                    for (int y = d.first() ; y != -1 ; y = d.next(y)) {
                        auto next = domains;
                        if (! restrict(next, pos, y, pos + 1))
                            continue;
                        _map[pos] = y;
                        if (! search(pos + 1, next))
                            return false;
                    }
                    _map[pos] = -1;
                    return true;
                }
        };
    }

    auto for_each_morphism(const Graph & a, const Graph & b, const PartialMap & seed,
            const MorphismConstraints & c, const std::function<bool (const TotalMap &)> & visit) -> bool
    {
        validate_seed(a, b, seed);
        return MorphismSearch(a, b, c, visit).run(seed);
    }

    auto search_morphism(const Graph & a, const Graph & b, const PartialMap & seed,
            const MorphismConstraints & c) -> std::optional<TotalMap>
    {
        std::optional<TotalMap> result;
        for_each_morphism(a, b, seed, c, [&] (const TotalMap & m) {
                result = m;
                return false;
                });
        return result;
    }

    auto extends_in(const Graph & g, const PartialMap & f, MorphismKind kind) -> std::optional<TotalMap>
    {
        validate_seed(g, g, f);
        if (! is_local_homomorphism(g, g, f))
            throw SeedNotLocalMorphism("seed " + f.to_string() + " is not a local homomorphism");
        return search_morphism(g, g, f, constraints_for(kind));
    }
}
