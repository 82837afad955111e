#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace oracle
{
    auto rows_of(const homoglab::Graph & g) -> Rows
    {
        Rows rows(std::size_t(g.order()), 0);
        for (int u = 0 ; u < g.order() ; ++u)
            for (int v = 0 ; v < g.order() ; ++v)
                if (g.adjacent(u, v))
                    rows[u] |= 1u << v;
        return rows;
    }

    auto graph_of(const Rows & rows) -> homoglab::Graph
    {
        std::vector<homoglab::Edge> edges;
        int n = int(rows.size());
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (rows[u] >> v & 1)
                    edges.emplace_back(u, v);
        return homoglab::Graph::from_edges(n, edges);
    }

    namespace
    {
        auto independent(const Rows & g, std::uint32_t mask) -> bool
        {
            for (int v = 0 ; v < int(g.size()) ; ++v)
                if ((mask >> v & 1) && (g[v] & mask))
                    return false;
            return true;
        }

        auto adjacent(const Rows & g, int u, int v) -> bool
        {
            return g[u] >> v & 1;
        }
    }

    auto members(std::uint32_t mask) -> std::vector<int>
    {
        std::vector<int> result;
        for (int v = 0 ; v < 32 ; ++v)
            if (mask >> v & 1)
                result.push_back(v);
        return result;
    }

    auto alpha(const Rows & g) -> int
    {
        int best = 0;
        for (std::uint32_t mask = 0 ; mask < (1u << g.size()) ; ++mask)
            if (independent(g, mask))
                best = std::max(best, std::popcount(mask));
        return best;
    }

    auto maximum_independent_sets(const Rows & g) -> std::vector<std::uint32_t>
    {
        int best = alpha(g);
        std::vector<std::uint32_t> result;
        for (std::uint32_t mask = 0 ; mask < (1u << g.size()) ; ++mask)
            if (std::popcount(mask) == best && independent(g, mask))
                result.push_back(mask);
        std::sort(result.begin(), result.end(), [] (auto a, auto b) { return members(a) < members(b); });
        return result;
    }

    auto star_number(const Rows & g) -> int
    {
        int best = 0;
        for (std::size_t v = 0 ; v < g.size() ; ++v) {
            int here = 0;
            for (std::uint32_t mask = g[v] ; ; mask = (mask - 1) & g[v]) {
                if (independent(g, mask))
                    here = std::max(here, std::popcount(mask));
                if (mask == 0)
                    break;
            }
            best = std::max(best, here);
        }
        return best;
    }

    auto min_code(const Rows & g) -> std::string
    {
        int n = int(g.size());
        std::vector<int> perm(std::size_t(n), 0);
        std::iota(perm.begin(), perm.end(), 0);
        std::string best;
        do {
            std::string code;
            for (int j = 1 ; j < n ; ++j)
                for (int i = 0 ; i < j ; ++i)
                    code += adjacent(g, perm[i], perm[j]) ? '1' : '0';
            if (best.empty() || code < best)
                best = code;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return std::to_string(n) + ":" + best;
    }

    auto class_count_by_dedup(int n) -> long
    {
        int pairs = n * (n - 1) / 2;
        std::set<std::string> codes;
        for (std::uint32_t bits = 0 ; bits < (1u << pairs) ; ++bits) {
            Rows g(std::size_t(n), 0);
            int k = 0;
            for (int j = 1 ; j < n ; ++j)
                for (int i = 0 ; i < j ; ++i, ++k)
                    if (bits >> k & 1) {
                        g[i] |= 1u << j;
                        g[j] |= 1u << i;
                    }
            codes.insert(min_code(g));
        }
        return long(codes.size());
    }

    auto class_count_by_orbits(int n) -> long
    {
        std::vector<int> perm(std::size_t(n), 0);
        std::iota(perm.begin(), perm.end(), 0);
        unsigned long long total = 0, permutations = 0;
        do {
            // cycles of the induced permutation on unordered pairs
            std::set<std::pair<int, int>> seen;
            int cycles = 0;
            for (int j = 1 ; j < n ; ++j)
                for (int i = 0 ; i < j ; ++i) {
                    if (seen.count({i, j}))
                        continue;
                    ++cycles;
                    std::pair<int, int> p{i, j};
                    while (! seen.count(p)) {
                        seen.insert(p);
                        int a = perm[p.first], b = perm[p.second];
                        p = {std::min(a, b), std::max(a, b)};
                    }
                }
            total += 1ull << cycles;
            ++permutations;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return long(total / permutations);
    }

    auto kind_of(char y) -> Kind
    {
        switch (y) {
            case 'H': return {};
            case 'M': return {true, false, false};
            case 'E': return {false, true, false};
            case 'B': return {true, true, false};
            case 'A': return {true, true, true};
            case 'I': return {true, false, true};
        }
        return {};
    }

    namespace
    {
        auto honours(const Rows & a, const Rows & b, const Map & f, Kind kind) -> bool
        {
            int n = int(a.size());
            for (int u = 0 ; u < n ; ++u)
                for (int v = u + 1 ; v < n ; ++v) {
                    if (adjacent(a, u, v) && ! adjacent(b, f[u], f[v]))
                        return false;
                    if (kind.nonedges && ! adjacent(a, u, v) && (f[u] == f[v] || adjacent(b, f[u], f[v])))
                        return false;
                    if (kind.injective && f[u] == f[v])
                        return false;
                }
            if (kind.surjective) {
                std::uint32_t hit = 0;
                for (int v : f)
                    hit |= 1u << v;
                if (hit != (1u << b.size()) - 1)
                    return false;
            }
            return true;
        }

        /// Calls visit on every map from n points into m values in lexicographic order; stops on false.
        auto for_each_map(int n, int m, const std::function<bool (const Map &)> & visit) -> void
        {
            Map f(std::size_t(n), 0);
            if (m == 0 && n > 0)
                return;
            while (true) {
                if (! visit(f))
                    return;
                int k = n - 1;
                while (k >= 0 && f[k] == m - 1)
                    f[k--] = 0;
                if (k < 0)
                    return;
                ++f[k];
            }
        }
    }

    auto least_morphism(const Rows & a, const Rows & b, const Map & seed, Kind kind) -> std::optional<Map>
    {
        std::optional<Map> found;
        for_each_map(int(a.size()), int(b.size()), [&] (const Map & f) {
                for (std::size_t v = 0 ; v < seed.size() ; ++v)
                    if (seed[v] >= 0 && f[v] != seed[v])
                        return true;
                if (honours(a, b, f, kind)) {
                    found = f;
                    return false;
                }
                return true;
                });
        return found;
    }

    auto xy_homogeneous(const Rows & g, char x, char y) -> bool
    {
        int n = int(g.size());
        std::vector<Map> endos;
        for_each_map(n, n, [&] (const Map & f) {
                if (honours(g, g, f, kind_of(y)))
                    endos.push_back(f);
                return true;
                });

        Kind local = kind_of(x);
        for (std::uint32_t domain = 0 ; domain < (1u << n) ; ++domain) {
            auto points = members(domain);
            int k = int(points.size());
            bool ok = true;
            for_each_map(k, n, [&] (const Map & images) {
                    for (int i = 0 ; i < k ; ++i)
                        for (int j = i + 1 ; j < k ; ++j) {
                            bool edge = adjacent(g, points[i], points[j]);
                            if (edge && ! adjacent(g, images[i], images[j]))
                                return true;
                            if (local.injective && images[i] == images[j])
                                return true;
                            if (local.nonedges && ! edge && adjacent(g, images[i], images[j]))
                                return true;
                        }
                    bool extended = std::any_of(endos.begin(), endos.end(), [&] (const Map & e) {
                            for (int i = 0 ; i < k ; ++i)
                                if (e[points[i]] != images[i])
                                    return false;
                            return true;
                            });
                    ok = extended;
                    return extended;
                    });
            if (! ok)
                return false;
        }
        return true;
    }

    auto equal_cliques(const Rows & g) -> bool
    {
        int n = int(g.size());
        int size = -1;
        for (int v = 0 ; v < n ; ++v) {
            std::uint32_t closed = g[v] | (1u << v);
            for (int u : members(closed))
                if ((g[u] | (1u << u)) != closed)
                    return false;
            int here = std::popcount(closed);
            if (size != -1 && here != size)
                return false;
            size = here;
        }
        return true;
    }

    auto surjective_hom_exists(const Rows & a, const Rows & b) -> bool
    {
        return least_morphism(a, b, {}, {false, true, false}).has_value();
    }

    auto rs_graph(int n, int m) -> homoglab::Graph
    {
        // directory a_0..a_{n-1}, then part j's clique vertices, interleaved round-robin
        std::vector<int> part;
        for (int i = 0 ; i < n ; ++i)
            part.push_back(-1);
        for (int round = 0 ; round < m ; ++round)
            for (int j = 0 ; j < n ; ++j)
                part.push_back(j);

        int order = int(part.size());
        std::vector<homoglab::Edge> edges;
        for (int u = 0 ; u < order ; ++u)
            for (int v = u + 1 ; v < order ; ++v) {
                bool both_clique = part[u] >= 0 && part[v] >= 0;
                bool directory_to_clique = part[u] < 0 && part[v] >= 0 && part[v] != u;
                if (both_clique || directory_to_clique)
                    edges.emplace_back(u, v);
            }
        return homoglab::Graph::from_edges(order, edges);
    }
}
