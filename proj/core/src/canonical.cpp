#include <homoglab/canonical.hpp>
#include <homoglab/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <map>

namespace homoglab
{
    auto CanonicalCode::hex() const -> std::string
    {
        static constexpr char digits[] = "0123456789abcdef";
        std::string out;
        for (unsigned char c : _bytes) {
            out.push_back(digits[c >> 4]);
            out.push_back(digits[c & 15]);
        }
        return out;
    }

    namespace
    {
        // Colour refinement from degrees; colour ids are ranks of signatures,
        // so they do not depend on the labelling.
        auto refined_colours(const Graph & g) -> std::vector<int>
        {
            int n = g.order();
            std::vector<int> colours(static_cast<std::size_t>(n));
            for (int v = 0 ; v < n ; ++v)
                colours[v] = g.degree(v);

            int classes = -1;
            while (true) {
                std::vector<std::vector<int>> signatures(static_cast<std::size_t>(n));
                for (int v = 0 ; v < n ; ++v) {
                    auto & s = signatures[v];
                    s.push_back(colours[v]);
                    std::vector<int> around;
                    g.neighbours(v).for_each([&] (int w) { around.push_back(colours[w]); });
                    std::sort(around.begin(), around.end());
                    s.insert(s.end(), around.begin(), around.end());
                }
                auto distinct = signatures;
                std::sort(distinct.begin(), distinct.end());
                distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
                for (int v = 0 ; v < n ; ++v)
                    colours[v] = int(std::lower_bound(distinct.begin(), distinct.end(), signatures[v]) - distinct.begin());
                if (int(distinct.size()) == classes)
                    break;
                classes = int(distinct.size());
            }
            return colours;
        }

        class CanonicalSearch
        {
            public:
                explicit CanonicalSearch(const Graph & g) :
                    _g(g),
                    _n(g.order()),
                    _colours(refined_colours(g))
                {
                    auto sorted = _colours;
                    std::sort(sorted.begin(), sorted.end());
                    _cell_colour = sorted;

                    _twins.assign(std::size_t(_n) * std::size_t(_n), false);
                    for (int u = 0 ; u < _n ; ++u)
                        for (int w = u + 1 ; w < _n ; ++w) {
                            VertexSet nu = g.neighbours(u), nw = g.neighbours(w);
                            nu.reset(w);
                            nw.reset(u);
                            if (nu == nw)
                                _twins[u * _n + w] = _twins[w * _n + u] = true;
                        }

                    _current.assign(std::size_t(_n) * std::size_t(std::max(_n - 1, 0)) / 2, 0);
                    _placed.reserve(std::size_t(_n));
                    _used.assign(std::size_t(_n), false);
                }

                auto run() -> void
                {
                    dfs(0, false);
                }

                auto code() const -> CanonicalCode
                {
                    std::string bytes;
                    bytes.push_back(char((_n >> 8) & 0xff));
                    bytes.push_back(char(_n & 0xff));
                    unsigned char acc = 0;
                    int bits = 0;
                    for (auto b : _best) {
                        acc = static_cast<unsigned char>((acc << 1) | b);
                        if (++bits == 8) {
                            bytes.push_back(char(acc));
                            acc = 0;
                            bits = 0;
                        }
                    }
                    if (bits > 0)
                        bytes.push_back(char(acc << (8 - bits)));
                    return CanonicalCode(std::move(bytes));
                }

                auto order() const -> const std::vector<int> & { return _best_order; }

            private:
                const Graph & _g;
                int _n;
                std::vector<int> _colours;
                std::vector<int> _cell_colour;
                std::vector<bool> _twins;

                std::vector<std::uint8_t> _current, _best;
                std::vector<int> _placed, _best_order;
                std::vector<bool> _used;
                bool _has_best = false;
                unsigned long _version = 0;

                static auto column_start(int p) -> std::size_t { return std::size_t(p) * std::size_t(p - 1) / 2; }

                auto column(int v) const -> std::vector<std::uint8_t>
                {
                    std::vector<std::uint8_t> c;
                    c.reserve(_placed.size());
                    for (int u : _placed)
                        c.push_back(_g.adjacent(u, v) ? 1 : 0);
                    return c;
                }

                auto dfs(int p, bool tied) -> void
                {
                    if (p == _n) {
                        if (! _has_best || ! tied) {
                            _best = _current;
                            _best_order = _placed;
                            _has_best = true;
                            ++_version;
                        }
                        return;
                    }

                    std::vector<int> candidates;
                    std::vector<std::vector<std::uint8_t>> columns;
                    for (int v = 0 ; v < _n ; ++v)
                        if (! _used[v] && _colours[v] == _cell_colour[p]) {
                            candidates.push_back(v);
                            columns.push_back(column(v));
                        }
                    auto minimum = *std::min_element(columns.begin(), columns.end());

                    bool child_tied = false;
                    if (_has_best && tied) {
                        std::vector<std::uint8_t> best_column(_best.begin() + long(column_start(p)),
                                _best.begin() + long(column_start(p + 1)));
                        if (minimum > best_column)
                            return;
                        child_tied = minimum == best_column;
                    }

                    std::copy(minimum.begin(), minimum.end(), _current.begin() + long(column_start(p)));

                    std::vector<int> tried;
                    for (std::size_t k = 0 ; k < candidates.size() ; ++k) {
                        if (columns[k] != minimum)
                            continue;
                        int v = candidates[k];
                        bool twin_of_tried = std::any_of(tried.begin(), tried.end(),
                                [&] (int t) { return _twins[t * _n + v]; });
                        if (twin_of_tried)
                            continue;

                        auto version = _version;
                        _placed.push_back(v);
                        _used[v] = true;
                        dfs(p + 1, child_tied);
                        _used[v] = false;
                        _placed.pop_back();
                        // a new best now shares this prefix
                        if (_version != version)
                            child_tied = true;
                        tried.push_back(v);
                    }
                }
        };

        auto check_limit(const Graph & g, int limit) -> void
        {
            if (g.order() > limit)
                throw OrderTooLarge("canonical code limited to " + std::to_string(limit)
                        + " vertices, graph has " + std::to_string(g.order()));
        }
    }

    auto canonical_code(const Graph & g, int limit) -> CanonicalCode
    {
        check_limit(g, limit);
        CanonicalSearch search(g);
        search.run();
        return search.code();
    }

    auto canonical_order(const Graph & g, int limit) -> std::vector<int>
    {
        check_limit(g, limit);
        CanonicalSearch search(g);
        search.run();
        return search.order();
    }

    auto relabel(const Graph & g, const std::vector<int> & perm) -> Graph
    {
        if (int(perm.size()) != g.order())
            throw InvalidInput("permutation size does not match graph order");
        Graph result(g.order());
        for (auto [u, v] : g.edges())
            result.add_edge(perm[u], perm[v]);
        return result;
    }

    auto enumerate_graphs(int n) -> std::vector<Graph>
    {
        if (n < 0)
            throw InvalidInput("negative order");
        if (n > enumeration_limit)
            throw OrderTooLarge("graph enumeration limited to " + std::to_string(enumeration_limit) + " vertices");
        if (n == 0)
            return {Graph(0)};

        std::map<CanonicalCode, Graph> classes;
        for (const auto & smaller : enumerate_graphs(n - 1)) {
            for (unsigned mask = 0 ; mask < (1u << (n - 1)) ; ++mask) {
                Graph g(n);
                for (auto [u, v] : smaller.edges())
                    g.add_edge(u, v);
                for (int u = 0 ; u < n - 1 ; ++u)
                    if (mask & (1u << u))
                        g.add_edge(u, n - 1);

                CanonicalSearch search(g);
                search.run();
                auto code = search.code();
                if (classes.contains(code))
                    continue;
                std::vector<int> perm(static_cast<std::size_t>(n));
                const auto & order = search.order();
                for (int p = 0 ; p < n ; ++p)
                    perm[order[p]] = p;
                classes.emplace(std::move(code), relabel(g, perm));
            }
        }

        std::vector<Graph> result;
        result.reserve(classes.size());
        for (auto & [code, g] : classes)
            result.push_back(std::move(g));
        return result;
    }
}
