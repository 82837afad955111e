#include <homoglab/rado.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace homoglab
{
    namespace
    {
        auto set_string(const NaturalSet & s) -> std::string
        {
            std::ostringstream out;
            out << '{';
            for (std::size_t i = 0 ; i < s.size() ; ++i)
                out << (i ? "," : "") << s[i];
            out << '}';
            return out.str();
        }

        auto exhausted_message(const Requirement & r, bool proven_absent) -> std::string
        {
            return "no cone for requirement " + r.to_string()
                + (proven_absent ? " exists in the host" : " within budget");
        }

        class Builder
        {
            public:
                Builder(const Presentation & p, Natural budget, const SpanningOptions & options) :
                    _p(p), _budget(budget), _options(options)
                {
                    _result.host = p.name();
                }

                auto run(int n) -> RadoConstruction
                {
                    while (! done(n)) {
                        place(least_unplaced(), std::nullopt);
                        if (done(n))
                            break;
                        if (_next < _queue.size())
                            serve(Requirement(_queue[_next++]));
                    }
                    return std::move(_result);
                }

            private:
                const Presentation & _p;
                Natural _budget;
                SpanningOptions _options;
                RadoConstruction _result;
                std::set<Natural> _placed;
                std::map<Natural, std::set<Natural>> _selected;
                std::vector<Requirement> _queue;
                std::size_t _next = 0;

                auto done(int n) const -> bool
                {
                    if (_result.placed.size() < std::size_t(n))
                        return false;
                    for (Natural v = 0 ; v < Natural(n) ; ++v)
                        if (! _placed.count(v))
                            return false;
                    return true;
                }

                auto least_unplaced() const -> Natural
                {
                    Natural v = 0;
                    while (_placed.count(v))
                        ++v;
                    return v;
                }

                auto placed_list() const -> NaturalSet
                {
                    return NaturalSet(_placed.begin(), _placed.end());
                }

                /// Places v joined to exactly a, then queues every new requirement involving v.
                auto place(Natural v, std::optional<NaturalSet> a) -> void
                {
                    _placed.insert(v);
                    _result.placed.push_back(v);
                    _selected[v];
                    if (a)
                        for (auto u : *a) {
                            _selected[v].insert(u);
                            _selected[u].insert(v);
                            _result.selected_edges.emplace_back(std::min(u, v), std::max(u, v));
                        }
                    enqueue_requirements_with(v);
                }

                auto enqueue_requirements_with(Natural v) -> void
                {
                    std::vector<Natural> others;
                    for (auto u : _result.placed)
                        if (u != v)
                            others.push_back(u);
                    std::sort(others.begin(), others.end());

                    std::vector<Requirement> fresh;
                    NaturalSet chosen;
                    auto split = [&] (const NaturalSet & members) {
                        std::size_t count = members.size();
                        for (unsigned mask = 0 ; mask < (1u << count) ; ++mask) {
                            Requirement r;
                            for (std::size_t i = 0 ; i < count ; ++i)
                                (mask & (1u << i) ? r.a : r.b).push_back(members[i]);
                            fresh.push_back(std::move(r));
                        }
                    };
                    std::function<void (std::size_t)> choose = [&] (std::size_t from) {
                        NaturalSet members = chosen;
                        members.push_back(v);
                        std::sort(members.begin(), members.end());
                        split(members);
                        if (int(chosen.size()) + 1 >= _options.max_requirement_size)
                            return;
                        for (std::size_t i = from ; i < others.size() ; ++i) {
                            chosen.push_back(others[i]);
                            choose(i + 1);
                            chosen.pop_back();
                        }
                    };
                    choose(0);

                    std::sort(fresh.begin(), fresh.end(), [] (const Requirement & x, const Requirement & y) {
                            auto sx = x.a.size() + x.b.size(), sy = y.a.size() + y.b.size();
                            if (sx != sy)
                                return sx < sy;
                            if (x.a != y.a)
                                return x.a < y.a;
                            return x.b < y.b;
                            });
                    _queue.insert(_queue.end(), fresh.begin(), fresh.end());
                }

                auto serves(Natural w, const Requirement & r) const -> bool
                {
                    if (std::binary_search(r.a.begin(), r.a.end(), w) || std::binary_search(r.b.begin(), r.b.end(), w))
                        return false;
                    const auto & nbrs = _selected.at(w);
                    return std::all_of(r.a.begin(), r.a.end(), [&] (Natural u) { return nbrs.count(u) != 0; })
                        && std::none_of(r.b.begin(), r.b.end(), [&] (Natural u) { return nbrs.count(u) != 0; });
                }

                auto serve(Requirement r) -> void
                {
                    for (auto w : _result.placed)
                        if (serves(w, r)) {
                            _result.schedule.push_back({r, w, false});
                            return;
                        }

                    // a host cone over A outside everything placed; it gets no selected edge to B
                    auto found = extension_witness(_p, r.a, {}, _budget, placed_list());
                    if (found.status != WitnessStatus::found) {
                        bool proven = found.status == WitnessStatus::proven_absent;
                        throw BudgetExhausted(r, proven, _result);
                    }
                    place(*found.vertex, r.a);
                    _result.schedule.push_back({r, *found.vertex, true});
                }
        };
    }

    auto Requirement::to_string() const -> std::string
    {
        return "(A=" + set_string(a) + ", B=" + set_string(b) + ")";
    }

    BudgetExhausted::BudgetExhausted(Requirement requirement, bool proven_absent, RadoConstruction partial) :
        Error(exhausted_message(requirement, proven_absent)),
        _requirement(std::move(requirement)),
        _proven_absent(proven_absent),
        _partial(std::move(partial))
    {
    }

    auto spanning_rado(const Presentation & p, int n, Natural budget, const SpanningOptions & options) -> RadoConstruction
    {
        if (n < 0)
            throw InvalidInput("construction size must be nonnegative");
        if (options.max_requirement_size < 1 || options.max_requirement_size > 16)
            throw InvalidInput("requirement size must lie in 1..16");
        return Builder(p, budget, options).run(n);
    }

    auto verify_construction(const Presentation & p, const RadoConstruction & c) -> std::vector<std::string>
    {
        std::vector<std::string> violations;
        std::set<Natural> placed;
        for (auto v : c.placed)
            if (! placed.insert(v).second)
                violations.push_back("vertex " + std::to_string(v) + " placed twice");

        std::set<NaturalEdge> edges;
        for (auto [u, v] : c.selected_edges) {
            auto label = "edge " + std::to_string(u) + "-" + std::to_string(v);
            if (u >= v)
                violations.push_back(label + " is not ordered");
            if (! placed.count(u) || ! placed.count(v))
                violations.push_back(label + " touches an unplaced vertex");
            if (! p.adjacent(u, v))
                violations.push_back(label + " is not a host edge");
            edges.insert({std::min(u, v), std::max(u, v)});
        }

        auto joined = [&] (Natural u, Natural v) { return edges.count({std::min(u, v), std::max(u, v)}) != 0; };
        for (const auto & s : c.schedule) {
            const auto & r = s.requirement;
            auto label = "requirement " + r.to_string() + " witness " + std::to_string(s.witness);
            if (! placed.count(s.witness))
                violations.push_back(label + ": witness not placed");
            for (auto u : r.a) {
                if (! placed.count(u))
                    violations.push_back(label + ": " + std::to_string(u) + " not placed");
                if (u == s.witness || ! joined(u, s.witness))
                    violations.push_back(label + ": not joined to " + std::to_string(u));
            }
            for (auto u : r.b) {
                if (! placed.count(u))
                    violations.push_back(label + ": " + std::to_string(u) + " not placed");
                if (u == s.witness || joined(u, s.witness))
                    violations.push_back(label + ": joined to " + std::to_string(u));
            }
        }
        return violations;
    }
}
