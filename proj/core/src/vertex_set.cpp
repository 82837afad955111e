#include <homoglab/errors.hpp>
#include <homoglab/vertex_set.hpp>

#include <bit>
#include <functional>
#include <sstream>

namespace homoglab
{
    VertexSet::VertexSet(int universe) :
        _universe(universe),
        _words((std::size_t(universe) + 63) / 64, 0)
    {
    }

    auto VertexSet::of(int universe, std::initializer_list<int> members) -> VertexSet
    {
        return of(universe, std::vector<int>(members));
    }

    auto VertexSet::of(int universe, const std::vector<int> & members) -> VertexSet
    {
        VertexSet s(universe);
        for (int v : members) {
            if (v < 0 || v >= universe)
                throw InvalidInput("vertex " + std::to_string(v) + " outside 0.." + std::to_string(universe - 1));
            s.set(v);
        }
        return s;
    }

    auto VertexSet::full(int universe) -> VertexSet
    {
        return prefix(universe, universe);
    }

    auto VertexSet::prefix(int universe, int count) -> VertexSet
    {
        VertexSet s(universe);
        for (std::size_t w = 0 ; w < s._words.size() ; ++w) {
            int lo = int(w * 64);
            if (count >= lo + 64)
                s._words[w] = ~std::uint64_t(0);
            else if (count > lo)
                s._words[w] = (std::uint64_t(1) << (count - lo)) - 1;
        }
        return s;
    }

    auto VertexSet::trim() -> void
    {
        if (_universe % 64 != 0 && ! _words.empty())
            _words.back() &= (std::uint64_t(1) << (_universe % 64)) - 1;
    }

    auto VertexSet::count() const -> int
    {
        int result = 0;
        for (auto w : _words)
            result += std::popcount(w);
        return result;
    }

    auto VertexSet::empty() const -> bool
    {
        for (auto w : _words)
            if (w)
                return false;
        return true;
    }

    auto VertexSet::first() const -> int
    {
        for (std::size_t w = 0 ; w < _words.size() ; ++w)
            if (_words[w])
                return int(w * 64) + std::countr_zero(_words[w]);
        return -1;
    }

    auto VertexSet::next(int v) const -> int
    {
        int start = v + 1;
        if (start >= _universe)
            return -1;
        std::size_t w = std::size_t(start) >> 6;
        std::uint64_t bits = _words[w] & (~std::uint64_t(0) << (start & 63));
        while (true) {
            if (bits)
                return int(w * 64) + std::countr_zero(bits);
            if (++w >= _words.size())
                return -1;
            bits = _words[w];
        }
    }

    auto VertexSet::is_subset_of(const VertexSet & other) const -> bool
    {
        for (std::size_t w = 0 ; w < _words.size() ; ++w)
            if (_words[w] & ~other._words[w])
                return false;
        return true;
    }

    auto VertexSet::intersects(const VertexSet & other) const -> bool
    {
        for (std::size_t w = 0 ; w < _words.size() ; ++w)
            if (_words[w] & other._words[w])
                return true;
        return false;
    }

    auto VertexSet::operator&= (const VertexSet & other) -> VertexSet &
    {
        for (std::size_t w = 0 ; w < _words.size() ; ++w)
            _words[w] &= other._words[w];
        return *this;
    }

    auto VertexSet::operator|= (const VertexSet & other) -> VertexSet &
    {
        for (std::size_t w = 0 ; w < _words.size() ; ++w)
            _words[w] |= other._words[w];
        return *this;
    }

    auto VertexSet::operator-= (const VertexSet & other) -> VertexSet &
    {
        for (std::size_t w = 0 ; w < _words.size() ; ++w)
            _words[w] &= ~other._words[w];
        return *this;
    }

    auto VertexSet::complement() const -> VertexSet
    {
        VertexSet result = *this;
        for (auto & w : result._words)
            w = ~w;
        result.trim();
        return result;
    }

    auto VertexSet::members() const -> std::vector<int>
    {
        std::vector<int> result;
        result.reserve(std::size_t(count()));
        for_each([&] (int v) { result.push_back(v); });
        return result;
    }

    auto VertexSet::lex_less(const VertexSet & other) const -> bool
    {
        int a = first(), b = other.first();
        while (a != -1 && b != -1) {
            if (a != b)
                return a < b;
            a = next(a);
            b = other.next(b);
        }
        return a == -1 && b != -1;
    }

    auto VertexSet::to_string() const -> std::string
    {
        std::ostringstream out;
        out << '{';
        bool first_member = true;
        for_each([&] (int v) {
                if (! first_member)
                    out << ',';
                out << v;
                first_member = false;
                });
        out << '}';
        return out.str();
    }

    auto VertexSet::hash() const -> std::size_t
    {
        std::size_t h = std::hash<int>{}(_universe);
        for (auto w : _words)
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
}
