#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace homoglab
{
    /**
     * A subset of the vertex indices 0..universe-1, stored as a dense bitset.
     *
     * Every set used with a graph must have that graph's order as its
     * universe; binary operations on sets with different universes are
     * undefined.
     */
    class VertexSet
    {
        public:
            VertexSet() = default;
            explicit VertexSet(int universe);

            /// Builds a set from indices, throwing InvalidInput on any index outside the universe.
            static auto of(int universe, std::initializer_list<int> members) -> VertexSet;
            static auto of(int universe, const std::vector<int> & members) -> VertexSet;
            static auto full(int universe) -> VertexSet;
            /// The set {0, ..., count-1} inside the given universe.
            static auto prefix(int universe, int count) -> VertexSet;

            auto universe() const -> int { return _universe; }

            auto test(int v) const -> bool
            {
                return (_words[unsigned(v) >> 6] >> (unsigned(v) & 63)) & 1;
            }

            auto set(int v) -> void
            {
                _words[unsigned(v) >> 6] |= std::uint64_t(1) << (unsigned(v) & 63);
            }

            auto reset(int v) -> void
            {
                _words[unsigned(v) >> 6] &= ~(std::uint64_t(1) << (unsigned(v) & 63));
            }

            auto count() const -> int;
            auto empty() const -> bool;
            auto any() const -> bool { return ! empty(); }

            /// Smallest member, or -1 when empty.
            auto first() const -> int;
            /// Smallest member strictly greater than v, or -1.
            auto next(int v) const -> int;

            auto is_subset_of(const VertexSet & other) const -> bool;
            auto intersects(const VertexSet & other) const -> bool;

            auto operator&= (const VertexSet & other) -> VertexSet &;
            auto operator|= (const VertexSet & other) -> VertexSet &;
            auto operator-= (const VertexSet & other) -> VertexSet &;

            friend auto operator& (VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
            friend auto operator| (VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
            friend auto operator- (VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

            /// Complement inside the universe.
            auto complement() const -> VertexSet;

            auto members() const -> std::vector<int>;

            template <typename F_>
            auto for_each(F_ && f) const -> void
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w) {
                    std::uint64_t bits = _words[w];
                    while (bits) {
                        int b = __builtin_ctzll(bits);
                        f(int(w * 64) + b);
                        bits &= bits - 1;
                    }
                }
            }

            auto operator== (const VertexSet & other) const -> bool = default;

            /// Lexicographic order of the sorted member sequences.
            auto lex_less(const VertexSet & other) const -> bool;

            /// "{0,3,5}"
            auto to_string() const -> std::string;

            auto hash() const -> std::size_t;

        private:
            int _universe = 0;
            std::vector<std::uint64_t> _words;

            auto trim() -> void;
    };
}
