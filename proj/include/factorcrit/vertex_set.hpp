#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <initializer_list>
#include <string>
#include <vector>

namespace factorcrit {

/// Largest supported graph order. A vertex set always fits in one word.
inline constexpr int max_order = 62;

using Vertex = int;

/**
 * A set of vertex indices 0..63 stored in a single word. Iteration yields
 * members in increasing order.
 */
class VertexSet
{
    public:
        constexpr VertexSet() = default;

        constexpr explicit VertexSet(std::uint64_t bits) : _bits(bits)
        {
        }

        constexpr VertexSet(std::initializer_list<Vertex> vs)
        {
            for (auto v : vs)
                insert(v);
        }

        /// The set {0, ..., n-1}.
        static constexpr auto range(int n) -> VertexSet
        {
            return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
        }

        static constexpr auto single(Vertex v) -> VertexSet
        {
            return VertexSet(std::uint64_t{1} << v);
        }

        constexpr auto bits() const -> std::uint64_t { return _bits; }
        constexpr auto empty() const -> bool { return _bits == 0; }
        constexpr auto size() const -> int { return std::popcount(_bits); }

        constexpr auto contains(Vertex v) const -> bool
        {
            return (_bits >> v) & 1U;
        }

        constexpr auto insert(Vertex v) -> void { _bits |= std::uint64_t{1} << v; }
        constexpr auto erase(Vertex v) -> void { _bits &= ~(std::uint64_t{1} << v); }

        /// Smallest member; undefined on the empty set.
        constexpr auto first() const -> Vertex { return std::countr_zero(_bits); }

        constexpr auto is_subset_of(VertexSet other) const -> bool
        {
            return (_bits & ~other._bits) == 0;
        }

        constexpr auto intersects(VertexSet other) const -> bool
        {
            return (_bits & other._bits) != 0;
        }

        constexpr auto operator|(VertexSet o) const -> VertexSet { return VertexSet(_bits | o._bits); }
        constexpr auto operator&(VertexSet o) const -> VertexSet { return VertexSet(_bits & o._bits); }
        constexpr auto operator-(VertexSet o) const -> VertexSet { return VertexSet(_bits & ~o._bits); }
        constexpr auto operator|=(VertexSet o) -> VertexSet & { _bits |= o._bits; return *this; }
        constexpr auto operator&=(VertexSet o) -> VertexSet & { _bits &= o._bits; return *this; }
        constexpr auto operator-=(VertexSet o) -> VertexSet & { _bits &= ~o._bits; return *this; }
        constexpr auto operator==(const VertexSet &) const -> bool = default;

        class Iterator
        {
            public:
                using iterator_category = std::forward_iterator_tag;
                using value_type = Vertex;
                using difference_type = std::ptrdiff_t;
                using pointer = const Vertex *;
                using reference = Vertex;

                constexpr Iterator() = default;
                constexpr explicit Iterator(std::uint64_t bits) : _rest(bits) {}
                constexpr auto operator*() const -> Vertex { return std::countr_zero(_rest); }
                constexpr auto operator++() -> Iterator & { _rest &= _rest - 1; return *this; }
                constexpr auto operator++(int) -> Iterator { auto old = *this; ++*this; return old; }
                constexpr auto operator==(const Iterator &) const -> bool = default;

            private:
                std::uint64_t _rest = 0;
        };

        constexpr auto begin() const -> Iterator { return Iterator{_bits}; }
        constexpr auto end() const -> Iterator { return Iterator{0}; }

        auto to_vector() const -> std::vector<Vertex>
        {
            return std::vector<Vertex>(begin(), end());
        }

        auto to_string() const -> std::string
        {
            std::string out = "{";
            bool first_item = true;
            for (auto v : *this) {
                if (! first_item)
                    out += ",";
                out += std::to_string(v);
                first_item = false;
            }
            return out + "}";
        }

    private:
        std::uint64_t _bits = 0;
};

/**
 * Lexicographic order on the sorted member lists of two sets of equal
 * cardinality: the set holding the smallest element of the symmetric
 * difference comes first.
 */
inline auto lex_less(VertexSet a, VertexSet b) -> bool
{
    auto diff = a.bits() ^ b.bits();
    if (diff == 0)
        return false;
    return a.contains(std::countr_zero(diff));
}

enum class Visit { Continue, Stop };

/**
 * Calls f on every subset of universe with exactly size members, in
 * lexicographic order of the sorted member lists. f returns Visit::Stop to
 * end early; the return value tells whether the walk was stopped.
 */
template <typename F>
auto for_each_subset_lex(VertexSet universe, int size, F && f) -> bool
{
    auto elements = universe.to_vector();
    int m = static_cast<int>(elements.size());
    if (size < 0 || size > m)
        return false;

    std::vector<int> idx(size);
    for (int i = 0 ; i < size ; ++i)
        idx[i] = i;

    while (true) {
        VertexSet s;
        for (int i = 0 ; i < size ; ++i)
            s.insert(elements[idx[i]]);
        if (f(s) == Visit::Stop)
            return true;

        int i = size - 1;
        while (i >= 0 && idx[i] == m - size + i)
            --i;
        if (i < 0)
            return false;
        ++idx[i];
        for (int j = i + 1 ; j < size ; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

/// Subsets of every size from 0 up, lexicographic within a size.
template <typename F>
auto for_each_subset_by_size(VertexSet universe, int min_size, int max_size, F && f) -> bool
{
    for (int s = min_size ; s <= max_size ; ++s)
        if (for_each_subset_lex(universe, s, f))
            return true;
    return false;
}

} // namespace factorcrit
