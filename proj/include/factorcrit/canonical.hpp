#pragma once

#include <factorcrit/graph.hpp>
#include <factorcrit/graph6.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace factorcrit {

/**
 * A relabelling of g that depends only on its isomorphism class.
 * labelling[i] is the original vertex placed at position i.
 */
struct CanonicalForm
{
    Graph graph;
    std::vector<Vertex> labelling;
};

namespace detail {

    /// Ordered partition of the positions 0..n-1: lab holds vertices, bit i
    /// of ends marks the last position of a cell.
    struct Partition
    {
        std::array<std::uint8_t, max_order> lab{};
        std::uint64_t ends = 0;

        auto cell_end(int start) const -> int { return std::countr_zero(ends >> start) + start; }

        auto cell_bits(int start, int end) const -> std::uint64_t
        {
            std::uint64_t bits = 0;
            for (int i = start ; i <= end ; ++i)
                bits |= std::uint64_t{1} << lab[i];
            return bits;
        }
    };

    class Canonicaliser
    {
        public:
            explicit Canonicaliser(const Graph & g) : _g(g), _n(g.order())
            {
            }

            auto run() -> std::vector<Vertex>
            {
                Partition p;
                for (int i = 0 ; i < _n ; ++i)
                    p.lab[i] = static_cast<std::uint8_t>(i);
                if (_n > 0)
                    p.ends = std::uint64_t{1} << (_n - 1);
                // start from the degree partition
                split_by(p, [&] (int v) { return _g.degree(v); });
                refine(p);
                search(p);
                return {_best_lab.begin(), _best_lab.begin() + _n};
            }

        private:
            const Graph & _g;
            int _n;
            bool _have_best = false;
            std::array<std::uint64_t, max_order> _best_rows{};
            std::array<Vertex, max_order> _best_lab{};

            /// Splits every non-singleton cell by key, smaller keys first. Returns
            /// whether anything split.
            template <typename Key>
            auto split_by(Partition & p, Key && key) -> bool
            {
                bool changed = false;
                std::array<int, max_order> keys{};
                for (int s = 0 ; s < _n ; ) {
                    int e = p.cell_end(s);
                    if (e > s) {
                        for (int i = s ; i <= e ; ++i)
                            keys[i] = key(p.lab[i]);
                        // insertion sort; cells are tiny
                        for (int i = s + 1 ; i <= e ; ++i)
                            for (int j = i ; j > s && keys[j - 1] > keys[j] ; --j) {
                                std::swap(keys[j - 1], keys[j]);
                                std::swap(p.lab[j - 1], p.lab[j]);
                            }
                        for (int i = s ; i < e ; ++i)
                            if (keys[i] != keys[i + 1]) {
                                p.ends |= std::uint64_t{1} << i;
                                changed = true;
                            }
                    }
                    s = e + 1;
                }
                return changed;
            }

            auto refine(Partition & p) -> void
            {
                bool changed = true;
                while (changed) {
                    changed = false;
                    for (int s = 0 ; s < _n && ! changed ; ) {
                        int e = p.cell_end(s);
                        std::uint64_t splitter = p.cell_bits(s, e);
                        changed = split_by(p, [&] (int v) { return std::popcount(_g.row_bits(v) & splitter); });
                        s = e + 1;
                    }
                }
            }

            auto twins(Vertex a, Vertex b) const -> bool
            {
                std::uint64_t mask = ~((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
                return (_g.row_bits(a) & mask) == (_g.row_bits(b) & mask);
            }

            auto search(const Partition & p) -> void
            {
                // target: first smallest non-singleton cell
                int target = -1, target_end = -1, best_size = _n + 1;
                for (int s = 0 ; s < _n ; ) {
                    int e = p.cell_end(s);
                    if (e > s && e - s + 1 < best_size) {
                        best_size = e - s + 1;
                        target = s;
                        target_end = e;
                    }
                    s = e + 1;
                }
                if (target < 0) {
                    leaf(p);
                    return;
                }
                for (int i = target ; i <= target_end ; ++i) {
                    Vertex v = p.lab[i];
                    bool redundant = false;
                    for (int j = target ; j < i && ! redundant ; ++j)
                        redundant = twins(p.lab[j], v);
                    if (redundant)
                        continue;
                    Partition child = p;
                    std::swap(child.lab[target], child.lab[i]);
                    child.ends |= std::uint64_t{1} << target;
                    refine(child);
                    search(child);
                }
            }

            auto leaf(const Partition & p) -> void
            {
                std::array<int, max_order> position{};
                for (int i = 0 ; i < _n ; ++i)
                    position[p.lab[i]] = i;
                std::array<std::uint64_t, max_order> rows{};
                for (int i = 0 ; i < _n ; ++i)
                    for (std::uint64_t r = _g.row_bits(p.lab[i]) ; r ; r &= r - 1)
                        rows[i] |= std::uint64_t{1} << position[std::countr_zero(r)];
                bool better = ! _have_best;
                for (int i = 0 ; i < _n && ! better ; ++i) {
                    if (rows[i] != _best_rows[i]) {
                        better = rows[i] < _best_rows[i];
                        break;
                    }
                }
                if (! better)
                    return;
                _have_best = true;
                _best_rows = rows;
                for (int i = 0 ; i < _n ; ++i)
                    _best_lab[i] = p.lab[i];
            }
    };
}

inline auto canonical_form(const Graph & g) -> CanonicalForm
{
    CanonicalForm result;
    result.labelling = detail::Canonicaliser(g).run();
    std::vector<int> position(g.order());
    for (int i = 0 ; i < g.order() ; ++i)
        position[result.labelling[i]] = i;
    result.graph = Graph(g.order());
    for (auto e : g.edges())
        result.graph.connect(position[e.first], position[e.second]);
    return result;
}

inline auto canonical_graph6(const Graph & g) -> std::string
{
    return encode_graph6(canonical_form(g).graph);
}

inline auto are_isomorphic(const Graph & a, const Graph & b) -> bool
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count() || a.degree_profile() != b.degree_profile())
        return false;
    return canonical_form(a).graph == canonical_form(b).graph;
}

/// Upper triangle of a graph with at most 11 vertices packed into one word.
inline auto packed_upper_triangle(const Graph & g) -> std::uint64_t
{
    if (g.order() > 11)
        throw Error(ErrorKind::UnsupportedOrder, "packed form needs at most 11 vertices");
    std::uint64_t code = 0;
    int bit = 0;
    for (int j = 1 ; j < g.order() ; ++j)
        for (int i = 0 ; i < j ; ++i, ++bit)
            if (g.adjacent(i, j))
                code |= std::uint64_t{1} << bit;
    return code;
}

} // namespace factorcrit
