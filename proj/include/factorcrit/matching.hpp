#pragma once

#include <factorcrit/graph.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

namespace factorcrit {

/// A set of pairwise vertex-disjoint edges, kept sorted.
struct Matching
{
    int order = 0;
    std::vector<Edge> edges;

    auto size() const -> int { return static_cast<int>(edges.size()); }
    auto perfect() const -> bool { return 2 * size() == order; }

    auto contains(Edge e) const -> bool
    {
        return std::binary_search(edges.begin(), edges.end(), e);
    }

    auto covered() const -> VertexSet
    {
        VertexSet s;
        for (auto e : edges) {
            s.insert(e.first);
            s.insert(e.second);
        }
        return s;
    }

    auto operator==(const Matching &) const -> bool = default;
};

/// Checks disjointness and that every edge exists in g.
inline auto is_matching_of(const Graph & g, const Matching & m) -> bool
{
    VertexSet seen;
    for (auto e : m.edges) {
        if (e.first == e.second || ! g.adjacent(e.first, e.second))
            return false;
        if (seen.contains(e.first) || seen.contains(e.second))
            return false;
        seen.insert(e.first);
        seen.insert(e.second);
    }
    return true;
}

namespace detail {

    /**
     * Edmonds' augmenting-path search with blossom shrinking. One instance
     * per call; all state lives in the object.
     */
    class BlossomMatcher
    {
        public:
            explicit BlossomMatcher(const Graph & g) :
                _g(g), _n(g.order()), _mate(_n, -1), _parent(_n), _base(_n), _in_queue(_n), _in_blossom(_n)
            {
            }

            auto run() -> std::vector<int>
            {
                // greedy start
                for (int v = 0 ; v < _n ; ++v)
                    if (_mate[v] == -1)
                        for (auto w : _g.neighbours(v))
                            if (_mate[w] == -1) {
                                _mate[v] = w;
                                _mate[w] = v;
                                break;
                            }

                for (int root = 0 ; root < _n ; ++root)
                    if (_mate[root] == -1) {
                        int end = find_augmenting_path(root);
                        while (end != -1) {
                            int prev = _parent[end];
                            int next = _mate[prev];
                            _mate[end] = prev;
                            _mate[prev] = end;
                            end = next;
                        }
                    }
                return _mate;
            }

        private:
            const Graph & _g;
            int _n;
            std::vector<int> _mate, _parent, _base;
            std::vector<char> _in_queue, _in_blossom;
            std::deque<int> _queue;

            auto lowest_common_base(int a, int b) -> int
            {
                std::vector<char> on_path(_n, 0);
                while (true) {
                    a = _base[a];
                    on_path[a] = 1;
                    if (_mate[a] == -1)
                        break;
                    a = _parent[_mate[a]];
                }
                while (true) {
                    b = _base[b];
                    if (on_path[b])
                        return b;
                    b = _parent[_mate[b]];
                }
            }

            auto mark_path(int v, int b, int child) -> void
            {
                while (_base[v] != b) {
                    _in_blossom[_base[v]] = 1;
                    _in_blossom[_base[_mate[v]]] = 1;
                    _parent[v] = child;
                    child = _mate[v];
                    v = _parent[_mate[v]];
                }
            }

            auto find_augmenting_path(int root) -> int
            {
                std::fill(_in_queue.begin(), _in_queue.end(), 0);
                std::fill(_parent.begin(), _parent.end(), -1);
                for (int i = 0 ; i < _n ; ++i)
                    _base[i] = i;

                _in_queue[root] = 1;
                _queue.assign(1, root);
                while (! _queue.empty()) {
                    int v = _queue.front();
                    _queue.pop_front();
                    for (auto to : _g.neighbours(v)) {
                        if (_base[v] == _base[to] || _mate[v] == to)
                            continue;
                        if (to == root || (_mate[to] != -1 && _parent[_mate[to]] != -1)) {
                            int b = lowest_common_base(v, to);
                            std::fill(_in_blossom.begin(), _in_blossom.end(), 0);
                            mark_path(v, b, to);
                            mark_path(to, b, v);
                            for (int i = 0 ; i < _n ; ++i)
                                if (_in_blossom[_base[i]]) {
                                    _base[i] = b;
                                    if (! _in_queue[i]) {
                                        _in_queue[i] = 1;
                                        _queue.push_back(i);
                                    }
                                }
                        }
                        else if (_parent[to] == -1) {
                            _parent[to] = v;
                            if (_mate[to] == -1)
                                return to;
                            _in_queue[_mate[to]] = 1;
                            _queue.push_back(_mate[to]);
                        }
                    }
                }
                return -1;
            }
    };

    /// Exhaustive lowest-vertex branching; fine for a dozen vertices.
    inline auto has_pm_small(const Graph & g, std::uint64_t alive) -> bool
    {
        if (alive == 0)
            return true;
        for (std::uint64_t rest = alive ; rest ; rest &= rest - 1) {
            int x = std::countr_zero(rest);
            if ((g.row_bits(x) & alive) == 0)
                return false;
        }
        int v = std::countr_zero(alive);
        std::uint64_t without_v = alive & (alive - 1);
        for (std::uint64_t cand = g.row_bits(v) & without_v ; cand ; cand &= cand - 1) {
            int w = std::countr_zero(cand);
            if (has_pm_small(g, without_v & ~(std::uint64_t{1} << w)))
                return true;
        }
        return false;
    }
}

/// A maximum-cardinality matching, edges sorted.
inline auto maximum_matching(const Graph & g) -> Matching
{
    auto mate = detail::BlossomMatcher(g).run();
    Matching m;
    m.order = g.order();
    for (int v = 0 ; v < g.order() ; ++v)
        if (mate[v] > v)
            m.edges.emplace_back(v, mate[v]);
    return m;
}

/**
 * Matchability of every vertex subset of a graph with at most 16 vertices,
 * one bit per subset, built bottom-up over subset masks.
 */
class MatchableSubsets
{
    public:
        static constexpr int order_limit = 16;

        explicit MatchableSubsets(const Graph & g)
        {
            if (g.order() > order_limit)
                throw Error(ErrorKind::UnsupportedOrder, "subset table limited to 16 vertices");
            _bits.assign((std::size_t{1} << g.order()) / 64 + 1, 0);
            set(0);
            std::uint64_t full = (std::uint64_t{1} << g.order()) - 1;
            for (std::uint64_t mask = 3 ; mask <= full ; ++mask) {
                if (std::popcount(mask) % 2 == 1)
                    continue;
                int v = std::countr_zero(mask);
                std::uint64_t rest = mask & (mask - 1);
                for (std::uint64_t cand = g.row_bits(v) & rest ; cand ; cand &= cand - 1)
                    if (test(rest & ~(cand & -cand))) {
                        set(mask);
                        break;
                    }
            }
        }

        auto matchable(VertexSet alive) const -> bool
        {
            return test(alive.bits());
        }

    private:
        std::vector<std::uint64_t> _bits;

        auto set(std::uint64_t mask) -> void { _bits[mask >> 6] |= std::uint64_t{1} << (mask & 63); }
        auto test(std::uint64_t mask) const -> bool { return (_bits[mask >> 6] >> (mask & 63)) & 1U; }
};

/// Perfect matching test for the subgraph induced on alive.
inline auto has_perfect_matching(const Graph & g, VertexSet alive) -> bool
{
    if (alive.size() % 2 == 1)
        return false;
    if (alive.size() <= 12)
        return detail::has_pm_small(g, alive.bits());
    return maximum_matching(induced_subgraph(g, alive)).perfect();
}

inline auto has_perfect_matching(const Graph & g) -> bool
{
    return has_perfect_matching(g, g.vertices());
}

struct MatchingEnumeration
{
    std::vector<Matching> matchings;
    bool truncated = false;
};

inline constexpr std::size_t default_enumeration_limit = 1'000'000;

/**
 * All perfect matchings, branching on the smallest unmatched vertex with
 * partners in increasing order, which yields lexicographic order of the
 * sorted edge lists. Stops after limit matchings; strict turns truncation
 * into LimitExceeded.
 */
inline auto enumerate_perfect_matchings(const Graph & g, std::size_t limit = default_enumeration_limit, bool strict = false) -> MatchingEnumeration
{
    if (limit < 1)
        throw Error(ErrorKind::PreconditionUnmet, "enumeration limit must be at least 1");

    MatchingEnumeration result;
    if (g.order() % 2 == 1)
        return result;

    std::vector<Edge> chosen;
    auto recurse = [&] (auto & self, VertexSet alive) -> void {
        if (result.truncated)
            return;
        if (alive.empty()) {
            if (result.matchings.size() == limit) {
                result.truncated = true;
                return;
            }
            result.matchings.push_back(Matching{g.order(), chosen});
            return;
        }
        Vertex v = alive.first();
        auto rest = alive - VertexSet::single(v);
        for (auto w : g.neighbours(v) & rest) {
            chosen.emplace_back(v, w);
            self(self, rest - VertexSet::single(w));
            chosen.pop_back();
        }
    };
    recurse(recurse, g.vertices());

    if (result.truncated && strict)
        throw Error(ErrorKind::LimitExceeded, "more than " + std::to_string(limit) + " perfect matchings");
    return result;
}

/// True iff g has a perfect matching and every one of them uses e.
inline auto forced_edge(const Graph & g, Edge e) -> bool
{
    g.check_vertex(e.first);
    g.check_vertex(e.second);
    if (! g.adjacent(e.first, e.second))
        throw Error(ErrorKind::EdgeAbsent, "edge " + e.to_string() + " not in graph");
    if (! has_perfect_matching(g))
        return false;
    Graph without = g;
    without.disconnect(e.first, e.second);
    return ! has_perfect_matching(without);
}

/// A set X with more odd components in G - X than |X|.
struct TutteCertificate
{
    VertexSet barrier;
    ComponentPartition partition;
    int deficit = 0;
};

enum class ViolatorMode { FirstMinimal, AllMinimal, All };

inline auto make_tutte_certificate(const Graph & g, VertexSet barrier) -> TutteCertificate
{
    TutteCertificate c;
    c.barrier = barrier;
    c.partition = components(g, g.vertices() - barrier);
    c.deficit = c.partition.odd_count - barrier.size();
    return c;
}

/**
 * Sets X with C_o(G - X) > |X|, searched by increasing |X| and
 * lexicographically within a size. Empty iff g has a perfect matching.
 * The search itself is exhaustive; above 20 vertices a matching is computed
 * first so that matchable graphs are answered without the subset sweep.
 */
inline auto tutte_violators(const Graph & g, ViolatorMode mode = ViolatorMode::FirstMinimal) -> std::vector<TutteCertificate>
{
    int n = g.order();
    if (mode == ViolatorMode::All && n > 16)
        throw Error(ErrorKind::PreconditionUnmet, "'all' violator mode is limited to 16 vertices");

    std::vector<TutteCertificate> result;
    if (n > 20 && mode != ViolatorMode::All && has_perfect_matching(g))
        return result;

    auto all = g.vertices();
    for (int s = 0 ; s <= n ; ++s) {
        bool stop = for_each_subset_lex(all, s, [&] (VertexSet x) {
            if (odd_component_count(g, all - x) > s) {
                result.push_back(make_tutte_certificate(g, x));
                if (mode == ViolatorMode::FirstMinimal)
                    return Visit::Stop;
            }
            return Visit::Continue;
        });
        if (stop)
            break;
        if (mode == ViolatorMode::AllMinimal && ! result.empty())
            break;
    }
    return result;
}

} // namespace factorcrit
