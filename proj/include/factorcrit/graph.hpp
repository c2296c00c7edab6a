#pragma once

#include <factorcrit/errors.hpp>
#include <factorcrit/vertex_set.hpp>

#include <algorithm>
#include <array>
#include <compare>
#include <deque>
#include <map>
#include <string>
#include <vector>

namespace factorcrit {

/// An unordered vertex pair, always stored with first < second.
struct Edge
{
    Vertex first = 0;
    Vertex second = 0;

    Edge() = default;

    Edge(Vertex a, Vertex b) : first(std::min(a, b)), second(std::max(a, b))
    {
    }

    auto operator<=>(const Edge &) const = default;

    auto to_string() const -> std::string
    {
        return std::to_string(first) + "-" + std::to_string(second);
    }
};

/// Degree value mapped to the number of vertices having it.
using DegreeProfile = std::map<int, int>;

/**
 * Simple undirected graph on at most 62 vertices, one adjacency word per
 * vertex. Values are plain data: copying is a memcpy and nothing is shared.
 */
class Graph
{
    public:
        Graph() = default;

        explicit Graph(int order) : _order(order)
        {
            if (order < 0 || order > max_order)
                throw Error(ErrorKind::UnsupportedOrder, "order " + std::to_string(order) + " outside 0.." + std::to_string(max_order));
        }

        Graph(int order, std::initializer_list<Edge> edges) : Graph(order)
        {
            for (auto e : edges)
                connect(e.first, e.second);
        }

        auto order() const -> int { return _order; }
        auto vertices() const -> VertexSet { return VertexSet::range(_order); }

        auto neighbours(Vertex v) const -> VertexSet { return VertexSet(_adj[v]); }
        auto closed_neighbours(Vertex v) const -> VertexSet { return VertexSet(_adj[v]) | VertexSet::single(v); }
        auto degree(Vertex v) const -> int { return neighbours(v).size(); }

        auto adjacent(Vertex a, Vertex b) const -> bool
        {
            return (_adj[a] >> b) & 1U;
        }

        /// Adds the edge in place; only for building values, not part of the
        /// algebra (see add_edge / remove_edge for that).
        auto connect(Vertex a, Vertex b) -> void
        {
            check_vertex(a);
            check_vertex(b);
            if (a == b)
                throw Error(ErrorKind::EdgePresent, "loop at " + std::to_string(a));
            _adj[a] |= std::uint64_t{1} << b;
            _adj[b] |= std::uint64_t{1} << a;
        }

        auto disconnect(Vertex a, Vertex b) -> void
        {
            check_vertex(a);
            check_vertex(b);
            _adj[a] &= ~(std::uint64_t{1} << b);
            _adj[b] &= ~(std::uint64_t{1} << a);
        }

        auto edge_count() const -> int
        {
            int twice = 0;
            for (int v = 0 ; v < _order ; ++v)
                twice += degree(v);
            return twice / 2;
        }

        auto edges() const -> std::vector<Edge>
        {
            std::vector<Edge> result;
            for (int u = 0 ; u < _order ; ++u)
                for (auto w : neighbours(u))
                    if (w > u)
                        result.emplace_back(u, w);
            return result;
        }

        auto min_degree() const -> int
        {
            int best = _order == 0 ? 0 : degree(0);
            for (int v = 1 ; v < _order ; ++v)
                best = std::min(best, degree(v));
            return best;
        }

        auto max_degree() const -> int
        {
            int best = 0;
            for (int v = 0 ; v < _order ; ++v)
                best = std::max(best, degree(v));
            return best;
        }

        auto degree_profile() const -> DegreeProfile
        {
            DegreeProfile p;
            for (int v = 0 ; v < _order ; ++v)
                ++p[degree(v)];
            return p;
        }

        auto vertices_of_degree(int d) const -> VertexSet
        {
            VertexSet s;
            for (int v = 0 ; v < _order ; ++v)
                if (degree(v) == d)
                    s.insert(v);
            return s;
        }

        auto check_vertex(Vertex v) const -> void
        {
            if (v < 0 || v >= _order)
                throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " not in 0.." + std::to_string(_order - 1));
        }

        auto operator==(const Graph & other) const -> bool
        {
            if (_order != other._order)
                return false;
            return std::equal(_adj.begin(), _adj.begin() + _order, other._adj.begin());
        }

        auto row_bits(Vertex v) const -> std::uint64_t { return _adj[v]; }

    private:
        int _order = 0;
        std::array<std::uint64_t, max_order> _adj{};
};

/// Maximal connected blocks of a vertex subset, in order of smallest member.
struct ComponentPartition
{
    std::vector<VertexSet> blocks;
    int odd_count = 0;

    auto block_of(Vertex v) const -> int
    {
        for (std::size_t i = 0 ; i < blocks.size() ; ++i)
            if (blocks[i].contains(v))
                return static_cast<int>(i);
        return -1;
    }
};

/// Component containing start inside the alive set.
inline auto component_of(const Graph & g, VertexSet alive, Vertex start) -> VertexSet
{
    VertexSet seen = VertexSet::single(start);
    VertexSet frontier = seen;
    while (! frontier.empty()) {
        VertexSet next;
        for (auto v : frontier)
            next |= g.neighbours(v);
        next &= alive;
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

/// Components of g restricted to the vertices in alive.
inline auto components(const Graph & g, VertexSet alive) -> ComponentPartition
{
    ComponentPartition result;
    VertexSet rest = alive;
    while (! rest.empty()) {
        auto block = component_of(g, alive, rest.first());
        rest -= block;
        if (block.size() % 2 == 1)
            ++result.odd_count;
        result.blocks.push_back(block);
    }
    return result;
}

inline auto components(const Graph & g) -> ComponentPartition
{
    return components(g, g.vertices());
}

/// C_o of the graph induced on alive; cheaper than building the partition.
inline auto odd_component_count(const Graph & g, VertexSet alive) -> int
{
    int odd = 0;
    VertexSet rest = alive;
    while (! rest.empty()) {
        auto block = component_of(g, alive, rest.first());
        rest -= block;
        odd += block.size() & 1;
    }
    return odd;
}

inline auto is_connected(const Graph & g, VertexSet alive) -> bool
{
    if (alive.empty())
        return true;
    return component_of(g, alive, alive.first()) == alive;
}

inline auto is_connected(const Graph & g) -> bool
{
    return is_connected(g, g.vertices());
}

inline auto non_neighborhood(const Graph & g, Vertex v) -> VertexSet
{
    g.check_vertex(v);
    return g.vertices() - g.closed_neighbours(v);
}

/// Result of an induced deletion: the surviving graph plus both index maps.
struct Deletion
{
    Graph graph;
    std::vector<int> old_to_new;    // -1 for deleted vertices
    std::vector<Vertex> new_to_old;

    auto map_set_back(VertexSet s) const -> VertexSet
    {
        VertexSet out;
        for (auto v : s)
            out.insert(new_to_old[v]);
        return out;
    }
};

/// G - S with survivors relabelled in increasing order of their old index.
inline auto delete_vertices(const Graph & g, VertexSet removed) -> Deletion
{
    for (auto v : removed)
        g.check_vertex(v);

    Deletion d;
    d.old_to_new.assign(g.order(), -1);
    for (int v = 0 ; v < g.order() ; ++v)
        if (! removed.contains(v)) {
            d.old_to_new[v] = static_cast<int>(d.new_to_old.size());
            d.new_to_old.push_back(v);
        }

    d.graph = Graph(static_cast<int>(d.new_to_old.size()));
    for (std::size_t i = 0 ; i < d.new_to_old.size() ; ++i)
        for (auto w : g.neighbours(d.new_to_old[i]) - removed)
            if (d.old_to_new[w] > static_cast<int>(i))
                d.graph.connect(static_cast<int>(i), d.old_to_new[w]);
    return d;
}

/// Subgraph induced by keep, relabelled order-preservingly.
inline auto induced_subgraph(const Graph & g, VertexSet keep) -> Graph
{
    return delete_vertices(g, g.vertices() - keep).graph;
}

inline auto remove_edge(const Graph & g, Vertex u, Vertex v) -> Graph
{
    g.check_vertex(u);
    g.check_vertex(v);
    if (! g.adjacent(u, v))
        throw Error(ErrorKind::EdgeAbsent, "no edge " + std::to_string(u) + "-" + std::to_string(v));
    Graph h = g;
    h.disconnect(u, v);
    return h;
}

inline auto add_edge(const Graph & g, Vertex u, Vertex v) -> Graph
{
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v || g.adjacent(u, v))
        throw Error(ErrorKind::EdgePresent, "edge " + std::to_string(u) + "-" + std::to_string(v) + " present or loop");
    Graph h = g;
    h.connect(u, v);
    return h;
}

inline auto complement(const Graph & g) -> Graph
{
    Graph h(g.order());
    for (int u = 0 ; u < g.order() ; ++u)
        for (int v = u + 1 ; v < g.order() ; ++v)
            if (! g.adjacent(u, v))
                h.connect(u, v);
    return h;
}

/// True iff no vertex has three pairwise non-adjacent neighbours.
inline auto is_claw_free(const Graph & g) -> bool
{
    for (int c = 0 ; c < g.order() ; ++c) {
        auto nb = g.neighbours(c);
        for (auto a : nb)
            for (auto b : nb - VertexSet::range(a + 1) - g.neighbours(a))
                if (! (nb - VertexSet::range(b + 1) - g.neighbours(a) - g.neighbours(b)).empty())
                    return false;
    }
    return true;
}

struct Connectivity
{
    int vertex = 0;
    int edge = 0;

    auto operator==(const Connectivity &) const -> bool = default;
};

namespace detail {
    /// Unit-capacity max flow between s and t, each undirected edge usable
    /// once in either direction.
    inline auto edge_disjoint_paths(const Graph & g, Vertex s, Vertex t) -> int
    {
        int n = g.order();
        std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
        for (auto e : g.edges()) {
            cap[e.first][e.second] = 1;
            cap[e.second][e.first] = 1;
        }

        int flow = 0;
        std::vector<int> parent(n);
        while (true) {
            std::fill(parent.begin(), parent.end(), -1);
            parent[s] = s;
            std::deque<int> queue{s};
            while (! queue.empty() && parent[t] == -1) {
                int x = queue.front();
                queue.pop_front();
                for (int y = 0 ; y < n ; ++y)
                    if (parent[y] == -1 && cap[x][y] > 0) {
                        parent[y] = x;
                        queue.push_back(y);
                    }
            }
            if (parent[t] == -1)
                return flow;
            for (int y = t ; y != s ; y = parent[y]) {
                --cap[parent[y]][y];
                ++cap[y][parent[y]];
            }
            ++flow;
        }
    }
}

/**
 * Exact vertex and edge connectivity. Vertex connectivity enumerates
 * separators by increasing size up to min(delta, n-2); K_n reports n-1.
 * Edge connectivity is the minimum s-t edge-disjoint path count from vertex 0.
 */
inline auto connectivity(const Graph & g) -> Connectivity
{
    int n = g.order();
    if (n < 2)
        throw Error(ErrorKind::OrderTooSmall, "connectivity needs at least 2 vertices");

    Connectivity result;
    result.vertex = n - 1;
    auto all = g.vertices();
    int limit = std::min(g.min_degree(), n - 2);
    for (int s = 0 ; s <= limit ; ++s) {
        bool found = for_each_subset_lex(all, s, [&] (VertexSet sep) {
            return is_connected(g, all - sep) ? Visit::Continue : Visit::Stop;
        });
        if (found) {
            result.vertex = s;
            break;
        }
    }

    result.edge = g.min_degree();
    for (int t = 1 ; t < n && result.edge > 0 ; ++t)
        result.edge = std::min(result.edge, detail::edge_disjoint_paths(g, 0, t));
    return result;
}

/// Standard small graphs with fixed labellings.
namespace graphs {
    inline auto empty(int n) -> Graph { return Graph(n); }

    inline auto complete(int n) -> Graph
    {
        Graph g(n);
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                g.connect(u, v);
        return g;
    }

    inline auto path(int n) -> Graph
    {
        Graph g(n);
        for (int v = 0 ; v + 1 < n ; ++v)
            g.connect(v, v + 1);
        return g;
    }

    inline auto cycle(int n) -> Graph
    {
        Graph g = path(n);
        g.connect(0, n - 1);
        return g;
    }

    /// K_{1,leaves} with the centre at vertex 0.
    inline auto star(int leaves) -> Graph
    {
        Graph g(leaves + 1);
        for (int v = 1 ; v <= leaves ; ++v)
            g.connect(0, v);
        return g;
    }

    /// Hub at vertex 0 joined to a rim cycle on 1..rim.
    inline auto wheel(int rim) -> Graph
    {
        Graph g(rim + 1);
        for (int v = 1 ; v <= rim ; ++v) {
            g.connect(0, v);
            g.connect(v, v % rim + 1);
        }
        return g;
    }

    /// Outer 5-cycle on 0..4, spokes i-(i+5), inner pentagram on 5..9.
    inline auto petersen() -> Graph
    {
        Graph g(10);
        for (int i = 0 ; i < 5 ; ++i) {
            g.connect(i, (i + 1) % 5);
            g.connect(i, i + 5);
            g.connect(i + 5, (i + 2) % 5 + 5);
        }
        return g;
    }

    inline auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        Graph g(a.order() + b.order());
        for (auto e : a.edges())
            g.connect(e.first, e.second);
        for (auto e : b.edges())
            g.connect(e.first + a.order(), e.second + a.order());
        return g;
    }
}

} // namespace factorcrit
