#pragma once

#include <factorcrit/graph.hpp>
#include <factorcrit/graph6.hpp>
#include <factorcrit/matching.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace factorcrit {

enum class CriticalityMethod { Definitional, TutteType };

struct CriticalityReport
{
    int k = 0;
    bool verdict = false;
    std::optional<VertexSet> failing_set;
    CriticalityMethod method = CriticalityMethod::Definitional;
    /// C_o(G - B) for a Tutte-type failure.
    std::optional<int> odd_components;
};

/// Rejects k outside 0..n-1 and k with the wrong parity.
inline auto validate_criticality_order(const Graph & g, int k) -> void
{
    if (k < 0 || k >= g.order())
        throw Error(ErrorKind::KOutOfRange, "k = " + std::to_string(k) + " outside 0.." + std::to_string(g.order() - 1));
    if ((g.order() - k) % 2 != 0)
        throw Error(ErrorKind::ParityMismatch, "n = " + std::to_string(g.order()) + " and k = " + std::to_string(k) + " differ in parity");
}

namespace detail {

    /// Matchability oracle: a subset table for small graphs, direct search otherwise.
    class Matchability
    {
        public:
            explicit Matchability(const Graph & g) : _g(g)
            {
                if (g.order() <= 10)
                    _table.emplace(g);
            }

            auto operator()(VertexSet alive) const -> bool
            {
                return _table ? _table->matchable(alive) : has_perfect_matching(_g, alive);
            }

        private:
            const Graph & _g;
            std::optional<MatchableSubsets> _table;
    };

    /// First k-subset of candidates (lex order) whose removal leaves no perfect matching.
    inline auto first_unmatchable_removal(const Graph & g, int k, VertexSet candidates) -> std::optional<VertexSet>
    {
        Matchability matchable(g);
        auto all = g.vertices();
        std::optional<VertexSet> failing;
        for_each_subset_lex(candidates, k, [&] (VertexSet s) {
            if (matchable(all - s))
                return Visit::Continue;
            failing = s;
            return Visit::Stop;
        });
        return failing;
    }
}

/**
 * Deletes every k-subset in lexicographic order and tests the remainder for
 * a perfect matching; the first failing subset is reported. k = 0 is the
 * plain perfect matching test.
 */
inline auto is_k_factor_critical(const Graph & g, int k) -> CriticalityReport
{
    validate_criticality_order(g, k);
    CriticalityReport r;
    r.k = k;
    r.method = CriticalityMethod::Definitional;
    r.failing_set = detail::first_unmatchable_removal(g, k, g.vertices());
    r.verdict = ! r.failing_set.has_value();
    return r;
}

/// Same question answered by C_o(G - B) <= |B| - k over every |B| >= k.
inline auto kfc_via_tutte(const Graph & g, int k) -> CriticalityReport
{
    validate_criticality_order(g, k);
    CriticalityReport r;
    r.k = k;
    r.method = CriticalityMethod::TutteType;
    auto all = g.vertices();
    for_each_subset_by_size(all, k, g.order(), [&] (VertexSet b) {
        int odd = odd_component_count(g, all - b);
        if (odd <= b.size() - k)
            return Visit::Continue;
        r.failing_set = b;
        r.odd_components = odd;
        return Visit::Stop;
    });
    r.verdict = ! r.failing_set.has_value();
    return r;
}

/// Whether g - e is still k-factor-critical, assuming g is.
inline auto stays_critical_without(const Graph & g, int k, Edge e) -> bool
{
    Graph without = g;
    without.disconnect(e.first, e.second);
    // removals containing an endpoint of e see the same graph as in g
    auto candidates = g.vertices() - VertexSet{e.first, e.second};
    return ! detail::first_unmatchable_removal(without, k, candidates).has_value();
}

/// k-factor-critical, and no single edge can be removed keeping that.
inline auto is_minimally_kfc(const Graph & g, int k) -> bool
{
    if (! is_k_factor_critical(g, k).verdict)
        return false;
    for (auto e : g.edges())
        if (stays_critical_without(g, k, e))
            return false;
    return true;
}

/// The edge whose removal keeps g k-factor-critical, if any (g assumed k-fc).
inline auto first_removable_edge(const Graph & g, int k) -> std::optional<Edge>
{
    for (auto e : g.edges())
        if (stays_critical_without(g, k, e))
            return e;
    return std::nullopt;
}

namespace detail {
    inline auto check_edge(const Graph & g, Edge e) -> void
    {
        g.check_vertex(e.first);
        g.check_vertex(e.second);
        if (e.first == e.second || ! g.adjacent(e.first, e.second))
            throw Error(ErrorKind::EdgeAbsent, "edge " + e.to_string() + " not in graph");
    }

    template <typename F>
    auto for_each_minimality_witness(const Graph & g, int k, Edge e, F && f) -> void
    {
        validate_criticality_order(g, k);
        check_edge(g, e);
        Graph without = g;
        without.disconnect(e.first, e.second);
        Matchability with_edge(g), without_edge(without);
        auto all = g.vertices();
        for_each_subset_lex(all - VertexSet{e.first, e.second}, k, [&] (VertexSet s) {
            if (! with_edge(all - s))
                throw Error(ErrorKind::NotCritical, "removing " + s.to_string() + " leaves no perfect matching");
            if (without_edge(all - s))
                return Visit::Continue;
            return f(s);
        });
    }
}

/**
 * Lexicographically first S, |S| = k, avoiding both ends of e, such that
 * every perfect matching of G - S uses e. Absent exactly when G - e is
 * still k-factor-critical.
 */
inline auto minimality_witness(const Graph & g, int k, Edge e) -> std::optional<VertexSet>
{
    std::optional<VertexSet> found;
    detail::for_each_minimality_witness(g, k, e, [&] (VertexSet s) {
        found = s;
        return Visit::Stop;
    });
    return found;
}

/// Every witness set for e, in lexicographic order.
inline auto all_minimality_witnesses(const Graph & g, int k, Edge e) -> std::vector<VertexSet>
{
    std::vector<VertexSet> found;
    detail::for_each_minimality_witness(g, k, e, [&] (VertexSet s) {
        found.push_back(s);
        return Visit::Continue;
    });
    return found;
}

/// Per-edge witness map certifying minimality.
struct MinimalityCertificate
{
    int k = 0;
    std::map<Edge, VertexSet> witnesses;
};

/// Builds the certificate, or throws NotMinimallyCritical naming the bad edge.
inline auto minimality_certificate(const Graph & g, int k) -> MinimalityCertificate
{
    auto report = is_k_factor_critical(g, k);
    if (! report.verdict)
        throw Error(ErrorKind::NotMinimallyCritical, "not " + std::to_string(k) + "-factor-critical: removing " + report.failing_set->to_string());
    MinimalityCertificate cert;
    cert.k = k;
    for (auto e : g.edges()) {
        auto s = minimality_witness(g, k, e);
        if (! s)
            throw Error(ErrorKind::NotMinimallyCritical, "edge " + e.to_string() + " can be removed");
        cert.witnesses.emplace(e, *s);
    }
    return cert;
}

/**
 * Adding a non-edge xy with d(x) + d(y) >= n + k - 1 never changes
 * k-factor-criticality. Returns whether that held here; with raise set, a
 * failure throws TheoremViolated instead.
 */
inline auto ps_reduction_check(const Graph & g, int k, Vertex x, Vertex y, bool raise = true) -> bool
{
    validate_criticality_order(g, k);
    g.check_vertex(x);
    g.check_vertex(y);
    if (x == y || g.adjacent(x, y))
        throw Error(ErrorKind::PreconditionUnmet, "pair " + std::to_string(x) + "," + std::to_string(y) + " is adjacent or equal");
    int n = g.order();
    if (g.degree(x) + g.degree(y) < n + k - 1)
        throw Error(ErrorKind::PreconditionUnmet, "degree sum " + std::to_string(g.degree(x) + g.degree(y)) + " < n + k - 1 = " + std::to_string(n + k - 1));

    bool before = is_k_factor_critical(g, k).verdict;
    bool after = is_k_factor_critical(add_edge(g, x, y), k).verdict;
    if (before != after && raise)
        throw TheoremViolated("degree-sum-edge-addition", encode_graph6(g),
                "k = " + std::to_string(k) + ", pair " + std::to_string(x) + "," + std::to_string(y));
    return before == after;
}

/**
 * For a k-factor-critical g: vertex connectivity >= k, edge connectivity
 * >= k + 1, and (k-2)-factor-criticality when k >= 2.
 */
inline auto downward_criticality_check(const Graph & g, int k, bool raise = true) -> bool
{
    validate_criticality_order(g, k);
    if (k < 1)
        throw Error(ErrorKind::PreconditionUnmet, "k must be at least 1");
    if (! is_k_factor_critical(g, k).verdict)
        throw Error(ErrorKind::PreconditionUnmet, "graph is not " + std::to_string(k) + "-factor-critical");

    auto conn = connectivity(g);
    bool ok = conn.vertex >= k && conn.edge >= k + 1;
    if (k >= 2)
        ok = ok && is_k_factor_critical(g, k - 2).verdict;
    if (! ok && raise)
        throw TheoremViolated("criticality-connectivity", encode_graph6(g),
                "k = " + std::to_string(k) + ", connectivity " + std::to_string(conn.vertex) + "/" + std::to_string(conn.edge));
    return ok;
}

} // namespace factorcrit
