#pragma once

#include <factorcrit/criticality.hpp>
#include <factorcrit/graph6.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace factorcrit {

/**
 * Outcome of evaluating one statement on one graph. pass means nothing
 * unless applicable. proven is false for statements that are only
 * conjectured at this order; those never raise.
 */
struct TheoremVerdict
{
    std::string theorem;
    std::string graph6;
    bool applicable = false;
    bool pass = false;
    bool proven = true;
    std::map<std::string, std::string> witness;

    auto violated() const -> bool { return applicable && ! pass; }
};

struct CheckOptions
{
    /// Throw TheoremViolated when a proven statement fails.
    bool raise = true;
    /// Skip the internal minimality test; the caller has already done it.
    bool assume_minimal = false;
};

/// "7:1,3:7", highest degree first.
inline auto profile_string(const DegreeProfile & profile) -> std::string
{
    std::string out;
    for (auto it = profile.rbegin() ; it != profile.rend() ; ++it) {
        if (! out.empty())
            out += ",";
        out += std::to_string(it->first) + ":" + std::to_string(it->second);
    }
    return out;
}

namespace detail {
    inline auto make_verdict(std::string theorem, const Graph & g) -> TheoremVerdict
    {
        TheoremVerdict v;
        v.theorem = std::move(theorem);
        v.graph6 = encode_graph6(g);
        return v;
    }

    inline auto settle(TheoremVerdict & v, const CheckOptions & opts) -> void
    {
        if (v.violated() && v.proven && opts.raise) {
            std::string detail;
            for (const auto & [key, value] : v.witness)
                detail += (detail.empty() ? "" : ", ") + key + " = " + value;
            throw TheoremViolated(v.theorem, v.graph6, detail);
        }
    }

    inline auto require_minimal(const Graph & g, int k, const CheckOptions & opts) -> void
    {
        validate_criticality_order(g, k);
        if (! opts.assume_minimal && ! is_minimally_kfc(g, k))
            throw Error(ErrorKind::NotMinimallyCritical, encode_graph6(g) + " is not minimally " + std::to_string(k) + "-factor-critical");
    }

    inline auto with_degree(const Graph & g, int d) -> VertexSet
    {
        VertexSet out;
        for (int v = 0 ; v < g.order() ; ++v)
            if (g.degree(v) == d)
                out.insert(v);
        return out;
    }

    inline auto independent_set(const Graph & g, VertexSet s) -> bool
    {
        for (auto v : s)
            if (! (g.neighbours(v) & s).empty())
                return false;
        return true;
    }

    /// Vertices outside keep whose degree is not d, as a set.
    inline auto off_degree(const Graph & g, VertexSet keep, int d) -> VertexSet
    {
        VertexSet out;
        for (int v = 0 ; v < g.order() ; ++v)
            if (! keep.contains(v) && g.degree(v) != d)
                out.insert(v);
        return out;
    }

    /// A path a-b-c-d on four distinct vertices of inside, if any.
    inline auto path_of_length_three(const Graph & g, VertexSet inside) -> std::optional<std::vector<Vertex>>
    {
        for (auto b : inside)
            for (auto c : g.neighbours(b) & inside)
                for (auto a : g.neighbours(b) & (inside - VertexSet{c}))
                    for (auto d : g.neighbours(c) & (inside - VertexSet{a, b}))
                        return std::vector<Vertex>{a, b, c, d};
        return std::nullopt;
    }
}

/**
 * Minimum degree upper bounds for a minimally k-critical graph: at most
 * (n+k)/2 - 1 once n >= k+4, and at most (n+k)/2 - 2 once n >= k+6.
 */
inline auto check_degree_bounds(const Graph & g, int k, CheckOptions opts = {}) -> TheoremVerdict
{
    detail::require_minimal(g, k, opts);
    int n = g.order(), delta = g.min_degree();
    auto v = detail::make_verdict("degree-upper-bound", g);
    v.applicable = n >= k + 4;
    if (! v.applicable)
        return v;
    int bound = (n + k) / 2 - (n >= k + 6 ? 2 : 1);
    v.pass = delta <= bound;
    v.witness["min_degree"] = std::to_string(delta);
    v.witness["bound"] = std::to_string(bound);
    detail::settle(v, opts);
    return v;
}

/// Whether the minimum degree statement is known to hold for this n and k.
inline auto min_degree_proven(int n, int k) -> bool
{
    return k == 1 || k >= n - 8;
}

/**
 * Minimum degree exactly k+1. Proven for k = 1 and k >= n-8, conjectured
 * otherwise; a failure in the open range is reported, not raised.
 */
inline auto check_conjecture(const Graph & g, int k, CheckOptions opts = {}) -> TheoremVerdict
{
    detail::require_minimal(g, k, opts);
    int n = g.order(), delta = g.min_degree();
    auto v = detail::make_verdict("min-degree", g);
    v.applicable = true;
    v.proven = min_degree_proven(n, k);
    v.pass = delta == k + 1;
    v.witness["min_degree"] = std::to_string(delta);
    v.witness["expected"] = std::to_string(k + 1);
    if (! v.pass)
        v.witness["low_vertices"] = detail::with_degree(g, delta).to_string();
    detail::settle(v, opts);
    return v;
}

/// (n-4)-critical exactly when claw-free with minimum degree >= n-3.
inline auto check_n4_characterization(const Graph & g, CheckOptions opts = {}) -> TheoremVerdict
{
    int n = g.order();
    if (n < 6)
        throw Error(ErrorKind::OrderTooSmall, "needs at least 6 vertices, got " + std::to_string(n));
    auto report = is_k_factor_critical(g, n - 4);
    bool claw_free = is_claw_free(g);
    int delta = g.min_degree();
    auto v = detail::make_verdict("claw-free-characterization", g);
    v.applicable = true;
    v.pass = report.verdict == (claw_free && delta >= n - 3);
    v.witness["critical"] = report.verdict ? "yes" : "no";
    v.witness["claw_free"] = claw_free ? "yes" : "no";
    v.witness["min_degree"] = std::to_string(delta);
    if (report.failing_set)
        v.witness["failing_set"] = report.failing_set->to_string();
    detail::settle(v, opts);
    return v;
}

/**
 * For a k-critical graph with a vertex of degree n-1 and n > k+2: minimal
 * exactly when the profile is one vertex of degree n-1 and the rest k+1.
 * known_minimal skips recomputing minimality.
 */
inline auto check_star_structure(const Graph & g, int k, CheckOptions opts = {}, std::optional<bool> known_minimal = std::nullopt) -> TheoremVerdict
{
    validate_criticality_order(g, k);
    int n = g.order();
    if (n <= k + 2)
        throw Error(ErrorKind::PreconditionUnmet, "needs n > k+2");
    if (g.max_degree() != n - 1)
        throw Error(ErrorKind::PreconditionUnmet, "maximum degree is not n-1");
    if (! known_minimal && ! is_k_factor_critical(g, k).verdict)
        throw Error(ErrorKind::PreconditionUnmet, "graph is not " + std::to_string(k) + "-factor-critical");

    bool minimal = known_minimal ? *known_minimal : is_minimally_kfc(g, k);
    auto profile = g.degree_profile();
    DegreeProfile star{{n - 1, 1}, {k + 1, n - 1}};
    auto v = detail::make_verdict("star-structure", g);
    v.applicable = true;
    v.pass = minimal == (profile == star);
    v.witness["minimal"] = minimal ? "yes" : "no";
    v.witness["profile"] = profile_string(profile);
    detail::settle(v, opts);
    return v;
}

/**
 * Any graph whose degrees all lie in [n-5, n-1] has an even number of
 * vertices of degree n-2 or n-4. Every (n-6)-critical graph qualifies;
 * graphs with smaller minimum degree are not applicable.
 */
inline auto check_degree_parity(const Graph & g, CheckOptions opts = {}) -> TheoremVerdict
{
    int n = g.order();
    auto v = detail::make_verdict("degree-parity", g);
    v.applicable = n >= 1 && g.min_degree() >= n - 5;
    if (! v.applicable)
        return v;
    auto profile = g.degree_profile();
    int count = (profile.contains(n - 2) ? profile[n - 2] : 0) + (profile.contains(n - 4) ? profile[n - 4] : 0);
    v.pass = count % 2 == 0;
    v.witness["count"] = std::to_string(count);
    v.witness["profile"] = profile_string(profile);
    detail::settle(v, opts);
    return v;
}

/**
 * Maximum degree statements for a minimally k-critical graph. Always
 * evaluated: the two-vertex bound at degree n-2 (n >= k+5). When k = n-6,
 * dispatches on the maximum degree: n-1 goes to the star structure, n-2
 * (n >= 8), n-3 (n >= 9) and n-4 (n >= 11) to their profile statements,
 * and the degree parity fact is added. For maximum degree n-4 the path
 * statement (no path on four vertices all of degree n-4) is evaluated from
 * n >= 8 but only counts as proven from n >= 11.
 */
inline auto check_maxdeg_profile(const Graph & g, int k, CheckOptions opts = {}) -> std::vector<TheoremVerdict>
{
    int n = g.order();
    validate_criticality_order(g, k);
    if (n < k + 5)
        throw Error(ErrorKind::OrderTooSmall, "needs n >= k+5");
    detail::require_minimal(g, k, opts);
    opts.assume_minimal = true;

    std::vector<TheoremVerdict> out;
    int top = g.max_degree();

    auto two = detail::make_verdict("two-max-degree", g);
    two.applicable = top == n - 2;
    if (two.applicable) {
        auto hubs = detail::with_degree(g, n - 2);
        two.pass = hubs.size() <= 2 && detail::independent_set(g, hubs);
        two.witness["vertices"] = hubs.to_string();
    }
    detail::settle(two, opts);
    out.push_back(two);

    if (k != n - 6)
        return out;

    if (top == n - 1)
        out.push_back(check_star_structure(g, k, opts, true));

    if (top == n - 2) {
        auto v = detail::make_verdict("max-degree-n-2", g);
        v.applicable = n >= 8;
        if (v.applicable) {
            auto hubs = detail::with_degree(g, n - 2);
            auto mid = detail::with_degree(g, n - 4);
            if (hubs.size() == 2)
                v.pass = detail::independent_set(g, hubs) && detail::off_degree(g, hubs, n - 5).empty();
            else
                v.pass = hubs.size() == 1 && mid.size() == 1 && detail::off_degree(g, hubs | mid, n - 5).empty();
            v.witness["vertices"] = hubs.to_string();
            v.witness["profile"] = profile_string(g.degree_profile());
        }
        detail::settle(v, opts);
        out.push_back(v);
    }

    if (top == n - 3) {
        auto v = detail::make_verdict("max-degree-n-3", g);
        v.applicable = n >= 9;
        if (v.applicable) {
            auto hubs = detail::with_degree(g, n - 3);
            v.pass = hubs.size() <= 3;
            if (hubs.size() == 3)
                v.pass = detail::independent_set(g, hubs) && detail::off_degree(g, hubs, n - 5).empty();
            v.witness["vertices"] = hubs.to_string();
            v.witness["profile"] = profile_string(g.degree_profile());
        }
        detail::settle(v, opts);
        out.push_back(v);
    }

    if (top == n - 4) {
        auto hubs = detail::with_degree(g, n - 4);
        auto v = detail::make_verdict("max-degree-n-4", g);
        v.applicable = n >= 11;
        if (v.applicable) {
            v.pass = hubs.size() <= 4 && detail::off_degree(g, hubs, n - 5).empty();
            v.witness["vertices"] = hubs.to_string();
            v.witness["profile"] = profile_string(g.degree_profile());
        }
        detail::settle(v, opts);
        out.push_back(v);

        auto path = detail::make_verdict("max-degree-n-4-path", g);
        path.applicable = n >= 8;
        path.proven = n >= 11;
        if (path.applicable) {
            auto p = detail::path_of_length_three(g, hubs);
            path.pass = ! p;
            if (p)
                path.witness["path"] = std::to_string((*p)[0]) + "-" + std::to_string((*p)[1]) + "-"
                    + std::to_string((*p)[2]) + "-" + std::to_string((*p)[3]);
        }
        detail::settle(path, opts);
        out.push_back(path);
    }

    out.push_back(check_degree_parity(g, opts));
    return out;
}

inline auto check_maxdeg_profile(const Graph & g, CheckOptions opts = {}) -> std::vector<TheoremVerdict>
{
    return check_maxdeg_profile(g, g.order() - 6, opts);
}

} // namespace factorcrit
