#pragma once

#include <factorcrit/canonical.hpp>
#include <factorcrit/graph6.hpp>

#include <fstream>
#include <string>
#include <unordered_set>
#include <vector>

namespace factorcrit {

/// Orders the built-in generator handles.
inline constexpr int max_generated_order = 9;

/**
 * A list of graphs of one order, kept as graph6 lines so that the order-9
 * catalog stays small in memory. Graphs are parsed back on access.
 */
struct Catalog
{
    int order = 0;
    std::string source;
    bool canonical = false;
    std::vector<std::string> graph6;

    auto size() const -> std::size_t { return graph6.size(); }
    auto graph(std::size_t i) const -> Graph { return parse_graph6(graph6[i]); }
};

namespace detail {

    /// One vertex-addition step: every graph of order m+1 arises from some graph
    /// of order m by adding a vertex of minimum degree, so only extensions whose
    /// new vertex has minimum degree are kept.
    inline auto extend_by_vertex(const std::vector<Graph> & parents, int m) -> std::vector<Graph>
    {
        std::vector<Graph> children;
        std::unordered_set<std::uint64_t> seen;
        for (const auto & parent : parents) {
            std::array<int, max_order> degree{};
            for (int v = 0 ; v < m ; ++v)
                degree[v] = parent.degree(v);
            for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << m) ; ++mask) {
                int new_degree = std::popcount(mask);
                bool keep = true;
                for (int v = 0 ; v < m && keep ; ++v)
                    keep = degree[v] + static_cast<int>((mask >> v) & 1U) >= new_degree;
                if (! keep)
                    continue;
                Graph child(m + 1);
                for (auto e : parent.edges())
                    child.connect(e.first, e.second);
                for (std::uint64_t r = mask ; r ; r &= r - 1)
                    child.connect(m, std::countr_zero(r));
                auto form = canonical_form(child);
                if (seen.insert(packed_upper_triangle(form.graph)).second)
                    children.push_back(form.graph);
            }
        }
        return children;
    }
}

/**
 * Every graph of order n up to isomorphism, canonically labelled, in a fixed
 * generation order.
 */
inline auto generate_catalog(int n) -> Catalog
{
    if (n > max_generated_order)
        throw Error(ErrorKind::OrderTooLargeForGenerate, "generation limited to n <= " + std::to_string(max_generated_order));
    if (n < 1)
        throw Error(ErrorKind::OrderTooSmall, "order must be at least 1");
    std::vector<Graph> level{Graph(1)};
    for (int m = 1 ; m < n ; ++m)
        level = detail::extend_by_vertex(level, m);

    Catalog cat;
    cat.order = n;
    cat.source = "generate:" + std::to_string(n);
    cat.canonical = true;
    cat.graph6.reserve(level.size());
    for (const auto & g : level)
        cat.graph6.push_back(encode_graph6(g));
    return cat;
}

/**
 * Reads a graph6 file. Every graph must have the order of the first one (or
 * expected_order when given). With canonical set, isomorphic repeats are
 * dropped, keeping the first.
 */
inline auto ingest_catalog(const std::string & path, bool lenient = false, bool canonical = false,
        int expected_order = -1, std::vector<Graph6LineError> * errors = nullptr) -> Catalog
{
    std::ifstream in(path);
    if (! in)
        throw Error(ErrorKind::FileUnreadable, "cannot read " + path);

    Catalog cat;
    cat.order = expected_order;
    cat.source = path;
    cat.canonical = canonical;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (number == 1 && line.starts_with(graph6_header))
            line.erase(0, graph6_header.size());
        while (! line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty())
            continue;
        try {
            auto g = parse_graph6(line);
            if (cat.order < 0)
                cat.order = g.order();
            if (g.order() != cat.order)
                throw Error(ErrorKind::MalformedEncoding, "order " + std::to_string(g.order()) + " differs from catalog order " + std::to_string(cat.order));
            if (canonical) {
                auto key = canonical_graph6(g);
                if (! seen.insert(key).second)
                    continue;
            }
            cat.graph6.push_back(line);
        }
        catch (const Error & e) {
            if (! lenient)
                throw Error(e.kind(), path + " line " + std::to_string(number) + ": " + e.what());
            if (errors)
                errors->push_back({number, e.what()});
        }
    }
    if (cat.order < 0)
        cat.order = 0;
    return cat;
}

} // namespace factorcrit
