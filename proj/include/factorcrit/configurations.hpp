#pragma once

#include <factorcrit/criticality.hpp>
#include <factorcrit/graph.hpp>
#include <factorcrit/matching.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace factorcrit {

enum class Family { A, B, C };

inline auto family_name(Family f) -> std::string
{
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
    }
    return "?";
}

inline auto family_order(Family f) -> int
{
    return f == Family::B ? 8 : 6;
}

/// A deficient residual graph with its designated non-adjacent pair.
struct ResidualInstance
{
    Graph gprime;
    Vertex u = 0;
    Vertex v = 0;
    Family family = Family::A;
};

using Roles = std::map<std::string, Vertex>;

inline const std::string unclassified_label = "Unclassified";

struct ConfigurationMatch
{
    Family family = Family::A;
    std::string label = unclassified_label;
    VertexSet x;
    ComponentPartition partition;
    /// Role name to vertex of the residual graph; "u" and "v" name the ends
    /// of the designated pair, possibly swapped to fit the template.
    Roles roles;
    std::map<std::string, std::string> metadata;
    bool ambiguous = false;
    /// Labels obtained from every minimal Tutte set, sorted and unique.
    std::vector<std::string> labels_seen;

    auto classified() const -> bool { return label != unclassified_label; }
};

/**
 * Throws unless the instance satisfies the invariants of its family:
 * order, non-adjacency of u and v, no perfect matching in G', one in G'+uv,
 * and the family's degree floor.
 */
inline auto check_residual(const ResidualInstance & inst) -> void
{
    const auto & g = inst.gprime;
    g.check_vertex(inst.u);
    g.check_vertex(inst.v);
    if (inst.u == inst.v || g.adjacent(inst.u, inst.v))
        throw Error(ErrorKind::EdgePresent, "designated pair must be a non-edge");
    if (g.order() != family_order(inst.family))
        throw Error(ErrorKind::FamilyPreconditionUnmet, "family " + family_name(inst.family) + " needs order "
                + std::to_string(family_order(inst.family)) + ", got " + std::to_string(g.order()));
    if (has_perfect_matching(g))
        throw Error(ErrorKind::NotDeficient, "residual graph has a perfect matching");
    auto restored = add_edge(g, inst.u, inst.v);
    if (! has_perfect_matching(restored))
        throw Error(ErrorKind::NotRestorable, "adding the designated pair gives no perfect matching");
    if (inst.family == Family::C) {
        if (g.min_degree() < 1)
            throw Error(ErrorKind::FamilyPreconditionUnmet, "family C needs no isolated vertex");
    }
    else if (restored.min_degree() < 2)
        throw Error(ErrorKind::FamilyPreconditionUnmet, "family " + family_name(inst.family) + " needs no pendent vertex after restoring the pair");
}

/// Whether check_residual would accept the instance.
inline auto is_admissible(const ResidualInstance & inst) -> bool
{
    try {
        check_residual(inst);
        return true;
    }
    catch (const Error &) {
        return false;
    }
}

namespace detail {

    /// Shape of G' - X around the designated pair, used by every template.
    struct ResidualView
    {
        const Graph & g;
        Vertex u, v;
        VertexSet x;
        ComponentPartition p;

        auto block(Vertex w) const -> VertexSet { return p.blocks[p.block_of(w)]; }
        auto trivial(Vertex w) const -> bool { return block(w).size() == 1; }

        auto odd_blocks_except(VertexSet skip) const -> std::vector<VertexSet>
        {
            std::vector<VertexSet> out;
            for (auto b : p.blocks)
                if (b.size() % 2 == 1 && ! b.intersects(skip))
                    out.push_back(b);
            return out;
        }

        auto even_blocks() const -> std::vector<VertexSet>
        {
            std::vector<VertexSet> out;
            for (auto b : p.blocks)
                if (b.size() % 2 == 0)
                    out.push_back(b);
            return out;
        }

        auto complete(VertexSet s) const -> bool
        {
            for (auto a : s)
                if (! (s - VertexSet::single(a)).is_subset_of(g.neighbours(a)))
                    return false;
            return true;
        }
    };

    /// Lexicographically first perfect matching of g[s] as a flat list
    /// (pairs consecutive), if any.
    inline auto first_pairing(const Graph & g, VertexSet s) -> std::optional<std::vector<Vertex>>
    {
        if (s.empty())
            return std::vector<Vertex>{};
        if (s.size() % 2 == 1)
            return std::nullopt;
        Vertex a = s.first();
        for (auto b : (s - VertexSet::single(a)))
            if (g.adjacent(a, b))
                if (auto rest = first_pairing(g, s - VertexSet{a, b})) {
                    std::vector<Vertex> out{a, b};
                    out.insert(out.end(), rest->begin(), rest->end());
                    return out;
                }
        return std::nullopt;
    }

    /// First vertex t of block adjacent to some vertex of from such that
    /// block - t has a perfect matching; returns t followed by that matching.
    inline auto attach_and_pair(const Graph & g, VertexSet from, VertexSet block) -> std::optional<std::vector<Vertex>>
    {
        for (auto t : block) {
            if (! g.neighbours(t).intersects(from))
                continue;
            if (auto rest = first_pairing(g, block - VertexSet::single(t))) {
                std::vector<Vertex> out{t};
                out.insert(out.end(), rest->begin(), rest->end());
                return out;
            }
        }
        return std::nullopt;
    }

    inline auto name_all(Roles & roles, const std::string & stem, int first_index, const std::vector<Vertex> & vs) -> void
    {
        for (std::size_t i = 0 ; i < vs.size() ; ++i)
            roles[stem + std::to_string(first_index + static_cast<int>(i))] = vs[i];
    }

    inline auto path_shape(const Graph & g, VertexSet block, Vertex end) -> std::string
    {
        int inside = (g.neighbours(end) & block).size();
        int edges = 0;
        for (auto a : block)
            edges += (g.neighbours(a) & block).size();
        if (edges / 2 == 3)
            return "triangle";
        return inside == 2 ? "path-centre" : "path-end";
    }

    struct TemplateHit
    {
        std::string label;
        Roles roles;
        std::map<std::string, std::string> metadata;
    };

    /// Family A templates with the pair taken in the given orientation.
    inline auto match_a(const ResidualView & r) -> std::optional<TemplateHit>
    {
        const auto & g = r.g;
        auto xs = r.x.to_vector();
        TemplateHit hit;
        hit.roles["u"] = r.u;
        hit.roles["v"] = r.v;
        if (xs.empty()) {
            auto bu = r.block(r.u), bv = r.block(r.v);
            if (bu.size() != 3 || bv.size() != 3 || ! r.complete(bu) || ! r.complete(bv))
                return std::nullopt;
            hit.label = "A1";
            name_all(hit.roles, "u", 1, (bu - VertexSet::single(r.u)).to_vector());
            name_all(hit.roles, "u", 3, (bv - VertexSet::single(r.v)).to_vector());
            return hit;
        }
        if (xs.size() == 1) {
            if (! r.trivial(r.u) || ! r.trivial(r.v))
                return std::nullopt;
            auto rest = r.odd_blocks_except(VertexSet{r.u, r.v});
            if (rest.size() != 1 || rest[0].size() != 3 || ! r.even_blocks().empty())
                return std::nullopt;
            auto pair = attach_and_pair(g, r.x, rest[0]);
            if (! pair)
                return std::nullopt;
            hit.label = "A2";
            hit.roles["x"] = xs[0];
            name_all(hit.roles, "v", 1, *pair);
            return hit;
        }
        if (xs.size() == 2) {
            if (r.p.blocks.size() != 4 || r.p.odd_count != 4)
                return std::nullopt;
            for (int i = 0 ; i < 2 ; ++i) {
                Vertex x = xs[i], y = xs[1 - i];
                if (g.adjacent(r.u, x) && g.adjacent(r.v, y)) {
                    hit.label = "A3";
                    hit.roles["x"] = x;
                    hit.roles["y"] = y;
                    name_all(hit.roles, "w", 1, (g.vertices() - r.x - VertexSet{r.u, r.v}).to_vector());
                    return hit;
                }
            }
        }
        return std::nullopt;
    }

    inline auto match_b(const ResidualView & r) -> std::optional<TemplateHit>
    {
        const auto & g = r.g;
        auto xs = r.x.to_vector();
        TemplateHit hit;
        hit.roles["u"] = r.u;
        hit.roles["v"] = r.v;
        auto others = r.odd_blocks_except(VertexSet{r.u, r.v});
        auto evens = r.even_blocks();
        if (xs.empty()) {
            auto bu = r.block(r.u), bv = r.block(r.v);
            if (bu.size() != 3 || bv.size() != 5 || ! r.complete(bu))
                return std::nullopt;
            auto pairs = first_pairing(g, bv - VertexSet::single(r.v));
            if (! pairs)
                return std::nullopt;
            hit.label = "B1";
            name_all(hit.roles, "u", 1, (bu - VertexSet::single(r.u)).to_vector());
            name_all(hit.roles, "u", 3, *pairs);
            return hit;
        }
        if (xs.size() == 1) {
            hit.roles["a"] = xs[0];
            if (r.trivial(r.u) && r.trivial(r.v)) {
                if (others.size() != 1)
                    return std::nullopt;
                auto attached = attach_and_pair(g, r.x, others[0]);
                if (! attached)
                    return std::nullopt;
                if (others[0].size() == 5 && evens.empty()) {
                    hit.label = "B3";
                    name_all(hit.roles, "v", 1, *attached);
                    return hit;
                }
                if (others[0].size() == 3 && evens.size() == 1 && evens[0].size() == 2) {
                    hit.label = "B2";
                    name_all(hit.roles, "v", 1, *attached);
                    name_all(hit.roles, "v", 4, evens[0].to_vector());
                    return hit;
                }
                return std::nullopt;
            }
            // one trivial endpoint u, v in a 3-component, another 3-component hanging off a
            auto bv = r.block(r.v);
            if (! r.trivial(r.u) || bv.size() != 3 || others.size() != 1 || others[0].size() != 3 || ! evens.empty())
                return std::nullopt;
            if (! g.neighbours(xs[0]).intersects(others[0]))
                return std::nullopt;
            auto mates = first_pairing(g, bv - VertexSet::single(r.v));
            auto attached = attach_and_pair(g, r.x, others[0]);
            if (! mates || ! attached)
                return std::nullopt;
            hit.label = "B4";
            name_all(hit.roles, "x", 1, *mates);
            name_all(hit.roles, "x", 3, *attached);
            return hit;
        }
        if (xs.size() == 2) {
            if (r.trivial(r.u) && r.trivial(r.v)) {
                std::vector<Vertex> trivials;
                VertexSet nontrivial;
                for (auto b : others) {
                    if (b.size() == 1)
                        trivials.push_back(b.first());
                    else
                        nontrivial |= b;
                }
                if (trivials.size() == 2 && nontrivial.empty() && evens.size() == 1 && evens[0].size() == 2) {
                    // a1 is the X vertex adjacent to u
                    for (int i = 0 ; i < 2 ; ++i)
                        if (g.adjacent(r.u, xs[i])) {
                            hit.label = "B5";
                            hit.roles["a1"] = xs[i];
                            hit.roles["a2"] = xs[1 - i];
                            name_all(hit.roles, "y", 1, trivials);
                            name_all(hit.roles, "y", 3, evens[0].to_vector());
                            return hit;
                        }
                    return std::nullopt;
                }
                if (trivials.size() == 1 && nontrivial.size() == 3 && evens.empty()) {
                    for (int i = 0 ; i < 2 ; ++i) {
                        Vertex b1 = xs[i], b2 = xs[1 - i];
                        if (! g.adjacent(r.u, b1) || ! g.adjacent(r.v, b2))
                            continue;
                        auto attached = attach_and_pair(g, VertexSet::single(b1), nontrivial);
                        if (! attached)
                            attached = attach_and_pair(g, r.x, nontrivial);
                        if (! attached)
                            return std::nullopt;
                        hit.label = "B6";
                        hit.roles["b1"] = b1;
                        hit.roles["b2"] = b2;
                        hit.roles["z1"] = trivials[0];
                        name_all(hit.roles, "z", 2, *attached);
                        return hit;
                    }
                }
                return std::nullopt;
            }
            auto bv = r.block(r.v);
            if (! r.trivial(r.u) || bv.size() != 3 || others.size() != 2 || ! evens.empty())
                return std::nullopt;
            if (others[0].size() != 1 || others[1].size() != 1)
                return std::nullopt;
            // p3 is a mate of v adjacent to it, p4 the other
            auto mates = (bv - VertexSet::single(r.v)).to_vector();
            if (! g.adjacent(r.v, mates[0]))
                std::swap(mates[0], mates[1]);
            for (int i = 0 ; i < 2 ; ++i)
                if (g.adjacent(r.u, xs[i])) {
                    hit.label = "B7";
                    hit.roles["c1"] = xs[i];
                    hit.roles["c2"] = xs[1 - i];
                    hit.roles["p1"] = others[0].first();
                    hit.roles["p2"] = others[1].first();
                    name_all(hit.roles, "p", 3, mates);
                    return hit;
                }
            return std::nullopt;
        }
        if (xs.size() == 3) {
            if (r.p.blocks.size() != 5 || r.p.odd_count != 5)
                return std::nullopt;
            hit.label = "B8";
            name_all(hit.roles, "a", 1, xs);
            name_all(hit.roles, "w", 1, (g.vertices() - r.x - VertexSet{r.u, r.v}).to_vector());
            return hit;
        }
        return std::nullopt;
    }

    inline auto match_c(const ResidualView & r) -> std::optional<TemplateHit>
    {
        const auto & g = r.g;
        auto xs = r.x.to_vector();
        TemplateHit hit;
        hit.roles["u"] = r.u;
        hit.roles["v"] = r.v;
        auto others = r.odd_blocks_except(VertexSet{r.u, r.v});
        auto evens = r.even_blocks();
        if (xs.empty()) {
            auto bu = r.block(r.u), bv = r.block(r.v);
            if (bu.size() != 3 || bv.size() != 3)
                return std::nullopt;
            hit.label = "C1";
            name_all(hit.roles, "u", 1, (bu - VertexSet::single(r.u)).to_vector());
            name_all(hit.roles, "v", 1, (bv - VertexSet::single(r.v)).to_vector());
            hit.metadata["u_side"] = path_shape(g, bu, r.u);
            hit.metadata["v_side"] = path_shape(g, bv, r.v);
            return hit;
        }
        if (xs.size() == 1) {
            Vertex a = xs[0];
            hit.roles["a"] = a;
            if (r.trivial(r.u) && r.trivial(r.v)) {
                if (others.size() != 1)
                    return std::nullopt;
                if (others[0].size() == 1 && evens.size() == 1 && evens[0].size() == 2) {
                    hit.label = "C2";
                    hit.roles["w"] = others[0].first();
                    auto pair = evens[0].to_vector();
                    if (! g.adjacent(a, pair[0]) && g.adjacent(a, pair[1]))
                        std::swap(pair[0], pair[1]);
                    hit.roles["p"] = pair[0];
                    hit.roles["q"] = pair[1];
                    return hit;
                }
                if (others[0].size() == 3 && evens.empty()) {
                    auto attached = attach_and_pair(g, r.x, others[0]);
                    if (! attached)
                        return std::nullopt;
                    hit.label = "C2'";
                    name_all(hit.roles, "v", 1, *attached);
                    return hit;
                }
                return std::nullopt;
            }
            auto bv = r.block(r.v);
            if (! r.trivial(r.u) || bv.size() != 3 || others.size() != 1 || others[0].size() != 1 || ! evens.empty())
                return std::nullopt;
            hit.label = "C3";
            hit.roles["y1"] = others[0].first();
            name_all(hit.roles, "y", 2, (bv - VertexSet::single(r.v)).to_vector());
            return hit;
        }
        if (xs.size() == 2) {
            if (r.p.blocks.size() != 4 || r.p.odd_count != 4)
                return std::nullopt;
            auto uv = g.neighbours(r.u) | g.neighbours(r.v);
            if (! VertexSet(r.x).is_subset_of(uv))
                return std::nullopt;
            int first = g.adjacent(r.u, xs[0]) ? 0 : 1;
            hit.label = "C4";
            hit.roles["a1"] = xs[first];
            hit.roles["a2"] = xs[1 - first];
            name_all(hit.roles, "w", 1, (g.vertices() - r.x - VertexSet{r.u, r.v}).to_vector());
            return hit;
        }
        return std::nullopt;
    }

    /// Classification of the instance against one Tutte set X.
    inline auto classify_with(const ResidualInstance & inst, VertexSet x) -> ConfigurationMatch
    {
        ConfigurationMatch m;
        m.family = inst.family;
        m.x = x;
        m.partition = components(inst.gprime, inst.gprime.vertices() - x);
        const auto & p = m.partition;
        bool separated = p.odd_count == x.size() + 2
            && p.block_of(inst.u) != p.block_of(inst.v)
            && p.blocks[p.block_of(inst.u)].size() % 2 == 1
            && p.blocks[p.block_of(inst.v)].size() % 2 == 1;
        if (! separated)
            return m;
        for (auto [a, b] : {std::pair{inst.u, inst.v}, std::pair{inst.v, inst.u}}) {
            ResidualView view{inst.gprime, a, b, x, p};
            std::optional<TemplateHit> hit;
            switch (inst.family) {
                case Family::A: hit = match_a(view); break;
                case Family::B: hit = match_b(view); break;
                case Family::C: hit = match_c(view); break;
            }
            if (hit) {
                m.label = hit->label;
                m.roles = std::move(hit->roles);
                m.metadata = std::move(hit->metadata);
                return m;
            }
        }
        return m;
    }

    /// Every template label matching for this X, over both orientations.
    inline auto template_labels(const ResidualInstance & inst, VertexSet x) -> std::vector<std::string>
    {
        auto p = components(inst.gprime, inst.gprime.vertices() - x);
        std::vector<std::string> labels;
        for (auto [a, b] : {std::pair{inst.u, inst.v}, std::pair{inst.v, inst.u}}) {
            ResidualView view{inst.gprime, a, b, x, p};
            std::optional<TemplateHit> hit;
            switch (inst.family) {
                case Family::A: hit = match_a(view); break;
                case Family::B: hit = match_b(view); break;
                case Family::C: hit = match_c(view); break;
            }
            if (hit && std::find(labels.begin(), labels.end(), hit->label) == labels.end())
                labels.push_back(hit->label);
        }
        return labels;
    }
}

/**
 * Classifies the residual by the first minimal Tutte set. Every other
 * minimal Tutte set is classified too; disagreement sets the ambiguity flag
 * and the smallest label is reported.
 */
inline auto classify_residual(const ResidualInstance & inst) -> ConfigurationMatch
{
    check_residual(inst);
    auto minimal = tutte_violators(inst.gprime, ViolatorMode::AllMinimal);
    std::vector<ConfigurationMatch> matches;
    for (const auto & cert : minimal)
        matches.push_back(detail::classify_with(inst, cert.barrier));

    std::vector<std::string> labels;
    for (const auto & m : matches)
        labels.push_back(m.label);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    // the first minimal set wins unless another set gives a smaller label
    auto chosen = matches.front();
    for (const auto & m : matches)
        if (m.label < chosen.label)
            chosen = m;
    chosen.ambiguous = labels.size() > 1;
    chosen.labels_seen = labels;
    return chosen;
}

/// Outcome of certifying one edge of a minimal graph.
enum class EdgeStatus { Classified, Unclassified, NotApplicable };

inline auto edge_status_name(EdgeStatus s) -> std::string
{
    switch (s) {
        case EdgeStatus::Classified: return "classified";
        case EdgeStatus::Unclassified: return "unclassified";
        case EdgeStatus::NotApplicable: return "not-applicable";
    }
    return "?";
}

struct EdgeCertificate
{
    VertexSet witness;
    EdgeStatus status = EdgeStatus::NotApplicable;
    std::optional<Family> family;
    std::optional<ConfigurationMatch> match;
    /// Why the edge was not classified, prefixed by the error kind.
    std::string reason;
};

/// The family used for an edge uv of a graph with parameter k, if any.
inline auto family_for_edge(const Graph & g, int k, Edge e) -> std::optional<Family>
{
    int n = g.order();
    if (k == n - 8)
        return Family::B;
    if (k == n - 6)
        return g.degree(e.first) >= n - 4 && g.degree(e.second) >= n - 4 ? Family::C : Family::A;
    return std::nullopt;
}

/// G - e - S with the pair images, as a residual instance of the given family.
inline auto residual_of(const Graph & g, Edge e, VertexSet s, Family family) -> std::pair<ResidualInstance, Deletion>
{
    auto d = delete_vertices(remove_edge(g, e.first, e.second), s);
    ResidualInstance inst{d.graph, d.old_to_new[e.first], d.old_to_new[e.second], family};
    return {inst, d};
}

/**
 * For a minimally k-critical graph: the first witness of every edge and, when
 * k is n-6 or n-8, the configuration of the residual graph.
 */
inline auto certify_minimal_edges(const Graph & g, int k) -> std::map<Edge, EdgeCertificate>
{
    auto cert = minimality_certificate(g, k);
    std::map<Edge, EdgeCertificate> out;
    for (auto [e, s] : cert.witnesses) {
        EdgeCertificate ec;
        ec.witness = s;
        ec.family = family_for_edge(g, k, e);
        if (! ec.family) {
            ec.status = EdgeStatus::NotApplicable;
            ec.reason = "FamilyPreconditionUnmet: residual order " + std::to_string(g.order() - k) + " has no configuration family";
        }
        else {
            auto [inst, d] = residual_of(g, e, s, *ec.family);
            try {
                ec.match = classify_residual(inst);
                ec.status = ec.match->classified() ? EdgeStatus::Classified : EdgeStatus::Unclassified;
            }
            catch (const Error & err) {
                ec.status = EdgeStatus::Unclassified;
                ec.reason = std::string(error_kind_name(err.kind())) + ": " + err.what();
            }
        }
        out.emplace(e, std::move(ec));
    }
    return out;
}

struct Predicate
{
    std::string name;
    bool pass = false;
};

struct PredicateReport
{
    std::string label;
    bool hypothesis_met = false;
    std::string hypothesis;
    std::vector<Predicate> predicates;

    auto vacuous() const -> bool { return ! hypothesis_met; }
    auto all_pass() const -> bool
    {
        return std::all_of(predicates.begin(), predicates.end(), [] (const Predicate & p) { return p.pass; });
    }
};

namespace detail {
    inline auto independent(const Graph & g, const std::vector<Vertex> & vs) -> bool
    {
        for (std::size_t i = 0 ; i < vs.size() ; ++i)
            for (std::size_t j = i + 1 ; j < vs.size() ; ++j)
                if (g.adjacent(vs[i], vs[j]))
                    return false;
        return true;
    }
}

/**
 * Evaluates, in the ambient graph g, the non-neighbourhood and degree
 * statements attached to the label of match, which must come from the
 * residual g - e - s. When the family's ambient degree hypothesis fails the
 * report is vacuous; with strict set that case throws HypothesisUnmet.
 */
inline auto config_predicates(const Graph & g, Edge e, VertexSet s, const ConfigurationMatch & match, bool strict = false) -> PredicateReport
{
    PredicateReport report;
    report.label = match.label;
    if (! match.classified())
        return report;

    auto d = delete_vertices(remove_edge(g, e.first, e.second), s);
    auto role = [&] (const std::string & name) { return d.new_to_old.at(match.roles.at(name)); };
    int n = g.order();
    Vertex u = role("u"), v = role("v");
    int du = g.degree(u), dv = g.degree(v);

    switch (match.family) {
        case Family::A:
            report.hypothesis = "min degree >= n-4";
            report.hypothesis_met = g.min_degree() >= n - 4;
            break;
        case Family::B:
            report.hypothesis = "min degree >= n-6";
            report.hypothesis_met = g.min_degree() >= n - 6;
            break;
        case Family::C:
            report.hypothesis = "d(u), d(v) >= n-4 and min degree >= n-5";
            report.hypothesis_met = du >= n - 4 && dv >= n - 4 && g.min_degree() >= n - 5;
            break;
    }
    if (! report.hypothesis_met) {
        if (strict)
            throw Error(ErrorKind::HypothesisUnmet, "ambient hypothesis fails: " + report.hypothesis);
        return report;
    }

    auto shared = non_neighborhood(g, u) & non_neighborhood(g, v);
    int i = shared.size();
    auto add = [&] (std::string name, bool pass) { report.predicates.push_back({std::move(name), pass}); };
    auto roles_in_shared = [&] (std::initializer_list<const char *> names) {
        std::vector<Vertex> vs;
        for (auto name : names)
            vs.push_back(role(name));
        bool inside = std::all_of(vs.begin(), vs.end(), [&] (Vertex w) { return shared.contains(w); });
        return std::pair{inside, detail::independent(g, vs)};
    };

    const auto & label = match.label;
    if (label == "A1")
        add("|I| <= 1", i <= 1);
    else if (label == "A2") {
        add("|I| = 3", i == 3);
        add("I = {v1,v2,v3}", shared == (VertexSet{role("v1"), role("v2"), role("v3")}));
    }
    else if (label == "A3") {
        auto [inside, indep] = roles_in_shared({"w1", "w2"});
        add("|I| >= 2", i >= 2);
        add("{w1,w2} in I", inside);
        add("{w1,w2} independent", indep);
    }
    else if (label == "B1")
        add("|I| <= 3", i <= 3);
    else if (label == "B2" || label == "B3")
        add("|I| = 5", i == 5);
    else if (label == "B4")
        add("3 <= |I| <= 4", i >= 3 && i <= 4);
    else if (label == "B5" || label == "B6")
        add("|I| >= 4", i >= 4);
    else if (label == "B7")
        add("2 <= |I| <= 4", i >= 2 && i <= 4);
    else if (label == "B8") {
        auto [inside, indep] = roles_in_shared({"w1", "w2", "w3"});
        add("|I| >= 3", i >= 3);
        add("{w1,w2,w3} in I", inside);
        add("{w1,w2,w3} independent", indep);
    }
    else if (label == "C1") {
        add("|I| <= 2", i <= 2);
        add("n-4 <= d(u), d(v) <= n-3", du >= n - 4 && du <= n - 3 && dv >= n - 4 && dv <= n - 3);
        add("|N(u) & N(v)| <= n-6", (g.neighbours(u) & g.neighbours(v)).size() <= n - 6);
    }
    else if (label == "C2" || label == "C2'") {
        add("|I| = 3", i == 3);
        add("d(u) = d(v) = n-4", du == n - 4 && dv == n - 4);
    }
    else if (label == "C3") {
        add("1 <= |I| <= 2", i >= 1 && i <= 2);
        add("d(u) = n-4", du == n - 4);
        add("d(v) >= n-4", dv >= n - 4);
        add("d(y1) = n-5", g.degree(role("y1")) == n - 5);
    }
    else if (label == "C4") {
        add("2 <= |I| <= 3", i >= 2 && i <= 3);
        add("n-4 <= d(u), d(v) <= n-3", du >= n - 4 && du <= n - 3 && dv >= n - 4 && dv <= n - 3);
        add("{w1,w2} independent", ! g.adjacent(role("w1"), role("w2")));
    }
    return report;
}

/**
 * The ambient graph (G' + uv) joined to a clique of k new vertices. The
 * clique is a witness for uv and every family's degree hypothesis holds, so
 * predicates can be exercised on residuals no minimal graph produces.
 */
inline auto embed_residual(const ResidualInstance & inst, int k) -> Graph
{
    int m = inst.gprime.order();
    Graph g(m + k);
    for (auto e : inst.gprime.edges())
        g.connect(e.first, e.second);
    g.connect(inst.u, inst.v);
    for (int s = m ; s < m + k ; ++s)
        for (int t = 0 ; t < s ; ++t)
            g.connect(s, t);
    return g;
}

} // namespace factorcrit
