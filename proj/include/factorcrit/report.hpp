#pragma once

#include <factorcrit/configurations.hpp>
#include <factorcrit/search.hpp>
#include <factorcrit/verifiers.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace factorcrit {

using Json = nlohmann::ordered_json;

inline constexpr int report_schema = 1;

inline auto to_json(VertexSet s) -> Json
{
    return Json(s.to_vector());
}

inline auto to_json(Edge e) -> Json
{
    return Json::array({e.first, e.second});
}

inline auto to_json(const TheoremVerdict & v) -> Json
{
    Json j;
    j["theorem"] = v.theorem;
    j["graph6"] = v.graph6;
    j["applicable"] = v.applicable;
    if (v.applicable)
        j["pass"] = v.pass;
    j["proven"] = v.proven;
    j["witness"] = v.witness;
    return j;
}

inline auto to_json(const CriticalityReport & r) -> Json
{
    Json j;
    j["k"] = r.k;
    j["critical"] = r.verdict;
    j["method"] = r.method == CriticalityMethod::Definitional ? "definitional" : "tutte";
    if (r.failing_set)
        j["failing_set"] = to_json(*r.failing_set);
    if (r.odd_components)
        j["odd_components"] = *r.odd_components;
    return j;
}

inline auto to_json(const TutteCertificate & c) -> Json
{
    Json j;
    j["barrier"] = to_json(c.barrier);
    j["odd_components"] = c.partition.odd_count;
    j["deficit"] = c.deficit;
    Json blocks = Json::array();
    for (auto b : c.partition.blocks)
        blocks.push_back(to_json(b));
    j["components"] = blocks;
    return j;
}

inline auto to_json(const ConfigurationMatch & m) -> Json
{
    Json j;
    j["family"] = family_name(m.family);
    j["label"] = m.label;
    j["tutte_set"] = to_json(m.x);
    Json blocks = Json::array();
    for (auto b : m.partition.blocks)
        blocks.push_back(to_json(b));
    j["components"] = blocks;
    j["roles"] = m.roles;
    if (! m.metadata.empty())
        j["metadata"] = m.metadata;
    j["ambiguous"] = m.ambiguous;
    j["labels_seen"] = m.labels_seen;
    return j;
}

inline auto to_json(const PredicateReport & r) -> Json
{
    Json j;
    j["label"] = r.label;
    j["hypothesis"] = r.hypothesis;
    j["hypothesis_met"] = r.hypothesis_met;
    Json preds = Json::array();
    for (const auto & p : r.predicates)
        preds.push_back({{"name", p.name}, {"pass", p.pass}});
    j["predicates"] = preds;
    if (r.hypothesis_met)
        j["all_pass"] = r.all_pass();
    return j;
}

inline auto to_json(const EdgeCertificate & c) -> Json
{
    Json j;
    j["witness"] = to_json(c.witness);
    j["status"] = edge_status_name(c.status);
    if (c.family)
        j["family"] = family_name(*c.family);
    if (c.match)
        j["configuration"] = to_json(*c.match);
    if (! c.reason.empty())
        j["reason"] = c.reason;
    return j;
}

inline auto to_json(const GraphRecord & r) -> Json
{
    Json j;
    j["index"] = r.index;
    j["graph6"] = r.graph6;
    j["critical"] = r.critical;
    j["minimal"] = r.minimal;
    j["min_degree"] = r.min_degree;
    j["profile"] = r.profile;
    Json verdicts = Json::array();
    for (const auto & v : r.verdicts)
        verdicts.push_back(to_json(v));
    j["verdicts"] = verdicts;
    return j;
}

/// The survey summary. Per-graph records are emitted separately as lines.
inline auto to_json(const SurveyReport & r) -> Json
{
    Json j;
    j["schema"] = report_schema;
    j["n"] = r.n;
    j["k"] = r.k;
    j["source"] = r.source;
    j["counts"] = {{"total", r.total}, {"critical", r.critical}, {"minimal", r.minimal}};
    j["profiles"] = r.profiles;
    Json deltas = Json::object();
    for (auto [d, count] : r.min_degrees)
        deltas[std::to_string(d)] = count;
    j["min_degrees"] = deltas;
    Json verdicts = Json::object();
    for (const auto & [name, t] : r.verdicts)
        verdicts[name] = {{"applicable", t.applicable}, {"pass", t.pass}, {"fail", t.fail}};
    j["verdicts"] = verdicts;
    const auto & c = r.configurations;
    j["configurations"] = {
        {"edges", c.edges}, {"classified", c.classified}, {"unclassified", c.unclassified},
        {"outside_family", c.outside_family}, {"ambiguous", c.ambiguous},
        {"predicate_reports", c.predicate_reports}, {"vacuous", c.vacuous},
        {"predicate_failures", c.predicate_failures}, {"labels", c.labels},
    };
    Json counter = Json::array();
    for (const auto & ce : r.counterexamples)
        counter.push_back({{"graph6", ce.graph6}, {"theorem", ce.theorem}, {"n", ce.n}, {"k", ce.k}});
    j["counterexamples"] = counter;
    Json errors = Json::array();
    for (const auto & e : r.errors)
        errors.push_back({{"index", e.index}, {"graph6", e.graph6}, {"message", e.message}});
    j["errors"] = errors;
    return j;
}

/// Wraps a single-graph payload with the schema version.
inline auto document(Json payload) -> Json
{
    Json j;
    j["schema"] = report_schema;
    for (auto & [key, value] : payload.items())
        j[key] = value;
    return j;
}

} // namespace factorcrit
