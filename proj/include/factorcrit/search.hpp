#pragma once

#include <factorcrit/catalog.hpp>
#include <factorcrit/configurations.hpp>
#include <factorcrit/verifiers.hpp>

#include <algorithm>
#include <exception>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace factorcrit {

struct Counterexample
{
    std::string graph6;
    std::string theorem;
    int n = 0;
    int k = 0;

    auto operator==(const Counterexample &) const -> bool = default;
};

struct VerdictTally
{
    int applicable = 0;
    int pass = 0;
    int fail = 0;

    auto operator==(const VerdictTally &) const -> bool = default;
};

/// Configuration results over every edge of every minimal graph in a survey.
struct ConfigurationTally
{
    int edges = 0;
    int classified = 0;
    int unclassified = 0;
    int outside_family = 0;
    int ambiguous = 0;
    int predicate_reports = 0;
    int vacuous = 0;
    int predicate_failures = 0;
    std::map<std::string, int> labels;

    auto operator==(const ConfigurationTally &) const -> bool = default;
};

/// What survey learned about one graph.
struct GraphRecord
{
    std::size_t index = 0;
    std::string graph6;
    bool critical = false;
    bool minimal = false;
    int min_degree = 0;
    std::string profile;
    std::vector<TheoremVerdict> verdicts;
    std::vector<std::string> errors;
};

struct SurveyError
{
    std::size_t index = 0;
    std::string graph6;
    std::string message;

    auto operator==(const SurveyError &) const -> bool = default;
};

struct SurveyReport
{
    int n = 0;
    int k = 0;
    std::string source;
    std::size_t total = 0;
    std::size_t critical = 0;
    std::size_t minimal = 0;
    std::map<std::string, int> profiles;
    std::map<int, int> min_degrees;
    std::map<std::string, VerdictTally> verdicts;
    ConfigurationTally configurations;
    std::vector<Counterexample> counterexamples;
    std::vector<SurveyError> errors;
    /// Filled only when records are requested.
    std::vector<GraphRecord> records;
};

struct SurveyOptions
{
    int jobs = 1;
    /// Classify every edge and evaluate predicates when k is n-6 or n-8.
    bool configurations = true;
    /// Check the degree-sum and connectivity alarms on critical graphs.
    bool alarms = true;
    /// Keep a GraphRecord per graph.
    bool records = false;
    /// Harness self-test: report graphs where the minimum degree statement
    /// holds, so the hunter must find them.
    bool invert_min_degree = false;
    /// Throw TheoremViolated on a proven failure (otherwise list it).
    bool raise = true;
};

/// Valid k for order n: matching parity, 1 <= k <= n-2.
inline auto valid_k(int n) -> std::vector<int>
{
    std::vector<int> ks;
    for (int k = 2 - n % 2 ; k <= n - 2 ; k += 2)
        ks.push_back(k);
    return ks;
}

inline auto validate_survey_k(int n, int k) -> void
{
    if (k < 1 || k > n - 2)
        throw Error(ErrorKind::KOutOfRange, "k = " + std::to_string(k) + " outside 1.." + std::to_string(n - 2));
    if ((n - k) % 2 != 0)
        throw Error(ErrorKind::ParityMismatch, "k = " + std::to_string(k) + " and n = " + std::to_string(n) + " differ in parity");
}

namespace detail {
    struct ShardResult
    {
        SurveyReport part;
        std::exception_ptr failure;
        std::size_t failure_index = 0;
    };

    inline auto tally(SurveyReport & r, const TheoremVerdict & v) -> void
    {
        auto & t = r.verdicts[v.theorem];
        if (! v.applicable)
            return;
        ++t.applicable;
        ++(v.pass ? t.pass : t.fail);
    }

    /// Records a verdict. A failure is a counterexample when the statement is
    /// proven here, or when it is the open minimum degree statement; other
    /// failures below a statement's order gate are only tallied.
    inline auto note(SurveyReport & r, GraphRecord & rec, TheoremVerdict v) -> void
    {
        tally(r, v);
        if (v.violated() && (v.proven || v.theorem == "min-degree"))
            r.counterexamples.push_back({rec.graph6, v.theorem, r.n, r.k});
        rec.verdicts.push_back(std::move(v));
    }

    inline auto survey_configurations(SurveyReport & r, GraphRecord & rec, const Graph & g, int k, const CheckOptions & opts) -> void
    {
        auto & c = r.configurations;
        for (const auto & [e, cert] : certify_minimal_edges(g, k)) {
            ++c.edges;
            if (cert.status == EdgeStatus::Unclassified && cert.reason.starts_with("FamilyPreconditionUnmet")) {
                ++c.outside_family;
                continue;
            }
            if (cert.status != EdgeStatus::Classified) {
                ++c.unclassified;
                r.counterexamples.push_back({rec.graph6, "configuration-completeness", r.n, r.k});
                continue;
            }
            ++c.classified;
            ++c.labels[cert.match->label];
            if (cert.match->ambiguous)
                ++c.ambiguous;
            auto report = config_predicates(g, e, cert.witness, *cert.match);
            ++c.predicate_reports;
            if (report.vacuous()) {
                ++c.vacuous;
                continue;
            }
            if (! report.all_pass()) {
                ++c.predicate_failures;
                auto v = make_verdict("configuration-predicates", g);
                v.applicable = true;
                v.witness["edge"] = e.to_string();
                v.witness["label"] = report.label;
                v.witness["witness_set"] = cert.witness.to_string();
                tally(r, v);
                r.counterexamples.push_back({rec.graph6, v.theorem, r.n, r.k});
                settle(v, opts);
                rec.verdicts.push_back(std::move(v));
            }
        }
    }

    inline auto survey_alarms(SurveyReport & r, GraphRecord & rec, const Graph & g, int k, const SurveyOptions & opts) -> void
    {
        auto v = make_verdict("criticality-connectivity", g);
        v.applicable = true;
        v.pass = downward_criticality_check(g, k, opts.raise);
        note(r, rec, std::move(v));
    }

    inline auto survey_one(SurveyReport & r, const Graph & g, std::size_t index, const std::string & text, const SurveyOptions & opts) -> GraphRecord
    {
        int n = r.n, k = r.k;
        CheckOptions check{opts.raise, true};
        GraphRecord rec;
        rec.index = index;
        rec.graph6 = text;
        rec.min_degree = g.min_degree();
        rec.profile = profile_string(g.degree_profile());

        rec.critical = is_k_factor_critical(g, k).verdict;
        if (! rec.critical)
            return rec;
        ++r.critical;
        if (opts.alarms)
            survey_alarms(r, rec, g, k, opts);
        rec.minimal = is_minimally_kfc(g, k);

        if (g.max_degree() == n - 1 && n > k + 2)
            note(r, rec, check_star_structure(g, k, check, rec.minimal));
        if (! rec.minimal)
            return rec;

        ++r.minimal;
        ++r.profiles[rec.profile];
        ++r.min_degrees[rec.min_degree];

        auto conj = check_conjecture(g, k, CheckOptions{opts.raise && ! opts.invert_min_degree, true});
        if (opts.invert_min_degree) {
            // planted: the "violation" is the statement holding
            conj.pass = ! conj.pass;
        }
        note(r, rec, std::move(conj));
        note(r, rec, check_degree_bounds(g, k, check));
        bool parity_done = false;
        if (n >= k + 5)
            for (auto & v : check_maxdeg_profile(g, k, check)) {
                parity_done = parity_done || v.theorem == "degree-parity";
                note(r, rec, std::move(v));
            }
        if (! parity_done)
            note(r, rec, check_degree_parity(g, check));

        if (opts.configurations && (k == n - 6 || k == n - 8))
            survey_configurations(r, rec, g, k, check);
        return rec;
    }

    inline auto survey_shard(const Catalog & cat, int k, std::size_t begin, std::size_t end, const SurveyOptions & opts) -> ShardResult
    {
        ShardResult out;
        out.part.n = cat.order;
        out.part.k = k;
        for (std::size_t i = begin ; i < end ; ++i) {
            ++out.part.total;
            try {
                auto g = cat.graph(i);
                auto rec = survey_one(out.part, g, i, cat.graph6[i], opts);
                if (opts.records)
                    out.part.records.push_back(std::move(rec));
            }
            catch (const TheoremViolated &) {
                out.failure = std::current_exception();
                out.failure_index = i;
                return out;
            }
            catch (const Error & e) {
                out.part.errors.push_back({i, cat.graph6[i], e.what()});
            }
        }
        return out;
    }

    inline auto merge(SurveyReport & into, SurveyReport && part) -> void
    {
        into.total += part.total;
        into.critical += part.critical;
        into.minimal += part.minimal;
        for (auto & [key, count] : part.profiles)
            into.profiles[key] += count;
        for (auto & [key, count] : part.min_degrees)
            into.min_degrees[key] += count;
        for (auto & [key, t] : part.verdicts) {
            auto & dst = into.verdicts[key];
            dst.applicable += t.applicable;
            dst.pass += t.pass;
            dst.fail += t.fail;
        }
        auto & c = into.configurations;
        const auto & pc = part.configurations;
        c.edges += pc.edges;
        c.classified += pc.classified;
        c.unclassified += pc.unclassified;
        c.outside_family += pc.outside_family;
        c.ambiguous += pc.ambiguous;
        c.predicate_reports += pc.predicate_reports;
        c.vacuous += pc.vacuous;
        c.predicate_failures += pc.predicate_failures;
        for (auto & [key, count] : pc.labels)
            c.labels[key] += count;
        std::move(part.counterexamples.begin(), part.counterexamples.end(), std::back_inserter(into.counterexamples));
        std::move(part.errors.begin(), part.errors.end(), std::back_inserter(into.errors));
        std::move(part.records.begin(), part.records.end(), std::back_inserter(into.records));
    }
}

/**
 * Runs criticality, minimality and every applicable statement over the
 * catalog. The catalog is cut into contiguous shards, one per job, and the
 * shards are merged in catalog order, so the report does not depend on the
 * job count. A proven statement failing stops the survey with
 * TheoremViolated (the earliest one by catalog position) unless raise is off.
 */
inline auto survey(const Catalog & cat, int k, const SurveyOptions & opts = {}) -> SurveyReport
{
    validate_survey_k(cat.order, k);
    std::size_t total = cat.size();
    std::size_t jobs = std::clamp<std::size_t>(opts.jobs < 1 ? 1 : opts.jobs, 1, std::max<std::size_t>(total, 1));

    std::vector<detail::ShardResult> shards(jobs);
    if (jobs == 1)
        shards[0] = detail::survey_shard(cat, k, 0, total, opts);
    else {
        std::vector<std::thread> workers;
        for (std::size_t j = 0 ; j < jobs ; ++j)
            workers.emplace_back([&, j] {
                shards[j] = detail::survey_shard(cat, k, total * j / jobs, total * (j + 1) / jobs, opts);
            });
        for (auto & w : workers)
            w.join();
    }

    for (const auto & s : shards)
        if (s.failure)
            std::rethrow_exception(s.failure);

    SurveyReport report;
    report.n = cat.order;
    report.k = k;
    report.source = cat.source;
    for (auto & s : shards)
        detail::merge(report, std::move(s.part));
    return report;
}

/// Which k a hunt tries at each order.
struct KRule
{
    enum class Kind { AllValid, Offset, Fixed };
    Kind kind = Kind::AllValid;
    int value = 0;

    static auto all_valid() -> KRule { return {}; }
    /// k = n - c.
    static auto offset(int c) -> KRule { return {Kind::Offset, c}; }
    static auto fixed(int k) -> KRule { return {Kind::Fixed, k}; }

    auto ks(int n) const -> std::vector<int>
    {
        if (kind == Kind::AllValid)
            return valid_k(n);
        int k = kind == Kind::Offset ? n - value : value;
        if (k < 1 || k > n - 2 || (n - k) % 2 != 0)
            return {};
        return {k};
    }
};

struct HuntOptions
{
    int jobs = 1;
    bool invert_min_degree = false;
    /// Per order, a catalog to use instead of generating one.
    std::map<int, Catalog> catalogs;
};

/**
 * Surveys every order in [lo, hi] under the k rule (without configuration
 * classification) and returns every counterexample in order.
 */
inline auto hunt_counterexamples(int lo, int hi, KRule rule, const HuntOptions & opts = {}) -> std::vector<Counterexample>
{
    std::vector<Counterexample> found;
    for (int n = lo ; n <= hi ; ++n) {
        auto ks = rule.ks(n);
        if (ks.empty())
            continue;
        auto it = opts.catalogs.find(n);
        Catalog cat = it != opts.catalogs.end() ? it->second : generate_catalog(n);
        for (int k : ks) {
            SurveyOptions so;
            so.jobs = opts.jobs;
            so.configurations = false;
            so.alarms = false;
            so.invert_min_degree = opts.invert_min_degree;
            auto report = survey(cat, k, so);
            found.insert(found.end(), report.counterexamples.begin(), report.counterexamples.end());
        }
    }
    return found;
}

/**
 * Deletes the edges of a k-critical graph in random order whenever the
 * result stays k-critical. Every edge kept was necessary when it was tried,
 * and criticality only gets harder as edges go, so the result is minimal.
 */
template <typename Rng>
auto shrink_to_minimal(Graph g, int k, Rng & rng) -> Graph
{
    if (! is_k_factor_critical(g, k).verdict)
        throw Error(ErrorKind::NotCritical, "graph is not " + std::to_string(k) + "-factor-critical");
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    for (auto e : edges)
        if (stays_critical_without(g, k, e))
            g = remove_edge(g, e.first, e.second);
    return g;
}

} // namespace factorcrit
