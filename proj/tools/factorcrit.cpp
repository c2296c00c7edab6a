#include <factorcrit/report.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace factorcrit;

namespace {

enum Exit { Holds = 0, Fails = 1, Usage = 2, Violated = 3 };

struct Input
{
    std::string graph6;
    std::string file;
    bool lenient = false;
};

struct Flags
{
    Input input;
    int k = -1;
    std::string edge;
    std::string family;
    std::string mode;
    std::string theorem;
    bool json = false;
    bool strict = false;
    bool records = false;
    bool plant = false;
    int jobs = 0;
    int gen = 0;
    int from = 0;
    int to = 0;
    int offset = 0;
    std::string out;
};

/// Problems with the request itself rather than with the graph.
auto is_usage_error(ErrorKind kind) -> bool
{
    switch (kind) {
        case ErrorKind::MalformedEncoding:
        case ErrorKind::UnsupportedOrder:
        case ErrorKind::VertexOutOfRange:
        case ErrorKind::EdgeAbsent:
        case ErrorKind::EdgePresent:
        case ErrorKind::OrderTooSmall:
        case ErrorKind::ParityMismatch:
        case ErrorKind::KOutOfRange:
        case ErrorKind::FileUnreadable:
        case ErrorKind::OrderTooLargeForGenerate:
            return true;
        default:
            return false;
    }
}

class UsageError : public std::runtime_error
{
    using std::runtime_error::runtime_error;
};

auto read_graphs(const Input & in) -> std::vector<Graph>
{
    if (! in.graph6.empty() && ! in.file.empty())
        throw UsageError("give either a graph6 argument or --file, not both");
    if (! in.graph6.empty())
        return {parse_graph6(in.graph6)};
    if (! in.file.empty()) {
        std::ifstream f(in.file);
        if (! f)
            throw Error(ErrorKind::FileUnreadable, "cannot read " + in.file);
        return read_graph6_stream(f, in.lenient);
    }
    auto graphs = read_graph6_stream(std::cin, in.lenient);
    if (graphs.empty())
        throw UsageError("no graph given");
    return graphs;
}

auto parse_edge(const std::string & text) -> Edge
{
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw UsageError("--edge expects u,v");
    try {
        std::size_t used_a = 0, used_b = 0;
        int a = std::stoi(text.substr(0, comma), &used_a);
        int b = std::stoi(text.substr(comma + 1), &used_b);
        if (used_a != comma || used_b != text.size() - comma - 1)
            throw UsageError("--edge expects u,v");
        return Edge{std::min(a, b), std::max(a, b)};
    }
    catch (const std::logic_error &) {
        throw UsageError("--edge expects u,v");
    }
}

auto need_k(const Flags & f) -> int
{
    if (f.k < 0)
        throw UsageError("--k is required");
    return f.k;
}

auto need_edge(const Flags & f) -> Edge
{
    if (f.edge.empty())
        throw UsageError("--edge is required");
    return parse_edge(f.edge);
}

auto jobs_of(const Flags & f) -> int
{
    if (f.jobs > 0)
        return f.jobs;
    if (const char * env = std::getenv("FACTORCRIT_JOBS")) {
        try {
            int j = std::stoi(env);
            if (j > 0)
                return j;
        }
        catch (const std::logic_error &) {
        }
        throw UsageError("FACTORCRIT_JOBS must be a positive integer");
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

auto yes_no(bool b) -> const char *
{
    return b ? "yes" : "no";
}

/// Runs body on every input graph; the exit code is the worst one seen.
template <typename Body>
auto each_graph(const Flags & f, std::ostream & out, Body && body) -> int
{
    int code = Holds;
    for (const auto & g : read_graphs(f.input)) {
        Json doc;
        doc["graph6"] = encode_graph6(g);
        std::ostringstream text;
        code = std::max<int>(code, body(g, doc, text));
        if (f.json)
            out << document(doc).dump() << "\n";
        else
            out << text.str();
    }
    return code;
}

auto cmd_pm(const Flags & f, std::ostream & out) -> int
{
    return each_graph(f, out, [&] (const Graph & g, Json & doc, std::ostream & text) {
        auto m = maximum_matching(g);
        doc["perfect_matching"] = m.perfect();
        Json edges = Json::array();
        for (auto e : m.edges)
            edges.push_back(to_json(e));
        doc["matching"] = edges;
        text << "perfect matching: " << yes_no(m.perfect()) << "\n";
        if (! m.perfect()) {
            auto cert = tutte_violators(g).front();
            doc["tutte_certificate"] = to_json(cert);
            text << "tutte set " << cert.barrier.to_string() << " leaves " << cert.partition.odd_count << " odd components\n";
            return Fails;
        }
        return Holds;
    });
}

auto cmd_kfc(const Flags & f, std::ostream & out) -> int
{
    int k = need_k(f);
    if (! f.mode.empty() && f.mode != "definitional" && f.mode != "tutte")
        throw UsageError("--mode must be definitional or tutte");
    return each_graph(f, out, [&] (const Graph & g, Json & doc, std::ostream & text) {
        auto r = f.mode == "tutte" ? kfc_via_tutte(g, k) : is_k_factor_critical(g, k);
        doc["criticality"] = to_json(r);
        text << k << "-factor-critical: " << yes_no(r.verdict) << "\n";
        if (r.failing_set)
            text << "failing set " << r.failing_set->to_string() << "\n";
        return r.verdict ? Holds : Fails;
    });
}

auto cmd_minimal(const Flags & f, std::ostream & out) -> int
{
    int k = need_k(f);
    return each_graph(f, out, [&] (const Graph & g, Json & doc, std::ostream & text) {
        auto r = is_k_factor_critical(g, k);
        doc["criticality"] = to_json(r);
        if (! r.verdict) {
            doc["minimal"] = false;
            text << "minimally " << k << "-factor-critical: no (not critical, failing set " << r.failing_set->to_string() << ")\n";
            return Fails;
        }
        auto removable = first_removable_edge(g, k);
        doc["minimal"] = ! removable;
        if (removable) {
            doc["removable_edge"] = to_json(*removable);
            text << "minimally " << k << "-factor-critical: no (edge " << removable->to_string() << " can go)\n";
            return Fails;
        }
        text << "minimally " << k << "-factor-critical: yes\n";
        return Holds;
    });
}

auto cmd_witness(const Flags & f, std::ostream & out) -> int
{
    int k = need_k(f);
    return each_graph(f, out, [&] (const Graph & g, Json & doc, std::ostream & text) {
        if (f.edge.empty()) {
            auto cert = minimality_certificate(g, k);
            Json all = Json::array();
            for (auto [e, s] : cert.witnesses) {
                all.push_back({{"edge", to_json(e)}, {"witness", to_json(s)}});
                text << e.to_string() << ": " << s.to_string() << "\n";
            }
            doc["witnesses"] = all;
            return Holds;
        }
        auto e = parse_edge(f.edge);
        auto s = minimality_witness(g, k, e);
        doc["edge"] = to_json(e);
        if (! s) {
            doc["witness"] = nullptr;
            text << "edge " << e.to_string() << ": no witness, the edge can be removed\n";
            return Fails;
        }
        doc["witness"] = to_json(*s);
        text << "edge " << e.to_string() << ": witness " << s->to_string() << "\n";
        return Holds;
    });
}

auto family_of(const std::string & name) -> Family
{
    if (name == "A")
        return Family::A;
    if (name == "B")
        return Family::B;
    if (name == "C")
        return Family::C;
    throw UsageError("--family must be A, B or C");
}

auto print_match(const ConfigurationMatch & m, std::ostream & text) -> void
{
    text << "configuration: " << m.label << " (family " << family_name(m.family) << ", tutte set " << m.x.to_string() << ")\n";
    if (m.ambiguous) {
        text << "ambiguous:";
        for (const auto & l : m.labels_seen)
            text << " " << l;
        text << "\n";
    }
}

auto cmd_classify(const Flags & f, std::ostream & out) -> int
{
    auto e = need_edge(f);
    return each_graph(f, out, [&] (const Graph & g, Json & doc, std::ostream & text) {
        ConfigurationMatch m;
        if (! f.family.empty()) {
            // the input is already the residual graph and e the restorable pair
            m = classify_residual(ResidualInstance{g, e.first, e.second, family_of(f.family)});
        }
        else {
            int k = need_k(f);
            auto family = family_for_edge(g, k, e);
            if (! family)
                throw Error(ErrorKind::FamilyPreconditionUnmet, "k must be n-6 or n-8");
            auto s = minimality_witness(g, k, e);
            if (! s)
                throw Error(ErrorKind::NotMinimallyCritical, "edge " + e.to_string() + " has no witness");
            doc["witness"] = to_json(*s);
            m = classify_residual(residual_of(g, e, *s, *family).first);
        }
        doc["configuration"] = to_json(m);
        print_match(m, text);
        return m.classified() ? Holds : Fails;
    });
}

auto cmd_predicates(const Flags & f, std::ostream & out) -> int
{
    int k = need_k(f);
    auto e = need_edge(f);
    return each_graph(f, out, [&] (const Graph & g, Json & doc, std::ostream & text) {
        auto family = family_for_edge(g, k, e);
        if (! family)
            throw Error(ErrorKind::FamilyPreconditionUnmet, "k must be n-6 or n-8");
        auto s = minimality_witness(g, k, e);
        if (! s)
            throw Error(ErrorKind::NotMinimallyCritical, "edge " + e.to_string() + " has no witness");
        auto m = classify_residual(residual_of(g, e, *s, *family).first);
        auto r = config_predicates(g, e, *s, m, f.strict);
        doc["witness"] = to_json(*s);
        doc["configuration"] = to_json(m);
        doc["predicates"] = to_json(r);
        print_match(m, text);
        if (r.vacuous()) {
            text << "hypothesis not met (" << r.hypothesis << "), nothing to check\n";
            return Holds;
        }
        for (const auto & p : r.predicates)
            text << (p.pass ? "pass " : "FAIL ") << p.name << "\n";
        return r.all_pass() ? Holds : Fails;
    });
}

auto has_verdict(const std::vector<TheoremVerdict> & vs, const std::string & theorem) -> bool
{
    return std::any_of(vs.begin(), vs.end(), [&] (const TheoremVerdict & v) { return v.theorem == theorem; });
}

auto cmd_verify(const Flags & f, std::ostream & out) -> int
{
    return each_graph(f, out, [&] (const Graph & g, Json & doc, std::ostream & text) {
        int n = g.order();
        CheckOptions opts;
        std::vector<TheoremVerdict> verdicts;
        if (n >= 6)
            verdicts.push_back(check_n4_characterization(g, opts));
        if (f.k >= 0) {
            int k = f.k;
            bool minimal = is_minimally_kfc(g, k);
            doc["minimal"] = minimal;
            if (! minimal)
                throw Error(ErrorKind::NotMinimallyCritical, "not minimally " + std::to_string(k) + "-factor-critical");
            opts.assume_minimal = true;
            verdicts.push_back(check_conjecture(g, k, opts));
            verdicts.push_back(check_degree_bounds(g, k, opts));
            if (n >= k + 5)
                for (auto & v : check_maxdeg_profile(g, k, opts))
                    verdicts.push_back(std::move(v));
            if (g.max_degree() == n - 1 && n > k + 2 && ! has_verdict(verdicts, "star-structure"))
                verdicts.push_back(check_star_structure(g, k, opts, true));
        }
        if (! has_verdict(verdicts, "degree-parity"))
            verdicts.push_back(check_degree_parity(g, opts));

        Json all = Json::array();
        int code = Holds;
        for (const auto & v : verdicts) {
            if (! f.theorem.empty() && v.theorem != f.theorem)
                continue;
            all.push_back(to_json(v));
            text << v.theorem << ": " << (! v.applicable ? "not applicable" : v.pass ? "pass" : "FAIL") << "\n";
            if (v.violated())
                code = Fails;
        }
        doc["verdicts"] = all;
        return code;
    });
}

auto load_catalog(const Flags & f) -> Catalog
{
    if ((f.gen > 0) == ! f.input.file.empty())
        throw UsageError("give exactly one of --gen or --file");
    if (f.gen > 0)
        return generate_catalog(f.gen);
    return ingest_catalog(f.input.file, f.input.lenient);
}

auto cmd_survey(const Flags & f, std::ostream & out) -> int
{
    int k = need_k(f);
    auto cat = load_catalog(f);
    SurveyOptions opts;
    opts.jobs = jobs_of(f);
    opts.records = f.records;
    auto report = survey(cat, k, opts);
    if (f.json) {
        for (const auto & rec : report.records)
            out << to_json(rec).dump() << "\n";
        out << to_json(report).dump() << "\n";
    }
    else {
        out << "n = " << report.n << ", k = " << report.k << ": " << report.total << " graphs, "
            << report.critical << " critical, " << report.minimal << " minimal\n";
        for (const auto & [d, count] : report.min_degrees)
            out << "min degree " << d << ": " << count << "\n";
        for (const auto & [name, t] : report.verdicts)
            out << name << ": " << t.pass << "/" << t.applicable << " pass\n";
        for (const auto & c : report.counterexamples)
            out << "counterexample " << c.graph6 << " (" << c.theorem << ")\n";
        for (const auto & e : report.errors)
            out << "error at " << e.index << ": " << e.message << "\n";
    }
    return report.counterexamples.empty() ? Holds : Fails;
}

auto cmd_hunt(const Flags & f, std::ostream & out) -> int
{
    if (f.from < 1 || f.to < f.from)
        throw UsageError("--from and --to must give an order range");
    KRule rule;
    if (f.k >= 0 && f.offset > 0)
        throw UsageError("give at most one of --k and --offset");
    if (f.k >= 0)
        rule = KRule::fixed(f.k);
    else if (f.offset > 0)
        rule = KRule::offset(f.offset);
    HuntOptions opts;
    opts.jobs = jobs_of(f);
    opts.invert_min_degree = f.plant;
    if (! f.input.file.empty()) {
        if (f.from != f.to)
            throw UsageError("--file needs a single order (--from = --to)");
        opts.catalogs.emplace(f.from, ingest_catalog(f.input.file, f.input.lenient, false, f.from));
    }
    auto found = hunt_counterexamples(f.from, f.to, rule, opts);
    if (f.json) {
        Json list = Json::array();
        for (const auto & c : found)
            list.push_back({{"graph6", c.graph6}, {"theorem", c.theorem}, {"n", c.n}, {"k", c.k}});
        out << document({{"counterexamples", list}}).dump() << "\n";
    }
    else {
        for (const auto & c : found)
            out << c.graph6 << " " << c.theorem << " n=" << c.n << " k=" << c.k << "\n";
        out << found.size() << " counterexamples\n";
    }
    return found.empty() ? Holds : Fails;
}

auto cmd_gen(const Flags & f, std::ostream & out) -> int
{
    if (f.gen < 1)
        throw UsageError("gen needs an order");
    auto cat = generate_catalog(f.gen);
    std::ofstream file;
    std::ostream * dst = &out;
    if (! f.out.empty()) {
        file.open(f.out);
        if (! file)
            throw Error(ErrorKind::FileUnreadable, "cannot write " + f.out);
        dst = &file;
    }
    for (const auto & line : cat.graph6)
        *dst << line << "\n";
    if (! f.out.empty() || f.json) {
        if (f.json)
            out << document({{"n", cat.order}, {"count", cat.size()}}).dump() << "\n";
        else
            out << cat.size() << " graphs\n";
    }
    return Holds;
}

auto run(int argc, char ** argv, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Matching and factor-criticality toolkit"};
    app.require_subcommand(1);
    Flags f;

    auto add_input = [&] (CLI::App * sub) {
        sub->add_option("graph6", f.input.graph6, "graph in graph6 form (else --file or stdin)");
        sub->add_option("--file", f.input.file, "graph6 file");
        sub->add_flag("--lenient", f.input.lenient, "skip malformed lines");
    };
    auto add_k = [&] (CLI::App * sub) { sub->add_option("--k", f.k, "k")->check(CLI::NonNegativeNumber); };
    auto add_edge = [&] (CLI::App * sub) { sub->add_option("--edge", f.edge, "edge or pair u,v"); };
    app.add_flag("--json", f.json, "machine-readable output");

    std::map<std::string, std::function<int(const Flags &, std::ostream &)>> commands;
    auto sub = [&] (const std::string & name, const std::string & help, auto cmd) {
        auto * s = app.add_subcommand(name, help);
        s->add_flag("--json", f.json, "machine-readable output");
        commands[name] = cmd;
        return s;
    };

    auto * pm = sub("pm", "perfect matching test", cmd_pm);
    add_input(pm);
    auto * kfc = sub("kfc", "k-factor-criticality", cmd_kfc);
    add_input(kfc);
    add_k(kfc);
    kfc->add_option("--mode", f.mode, "definitional or tutte");
    auto * minimal = sub("minimal", "minimal k-factor-criticality", cmd_minimal);
    add_input(minimal);
    add_k(minimal);
    auto * witness = sub("witness", "witness sets of edges", cmd_witness);
    add_input(witness);
    add_k(witness);
    add_edge(witness);
    auto * classify = sub("classify", "configuration of a residual graph", cmd_classify);
    add_input(classify);
    add_k(classify);
    add_edge(classify);
    classify->add_option("--family", f.family, "A, B or C: input is the residual itself");
    auto * predicates = sub("predicates", "non-neighbourhood predicates of an edge", cmd_predicates);
    add_input(predicates);
    add_k(predicates);
    add_edge(predicates);
    predicates->add_flag("--strict", f.strict, "fail when the degree hypothesis does not hold");
    auto * verify = sub("verify", "evaluate every applicable statement", cmd_verify);
    add_input(verify);
    add_k(verify);
    verify->add_option("--theorem", f.theorem, "only report this statement");
    auto * surv = sub("survey", "survey a catalog", cmd_survey);
    add_k(surv);
    surv->add_option("--gen", f.gen, "generate all graphs of this order")->check(CLI::Range(1, max_generated_order));
    surv->add_option("--file", f.input.file, "graph6 catalog file");
    surv->add_flag("--lenient", f.input.lenient, "skip malformed lines");
    surv->add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber);
    surv->add_flag("--records", f.records, "emit one JSON line per graph before the summary");
    auto * hunt = sub("hunt", "look for minimal graphs breaking a statement", cmd_hunt);
    hunt->add_option("--from", f.from, "smallest order")->required();
    hunt->add_option("--to", f.to, "largest order")->required();
    hunt->add_option("--k", f.k, "fixed k")->check(CLI::NonNegativeNumber);
    hunt->add_option("--offset", f.offset, "k = n - offset")->check(CLI::PositiveNumber);
    hunt->add_option("--file", f.input.file, "catalog for the single order");
    hunt->add_flag("--lenient", f.input.lenient, "skip malformed lines");
    hunt->add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber);
    hunt->add_flag("--plant", f.plant, "self-test: flag graphs where the statement holds");
    auto * gen = sub("gen", "print every graph of an order", cmd_gen);
    gen->add_option("n", f.gen, "order")->required()->check(CLI::Range(1, max_generated_order));
    gen->add_option("--out", f.out, "write to a file");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Holds : Usage;
    }

    auto * chosen = app.get_subcommands().front();
    try {
        return commands.at(chosen->get_name())(f, out);
    }
    catch (const TheoremViolated & e) {
        err << "theorem violated: " << e.what() << "\n";
        return Violated;
    }
    catch (const UsageError & e) {
        err << "usage: " << e.what() << "\n";
        return Usage;
    }
    catch (const Error & e) {
        err << "error: " << e.what() << "\n";
        return is_usage_error(e.kind()) ? Usage : Fails;
    }
}

}

auto main(int argc, char ** argv) -> int
{
    return run(argc, argv, std::cout, std::cerr);
}
