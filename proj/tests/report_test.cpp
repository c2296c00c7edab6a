#include <factorcrit/report.hpp>

#include <gtest/gtest.h>

using namespace factorcrit;

TEST(Report, VerdictRecord)
{
    auto v = check_degree_bounds(graphs::cycle(5), 1);
    auto j = to_json(v);
    EXPECT_EQ(j["theorem"], "degree-upper-bound");
    EXPECT_EQ(j["graph6"], encode_graph6(graphs::cycle(5)));
    EXPECT_EQ(j["applicable"], true);
    EXPECT_EQ(j["pass"], true);
    EXPECT_EQ(j["witness"]["bound"], "2");

    // pass is left out when the statement does not apply
    auto na = to_json(check_degree_bounds(graphs::complete(6), 4));
    EXPECT_EQ(na["applicable"], false);
    EXPECT_FALSE(na.contains("pass"));
}

TEST(Report, CriticalityAndCertificates)
{
    auto j = to_json(is_k_factor_critical(graphs::cycle(6), 2));
    EXPECT_EQ(j["critical"], false);
    EXPECT_EQ(j["failing_set"], Json::array({0, 2}));
    EXPECT_EQ(j["method"], "definitional");

    auto cert = tutte_violators(graphs::star(3)).front();
    auto c = to_json(cert);
    EXPECT_EQ(c["barrier"], Json::array({0}));
    EXPECT_EQ(c["odd_components"], 3);
    EXPECT_EQ(c["deficit"], 2);
}

TEST(Report, ConfigurationUsesRoleNames)
{
    Graph g(6);
    for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}})
        g.connect(a, b);
    auto j = to_json(classify_residual({g, 0, 3, Family::A}));
    EXPECT_EQ(j["label"], "A1");
    EXPECT_EQ(j["family"], "A");
    for (auto role : {"u", "v", "u1", "u2", "u3", "u4"})
        EXPECT_TRUE(j["roles"].contains(role)) << role;
    EXPECT_EQ(j["ambiguous"], false);
}

TEST(Report, SurveySummaryIsVersionedAndStable)
{
    auto cat = generate_catalog(7);
    SurveyOptions one;
    auto base = to_json(survey(cat, 1, one)).dump();
    auto parsed = Json::parse(base);
    EXPECT_EQ(parsed["schema"], 1);
    EXPECT_EQ(parsed["n"], 7);
    EXPECT_EQ(parsed["k"], 1);
    EXPECT_EQ(parsed["counts"]["total"], 1044);
    EXPECT_TRUE(parsed["counterexamples"].empty());
    for (int jobs : {2, 5}) {
        SurveyOptions opts;
        opts.jobs = jobs;
        EXPECT_EQ(to_json(survey(cat, 1, opts)).dump(), base) << jobs;
    }
}

TEST(Report, RecordsCarryReparsableGraph6)
{
    auto cat = generate_catalog(6);
    SurveyOptions opts;
    opts.records = true;
    auto r = survey(cat, 2, opts);
    ASSERT_EQ(r.records.size(), cat.size());
    for (std::size_t i = 0 ; i < r.records.size() ; ++i) {
        auto j = to_json(r.records[i]);
        EXPECT_EQ(parse_graph6(j["graph6"].get<std::string>()), cat.graph(i));
        for (const auto & v : j["verdicts"])
            EXPECT_EQ(parse_graph6(v["graph6"].get<std::string>()), cat.graph(i));
    }
}

TEST(Report, DocumentAddsSchema)
{
    auto d = document({{"perfect_matching", true}});
    EXPECT_EQ(d.begin().key(), "schema");
    EXPECT_EQ(d["schema"], report_schema);
    EXPECT_EQ(d["perfect_matching"], true);
}
