#include <factorcrit/canonical.hpp>
#include <factorcrit/catalog.hpp>
#include <factorcrit/verifiers.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace factorcrit;

namespace {
    auto kind_of(auto && f) -> ErrorKind
    {
        try {
            f();
        }
        catch (const Error & e) {
            return e.kind();
        }
        ADD_FAILURE() << "no error raised";
        return ErrorKind::MalformedEncoding;
    }

    auto find(const std::vector<TheoremVerdict> & vs, const std::string & name) -> const TheoremVerdict *
    {
        for (const auto & v : vs)
            if (v.theorem == name)
                return &v;
        return nullptr;
    }

    auto degree_of(const Graph & g, int v) -> int
    {
        int d = 0;
        for (int w = 0 ; w < g.order() ; ++w)
            d += oracle::adjacent(g, v, w);
        return d;
    }

    auto w7() -> Graph
    {
        return parse_graph6("G|eKMC");
    }
}

TEST(Verifiers, WheelEncoding)
{
    EXPECT_TRUE(are_isomorphic(w7(), graphs::wheel(7)));
    EXPECT_TRUE(is_minimally_kfc(w7(), 2));
}

TEST(DegreeBounds, Examples)
{
    auto k6 = check_degree_bounds(graphs::complete(6), 4);
    EXPECT_FALSE(k6.applicable);

    auto c5 = check_degree_bounds(graphs::cycle(5), 1);
    EXPECT_TRUE(c5.applicable);
    EXPECT_TRUE(c5.pass);
    EXPECT_EQ(c5.witness.at("bound"), "2");

    auto w = check_degree_bounds(w7(), 2);
    EXPECT_TRUE(w.applicable);
    EXPECT_TRUE(w.pass);
    EXPECT_EQ(w.witness.at("bound"), "3");
    EXPECT_EQ(w.witness.at("min_degree"), "3");

    EXPECT_EQ(kind_of([] { check_degree_bounds(graphs::complete(8), 2); }), ErrorKind::NotMinimallyCritical);
}

TEST(MinDegree, Examples)
{
    for (auto [g, k] : {std::pair{graphs::complete(6), 4}, std::pair{graphs::cycle(5), 1}, std::pair{w7(), 2}}) {
        auto v = check_conjecture(g, k);
        EXPECT_TRUE(v.applicable);
        EXPECT_TRUE(v.pass);
        EXPECT_TRUE(v.proven);
        EXPECT_EQ(v.witness.at("min_degree"), std::to_string(k + 1));
    }
    EXPECT_EQ(kind_of([] { check_conjecture(graphs::cycle(6), 2); }), ErrorKind::NotMinimallyCritical);
}

TEST(MinDegree, ProvenFailureRaisesAndOpenFailureIsReported)
{
    // skipping the minimality check lets K8 pose as a minimal 2-critical graph
    CheckOptions trusted{true, true};
    EXPECT_EQ(kind_of([&] { check_conjecture(graphs::complete(8), 2, trusted); }), ErrorKind::TheoremViolated);

    try {
        check_conjecture(graphs::complete(8), 2, trusted);
    }
    catch (const TheoremViolated & e) {
        EXPECT_EQ(e.theorem(), "min-degree");
        EXPECT_EQ(e.graph6(), encode_graph6(graphs::complete(8)));
    }

    CheckOptions quiet{false, true};
    auto v = check_conjecture(graphs::complete(8), 2, quiet);
    EXPECT_TRUE(v.violated());
    EXPECT_EQ(v.witness.at("min_degree"), "7");

    // k = 2 at n = 12 lies in the open range, so nothing is raised
    auto open = check_conjecture(graphs::complete(12), 2, trusted);
    EXPECT_FALSE(open.proven);
    EXPECT_TRUE(open.violated());
    EXPECT_TRUE(min_degree_proven(12, 1));
    EXPECT_TRUE(min_degree_proven(12, 4));
    EXPECT_FALSE(min_degree_proven(13, 3));
}

TEST(ClawFreeCharacterization, Examples)
{
    auto k8 = check_n4_characterization(graphs::complete(8));
    EXPECT_TRUE(k8.pass);
    EXPECT_EQ(k8.witness.at("critical"), "yes");

    auto c6 = check_n4_characterization(graphs::cycle(6));
    EXPECT_TRUE(c6.pass);
    EXPECT_EQ(c6.witness.at("critical"), "no");
    EXPECT_EQ(c6.witness.at("claw_free"), "yes");
    EXPECT_EQ(c6.witness.at("min_degree"), "2");

    auto w5 = check_n4_characterization(graphs::wheel(5));
    EXPECT_TRUE(w5.pass);
    EXPECT_EQ(w5.witness.at("critical"), "yes");
    EXPECT_EQ(w5.witness.at("claw_free"), "yes");

    EXPECT_EQ(kind_of([] { check_n4_characterization(graphs::complete(5)); }), ErrorKind::OrderTooSmall);
}

TEST(ClawFreeCharacterization, MatchesOracleOnOrdersSixAndSeven)
{
    for (int n : {6, 7}) {
        auto cat = generate_catalog(n);
        for (std::size_t i = 0 ; i < cat.size() ; ++i) {
            auto g = cat.graph(i);
            int delta = n;
            for (int v = 0 ; v < n ; ++v)
                delta = std::min(delta, degree_of(g, v));
            bool expected = oracle::kfc(g, n - 4);
            ASSERT_EQ(expected, oracle::claw_free(g) && delta >= n - 3) << cat.graph6[i];
            ASSERT_TRUE(check_n4_characterization(g).pass);
        }
    }
}

TEST(StarStructure, Examples)
{
    auto w = check_star_structure(w7(), 2);
    EXPECT_TRUE(w.pass);
    EXPECT_EQ(w.witness.at("profile"), "7:1,3:7");
    EXPECT_EQ(w.witness.at("minimal"), "yes");

    auto chord = graphs::wheel(7);
    Vertex hub = 0;
    for (int v = 0 ; v < 8 ; ++v)
        if (chord.degree(v) == 7)
            hub = v;
    // join two rim vertices that are not already neighbours
    for (int a = 0 ; a < 8 ; ++a)
        for (int b = a + 1 ; b < 8 ; ++b)
            if (a != hub && b != hub && ! chord.adjacent(a, b) && chord.edge_count() == 14)
                chord.connect(a, b);
    auto c = check_star_structure(chord, 2);
    EXPECT_TRUE(c.pass);
    EXPECT_EQ(c.witness.at("minimal"), "no");
    EXPECT_NE(c.witness.at("profile"), "7:1,3:7");

    EXPECT_EQ(kind_of([] { check_star_structure(graphs::complete(6), 4); }), ErrorKind::PreconditionUnmet);
    EXPECT_EQ(kind_of([] { check_star_structure(graphs::cycle(6), 2); }), ErrorKind::PreconditionUnmet);
    EXPECT_EQ(kind_of([] { check_star_structure(graphs::star(5), 2); }), ErrorKind::PreconditionUnmet);
}

TEST(MaxDegreeProfile, OrderEightTwoCritical)
{
    auto cat = generate_catalog(8);
    int n = 8, with_n2 = 0, with_n1 = 0;
    for (std::size_t i = 0 ; i < cat.size() ; ++i) {
        auto g = cat.graph(i);
        if (! is_minimally_kfc(g, 2))
            continue;
        auto vs = check_maxdeg_profile(g);
        std::vector<int> deg(n);
        for (int v = 0 ; v < n ; ++v)
            deg[v] = degree_of(g, v);
        int top = *std::max_element(deg.begin(), deg.end());
        if (top == n - 2) {
            ++with_n2;
            std::vector<int> hubs;
            for (int v = 0 ; v < n ; ++v)
                if (deg[v] == n - 2)
                    hubs.push_back(v);
            EXPECT_LE(hubs.size(), 2U);
            if (hubs.size() == 2) {
                EXPECT_FALSE(oracle::adjacent(g, hubs[0], hubs[1]));
            }
            ASSERT_TRUE(find(vs, "max-degree-n-2"));
            EXPECT_TRUE(find(vs, "max-degree-n-2")->pass);
            EXPECT_TRUE(find(vs, "two-max-degree")->pass);
        }
        if (top == n - 1) {
            ++with_n1;
            ASSERT_TRUE(find(vs, "star-structure"));
            EXPECT_TRUE(find(vs, "star-structure")->pass);
            EXPECT_FALSE(find(vs, "max-degree-n-2"));
        }
        ASSERT_TRUE(find(vs, "degree-parity"));
        EXPECT_TRUE(find(vs, "degree-parity")->pass);
    }
    EXPECT_GT(with_n2, 0);
    EXPECT_GT(with_n1, 0);
}

TEST(MaxDegreeProfile, Gates)
{
    EXPECT_EQ(kind_of([] { check_maxdeg_profile(graphs::complete(6), 4); }), ErrorKind::OrderTooSmall);
    EXPECT_EQ(kind_of([] { check_maxdeg_profile(graphs::complete(8), 2); }), ErrorKind::NotMinimallyCritical);
    // general k: only the two-vertex statement
    auto vs = check_maxdeg_profile(graphs::cycle(9), 1);
    ASSERT_EQ(vs.size(), 1U);
    EXPECT_EQ(vs[0].theorem, "two-max-degree");
    EXPECT_FALSE(vs[0].applicable);
}

TEST(MaxDegreeProfile, PathStatementBelowItsOrderGate)
{
    // a minimally 2-critical graph on 8 vertices with a path on four
    // degree-4 vertices: the statement is evaluated but not proven here
    auto g = parse_graph6("GKXc{w");
    ASSERT_TRUE(is_minimally_kfc(g, 2));
    ASSERT_EQ(g.max_degree(), 4);
    std::vector<TheoremVerdict> vs;
    ASSERT_NO_THROW(vs = check_maxdeg_profile(g));
    auto path = find(vs, "max-degree-n-4-path");
    ASSERT_TRUE(path);
    EXPECT_TRUE(path->applicable);
    EXPECT_FALSE(path->proven);
    EXPECT_FALSE(path->pass);
    // the reported path is a real one on degree-4 vertices
    auto text = path->witness.at("path");
    std::vector<int> p;
    for (std::size_t i = 0 ; i < text.size() ; i += 2)
        p.push_back(text[i] - '0');
    ASSERT_EQ(p.size(), 4U);
    for (int i = 0 ; i < 4 ; ++i)
        EXPECT_EQ(degree_of(g, p[i]), 4);
    for (int i = 0 ; i < 3 ; ++i)
        EXPECT_TRUE(oracle::adjacent(g, p[i], p[i + 1]));
    EXPECT_FALSE(find(vs, "max-degree-n-4")->applicable);
}

TEST(DegreeParity, HoldsWheneverDegreesAreHigh)
{
    for (int n = 5 ; n <= 8 ; ++n) {
        auto cat = generate_catalog(n);
        for (std::size_t i = 0 ; i < cat.size() ; ++i) {
            auto g = cat.graph(i);
            auto v = check_degree_parity(g);
            int low = n;
            for (int w = 0 ; w < n ; ++w)
                low = std::min(low, degree_of(g, w));
            ASSERT_EQ(v.applicable, low >= n - 5);
            if (v.applicable) {
                ASSERT_TRUE(v.pass) << cat.graph6[i];
            }
        }
    }
    EXPECT_FALSE(check_degree_parity(graphs::cycle(8)).applicable);
}
