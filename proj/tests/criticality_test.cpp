#include <factorcrit/criticality.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

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
        return ErrorKind::TheoremViolated;
    }

    auto full_mask(const Graph & g) -> std::uint64_t
    {
        return g.vertices().bits();
    }
}

TEST(Criticality, DefinitionalExamples)
{
    EXPECT_TRUE(is_k_factor_critical(graphs::complete(5), 3).verdict);
    EXPECT_TRUE(is_k_factor_critical(graphs::cycle(5), 1).verdict);

    auto c6 = is_k_factor_critical(graphs::cycle(6), 2);
    EXPECT_FALSE(c6.verdict);
    ASSERT_TRUE(c6.failing_set);
    EXPECT_EQ(*c6.failing_set, (VertexSet{0, 2}));
    EXPECT_EQ(c6.method, CriticalityMethod::Definitional);

    EXPECT_TRUE(is_k_factor_critical(graphs::cycle(6), 0).verdict);
    EXPECT_FALSE(is_k_factor_critical(graphs::star(3), 0).verdict);
}

TEST(Criticality, TutteTypeExamples)
{
    EXPECT_TRUE(kfc_via_tutte(graphs::complete(5), 3).verdict);

    auto star = kfc_via_tutte(graphs::star(3), 0);
    EXPECT_FALSE(star.verdict);
    EXPECT_EQ(*star.failing_set, VertexSet{0});
    EXPECT_EQ(star.method, CriticalityMethod::TutteType);

    // C6 - {0,2} leaves vertex 1 alone and the path 3-4-5: two odd components
    auto c6 = kfc_via_tutte(graphs::cycle(6), 2);
    EXPECT_FALSE(c6.verdict);
    EXPECT_EQ(*c6.failing_set, (VertexSet{0, 2}));
    EXPECT_EQ(c6.odd_components, 2);
    EXPECT_EQ(c6.odd_components, oracle::odd_components(graphs::cycle(6), 0b111010));
}

TEST(Criticality, OrderValidation)
{
    auto c6 = graphs::cycle(6);
    EXPECT_EQ(kind_of([&] { is_k_factor_critical(c6, 1); }), ErrorKind::ParityMismatch);
    EXPECT_EQ(kind_of([&] { is_k_factor_critical(c6, 6); }), ErrorKind::KOutOfRange);
    EXPECT_EQ(kind_of([&] { kfc_via_tutte(c6, -2); }), ErrorKind::KOutOfRange);
    EXPECT_EQ(kind_of([&] { is_minimally_kfc(c6, 3); }), ErrorKind::ParityMismatch);
}

TEST(Criticality, AgreesWithOraclesOnEverySmallLabelledGraph)
{
    for (int n = 1 ; n <= 6 ; ++n)
        for (const auto & g : oracle::all_labelled(n))
            for (int k = n % 2 ; k < n ; k += 2) {
                bool expected = oracle::kfc(g, k);
                auto def = is_k_factor_critical(g, k);
                auto tutte = kfc_via_tutte(g, k);
                ASSERT_EQ(def.verdict, expected);
                ASSERT_EQ(tutte.verdict, expected);
                if (! expected) {
                    ASSERT_EQ(def.failing_set->size(), k);
                    ASSERT_FALSE(oracle::has_pm(g, full_mask(g) & ~def.failing_set->bits()));
                    ASSERT_GT(oracle::odd_components(g, full_mask(g) & ~tutte.failing_set->bits()), tutte.failing_set->size() - k);
                }
            }
}

TEST(Criticality, AgreesWithOracleOnRandomLargerGraphs)
{
    std::mt19937_64 rng(41);
    for (int i = 0 ; i < 300 ; ++i) {
        int n = 7 + i % 5;
        auto g = oracle::random_graph(n, 0.55 + 0.05 * (i % 7), rng);
        for (int k = n % 2 ; k < n ; k += 2)
            ASSERT_EQ(is_k_factor_critical(g, k).verdict, oracle::kfc(g, k)) << encode_graph6(g) << " k=" << k;
    }
}

TEST(Minimality, Examples)
{
    EXPECT_TRUE(is_minimally_kfc(graphs::complete(6), 4));
    EXPECT_FALSE(is_minimally_kfc(graphs::complete(8), 2));
    EXPECT_TRUE(is_k_factor_critical(graphs::complete(8), 2).verdict);
    EXPECT_TRUE(first_removable_edge(graphs::complete(8), 2).has_value());
    EXPECT_TRUE(is_minimally_kfc(graphs::cycle(5), 1));
    EXPECT_FALSE(is_minimally_kfc(graphs::cycle(6), 2));
}

TEST(Minimality, CompleteGraphsAreMinimallyNearlyFullyCritical)
{
    for (int n = 4 ; n <= 10 ; ++n)
        EXPECT_TRUE(is_minimally_kfc(graphs::complete(n), n - 2)) << n;
}

TEST(Minimality, AgreesWithEdgeDeletionOracle)
{
    for (int n = 2 ; n <= 6 ; ++n)
        for (const auto & g : oracle::all_labelled(n))
            for (int k = n % 2 ; k < n ; k += 2) {
                bool expected = oracle::kfc(g, k);
                for (auto e : g.edges())
                    expected = expected && ! oracle::kfc(remove_edge(g, e.first, e.second), k);
                ASSERT_EQ(is_minimally_kfc(g, k), expected);
            }
}

TEST(Witness, Examples)
{
    auto k6 = graphs::complete(6);
    EXPECT_EQ(minimality_witness(k6, 4, Edge{0, 1}), (VertexSet{2, 3, 4, 5}));
    EXPECT_EQ(minimality_witness(k6, 4, Edge{2, 4}), (VertexSet{0, 1, 3, 5}));

    // for edge 01 of C5, removing 2 or 4 leaves a P4 whose end edge is 01;
    // removing 3 leaves the path 4-0-1-2, matched by 40 and 12 instead
    auto c5 = graphs::cycle(5);
    EXPECT_EQ(minimality_witness(c5, 1, Edge{0, 1}), VertexSet{2});
    EXPECT_EQ(all_minimality_witnesses(c5, 1, Edge{0, 1}), (std::vector<VertexSet>{{2}, {4}}));

    for (auto e : graphs::complete(8).edges())
        EXPECT_FALSE(minimality_witness(graphs::complete(8), 2, e).has_value());
}

TEST(Witness, Errors)
{
    EXPECT_EQ(kind_of([] { minimality_witness(graphs::cycle(5), 1, Edge{0, 2}); }), ErrorKind::EdgeAbsent);
    // detection is lazy: for edge 34 the sweep reaches {0,2}, which isolates 1
    EXPECT_EQ(kind_of([] { minimality_witness(graphs::cycle(6), 2, Edge{3, 4}); }), ErrorKind::NotCritical);
    EXPECT_EQ(kind_of([] { minimality_certificate(graphs::complete(8), 2); }), ErrorKind::NotMinimallyCritical);
    EXPECT_EQ(kind_of([] { minimality_certificate(graphs::cycle(6), 2); }), ErrorKind::NotMinimallyCritical);
}

TEST(Witness, CertificateVerifiesEdgeByEdge)
{
    for (const auto & g : {graphs::cycle(5), graphs::complete(6), graphs::wheel(7)}) {
        int k = g.order() == 5 ? 1 : g.order() == 6 ? 4 : 2;
        auto cert = minimality_certificate(g, k);
        ASSERT_EQ(cert.witnesses.size(), static_cast<std::size_t>(g.edge_count()));
        for (auto [e, s] : cert.witnesses) {
            EXPECT_EQ(s.size(), k);
            EXPECT_FALSE(s.contains(e.first) || s.contains(e.second));
            auto d = delete_vertices(g, s);
            Edge mapped{d.old_to_new[e.first], d.old_to_new[e.second]};
            EXPECT_TRUE(forced_edge(d.graph, mapped));
        }
    }
}

TEST(Witness, ExistsExactlyWhenEdgeDeletionBreaksCriticality)
{
    for (int n = 2 ; n <= 6 ; ++n)
        for (const auto & g : oracle::all_labelled(n))
            for (int k = n % 2 ; k < n ; k += 2) {
                if (! oracle::kfc(g, k))
                    continue;
                for (auto e : g.edges()) {
                    auto s = minimality_witness(g, k, e);
                    ASSERT_EQ(s.has_value(), ! oracle::kfc(remove_edge(g, e.first, e.second), k));
                    if (s) {
                        std::uint64_t rest = full_mask(g) & ~s->bits();
                        ASSERT_TRUE(oracle::has_pm(remove_edge(g, e.first, e.second), rest) == false);
                        ASSERT_TRUE(oracle::has_pm(g, rest));
                    }
                }
            }
}

TEST(DegreeSumReduction, Examples)
{
    auto k6e = remove_edge(graphs::complete(6), 0, 1);
    EXPECT_TRUE(ps_reduction_check(k6e, 2, 0, 1));
    EXPECT_TRUE(is_k_factor_critical(k6e, 2).verdict);

    EXPECT_EQ(kind_of([] { ps_reduction_check(graphs::cycle(6), 0, 0, 3); }), ErrorKind::PreconditionUnmet);
    EXPECT_EQ(kind_of([] { ps_reduction_check(graphs::cycle(6), 0, 0, 1); }), ErrorKind::PreconditionUnmet);

    EXPECT_TRUE(ps_reduction_check(remove_edge(graphs::complete(5), 0, 1), 1, 0, 1));
}

TEST(DegreeSumReduction, HoldsOnEverySmallLabelledGraph)
{
    for (int n = 2 ; n <= 6 ; ++n)
        for (const auto & g : oracle::all_labelled(n))
            for (int k = n % 2 ; k < n ; k += 2)
                for (int x = 0 ; x < n ; ++x)
                    for (int y = x + 1 ; y < n ; ++y)
                        if (! g.adjacent(x, y) && g.degree(x) + g.degree(y) >= n + k - 1) {
                            ASSERT_TRUE(ps_reduction_check(g, k, x, y));
                            ASSERT_EQ(oracle::kfc(g, k), oracle::kfc(add_edge(g, x, y), k));
                        }
}

TEST(DownwardCriticality, Examples)
{
    EXPECT_TRUE(downward_criticality_check(graphs::complete(6), 4));
    EXPECT_TRUE(downward_criticality_check(graphs::wheel(5), 2));
    EXPECT_TRUE(downward_criticality_check(graphs::cycle(5), 1));
    EXPECT_EQ(kind_of([] { downward_criticality_check(graphs::cycle(6), 2); }), ErrorKind::PreconditionUnmet);
    EXPECT_EQ(kind_of([] { downward_criticality_check(graphs::cycle(6), 0); }), ErrorKind::PreconditionUnmet);
}

TEST(DownwardCriticality, HoldsOnEverySmallCriticalGraph)
{
    for (int n = 2 ; n <= 6 ; ++n)
        for (const auto & g : oracle::all_labelled(n))
            for (int k = std::max(1, n % 2) ; k < n ; k += 2) {
                if (! oracle::kfc(g, k))
                    continue;
                ASSERT_TRUE(downward_criticality_check(g, k));
                ASSERT_GE(oracle::vertex_connectivity(g), k);
                ASSERT_GE(oracle::edge_connectivity(g), k + 1);
            }
}
