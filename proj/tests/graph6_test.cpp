#include <factorcrit/graph6.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace factorcrit;

namespace {
    auto kind_of(std::string_view text) -> ErrorKind
    {
        try {
            parse_graph6(text);
        }
        catch (const Error & e) {
            return e.kind();
        }
        ADD_FAILURE() << "no error for " << text;
        return ErrorKind::TheoremViolated;
    }
}

TEST(Graph6, DecodesHandWorkedExamples)
{
    auto k2 = parse_graph6("A_");
    EXPECT_EQ(k2.order(), 2);
    EXPECT_EQ(k2.edge_count(), 1);
    EXPECT_EQ(k2, graphs::complete(2));

    auto e5 = parse_graph6("D??");
    EXPECT_EQ(e5.order(), 5);
    EXPECT_EQ(e5.edge_count(), 0);

    EXPECT_EQ(parse_graph6("Bw"), graphs::complete(3));
}

TEST(Graph6, EncodesHandWorkedExamples)
{
    EXPECT_EQ(encode_graph6(graphs::complete(2)), "A_");
    EXPECT_EQ(encode_graph6(graphs::empty(5)), "D??");
    EXPECT_EQ(encode_graph6(graphs::complete(3)), "Bw");
    EXPECT_EQ(encode_graph6(graphs::petersen()), "IheA@GUAo");
}

TEST(Graph6, HeaderAndWhitespace)
{
    EXPECT_EQ(parse_graph6(">>graph6<<Bw"), graphs::complete(3));
    EXPECT_EQ(parse_graph6("Bw\r\n"), graphs::complete(3));
}

TEST(Graph6, Errors)
{
    EXPECT_EQ(kind_of(""), ErrorKind::MalformedEncoding);
    EXPECT_EQ(kind_of("D?"), ErrorKind::MalformedEncoding);
    EXPECT_EQ(kind_of("D???"), ErrorKind::MalformedEncoding);
    EXPECT_EQ(kind_of("A!"), ErrorKind::MalformedEncoding);
    // padding bit set: K2 needs one bit, '`' sets the second
    EXPECT_EQ(kind_of("A`"), ErrorKind::MalformedEncoding);
    EXPECT_EQ(kind_of("~?@~"), ErrorKind::UnsupportedOrder);
}

TEST(Graph6, RoundTripsEverySmallLabelledGraph)
{
    for (int n = 0 ; n <= 6 ; ++n)
        for (const auto & g : oracle::all_labelled(n))
            ASSERT_EQ(parse_graph6(encode_graph6(g)), g);
}

TEST(Graph6, RoundTripsRandomLargeGraphs)
{
    std::mt19937_64 rng(3);
    for (int n : {7, 13, 31, 62}) {
        auto g = oracle::random_graph(n, 0.3, rng);
        auto text = encode_graph6(g);
        EXPECT_EQ(text.size(), 1 + (n * (n - 1) / 2 + 5) / 6);
        EXPECT_EQ(parse_graph6(text), g);
    }
}

TEST(Graph6, StreamStrictAndLenient)
{
    std::istringstream good(">>graph6<<A_\nBw\n\nD??\n");
    auto graphs_read = read_graph6_stream(good, false);
    ASSERT_EQ(graphs_read.size(), 3u);
    EXPECT_EQ(graphs_read[1], graphs::complete(3));

    std::istringstream bad("A_\nB!\nBw\n");
    try {
        read_graph6_stream(bad, false);
        FAIL();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::MalformedEncoding);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }

    std::istringstream bad_again("A_\nB!\nBw\n");
    std::vector<Graph6LineError> errors;
    auto lenient = read_graph6_stream(bad_again, true, &errors);
    EXPECT_EQ(lenient.size(), 2u);
    ASSERT_EQ(errors.size(), 1u);
    EXPECT_EQ(errors[0].line, 2u);
}
