#pragma once

#include <factorcrit/graph.hpp>

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace factorcrit {

inline constexpr std::string_view graph6_header = ">>graph6<<";

/**
 * Decodes one graph6 line. Accepts an optional ">>graph6<<" prefix and
 * trailing whitespace. Only the one-byte order field is supported (n <= 62).
 */
inline auto parse_graph6(std::string_view text) -> Graph
{
    if (text.starts_with(graph6_header))
        text.remove_prefix(graph6_header.size());
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
        text.remove_suffix(1);

    if (text.empty())
        throw Error(ErrorKind::MalformedEncoding, "empty graph6 string");

    for (unsigned char c : text)
        if (c < 63 || c > 126)
            throw Error(ErrorKind::MalformedEncoding, "byte " + std::to_string(c) + " outside 63..126");

    int n = static_cast<unsigned char>(text[0]) - 63;
    if (n == 63)
        throw Error(ErrorKind::UnsupportedOrder, "multi-byte order field (n >= 63)");
    if (n > max_order)
        throw Error(ErrorKind::UnsupportedOrder, "order " + std::to_string(n));

    std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t byte_count = (bit_count + 5) / 6;
    if (text.size() != 1 + byte_count)
        throw Error(ErrorKind::MalformedEncoding, "expected " + std::to_string(1 + byte_count) + " bytes for order " + std::to_string(n) + ", got " + std::to_string(text.size()));

    Graph g(n);
    std::size_t k = 0;
    for (int j = 1 ; j < n ; ++j)
        for (int i = 0 ; i < j ; ++i, ++k) {
            int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
            if ((byte >> (5 - k % 6)) & 1)
                g.connect(i, j);
        }

    for (; k < byte_count * 6 ; ++k) {
        int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
        if ((byte >> (5 - k % 6)) & 1)
            throw Error(ErrorKind::MalformedEncoding, "non-zero padding bits");
    }
    return g;
}

inline auto encode_graph6(const Graph & g) -> std::string
{
    int n = g.order();
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0, used = 0;
    for (int j = 1 ; j < n ; ++j)
        for (int i = 0 ; i < j ; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = used = 0;
            }
        }
    if (used > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - used))));
    return out;
}

struct Graph6LineError
{
    std::size_t line = 0;
    std::string message;
};

/**
 * Reads a graph6 file, one graph per line; blank lines are ignored and the
 * header may prefix the first line. A bad line is fatal (rethrown with its
 * line number) unless lenient, in which case it is recorded and skipped.
 */
inline auto read_graph6_stream(std::istream & in, bool lenient, std::vector<Graph6LineError> * errors = nullptr) -> std::vector<Graph>
{
    std::vector<Graph> result;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string_view view = line;
        if (number == 1 && view.starts_with(graph6_header))
            view.remove_prefix(graph6_header.size());
        if (view.find_first_not_of(" \t\r") == std::string_view::npos)
            continue;
        try {
            result.push_back(parse_graph6(view));
        }
        catch (const Error & e) {
            if (! lenient)
                throw Error(e.kind(), "line " + std::to_string(number) + ": " + e.what());
            if (errors)
                errors->push_back({number, e.what()});
        }
    }
    return result;
}

} // namespace factorcrit
