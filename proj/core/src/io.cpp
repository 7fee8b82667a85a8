#include "mincut/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace mincut {

namespace {

struct Line {
    std::size_t number;  // 1-based
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back({number, text.substr(start, end - start)});
        start = end + 1;
        ++number;
        if (end == text.size()) break;
    }
    return lines;
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                                   line[i] == '\r'))
            ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
               line[i] != '\r')
            ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                     value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, "expected nonnegative integer, got '" +
                                   std::string(token) + "'");
    return value;
}

ParsedGraph parse_edge_list(std::string_view text, bool strict) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw_edges;
    for (const Line& line : split_lines(text)) {
        auto tokens = tokenize(line.text);
        if (tokens.empty() || tokens[0].front() == '#') continue;
        if (tokens[0] == "p" || tokens[0] == "e" || tokens[0] == "c")
            throw FormatMismatch("line " + std::to_string(line.number) +
                                 ": DIMACS-style line in edge-list input");
        if (tokens.size() != 2)
            throw ParseError(line.number, "expected two vertex ids");
        raw_edges.emplace_back(parse_uint(tokens[0], line.number),
                               parse_uint(tokens[1], line.number));
    }

    std::vector<std::uint64_t> labels;
    labels.reserve(raw_edges.size() * 2);
    for (const auto& [u, v] : raw_edges) {
        labels.push_back(u);
        labels.push_back(v);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    auto dense_id = [&labels](std::uint64_t label) {
        auto it = std::lower_bound(labels.begin(), labels.end(), label);
        return static_cast<VertexId>(it - labels.begin());
    };
    std::vector<Edge> edges;
    edges.reserve(raw_edges.size());
    for (const auto& [u, v] : raw_edges)
        edges.emplace_back(dense_id(u), dense_id(v));

    BuildResult built = build_simple_graph(edges, strict, labels.size());
    return {std::move(built.graph), std::move(labels), built.report};
}

ParsedGraph parse_dimacs(std::string_view text, bool strict) {
    bool header_seen = false;
    std::uint64_t n = 0;
    std::vector<Edge> edges;
    for (const Line& line : split_lines(text)) {
        auto tokens = tokenize(line.text);
        if (tokens.empty() || tokens[0] == "c") continue;
        if (tokens[0] == "p") {
            if (header_seen)
                throw ParseError(line.number, "duplicate problem line");
            if (tokens.size() != 4 || tokens[1] != "edge")
                throw ParseError(line.number,
                                 "expected 'p edge <n> <m>' problem line");
            n = parse_uint(tokens[2], line.number);
            parse_uint(tokens[3], line.number);  // declared m, not enforced
            header_seen = true;
            continue;
        }
        if (tokens[0] == "e") {
            if (!header_seen)
                throw FormatMismatch("line " + std::to_string(line.number) +
                                     ": edge before 'p edge' header");
            if (tokens.size() != 3)
                throw ParseError(line.number, "expected 'e <u> <v>'");
            std::uint64_t u = parse_uint(tokens[1], line.number);
            std::uint64_t v = parse_uint(tokens[2], line.number);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line.number, "vertex id out of range [1, " +
                                                  std::to_string(n) + "]");
            edges.emplace_back(static_cast<VertexId>(u - 1),
                               static_cast<VertexId>(v - 1));
            continue;
        }
        throw FormatMismatch("line " + std::to_string(line.number) +
                             ": unknown DIMACS line type '" +
                             std::string(tokens[0]) + "'");
    }
    if (!header_seen) throw FormatMismatch("missing 'p edge' header");
    if (n == 0) throw EmptyGraph("DIMACS header declares zero vertices");

    BuildResult built = build_simple_graph(edges, strict, n);
    std::vector<std::uint64_t> labels(n);
    for (std::uint64_t v = 0; v < n; ++v) labels[v] = v + 1;
    return {std::move(built.graph), std::move(labels), built.report};
}

}  // namespace

ParsedGraph parse_graph(std::string_view text, GraphFormat format,
                        bool strict) {
    switch (format) {
        case GraphFormat::EdgeList:
            return parse_edge_list(text, strict);
        case GraphFormat::Dimacs:
            return parse_dimacs(text, strict);
    }
    throw Error("unknown graph format");
}

std::string serialize_graph(const SimpleGraph& g, GraphFormat format) {
    std::string out;
    auto edges = g.edges();
    if (format == GraphFormat::Dimacs) {
        out += "p edge " + std::to_string(g.vertex_count()) + " " +
               std::to_string(g.edge_count()) + "\n";
        for (const auto& [u, v] : edges)
            out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) +
                   "\n";
    } else {
        for (const auto& [u, v] : edges)
            out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

}  // namespace mincut
