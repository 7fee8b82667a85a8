#ifndef MINCUT_IO_HPP_
#define MINCUT_IO_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut {

enum class GraphFormat { EdgeList, Dimacs };

struct ParsedGraph {
    SimpleGraph graph;
    /// Dense id -> original input label.
    std::vector<std::uint64_t> labels;
    BuildReport report;
};

/// Parses edge-list ("u v" per line, '#' comments) or DIMACS
/// ("p edge n m" header, "e u v" lines, 1-based, 'c' comments) text.
/// Labels are remapped to dense 0-based ids in ascending label order.
/// Lenient mode deduplicates and drops self-loops, reporting counts;
/// strict mode throws StrictViolation instead.
ParsedGraph parse_graph(std::string_view text, GraphFormat format,
                        bool strict = false);

/// Canonical text form: edges with u < v, sorted lexicographically.
/// Round-trips bit-exactly through parse_graph for dense-id graphs.
std::string serialize_graph(const SimpleGraph& g, GraphFormat format);

}  // namespace mincut

#endif  // MINCUT_IO_HPP_
