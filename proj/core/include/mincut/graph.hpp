#ifndef MINCUT_GRAPH_HPP_
#define MINCUT_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mincut/errors.hpp"

namespace mincut {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Sorted vertex set with a membership bitmap keyed to a fixed universe
/// [0, n). Ids are unique and in range; both are checked at construction.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::size_t universe, std::vector<VertexId> ids);

    static VertexSet full(std::size_t universe);
    static VertexSet empty(std::size_t universe);

    bool contains(VertexId v) const {
        return v < bits_.size() && bits_[v];
    }
    const std::vector<VertexId>& ids() const { return ids_; }
    std::size_t size() const { return ids_.size(); }
    std::size_t universe_size() const { return universe_; }
    bool is_empty() const { return ids_.empty(); }

    VertexSet complement() const;

    bool operator==(const VertexSet& other) const {
        return universe_ == other.universe_ && ids_ == other.ids_;
    }

private:
    std::size_t universe_ = 0;
    std::vector<VertexId> ids_;
    std::vector<bool> bits_;
};

/// Number of vertices shared by two sets over the same universe.
std::size_t intersection_size(const VertexSet& a, const VertexSet& b);

struct BuildReport {
    std::uint64_t duplicate_edges = 0;
    std::uint64_t self_loops = 0;
};

struct BuildResult;

/// Immutable undirected simple graph in CSR form. Neighbor lists are
/// sorted ascending; no self-loops, no parallel edges.
class SimpleGraph {
public:
    std::size_t vertex_count() const { return offsets_.size() - 1; }
    std::uint64_t edge_count() const { return m_; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adjacency_.data() + offsets_[v],
                adjacency_.data() + offsets_[v + 1]};
    }
    std::uint64_t degree(VertexId v) const {
        return offsets_[v + 1] - offsets_[v];
    }
    bool has_edge(VertexId u, VertexId v) const;

    /// All edges as (u, v) pairs with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend BuildResult build_simple_graph(std::span<const Edge> edges,
                                          bool strict,
                                          std::size_t min_vertices);

private:
    std::vector<std::uint64_t> offsets_{0};
    std::vector<VertexId> adjacency_;
    std::uint64_t m_ = 0;
};

struct BuildResult {
    SimpleGraph graph;
    BuildReport report;
};

/// Builds a simple graph from an edge list. Vertex count is
/// max(largest id + 1, min_vertices). In strict mode duplicate edges and
/// self-loops throw StrictViolation; in lenient mode they are dropped and
/// counted in the report.
BuildResult build_simple_graph(std::span<const Edge> edges, bool strict,
                               std::size_t min_vertices = 0);

struct WeightedArc {
    VertexId to;
    std::uint64_t multiplicity;
};

/// Undirected multigraph with integer edge multiplicities, produced by
/// contraction. Symmetric, loop-free, multiplicities >= 1. origin_map
/// records which contracted vertex each original vertex became.
class MultiGraph {
public:
    static MultiGraph from_weighted_edges(
        std::size_t n,
        std::span<const std::tuple<VertexId, VertexId, std::uint64_t>> edges);

    std::size_t vertex_count() const { return adjacency_.size(); }
    /// Distinct neighbor pairs, each counted once.
    std::uint64_t distinct_edge_count() const { return distinct_edges_; }
    /// Sum of multiplicities over distinct edges.
    std::uint64_t total_multiplicity() const { return total_multiplicity_; }

    std::span<const WeightedArc> neighbors(VertexId v) const {
        return adjacency_[v];
    }
    std::uint64_t weighted_degree(VertexId v) const;

    const std::vector<VertexId>& origin_map() const { return origin_map_; }

    /// Replaces the origin map; every entry must be a valid contracted
    /// vertex id. Used by builders such as contract().
    void set_origin_map(std::vector<VertexId> origin);

private:
    std::vector<std::vector<WeightedArc>> adjacency_;
    std::vector<VertexId> origin_map_;
    std::uint64_t distinct_edges_ = 0;
    std::uint64_t total_multiplicity_ = 0;
};

/// |E(A, B)| for disjoint A, B; multiplicities counted in the multigraph
/// overload. Throws OverlappingSets if A and B intersect.
std::uint64_t cut_size(const SimpleGraph& g, const VertexSet& a,
                       const VertexSet& b);
std::uint64_t cut_size(const MultiGraph& g, const VertexSet& a,
                       const VertexSet& b);

/// Sum of degrees over S.
std::uint64_t volume(const SimpleGraph& g, const VertexSet& s);

std::uint64_t min_degree(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);

/// Connected components, ordered by smallest contained vertex id.
std::vector<VertexSet> components(const SimpleGraph& g);

}  // namespace mincut

#endif  // MINCUT_GRAPH_HPP_
