#include "mincut/graph.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace mincut {

VertexSet::VertexSet(std::size_t universe, std::vector<VertexId> ids)
    : universe_(universe), ids_(std::move(ids)), bits_(universe, false) {
    std::sort(ids_.begin(), ids_.end());
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        VertexId v = ids_[i];
        if (v >= universe_)
            throw Error("vertex id " + std::to_string(v) +
                        " outside universe of size " +
                        std::to_string(universe_));
        if (i > 0 && ids_[i - 1] == v)
            throw Error("duplicate vertex id " + std::to_string(v) +
                        " in vertex set");
        bits_[v] = true;
    }
}

VertexSet VertexSet::full(std::size_t universe) {
    std::vector<VertexId> ids(universe);
    for (std::size_t i = 0; i < universe; ++i) ids[i] = static_cast<VertexId>(i);
    return VertexSet(universe, std::move(ids));
}

VertexSet VertexSet::empty(std::size_t universe) {
    return VertexSet(universe, {});
}

VertexSet VertexSet::complement() const {
    std::vector<VertexId> ids;
    ids.reserve(universe_ - ids_.size());
    for (std::size_t v = 0; v < universe_; ++v)
        if (!bits_[v]) ids.push_back(static_cast<VertexId>(v));
    return VertexSet(universe_, std::move(ids));
}

std::size_t intersection_size(const VertexSet& a, const VertexSet& b) {
    const VertexSet& small = a.size() <= b.size() ? a : b;
    const VertexSet& large = a.size() <= b.size() ? b : a;
    std::size_t count = 0;
    for (VertexId v : small.ids())
        if (large.contains(v)) ++count;
    return count;
}

bool SimpleGraph::has_edge(VertexId u, VertexId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> result;
    result.reserve(m_);
    for (VertexId u = 0; u < vertex_count(); ++u)
        for (VertexId v : neighbors(u))
            if (u < v) result.emplace_back(u, v);
    return result;
}

BuildResult build_simple_graph(std::span<const Edge> edges, bool strict,
                               std::size_t min_vertices) {
    std::size_t n = min_vertices;
    for (const auto& [u, v] : edges) {
        n = std::max<std::size_t>(n, std::max(u, v) + std::size_t{1});
    }
    if (n == 0) throw EmptyGraph("graph has no vertices");

    BuildReport report;
    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u == v) {
            if (strict)
                throw StrictViolation("self-loop at vertex " +
                                      std::to_string(u));
            ++report.self_loops;
            continue;
        }
        normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    std::vector<Edge> unique_edges;
    unique_edges.reserve(normalized.size());
    for (const Edge& e : normalized) {
        if (!unique_edges.empty() && unique_edges.back() == e) {
            if (strict)
                throw StrictViolation("duplicate edge (" +
                                      std::to_string(e.first) + ", " +
                                      std::to_string(e.second) + ")");
            ++report.duplicate_edges;
            continue;
        }
        unique_edges.push_back(e);
    }

    std::vector<std::uint64_t> deg(n, 0);
    for (const auto& [u, v] : unique_edges) {
        ++deg[u];
        ++deg[v];
    }
    SimpleGraph g;
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adjacency_.resize(g.offsets_[n]);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : unique_edges) {
        g.adjacency_[cursor[u]++] = v;
        g.adjacency_[cursor[v]++] = u;
    }
    // Edges were inserted in sorted order, so each list is already ascending.
    g.m_ = unique_edges.size();
    return {std::move(g), report};
}

MultiGraph MultiGraph::from_weighted_edges(
    std::size_t n,
    std::span<const std::tuple<VertexId, VertexId, std::uint64_t>> edges) {
    if (n == 0) throw EmptyGraph("multigraph has no vertices");
    MultiGraph g;
    g.adjacency_.resize(n);
    g.origin_map_.resize(n);
    for (std::size_t v = 0; v < n; ++v)
        g.origin_map_[v] = static_cast<VertexId>(v);
    for (const auto& [u, v, w] : edges) {
        if (u >= n || v >= n)
            throw Error("vertex id outside multigraph universe");
        if (u == v) throw Error("self-loop in multigraph edge list");
        if (w == 0) throw Error("zero multiplicity in multigraph edge list");
        g.adjacency_[u].push_back({v, w});
        g.adjacency_[v].push_back({u, w});
        ++g.distinct_edges_;
        g.total_multiplicity_ += w;
    }
    for (auto& list : g.adjacency_)
        std::sort(list.begin(), list.end(),
                  [](const WeightedArc& a, const WeightedArc& b) {
                      return a.to < b.to;
                  });
    return g;
}

void MultiGraph::set_origin_map(std::vector<VertexId> origin) {
    for (VertexId id : origin)
        if (id >= vertex_count())
            throw Error("origin map entry outside contracted vertex range");
    origin_map_ = std::move(origin);
}

std::uint64_t MultiGraph::weighted_degree(VertexId v) const {
    std::uint64_t sum = 0;
    for (const WeightedArc& arc : adjacency_[v]) sum += arc.multiplicity;
    return sum;
}

namespace {

void require_disjoint(const VertexSet& a, const VertexSet& b) {
    if (intersection_size(a, b) != 0)
        throw OverlappingSets("cut_size requires disjoint vertex sets");
}

}  // namespace

std::uint64_t cut_size(const SimpleGraph& g, const VertexSet& a,
                       const VertexSet& b) {
    require_disjoint(a, b);
    std::uint64_t count = 0;
    for (VertexId u : a.ids())
        for (VertexId v : g.neighbors(u))
            if (b.contains(v)) ++count;
    return count;
}

std::uint64_t cut_size(const MultiGraph& g, const VertexSet& a,
                       const VertexSet& b) {
    require_disjoint(a, b);
    std::uint64_t count = 0;
    for (VertexId u : a.ids())
        for (const WeightedArc& arc : g.neighbors(u))
            if (b.contains(arc.to)) count += arc.multiplicity;
    return count;
}

std::uint64_t volume(const SimpleGraph& g, const VertexSet& s) {
    std::uint64_t sum = 0;
    for (VertexId v : s.ids()) sum += g.degree(v);
    return sum;
}

std::uint64_t min_degree(const SimpleGraph& g) {
    std::uint64_t best = g.degree(0);
    for (VertexId v = 1; v < g.vertex_count(); ++v)
        best = std::min(best, g.degree(v));
    return best;
}

std::vector<VertexSet> components(const SimpleGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<VertexSet> result;
    std::vector<VertexId> stack;
    for (VertexId root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<VertexId> members;
        stack.push_back(root);
        seen[root] = true;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (VertexId u : g.neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            }
        }
        result.emplace_back(n, std::move(members));
    }
    return result;
}

bool is_connected(const SimpleGraph& g) {
    return components(g).size() == 1;
}

}  // namespace mincut
