#include "mincut/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <thread>

#include "mincut/runtime.hpp"

namespace mincut {

namespace {

constexpr std::size_t kExhaustiveVertexLimit = 20;

void require_at_least_two(const MultiGraph& h) {
    if (h.vertex_count() < 2)
        throw GraphTooSmall("connectivity oracle needs at least 2 vertices");
}

// Residual network for undirected unit-pair arcs. Arc 2e and 2e+1 are the
// two directions of distinct edge e; pushing on one direction frees
// capacity on the other.
struct FlowNetwork {
    std::size_t n;
    std::vector<std::uint64_t> cap;      // per arc
    std::vector<VertexId> arc_to;        // per arc
    std::vector<std::vector<std::uint32_t>> out;  // arc ids per vertex

    explicit FlowNetwork(const MultiGraph& h) : n(h.vertex_count()), out(n) {
        for (VertexId u = 0; u < n; ++u) {
            for (const WeightedArc& arc : h.neighbors(u)) {
                if (arc.to < u) continue;
                std::uint32_t fwd = static_cast<std::uint32_t>(arc_to.size());
                arc_to.push_back(arc.to);
                cap.push_back(arc.multiplicity);
                arc_to.push_back(u);
                cap.push_back(arc.multiplicity);
                out[u].push_back(fwd);
                out[arc.to].push_back(fwd + 1);
            }
        }
    }
};

struct FlowScratch {
    std::vector<std::int64_t> flow;       // signed net flow per arc
    std::vector<std::uint32_t> parent_arc;
    std::vector<bool> visited;
    std::vector<VertexId> bfs_queue;

    explicit FlowScratch(const FlowNetwork& net)
        : flow(net.cap.size(), 0),
          parent_arc(net.n, 0),
          visited(net.n, false),
          bfs_queue() {
        bfs_queue.reserve(net.n);
    }

    void reset() { std::fill(flow.begin(), flow.end(), std::int64_t{0}); }
};

std::uint64_t residual(const FlowNetwork& net, const FlowScratch& s,
                       std::uint32_t arc) {
    return net.cap[arc] - s.flow[arc] + s.flow[arc ^ 1];
}

// Max flow s -> t by shortest augmenting paths, aborted once the flow
// reaches bound. Returns min(maxflow, bound).
std::uint64_t bounded_max_flow(const FlowNetwork& net, FlowScratch& s,
                               VertexId source, VertexId sink,
                               std::uint64_t bound) {
    s.reset();
    std::uint64_t total = 0;
    while (total < bound) {
        std::fill(s.visited.begin(), s.visited.end(), false);
        s.bfs_queue.clear();
        s.bfs_queue.push_back(source);
        s.visited[source] = true;
        bool reached = false;
        for (std::size_t head = 0; head < s.bfs_queue.size() && !reached;
             ++head) {
            VertexId v = s.bfs_queue[head];
            for (std::uint32_t arc : net.out[v]) {
                VertexId w = net.arc_to[arc];
                if (s.visited[w] || residual(net, s, arc) == 0) continue;
                s.visited[w] = true;
                s.parent_arc[w] = arc;
                s.bfs_queue.push_back(w);
                if (w == sink) {
                    reached = true;
                    break;
                }
            }
        }
        if (!reached) break;

        std::uint64_t bottleneck = std::numeric_limits<std::uint64_t>::max();
        for (VertexId v = sink; v != source;) {
            std::uint32_t arc = s.parent_arc[v];
            bottleneck = std::min(bottleneck, residual(net, s, arc));
            v = net.arc_to[arc ^ 1];
        }
        bottleneck = std::min(bottleneck, bound - total);
        for (VertexId v = sink; v != source;) {
            std::uint32_t arc = s.parent_arc[v];
            s.flow[arc] += static_cast<std::int64_t>(bottleneck);
            v = net.arc_to[arc ^ 1];
        }
        total += bottleneck;
    }
    return total;
}

// Vertices reachable from source in the residual network of the last
// computed flow: the source side of a minimum s-t cut.
VertexSet residual_reachable(const FlowNetwork& net, FlowScratch& s,
                             VertexId source) {
    std::fill(s.visited.begin(), s.visited.end(), false);
    s.bfs_queue.clear();
    s.bfs_queue.push_back(source);
    s.visited[source] = true;
    for (std::size_t head = 0; head < s.bfs_queue.size(); ++head) {
        VertexId v = s.bfs_queue[head];
        for (std::uint32_t arc : net.out[v]) {
            VertexId w = net.arc_to[arc];
            if (!s.visited[w] && residual(net, s, arc) > 0) {
                s.visited[w] = true;
                s.bfs_queue.push_back(w);
            }
        }
    }
    std::vector<VertexId> side;
    for (VertexId v = 0; v < net.n; ++v)
        if (s.visited[v]) side.push_back(v);
    return VertexSet(net.n, std::move(side));
}

}  // namespace

OracleResult flow_bounded(const MultiGraph& h, std::uint64_t k) {
    require_at_least_two(h);
    if (k < 1) throw Error("flow oracle requires k >= 1");
    const std::size_t n = h.vertex_count();
    const VertexId source = 0;

    FlowNetwork net(h);
    std::vector<std::uint64_t> value_by_target(n,
        std::numeric_limits<std::uint64_t>::max());

    const std::size_t workers =
        std::min<std::size_t>(worker_count(), n - 1);
    auto run_range = [&](VertexId begin, VertexId end) {
        FlowScratch scratch(net);
        for (VertexId t = begin; t < end; ++t)
            value_by_target[t] = bounded_max_flow(net, scratch, source, t, k);
    };
    if (workers <= 1 || n - 1 < 4) {
        run_range(1, static_cast<VertexId>(n));
    } else {
        std::vector<std::thread> pool;
        std::size_t span = (n - 1 + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            VertexId begin = static_cast<VertexId>(1 + w * span);
            VertexId end = static_cast<VertexId>(
                std::min<std::size_t>(1 + (w + 1) * span, n));
            if (begin >= end) break;
            pool.emplace_back(run_range, begin, end);
        }
        for (std::thread& worker : pool) worker.join();
    }

    VertexId best_target = 1;
    for (VertexId t = 2; t < n; ++t)
        if (value_by_target[t] < value_by_target[best_target]) best_target = t;
    std::uint64_t value = value_by_target[best_target];

    OracleResult result;
    result.value = value;
    if (value < k) {
        FlowScratch scratch(net);
        bounded_max_flow(net, scratch, source, best_target, k);
        result.side = residual_reachable(net, scratch, source);
    }
    return result;
}

MinCutResult stoer_wagner(const MultiGraph& h) {
    require_at_least_two(h);
    const std::size_t n = h.vertex_count();

    // Dense weights over the active supervertices.
    std::vector<std::vector<std::uint64_t>> weight(
        n, std::vector<std::uint64_t>(n, 0));
    for (VertexId u = 0; u < n; ++u)
        for (const WeightedArc& arc : h.neighbors(u))
            weight[u][arc.to] = arc.multiplicity;

    std::vector<bool> active(n, true);
    std::vector<std::vector<VertexId>> members(n);
    for (VertexId v = 0; v < n; ++v) members[v] = {v};

    std::uint64_t best_value = std::numeric_limits<std::uint64_t>::max();
    std::vector<VertexId> best_side;

    for (std::size_t phase = 0; phase + 1 < n; ++phase) {
        // Maximum adjacency order, ties broken by smaller id.
        std::vector<std::uint64_t> key(n, 0);
        std::vector<bool> in_order(n, false);
        VertexId prev = 0, last = 0;
        std::size_t active_count = 0;
        for (VertexId v = 0; v < n; ++v)
            if (active[v]) ++active_count;
        for (std::size_t step = 0; step < active_count; ++step) {
            VertexId pick = n;
            for (VertexId v = 0; v < n; ++v) {
                if (!active[v] || in_order[v]) continue;
                if (pick == n || key[v] > key[pick]) pick = v;
            }
            in_order[pick] = true;
            for (VertexId v = 0; v < n; ++v)
                if (active[v] && !in_order[v]) key[v] += weight[pick][v];
            prev = last;
            last = pick;
        }

        // Cut of the phase: the last vertex against everything else.
        if (key[last] < best_value) {
            best_value = key[last];
            best_side = members[last];
        }

        // Merge last into prev.
        active[last] = false;
        members[prev].insert(members[prev].end(), members[last].begin(),
                             members[last].end());
        for (VertexId v = 0; v < n; ++v) {
            if (!active[v] || v == prev) continue;
            weight[prev][v] += weight[last][v];
            weight[v][prev] = weight[prev][v];
        }
    }

    return {best_value, VertexSet(n, std::move(best_side))};
}

MinCutResult exhaustive_min_cut(const MultiGraph& h) {
    require_at_least_two(h);
    const std::size_t n = h.vertex_count();
    if (n > kExhaustiveVertexLimit)
        throw ExhaustiveTooLarge("exhaustive oracle limited to " +
                                 std::to_string(kExhaustiveVertexLimit) +
                                 " vertices, got " + std::to_string(n));

    auto edges_of = [&h, n]() {
        std::vector<std::tuple<VertexId, VertexId, std::uint64_t>> edges;
        for (VertexId u = 0; u < n; ++u)
            for (const WeightedArc& arc : h.neighbors(u))
                if (u < arc.to) edges.emplace_back(u, arc.to, arc.multiplicity);
        return edges;
    };
    const auto edges = edges_of();

    std::uint64_t best_value = std::numeric_limits<std::uint64_t>::max();
    std::uint32_t best_mask = 0;
    // The all-ones mask is excluded: its side would be V itself.
    const std::uint32_t mask_count = (1u << (n - 1)) - 1;
    for (std::uint32_t mask = 0; mask < mask_count; ++mask) {
        // Side = {0} plus the vertices selected by mask over 1..n-1.
        std::uint64_t value = 0;
        for (const auto& [u, v, w] : edges) {
            bool u_in = u == 0 || (mask >> (u - 1)) & 1u;
            bool v_in = v == 0 || (mask >> (v - 1)) & 1u;
            if (u_in != v_in) value += w;
        }
        if (value < best_value) {
            best_value = value;
            best_mask = mask;
        }
    }

    std::vector<VertexId> side{0};
    for (VertexId v = 1; v < n; ++v)
        if ((best_mask >> (v - 1)) & 1u) side.push_back(v);
    return {best_value, VertexSet(n, std::move(side))};
}

std::vector<VertexSet> all_min_cut_sides(const MultiGraph& h,
                                         bool nontrivial_only) {
    const std::size_t n = h.vertex_count();
    const std::uint64_t lambda = exhaustive_min_cut(h).lambda;

    std::vector<std::tuple<VertexId, VertexId, std::uint64_t>> edges;
    for (VertexId u = 0; u < n; ++u)
        for (const WeightedArc& arc : h.neighbors(u))
            if (u < arc.to) edges.emplace_back(u, arc.to, arc.multiplicity);

    std::vector<VertexSet> sides;
    const std::uint32_t mask_count = (1u << (n - 1)) - 1;
    for (std::uint32_t mask = 0; mask < mask_count; ++mask) {
        std::uint64_t value = 0;
        for (const auto& [u, v, w] : edges) {
            bool u_in = u == 0 || (mask >> (u - 1)) & 1u;
            bool v_in = v == 0 || (mask >> (v - 1)) & 1u;
            if (u_in != v_in) value += w;
        }
        if (value != lambda) continue;
        std::vector<VertexId> side{0};
        for (VertexId v = 1; v < n; ++v)
            if ((mask >> (v - 1)) & 1u) side.push_back(v);
        std::size_t small = std::min(side.size(), n - side.size());
        if (nontrivial_only && small < 2) continue;
        sides.emplace_back(n, std::move(side));
    }
    return sides;
}

OracleResult bounded_edge_connectivity(const MultiGraph& h, std::uint64_t k,
                                       OracleChoice which) {
    require_at_least_two(h);
    if (k < 1) throw Error("connectivity oracle requires k >= 1");
    switch (which) {
        case OracleChoice::FlowBounded:
            return flow_bounded(h, k);
        case OracleChoice::StoerWagner: {
            MinCutResult cut = stoer_wagner(h);
            if (cut.lambda < k) return {cut.lambda, std::move(cut.side)};
            return {k, std::nullopt};
        }
        case OracleChoice::Exhaustive: {
            MinCutResult cut = exhaustive_min_cut(h);
            if (cut.lambda < k) return {cut.lambda, std::move(cut.side)};
            return {k, std::nullopt};
        }
    }
    throw Error("unknown oracle backend");
}

}  // namespace mincut
