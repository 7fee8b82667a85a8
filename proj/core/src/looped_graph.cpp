#include "mincut/looped_graph.hpp"

#include <string>

namespace mincut {

LoopedGraph::LoopedGraph(const SimpleGraph& base, VertexSet subset,
                         std::vector<std::uint64_t> loop_weights)
    : base_(&base),
      subset_(std::move(subset)),
      loop_weights_(std::move(loop_weights)) {
    if (subset_.universe_size() != base.vertex_count())
        throw Error("looped view subset keyed to a different graph");
    if (loop_weights_.size() != subset_.size())
        throw Error("looped view needs one loop weight per subset vertex");

    const std::size_t k = subset_.size();
    local_of_global_.assign(base.vertex_count(), k);
    for (std::size_t i = 0; i < k; ++i)
        local_of_global_[subset_.ids()[i]] = i;

    local_offsets_.assign(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
        std::uint64_t inside = 0;
        for (VertexId u : base.neighbors(subset_.ids()[i]))
            if (subset_.contains(u)) ++inside;
        local_offsets_[i + 1] = local_offsets_[i] + inside;
    }
    local_adjacency_.resize(local_offsets_[k]);
    for (std::size_t i = 0; i < k; ++i) {
        std::uint64_t cursor = local_offsets_[i];
        for (VertexId u : base.neighbors(subset_.ids()[i]))
            if (subset_.contains(u))
                local_adjacency_[cursor++] = local_of_global_[u];
        total_volume_ += degree(i);
    }
}

std::size_t LoopedGraph::local_id(VertexId global) const {
    std::size_t local = local_of_global_[global];
    if (local >= subset_.size())
        throw Error("vertex " + std::to_string(global) +
                    " is not in the looped view");
    return local;
}

LoopedGraph augment_with_loop_weights(const SimpleGraph& g,
                                      const VertexSet& x) {
    std::vector<std::uint64_t> loops(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        VertexId v = x.ids()[i];
        std::uint64_t inside = 0;
        for (VertexId u : g.neighbors(v))
            if (x.contains(u)) ++inside;
        loops[i] = g.degree(v) - inside;
    }
    return LoopedGraph(g, x, std::move(loops));
}

std::uint64_t volume(const LoopedGraph& h, const VertexSet& s) {
    std::uint64_t sum = 0;
    for (VertexId v : s.ids()) sum += h.degree(h.local_id(v));
    return sum;
}

}  // namespace mincut
