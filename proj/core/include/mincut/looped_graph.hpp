#ifndef MINCUT_LOOPED_GRAPH_HPP_
#define MINCUT_LOOPED_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut {

/// View of a simple graph restricted to a vertex subset, with a
/// nonnegative loop weight per vertex. A loop of weight w adds exactly w
/// to the vertex's degree, so volumes inside the view can be made to
/// match volumes in the base graph. Vertices of the view are addressed
/// by local index; global_id maps back to the base graph.
class LoopedGraph {
public:
    LoopedGraph(const SimpleGraph& base, VertexSet subset,
                std::vector<std::uint64_t> loop_weights);

    std::size_t size() const { return subset_.size(); }
    const SimpleGraph& base() const { return *base_; }
    const VertexSet& subset() const { return subset_; }

    VertexId global_id(std::size_t local) const { return subset_.ids()[local]; }
    std::size_t local_id(VertexId global) const;

    /// Neighbors within the subset, as local indices, sorted ascending.
    std::span<const std::size_t> local_neighbors(std::size_t local) const {
        return {local_adjacency_.data() + local_offsets_[local],
                local_adjacency_.data() + local_offsets_[local + 1]};
    }
    std::uint64_t local_degree(std::size_t local) const {
        return local_offsets_[local + 1] - local_offsets_[local];
    }
    std::uint64_t loop_weight(std::size_t local) const {
        return loop_weights_[local];
    }
    /// Degree for volume purposes: local degree plus loop weight.
    std::uint64_t degree(std::size_t local) const {
        return local_degree(local) + loop_weights_[local];
    }

    /// Total volume of the view (sum of looped degrees).
    std::uint64_t volume() const { return total_volume_; }

private:
    const SimpleGraph* base_;
    VertexSet subset_;
    std::vector<std::uint64_t> loop_weights_;
    std::vector<std::uint64_t> local_offsets_;
    std::vector<std::size_t> local_adjacency_;
    std::vector<std::size_t> local_of_global_;
    std::uint64_t total_volume_ = 0;
};

/// View of g restricted to x with loop_weight(v) = deg_g(v) - |E(v, x)|,
/// so every volume inside the view equals the volume in g.
LoopedGraph augment_with_loop_weights(const SimpleGraph& g,
                                      const VertexSet& x);

/// Sum of looped degrees over s, which must be a subset of h's subset
/// (given in global ids).
std::uint64_t volume(const LoopedGraph& h, const VertexSet& s);

}  // namespace mincut

#endif  // MINCUT_LOOPED_GRAPH_HPP_
