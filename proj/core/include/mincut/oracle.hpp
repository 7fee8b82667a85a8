#ifndef MINCUT_ORACLE_HPP_
#define MINCUT_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut {

enum class OracleChoice { FlowBounded, StoerWagner, Exhaustive };

struct OracleResult {
    /// min(lambda(H), k).
    std::uint64_t value = 0;
    /// Present exactly when value < k; a vertex set achieving cut weight
    /// equal to value.
    std::optional<VertexSet> side;
};

/// One contract, three interchangeable backends. Multiplicities are
/// respected throughout. Requires n >= 2 and k >= 1.
OracleResult bounded_edge_connectivity(
    const MultiGraph& h, std::uint64_t k,
    OracleChoice which = OracleChoice::FlowBounded);

/// k-bounded backend: fixes s = 0 and runs a shortest-augmenting-path
/// max flow to every other vertex, aborting each flow at k. O(n m k).
/// Per-target flows run in parallel up to the MINCUT_THREADS cap; the
/// minimum is reduced deterministically (ties to the smaller target).
OracleResult flow_bounded(const MultiGraph& h, std::uint64_t k);

struct MinCutResult {
    std::uint64_t lambda = 0;
    VertexSet side;
};

/// Exact global minimum cut by minimum-cut-phase iterations over the
/// weighted collapse of H. Deterministic tie-breaking by vertex id.
MinCutResult stoer_wagner(const MultiGraph& h);

/// Ground truth by enumerating every proper side containing vertex 0.
/// Requires n <= 20.
MinCutResult exhaustive_min_cut(const MultiGraph& h);

/// All sides of minimum cuts containing vertex 0, in mask enumeration
/// order; optionally only non-trivial ones (both sides >= 2 vertices).
/// Requires n <= 20. Returns an empty list when nontrivial_only is set
/// and every minimum cut is trivial.
std::vector<VertexSet> all_min_cut_sides(const MultiGraph& h,
                                         bool nontrivial_only);

}  // namespace mincut

#endif  // MINCUT_ORACLE_HPP_
