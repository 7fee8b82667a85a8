#ifndef MINCUT_GENERATE_HPP_
#define MINCUT_GENERATE_HPP_

#include <cstdint>

#include "mincut/graph.hpp"

namespace mincut {

/// Deterministic test-graph families. Every generator is bit-reproducible
/// across runs and platforms for fixed arguments; gnp uses counter-based
/// pseudo-randomness over the edge index, never a platform RNG.

/// Two disjoint K_q cliques joined by t vertex-disjoint edges
/// (i, q + i) for i < t. Requires 2 <= q and t <= q.
SimpleGraph make_clique_pair(std::size_t q, std::size_t t);

/// Erdos-Renyi sample: each pair independently present with probability p.
SimpleGraph make_gnp(std::size_t n, double p, std::uint64_t seed);

/// Cycle on n >= 3 vertices.
SimpleGraph make_cycle(std::size_t n);

/// d-dimensional hypercube, vertices 0..2^d - 1 joined when they differ
/// in exactly one bit. Requires 1 <= d <= 20.
SimpleGraph make_hypercube(unsigned d);

}  // namespace mincut

#endif  // MINCUT_GENERATE_HPP_
