#ifndef MINCUT_TRIMSHAVE_HPP_
#define MINCUT_TRIMSHAVE_HPP_

#include "mincut/graph.hpp"

namespace mincut {

/// Repeatedly removes vertices v with |E(v, S)| < 2 deg(v) / 5 until none
/// remain, where deg is always taken in g. The result is the unique
/// maximal subset in which every vertex keeps inside-degree at least
/// 2 deg(v) / 5. All threshold comparisons are exact integer arithmetic.
VertexSet trim(const SimpleGraph& g, const VertexSet& s);

/// Single pass keeping exactly the vertices with |E(v, S)| > deg(v)/2 + 1
/// (strict), inside-degrees measured against the input set.
VertexSet shave(const SimpleGraph& g, const VertexSet& s);

}  // namespace mincut

#endif  // MINCUT_TRIMSHAVE_HPP_
