#include "mincut/trimshave.hpp"

#include <set>
#include <vector>

namespace mincut {

namespace {

// Removal condition: 5 * |E(v, S)| < 2 * deg(v).
bool should_remove(std::uint64_t inside, std::uint64_t degree) {
    return 5 * inside < 2 * degree;
}

}  // namespace

VertexSet trim(const SimpleGraph& g, const VertexSet& s) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> in(n, false);
    std::vector<std::uint64_t> inside(n, 0);
    for (VertexId v : s.ids()) in[v] = true;
    for (VertexId v : s.ids())
        for (VertexId u : g.neighbors(v))
            if (in[u]) ++inside[v];

    // Worklist in ascending id order; the fixed point is order-independent.
    std::set<VertexId> worklist;
    for (VertexId v : s.ids())
        if (should_remove(inside[v], g.degree(v))) worklist.insert(v);

    std::size_t removed = 0;
    while (!worklist.empty()) {
        VertexId v = *worklist.begin();
        worklist.erase(worklist.begin());
        in[v] = false;
        ++removed;
        for (VertexId u : g.neighbors(v)) {
            if (!in[u]) continue;
            --inside[u];
            if (should_remove(inside[u], g.degree(u))) worklist.insert(u);
        }
    }

    std::vector<VertexId> kept;
    kept.reserve(s.size() - removed);
    for (VertexId v : s.ids())
        if (in[v]) kept.push_back(v);
    VertexSet result(n, std::move(kept));

    // Every kept vertex must meet the threshold against the result.
    for (VertexId v : result.ids()) {
        std::uint64_t live = 0;
        for (VertexId u : g.neighbors(v))
            if (result.contains(u)) ++live;
        if (should_remove(live, g.degree(v)))
            throw InvariantViolation("trim fixed point violated at vertex " +
                                     std::to_string(v));
    }
    return result;
}

VertexSet shave(const SimpleGraph& g, const VertexSet& s) {
    std::vector<VertexId> kept;
    for (VertexId v : s.ids()) {
        std::uint64_t inside = 0;
        for (VertexId u : g.neighbors(v))
            if (s.contains(u)) ++inside;
        // Keep condition: |E(v, S)| > deg(v)/2 + 1, exactly.
        if (2 * inside > g.degree(v) + 2) kept.push_back(v);
    }
    return VertexSet(g.vertex_count(), std::move(kept));
}

}  // namespace mincut
