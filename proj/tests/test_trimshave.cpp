#include <doctest.h>

#include <vector>

#include "mincut/generate.hpp"
#include "mincut/trimshave.hpp"

using namespace mincut;

namespace {

SimpleGraph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return build_simple_graph(edges, true).graph;
}

std::uint64_t inside_degree(const SimpleGraph& g, const VertexSet& s,
                            VertexId v) {
    std::uint64_t count = 0;
    for (VertexId u : g.neighbors(v))
        if (s.contains(u)) ++count;
    return count;
}

// Reference peeling that removes one qualifying vertex at a time, chosen
// by an arbitrary priority permutation. Kept independent of trim()'s
// worklist so order-independence is actually exercised.
VertexSet reference_trim(const SimpleGraph& g, const VertexSet& s,
                         const std::vector<VertexId>& priority) {
    std::vector<bool> in(g.vertex_count(), false);
    for (VertexId v : s.ids()) in[v] = true;
    while (true) {
        VertexId pick = static_cast<VertexId>(g.vertex_count());
        std::size_t pick_rank = ~std::size_t{0};
        for (VertexId v : s.ids()) {
            if (!in[v]) continue;
            std::uint64_t inside = 0;
            for (VertexId u : g.neighbors(v))
                if (in[u]) ++inside;
            if (5 * inside < 2 * g.degree(v) && priority[v] < pick_rank) {
                pick = v;
                pick_rank = priority[v];
            }
        }
        if (pick == g.vertex_count()) break;
        in[pick] = false;
    }
    std::vector<VertexId> kept;
    for (VertexId v : s.ids())
        if (in[v]) kept.push_back(v);
    return VertexSet(g.vertex_count(), std::move(kept));
}

std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

TEST_CASE("trim keeps the full vertex set") {
    for (std::uint64_t seed : {3u, 4u}) {
        SimpleGraph g = make_gnp(15, 0.4, seed);
        VertexSet all = VertexSet::full(15);
        CHECK(trim(g, all) == all);
    }
}

TEST_CASE("trim on K6 subsets") {
    SimpleGraph k6 = complete(6);
    // Inside-degree 1 against degree 5: 5*1 < 2*5, so both vertices peel.
    CHECK(trim(k6, VertexSet(6, {0, 1})).is_empty());
    // Inside-degree 3: 5*3 >= 2*5, everything stays.
    VertexSet four(6, {0, 1, 2, 3});
    CHECK(trim(k6, four) == four);
    CHECK(trim(k6, VertexSet::empty(6)).is_empty());
}

TEST_CASE("trim is a fixed point and respects the exact threshold") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        SimpleGraph g = make_gnp(14, 0.35, 100 + seed);
        std::vector<VertexId> ids;
        for (VertexId v = 0; v < 14; ++v)
            if (mix(seed * 31 + v) % 3 != 0) ids.push_back(v);
        VertexSet s(14, ids);
        VertexSet t = trim(g, s);
        CHECK(trim(g, t) == t);
        for (VertexId v : t.ids())
            CHECK(5 * inside_degree(g, t, v) >= 2 * g.degree(v));
    }
}

TEST_CASE("trim result is independent of peeling order") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        SimpleGraph g = make_gnp(12, 0.3, 500 + seed);
        std::vector<VertexId> ids;
        for (VertexId v = 0; v < 12; ++v)
            if (mix(seed * 77 + v) % 4 != 0) ids.push_back(v);
        VertexSet s(12, ids);
        VertexSet expected = trim(g, s);
        for (std::uint64_t order = 0; order < 20; ++order) {
            std::vector<VertexId> priority(12);
            for (VertexId v = 0; v < 12; ++v)
                priority[v] = static_cast<VertexId>(
                    mix(order * 1009 + seed * 13 + v));
            CHECK(reference_trim(g, s, priority) == expected);
        }
    }
}

TEST_CASE("shave on K6") {
    SimpleGraph k6 = complete(6);
    // 5 > 5/2 + 1 holds for every vertex of the full set.
    VertexSet all = VertexSet::full(6);
    CHECK(shave(k6, all) == all);
    // Inside-degree 2 against 5/2 + 1 = 3.5 fails.
    CHECK(shave(k6, VertexSet(6, {0, 1, 2})).is_empty());
}

TEST_CASE("shave drops singletons") {
    SimpleGraph k6 = complete(6);
    CHECK(shave(k6, VertexSet(6, {3})).is_empty());
    CHECK(shave(k6, VertexSet::empty(6)).is_empty());
}

TEST_CASE("shave threshold is strict") {
    // Vertex 0 has degree 4 and inside-degree 3: 2*3 = 4 + 2 exactly, so
    // the strict comparison excludes it.
    SimpleGraph g = build_simple_graph(
        std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4},
                          {1, 2}, {1, 3}, {2, 3}},
        true).graph;
    VertexSet s(5, {0, 1, 2, 3});
    CHECK(inside_degree(g, s, 0) == 3);
    VertexSet result = shave(g, s);
    CHECK_FALSE(result.contains(0));
    // Vertices 1, 2, 3 have degree 3 and inside-degree 3: 6 > 5 keeps them.
    CHECK(result.contains(1));
    CHECK(result.contains(2));
    CHECK(result.contains(3));
}

TEST_CASE("shave is single-pass, measured against the input set") {
    // A 4-path inside a wheel-ish graph: removing low inside-degree
    // vertices is NOT iterated, so survivors are judged against the
    // original set even if their neighbors got shaved.
    SimpleGraph g = make_clique_pair(6, 2);
    VertexSet s = VertexSet::full(12);
    VertexSet once = shave(g, s);
    for (VertexId v : once.ids()) {
        CHECK(2 * inside_degree(g, s, v) > g.degree(v) + 2);
    }
}
