#include <doctest.h>

#include <algorithm>
#include <vector>

#include "mincut/generate.hpp"
#include "mincut/graph.hpp"
#include "mincut/io.hpp"
#include "mincut/looped_graph.hpp"

using namespace mincut;

namespace {

SimpleGraph from_edges(std::vector<Edge> edges, std::size_t min_n = 0) {
    return build_simple_graph(edges, true, min_n).graph;
}

SimpleGraph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return from_edges(std::move(edges));
}

// Independent edge counter used as the oracle for cut values.
std::uint64_t count_crossing(const SimpleGraph& g, const VertexSet& a,
                             const VertexSet& b) {
    std::uint64_t count = 0;
    for (auto [u, v] : g.edges()) {
        if ((a.contains(u) && b.contains(v)) ||
            (a.contains(v) && b.contains(u)))
            ++count;
    }
    return count;
}

std::uint64_t count_inside(const SimpleGraph& g, const VertexSet& a) {
    std::uint64_t count = 0;
    for (auto [u, v] : g.edges())
        if (a.contains(u) && a.contains(v)) ++count;
    return count;
}

}  // namespace

TEST_CASE("build_simple_graph constructs a triangle") {
    auto [g, report] = build_simple_graph(
        std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}}, true);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(report.duplicate_edges == 0);
    CHECK(g.has_edge(0, 2));
    CHECK_FALSE(g.has_edge(0, 0));
}

TEST_CASE("strict mode rejects duplicates and loops") {
    CHECK_THROWS_AS(
        build_simple_graph(std::vector<Edge>{{0, 1}, {0, 1}}, true),
        StrictViolation);
    CHECK_THROWS_AS(build_simple_graph(std::vector<Edge>{{2, 2}}, true),
                    StrictViolation);
    CHECK_THROWS_AS(build_simple_graph(std::vector<Edge>{}, true), EmptyGraph);
}

TEST_CASE("lenient mode deduplicates and drops loops with counts") {
    auto [g, report] = build_simple_graph(
        std::vector<Edge>{{0, 1}, {1, 0}, {2, 2}}, false);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 1);
    CHECK(report.duplicate_edges == 1);
    CHECK(report.self_loops == 1);
}

TEST_CASE("cut_size on triangle and K5") {
    SimpleGraph tri = from_edges({{0, 1}, {1, 2}, {2, 0}});
    CHECK(cut_size(tri, VertexSet(3, {0}), VertexSet(3, {1, 2})) == 2);

    SimpleGraph k5 = complete(5);
    VertexSet a(5, {0, 1});
    VertexSet b(5, {2, 3, 4});
    CHECK(count_crossing(k5, a, b) == 6);
    CHECK(cut_size(k5, a, b) == 6);

    CHECK(cut_size(k5, VertexSet::empty(5), b) == 0);
    CHECK_THROWS_AS(cut_size(k5, VertexSet(5, {0, 1}), VertexSet(5, {1, 2})),
                    OverlappingSets);
}

TEST_CASE("cut_size is symmetric and matches the volume identity") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        SimpleGraph g = make_gnp(9, 0.45, seed);
        const std::size_t n = g.vertex_count();
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); mask += 2) {
            std::vector<VertexId> ids;
            for (VertexId v = 0; v < n; ++v)
                if ((mask >> v) & 1u) ids.push_back(v);
            VertexSet a(n, ids);
            VertexSet b = a.complement();
            std::uint64_t cut = cut_size(g, a, b);
            CHECK(cut == cut_size(g, b, a));
            CHECK(cut == volume(g, a) - 2 * count_inside(g, a));
        }
    }
}

TEST_CASE("volume of the full set is twice the edge count") {
    SimpleGraph tri = from_edges({{0, 1}, {1, 2}, {2, 0}});
    CHECK(volume(tri, VertexSet::full(3)) == 6);
    SimpleGraph k5 = complete(5);
    CHECK(volume(k5, VertexSet(5, {0, 1})) == 8);
    CHECK(volume(k5, VertexSet::full(5)) == 2 * k5.edge_count());
}

TEST_CASE("min_degree") {
    CHECK(min_degree(complete(5)) == 4);
    SimpleGraph star = from_edges({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(min_degree(star) == 1);
    // Two K5 blocks joined by 3 vertex-disjoint edges: bridge endpoints
    // have degree 5, the rest 4.
    SimpleGraph pair = make_clique_pair(5, 3);
    CHECK(min_degree(pair) == 4);
}

TEST_CASE("components and connectivity") {
    CHECK(is_connected(from_edges({{0, 1}, {1, 2}, {2, 0}})));
    SimpleGraph two_edges = from_edges({{0, 1}, {2, 3}});
    auto comps = components(two_edges);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].ids() == std::vector<VertexId>{0, 1});
    CHECK(comps[1].ids() == std::vector<VertexId>{2, 3});
    SimpleGraph isolated = from_edges({}, 3);
    CHECK(components(isolated).size() == 3);
}

TEST_CASE("edge-list parsing") {
    ParsedGraph p = parse_graph("0 1\n1 2\n", GraphFormat::EdgeList);
    CHECK(p.graph.vertex_count() == 3);
    CHECK(p.graph.edge_count() == 2);
    CHECK(p.graph.has_edge(0, 1));
    CHECK(p.graph.has_edge(1, 2));

    ParsedGraph remapped = parse_graph("# comment\n7 9\n", GraphFormat::EdgeList);
    CHECK(remapped.graph.vertex_count() == 2);
    CHECK(remapped.graph.edge_count() == 1);
    CHECK(remapped.labels == std::vector<std::uint64_t>{7, 9});

    CHECK_THROWS_AS(parse_graph("0 1\n1\n", GraphFormat::EdgeList), ParseError);
    try {
        parse_graph("0 1\nnope nope\n", GraphFormat::EdgeList);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_graph("p edge 3 2\n", GraphFormat::EdgeList),
                    FormatMismatch);
}

TEST_CASE("DIMACS parsing") {
    ParsedGraph p = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n",
                                GraphFormat::Dimacs);
    CHECK(p.graph.vertex_count() == 3);
    CHECK(p.graph.edge_count() == 2);
    CHECK(p.graph.has_edge(0, 1));
    CHECK(p.graph.has_edge(1, 2));

    CHECK_THROWS_AS(parse_graph("e 1 2\n", GraphFormat::Dimacs),
                    FormatMismatch);
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 3\n", GraphFormat::Dimacs),
                    ParseError);
    CHECK_THROWS_AS(parse_graph("c only comments\n", GraphFormat::Dimacs),
                    FormatMismatch);

    // The header carries vertices that touch no edge; the round trip
    // keeps them.
    ParsedGraph isolated = parse_graph("p edge 4 1\ne 1 2\n",
                                       GraphFormat::Dimacs);
    CHECK(isolated.graph.vertex_count() == 4);
    ParsedGraph back = parse_graph(
        serialize_graph(isolated.graph, GraphFormat::Dimacs),
        GraphFormat::Dimacs);
    CHECK(back.graph.vertex_count() == 4);
    CHECK(back.graph.edges() == isolated.graph.edges());
}

TEST_CASE("parse then serialize is the identity on dense-id graphs") {
    for (const SimpleGraph& g :
         {make_cycle(9), make_clique_pair(4, 2), make_hypercube(3),
          make_gnp(10, 0.5, 77)}) {
        for (GraphFormat format : {GraphFormat::EdgeList, GraphFormat::Dimacs}) {
            if (format == GraphFormat::EdgeList && min_degree(g) == 0)
                continue;  // edge-list text cannot carry isolated vertices
            std::string text = serialize_graph(g, format);
            ParsedGraph back = parse_graph(text, format);
            CHECK(back.graph.edges() == g.edges());
            CHECK(serialize_graph(back.graph, format) == text);
        }
    }
}

TEST_CASE("generator families have the expected sizes") {
    SimpleGraph twin = make_clique_pair(100, 10);
    CHECK(twin.vertex_count() == 200);
    CHECK(twin.edge_count() == 9910);  // 2 * C(100, 2) + 10

    SimpleGraph c8 = make_cycle(8);
    CHECK(c8.vertex_count() == 8);
    CHECK(c8.edge_count() == 8);

    SimpleGraph q4 = make_hypercube(4);
    CHECK(q4.vertex_count() == 16);
    CHECK(q4.edge_count() == 32);
    CHECK(min_degree(q4) == 4);

    CHECK_THROWS_AS(make_clique_pair(5, 7), Error);
    CHECK_THROWS_AS(make_cycle(2), Error);

    // Same seed, same graph; different seed, different graph.
    CHECK(make_gnp(24, 0.4, 9).edges() == make_gnp(24, 0.4, 9).edges());
    CHECK(make_gnp(24, 0.4, 9).edges() != make_gnp(24, 0.4, 10).edges());
}

TEST_CASE("vertex set construction is validated") {
    CHECK_THROWS_AS(VertexSet(3, {0, 0}), Error);
    CHECK_THROWS_AS(VertexSet(3, {3}), Error);
    VertexSet s(5, {4, 0, 2});
    CHECK(s.ids() == std::vector<VertexId>{0, 2, 4});
    CHECK(intersection_size(s, VertexSet(5, {2, 3, 4})) == 2);
    CHECK(s.complement().ids() == std::vector<VertexId>{1, 3});
}

TEST_CASE("loop compensation makes view volumes global") {
    SimpleGraph k5 = complete(5);
    LoopedGraph whole = augment_with_loop_weights(k5, VertexSet::full(5));
    for (std::size_t i = 0; i < 5; ++i) CHECK(whole.loop_weight(i) == 0);

    VertexSet x(5, {0, 1});
    LoopedGraph view = augment_with_loop_weights(k5, x);
    CHECK(view.loop_weight(0) == 3);
    CHECK(view.loop_weight(1) == 3);
    CHECK(volume(view, VertexSet(5, {0})) == 4);
    CHECK(volume(view, x) == 8);
    CHECK(volume(view, x) == volume(k5, x));

    SimpleGraph star = build_simple_graph(
        std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}, true).graph;
    LoopedGraph center_leaf = augment_with_loop_weights(star, VertexSet(6, {0, 1}));
    CHECK(center_leaf.loop_weight(center_leaf.local_id(0)) == 4);
    CHECK(center_leaf.loop_weight(center_leaf.local_id(1)) == 0);
}

TEST_CASE("looped views preserve cross-edge counts") {
    SimpleGraph g = make_gnp(12, 0.4, 5);
    VertexSet x(12, {0, 2, 3, 5, 7, 8, 11});
    LoopedGraph view = augment_with_loop_weights(g, x);
    VertexSet a(12, {0, 3, 7});
    VertexSet b(12, {2, 5, 11});
    std::uint64_t in_view = 0;
    for (VertexId u : a.ids())
        for (std::size_t w : view.local_neighbors(view.local_id(u)))
            if (b.contains(view.global_id(w))) ++in_view;
    CHECK(in_view == cut_size(g, a, b));
    CHECK(volume(view, a) == volume(g, a));
}
