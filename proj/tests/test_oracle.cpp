#include <doctest.h>

#include <tuple>
#include <vector>

#include "mincut/generate.hpp"
#include "mincut/oracle.hpp"
#include "mincut/pipeline.hpp"

using namespace mincut;

namespace {

MultiGraph identity_multigraph(const SimpleGraph& g) {
    return contract(g, {});
}

MultiGraph weighted(std::size_t n,
                    std::vector<std::tuple<VertexId, VertexId, std::uint64_t>>
                        edges) {
    return MultiGraph::from_weighted_edges(n, edges);
}

std::uint64_t side_weight(const MultiGraph& h, const VertexSet& side) {
    return cut_size(h, side, side.complement());
}

std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Random multigraph: gnp base plus counter-derived multiplicities in 1..3.
MultiGraph fuzz_multigraph(std::size_t n, double p, std::uint64_t seed) {
    SimpleGraph base = make_gnp(n, p, seed);
    std::vector<std::tuple<VertexId, VertexId, std::uint64_t>> edges;
    for (auto [u, v] : base.edges())
        edges.emplace_back(u, v, 1 + mix(seed ^ (u * 131 + v)) % 3);
    if (edges.empty()) edges.emplace_back(0, 1, 1);  // keep n >= 2 meaningful
    return weighted(n, std::move(edges));
}

}  // namespace

TEST_CASE("bounded oracle on a cycle") {
    MultiGraph c8 = identity_multigraph(make_cycle(8));

    OracleResult loose = bounded_edge_connectivity(c8, 5);
    CHECK(loose.value == 2);
    REQUIRE(loose.side.has_value());
    CHECK(side_weight(c8, *loose.side) == 2);

    OracleResult capped = bounded_edge_connectivity(c8, 2);
    CHECK(capped.value == 2);
    CHECK_FALSE(capped.side.has_value());
}

TEST_CASE("bounded oracle respects multiplicities") {
    MultiGraph two = weighted(2, {{0, 1, 3}});
    CHECK(bounded_edge_connectivity(two, 10).value == 3);
}

TEST_CASE("flow backend examples") {
    SimpleGraph bridge = build_simple_graph(
        std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                          {2, 3}},
        true).graph;
    OracleResult r = flow_bounded(identity_multigraph(bridge), 5);
    CHECK(r.value == 1);
    REQUIRE(r.side.has_value());
    CHECK(side_weight(identity_multigraph(bridge), *r.side) == 1);

    SimpleGraph k5 = make_clique_pair(5, 0);  // two disjoint K5 blocks
    OracleResult disconnected = flow_bounded(identity_multigraph(k5), 4);
    CHECK(disconnected.value == 0);

    std::vector<Edge> k5_edges;
    for (VertexId i = 0; i < 5; ++i)
        for (VertexId j = i + 1; j < 5; ++j) k5_edges.emplace_back(i, j);
    MultiGraph complete5 =
        identity_multigraph(build_simple_graph(k5_edges, true).graph);
    CHECK(flow_bounded(complete5, 3).value == 3);  // capped below lambda = 4
}

TEST_CASE("stoer-wagner examples") {
    std::vector<Edge> path{{0, 1}, {1, 2}, {2, 3}};
    MultiGraph p4 = identity_multigraph(build_simple_graph(path, true).graph);
    MinCutResult r = stoer_wagner(p4);
    CHECK(r.lambda == 1);
    CHECK(side_weight(p4, r.side) == 1);

    std::vector<Edge> k4_edges;
    for (VertexId i = 0; i < 4; ++i)
        for (VertexId j = i + 1; j < 4; ++j) k4_edges.emplace_back(i, j);
    MultiGraph k4 = identity_multigraph(build_simple_graph(k4_edges, true).graph);
    CHECK(stoer_wagner(k4).lambda == 3);

    MultiGraph pair = identity_multigraph(make_clique_pair(5, 3));
    MinCutResult planted = stoer_wagner(pair);
    CHECK(planted.lambda == 3);
    CHECK(side_weight(pair, planted.side) == 3);
}

TEST_CASE("exhaustive oracle examples") {
    MultiGraph tri = identity_multigraph(make_cycle(3));
    CHECK(exhaustive_min_cut(tri).lambda == 2);

    MultiGraph single = weighted(2, {{0, 1, 1}});
    CHECK(exhaustive_min_cut(single).lambda == 1);

    // 4-cycle with one chord.
    SimpleGraph chorded = build_simple_graph(
        std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}, true).graph;
    CHECK(exhaustive_min_cut(identity_multigraph(chorded)).lambda == 2);

    MultiGraph too_big = identity_multigraph(make_cycle(21));
    CHECK_THROWS_AS(exhaustive_min_cut(too_big), ExhaustiveTooLarge);
}

TEST_CASE("oracles require two vertices and a positive cap") {
    MultiGraph lonely = weighted(2, {{0, 1, 1}});
    CHECK_THROWS_AS(bounded_edge_connectivity(lonely, 0), Error);
    SimpleGraph one = build_simple_graph(std::vector<Edge>{}, false, 1).graph;
    CHECK_THROWS_AS(bounded_edge_connectivity(contract(one, {}), 3),
                    GraphTooSmall);
}

TEST_CASE("backends agree on fuzzed multigraphs") {
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
        std::size_t n = 4 + seed % 11;  // up to 14
        MultiGraph h = fuzz_multigraph(n, 0.2 + 0.05 * (seed % 7), seed);
        std::uint64_t all = 3 * n;  // above any possible connectivity
        std::uint64_t flow = flow_bounded(h, all).value;
        std::uint64_t sw = stoer_wagner(h).lambda;
        std::uint64_t exact = exhaustive_min_cut(h).lambda;
        CHECK(flow == exact);
        CHECK(sw == exact);
    }
}

TEST_CASE("cap law") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        MultiGraph h = fuzz_multigraph(10, 0.4, 300 + seed);
        std::uint64_t unbounded = flow_bounded(h, 30).value;
        for (std::uint64_t k : {1u, 2u, 3u, 5u}) {
            CHECK(bounded_edge_connectivity(h, k).value ==
                  std::min(unbounded, k));
        }
    }
}

TEST_CASE("returned sides always achieve the reported value") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        MultiGraph h = fuzz_multigraph(9, 0.35, 900 + seed);
        for (OracleChoice which : {OracleChoice::FlowBounded,
                                   OracleChoice::StoerWagner,
                                   OracleChoice::Exhaustive}) {
            OracleResult r = bounded_edge_connectivity(h, 27, which);
            REQUIRE(r.side.has_value());
            CHECK(side_weight(h, *r.side) == r.value);
            CHECK(r.side->size() >= 1);
            CHECK(r.side->size() <= h.vertex_count() - 1);
        }
    }
}

TEST_CASE("all minimum cut sides of a 4-cycle") {
    MultiGraph c4 = identity_multigraph(make_cycle(4));
    auto nontrivial = all_min_cut_sides(c4, true);
    REQUIRE(nontrivial.size() == 2);
    CHECK(nontrivial[0].ids() == std::vector<VertexId>{0, 1});
    CHECK(nontrivial[1].ids() == std::vector<VertexId>{0, 3});
    auto all = all_min_cut_sides(c4, false);
    CHECK(all.size() == 6);  // four trivial sides and two arc pairs
}
