#include "mincut/generate.hpp"

#include <string>

#include "spectral.hpp"

namespace mincut {

SimpleGraph make_clique_pair(std::size_t q, std::size_t t) {
    if (q < 2) throw Error("clique-pair requires q >= 2");
    if (t > q)
        throw Error("clique-pair requires t <= q (vertex-disjoint bridges), "
                    "got t = " + std::to_string(t) + " > q = " +
                    std::to_string(q));
    std::vector<Edge> edges;
    edges.reserve(q * (q - 1) + t);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i + 1; j < q; ++j) {
            edges.emplace_back(static_cast<VertexId>(i),
                               static_cast<VertexId>(j));
            edges.emplace_back(static_cast<VertexId>(q + i),
                               static_cast<VertexId>(q + j));
        }
    for (std::size_t i = 0; i < t; ++i)
        edges.emplace_back(static_cast<VertexId>(i),
                           static_cast<VertexId>(q + i));
    return build_simple_graph(edges, true, 2 * q).graph;
}

SimpleGraph make_gnp(std::size_t n, double p, std::uint64_t seed) {
    if (n == 0) throw EmptyGraph("gnp requires n >= 1");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::uint64_t pair_index = i * n + j;
            std::uint64_t h = spectral::mix64(seed ^ spectral::mix64(pair_index));
            if (spectral::unit_double(h) < p)
                edges.emplace_back(static_cast<VertexId>(i),
                                   static_cast<VertexId>(j));
        }
    }
    return build_simple_graph(edges, true, n).graph;
}

SimpleGraph make_cycle(std::size_t n) {
    if (n < 3) throw Error("cycle requires n >= 3");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(static_cast<VertexId>(i),
                           static_cast<VertexId>((i + 1) % n));
    return build_simple_graph(edges, true, n).graph;
}

SimpleGraph make_hypercube(unsigned d) {
    if (d < 1 || d > 20) throw Error("hypercube requires 1 <= d <= 20");
    const std::size_t n = std::size_t{1} << d;
    std::vector<Edge> edges;
    edges.reserve(n * d / 2);
    for (std::size_t v = 0; v < n; ++v)
        for (unsigned bit = 0; bit < d; ++bit) {
            std::size_t u = v ^ (std::size_t{1} << bit);
            if (v < u)
                edges.emplace_back(static_cast<VertexId>(v),
                                   static_cast<VertexId>(u));
        }
    return build_simple_graph(edges, true, n).graph;
}

}  // namespace mincut
