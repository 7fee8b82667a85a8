#ifndef MINCUT_PIPELINE_HPP_
#define MINCUT_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "mincut/decompose.hpp"
#include "mincut/graph.hpp"
#include "mincut/oracle.hpp"

namespace mincut {

struct CutResult {
    std::uint64_t lambda = 0;
    /// One side of a cut in the original graph achieving lambda crossing
    /// edges, when cut recovery is enabled.
    std::optional<VertexSet> side;
};

struct StageTimings {
    double decompose_ms = 0.0;
    double trim_shave_ms = 0.0;
    double contract_ms = 0.0;
    double oracle_ms = 0.0;
    double total_ms = 0.0;
};

struct PipelineReport {
    std::size_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t delta = 0;
    double phi = 0.0;
    DecompositionReport decomposition;
    std::uint64_t trimmed_vertices = 0;
    std::uint64_t shaved_vertices = 0;
    std::size_t contracted_n = 0;
    std::uint64_t contracted_m = 0;
    std::uint64_t lambda_prime = 0;
    std::uint64_t answer = 0;
    StageTimings timings;
};

struct PipelineOptions {
    OracleChoice oracle = OracleChoice::FlowBounded;
    DecomposeOptions decompose;
    bool recover_cut = true;
};

/// Merges each set of a disjoint family into a supervertex (empty sets
/// skipped), keeping parallel edges as multiplicities and dropping edges
/// inside a set. Supervertices and untouched vertices are relabeled
/// densely by ascending minimum original id; origin_map records the
/// mapping. Throws OverlappingFamily when sets share a vertex.
MultiGraph contract(const SimpleGraph& g, std::span<const VertexSet> family);

/// Edge connectivity of a simple graph: decompose at phi = 40/delta,
/// trim and shave every part, contract, then ask the bounded oracle for
/// min(lambda(G'), delta + 1); the answer is min of that and delta.
/// Inputs with delta <= 40 skip straight to the oracle (the decomposition
/// would be the trivial one). Disconnected inputs return lambda = 0 with
/// a component as the side. Requires n >= 2.
std::pair<CutResult, PipelineReport> edge_connectivity(
    const SimpleGraph& g, const PipelineOptions& options = {});

/// True when the recorded side achieves exactly lambda crossing edges.
bool verify_cut(const SimpleGraph& g, const CutResult& cut);

}  // namespace mincut

#endif  // MINCUT_PIPELINE_HPP_
