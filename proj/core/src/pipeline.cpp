#include "mincut/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <string>
#include <tuple>

#include "mincut/trimshave.hpp"

namespace mincut {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

// Trivial partition bookkeeping for the delta <= 40 fast path, where the
// decomposition stage is skipped entirely.
DecompositionReport trivial_decomposition_report(const SimpleGraph& g,
                                                 double phi) {
    DecompositionReport report;
    report.phi = phi;
    report.part_sizes[1] = g.vertex_count();
    report.crossing_edges = 2 * g.edge_count();
    return report;
}

CutResult min_degree_cut(const SimpleGraph& g, std::uint64_t delta,
                         bool recover) {
    CutResult result;
    result.lambda = delta;
    if (!recover) return result;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == delta) {
            result.side = VertexSet(g.vertex_count(), {v});
            break;
        }
    }
    return result;
}

VertexSet expand_side(const SimpleGraph& g, const MultiGraph& contracted,
                      const VertexSet& contracted_side) {
    std::vector<VertexId> original;
    const auto& origin = contracted.origin_map();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (contracted_side.contains(origin[v])) original.push_back(v);
    return VertexSet(g.vertex_count(), std::move(original));
}

}  // namespace

MultiGraph contract(const SimpleGraph& g, std::span<const VertexSet> family) {
    const std::size_t n = g.vertex_count();

    // Group id per vertex: family sets first, then leftover singletons.
    constexpr std::uint32_t kUngrouped = ~0u;
    std::vector<std::uint32_t> group_of(n, kUngrouped);
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (VertexId v : family[i].ids()) {
            if (group_of[v] != kUngrouped)
                throw OverlappingFamily("vertex " + std::to_string(v) +
                                        " appears in two contracted sets");
            group_of[v] = static_cast<std::uint32_t>(i);
        }
    }

    // Dense relabeling by ascending minimum original id.
    std::vector<VertexId> new_id(n, 0);
    std::vector<bool> group_seen(family.size(), false);
    VertexId next = 0;
    for (VertexId v = 0; v < n; ++v) {
        std::uint32_t grp = group_of[v];
        if (grp == kUngrouped) {
            new_id[v] = next++;
        } else if (!group_seen[grp]) {
            group_seen[grp] = true;
            VertexId id = next++;
            for (VertexId u : family[grp].ids()) new_id[u] = id;
        }
    }

    std::map<std::pair<VertexId, VertexId>, std::uint64_t> multiplicity;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v : g.neighbors(u)) {
            if (u >= v) continue;
            VertexId cu = new_id[u];
            VertexId cv = new_id[v];
            if (cu == cv) continue;  // edge inside a contracted set
            ++multiplicity[{std::min(cu, cv), std::max(cu, cv)}];
        }
    }

    std::vector<std::tuple<VertexId, VertexId, std::uint64_t>> edges;
    edges.reserve(multiplicity.size());
    for (const auto& [pair, count] : multiplicity)
        edges.emplace_back(pair.first, pair.second, count);

    MultiGraph result = MultiGraph::from_weighted_edges(next, edges);
    result.set_origin_map(std::move(new_id));
    return result;
}

std::pair<CutResult, PipelineReport> edge_connectivity(
    const SimpleGraph& g, const PipelineOptions& options) {
    const std::size_t n = g.vertex_count();
    if (n < 2)
        throw GraphTooSmall("edge connectivity needs at least 2 vertices");

    const auto t_total = Clock::now();
    PipelineReport report;
    report.n = n;
    report.m = g.edge_count();
    report.delta = min_degree(g);

    if (!is_connected(g)) {
        report.phi = 0.0;
        report.decomposition.phi = 0.0;
        report.contracted_n = n;
        report.contracted_m = g.edge_count();
        report.lambda_prime = 0;
        report.answer = 0;
        CutResult cut;
        cut.lambda = 0;
        if (options.recover_cut) cut.side = components(g).front();
        report.timings.total_ms = ms_since(t_total);
        if (cut.side && !verify_cut(g, cut))
            throw InvariantViolation("recovered cut does not match lambda");
        return {std::move(cut), std::move(report)};
    }

    const std::uint64_t delta = report.delta;
    const double phi = 40.0 / static_cast<double>(delta);
    report.phi = phi;

    MultiGraph contracted;
    std::uint64_t oracle_cap = 0;
    if (delta <= 40) {
        // phi >= 1 would force the trivial partition; the oracle runs on
        // the input graph directly, capped at delta.
        report.decomposition = trivial_decomposition_report(g, phi);
        const auto t_contract = Clock::now();
        contracted = contract(g, {});
        report.timings.contract_ms = ms_since(t_contract);
        oracle_cap = delta;
    } else {
        const auto t_decompose = Clock::now();
        auto [partition, decomposition_report] =
            expander_decompose(g, phi, options.decompose);
        report.decomposition = std::move(decomposition_report);
        report.timings.decompose_ms = ms_since(t_decompose);

        const auto t_trim = Clock::now();
        std::vector<VertexSet> contractible;
        contractible.reserve(partition.parts.size());
        for (const VertexSet& part : partition.parts) {
            VertexSet trimmed = trim(g, part);
            VertexSet shaved = shave(g, trimmed);
            report.trimmed_vertices += part.size() - trimmed.size();
            report.shaved_vertices += trimmed.size() - shaved.size();
            if (!shaved.is_empty()) contractible.push_back(std::move(shaved));
        }
        report.timings.trim_shave_ms = ms_since(t_trim);

        const auto t_contract = Clock::now();
        contracted = contract(g, contractible);
        report.timings.contract_ms = ms_since(t_contract);
        oracle_cap = delta + 1;
    }

    report.contracted_n = contracted.vertex_count();
    report.contracted_m = contracted.total_multiplicity();

    CutResult cut;
    const auto t_oracle = Clock::now();
    if (contracted.vertex_count() < 2) {
        // Everything was contracted into one vertex: no cut of the
        // contracted graph exists, so only the trivial bound remains.
        report.lambda_prime = oracle_cap;
        cut = min_degree_cut(g, delta, options.recover_cut);
        cut.lambda = delta;
    } else {
        OracleResult oracle_result =
            bounded_edge_connectivity(contracted, oracle_cap, options.oracle);
        report.lambda_prime = oracle_result.value;
        const std::uint64_t answer = std::min(oracle_result.value, delta);
        if (oracle_result.value < delta) {
            if (options.recover_cut && oracle_result.side)
                cut.side = expand_side(g, contracted, *oracle_result.side);
        } else {
            cut = min_degree_cut(g, delta, options.recover_cut);
        }
        cut.lambda = answer;
    }
    report.timings.oracle_ms = ms_since(t_oracle);

    report.answer = std::min(report.lambda_prime, delta);
    report.timings.total_ms = ms_since(t_total);

    if (report.answer != cut.lambda)
        throw InvariantViolation("report answer disagrees with cut lambda");
    if (cut.side && !verify_cut(g, cut))
        throw InvariantViolation("recovered cut does not match lambda");
    return {std::move(cut), std::move(report)};
}

bool verify_cut(const SimpleGraph& g, const CutResult& cut) {
    if (!cut.side) return false;
    const VertexSet& side = *cut.side;
    if (side.is_empty() || side.size() >= g.vertex_count()) return false;
    return cut_size(g, side, side.complement()) == cut.lambda;
}

}  // namespace mincut
