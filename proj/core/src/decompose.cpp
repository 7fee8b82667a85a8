#include "mincut/decompose.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "spectral.hpp"

namespace mincut {

const char* to_string(CertStatus::Kind kind) {
    switch (kind) {
        case CertStatus::Kind::Exhaustive: return "exhaustive";
        case CertStatus::Kind::Spectral: return "spectral";
        case CertStatus::Kind::Singleton: return "singleton";
        case CertStatus::Kind::Uncertified: return "uncertified";
    }
    return "unknown";
}

void Partition::validate(const SimpleGraph& g,
                         std::size_t exhaustive_limit) const {
    const std::size_t n = g.vertex_count();
    if (part_of.size() != n)
        throw InvariantViolation("partition part_of has wrong length");
    if (cert.size() != parts.size())
        throw InvariantViolation("partition has one cert per part");

    std::vector<bool> covered(n, false);
    VertexId previous_min = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const VertexSet& part = parts[p];
        if (part.is_empty())
            throw InvariantViolation("partition contains an empty part");
        if (part.universe_size() != n)
            throw InvariantViolation("part keyed to a different graph");
        VertexId part_min = part.ids().front();
        if (p > 0 && part_min <= previous_min)
            throw InvariantViolation("parts not in canonical order");
        previous_min = part_min;
        for (VertexId v : part.ids()) {
            if (covered[v])
                throw InvariantViolation("vertex " + std::to_string(v) +
                                         " in two parts");
            covered[v] = true;
            if (part_of[v] != p)
                throw InvariantViolation("part_of inconsistent at vertex " +
                                         std::to_string(v));
        }
        switch (cert[p].kind) {
            case CertStatus::Kind::Singleton:
                if (part.size() != 1)
                    throw InvariantViolation(
                        "singleton cert on a part of size " +
                        std::to_string(part.size()));
                break;
            case CertStatus::Kind::Exhaustive:
                if (part.size() > exhaustive_limit)
                    throw InvariantViolation(
                        "exhaustive cert beyond the exhaustive limit");
                break;
            case CertStatus::Kind::Spectral:
                break;
            case CertStatus::Kind::Uncertified:
                throw InvariantViolation("uncertified part emitted");
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (!covered[v])
            throw InvariantViolation("vertex " + std::to_string(v) +
                                     " not covered by any part");
}

bool certify_exhaustive(const SimpleGraph& g, const VertexSet& x, double phi,
                        std::size_t exhaustive_limit) {
    const std::size_t k = x.size();
    if (k > exhaustive_limit || k > 31)
        throw TooLarge("part of size " + std::to_string(k) +
                       " exceeds exhaustive limit " +
                       std::to_string(std::min<std::size_t>(exhaustive_limit, 31)));
    if (k <= 1) return true;

    // Local adjacency and global degrees over the part.
    std::vector<std::uint32_t> adj_mask(k, 0);
    std::vector<std::uint64_t> deg(k);
    for (std::size_t i = 0; i < k; ++i) {
        VertexId v = x.ids()[i];
        deg[i] = g.degree(v);
        for (VertexId u : g.neighbors(v)) {
            if (!x.contains(u)) continue;
            auto it = std::lower_bound(x.ids().begin(), x.ids().end(), u);
            adj_mask[i] |= 1u << (it - x.ids().begin());
        }
    }
    std::uint64_t total_volume = 0;
    for (std::size_t i = 0; i < k; ++i) total_volume += deg[i];

    // Enumerate subsets containing local vertex 0; the condition is
    // symmetric under complement.
    const std::uint32_t full = (1u << k) - 1;
    for (std::uint32_t mask = 1; mask != full; mask += 2) {
        std::uint64_t vol = 0;
        std::uint64_t crossing = 0;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            std::size_t i = std::countr_zero(rest);
            vol += deg[i];
            crossing += std::popcount(adj_mask[i] & ~mask & full);
        }
        std::uint64_t min_vol = std::min(vol, total_volume - vol);
        if (static_cast<double>(crossing) <
            phi * static_cast<double>(min_vol))
            return false;
    }
    return true;
}

CertStatus certify_spectral(const LoopedGraph& h, double phi,
                            std::size_t dense_limit) {
    if (h.size() < 2)
        throw GraphTooSmall("spectral certificate needs at least 2 vertices");
    if (phi == 0.0) return CertStatus::spectral(0.0, 0.0);

    spectral::Lambda2Estimate est;
    if (h.size() <= dense_limit) {
        est = spectral::dense_lambda2(h);
    } else {
        auto maybe = spectral::power_iteration_lambda2(h);
        if (!maybe) return CertStatus::uncertified();
        est = *maybe;
    }
    if ((est.lambda2 - est.residual) / 2.0 >= phi)
        return CertStatus::spectral(est.lambda2, est.residual);
    // Failed certificates keep the estimate and residual for reporting.
    return {CertStatus::Kind::Uncertified, est.lambda2, est.residual};
}

std::optional<SweepCut> fiedler_sweep(const LoopedGraph& h, double phi) {
    const std::size_t n = h.size();
    if (n < 2) throw GraphTooSmall("sweep needs at least 2 vertices");

    auto est = spectral::power_iteration_lambda2(h);
    if (!est) return std::nullopt;  // no convergence: treat as no cut found

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        double ya = est->embedding[a];
        double yb = est->embedding[b];
        if (ya != yb) return ya < yb;
        return h.global_id(a) < h.global_id(b);
    });

    std::vector<std::size_t> position(n);
    for (std::size_t rank = 0; rank < n; ++rank) position[order[rank]] = rank;

    const std::uint64_t total_volume = h.volume();
    std::uint64_t prefix_volume = 0;
    std::uint64_t crossing = 0;
    double best_conductance = std::numeric_limits<double>::infinity();
    std::size_t best_prefix = 0;
    for (std::size_t rank = 0; rank + 1 < n; ++rank) {
        std::size_t v = order[rank];
        prefix_volume += h.degree(v);
        std::uint64_t to_prefix = 0;
        for (std::size_t u : h.local_neighbors(v))
            if (position[u] < rank) ++to_prefix;
        crossing += h.local_degree(v) - 2 * to_prefix;
        std::uint64_t min_vol = std::min(prefix_volume,
                                         total_volume - prefix_volume);
        double conductance = static_cast<double>(crossing) /
                             static_cast<double>(min_vol);
        if (conductance < best_conductance) {
            best_conductance = conductance;
            best_prefix = rank + 1;
        }
    }
    if (!(best_conductance < phi)) return std::nullopt;

    std::vector<VertexId> side;
    side.reserve(best_prefix);
    for (std::size_t rank = 0; rank < best_prefix; ++rank)
        side.push_back(h.global_id(order[rank]));
    return SweepCut{VertexSet(h.base().vertex_count(), std::move(side)),
                    best_conductance};
}

namespace {

struct DecomposeState {
    const SimpleGraph& g;
    double phi;
    const DecomposeOptions& options;
    std::vector<std::pair<VertexSet, CertStatus>> emitted;
    std::size_t fallback_count = 0;
    std::size_t max_depth = 0;
};

void emit(DecomposeState& state, VertexSet part, CertStatus cert) {
    state.emitted.emplace_back(std::move(part), cert);
}

void emit_singletons(DecomposeState& state, const VertexSet& part) {
    for (VertexId v : part.ids())
        emit(state, VertexSet(part.universe_size(), {v}),
             CertStatus::singleton());
}

// Splits a view-disconnected candidate along its pieces, otherwise sweeps
// for a low-conductance cut; stable candidates are certified or, failing
// that, dissolved into singletons.
void refine(DecomposeState& state, const VertexSet& x, std::size_t depth) {
    state.max_depth = std::max(state.max_depth, depth);
    if (x.size() == 1) {
        emit(state, x, CertStatus::singleton());
        return;
    }

    LoopedGraph view = augment_with_loop_weights(state.g, x);

    // A part whose induced subgraph is disconnected always has a
    // zero-conductance split; take it structurally.
    {
        std::vector<bool> seen(x.size(), false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t u : view.local_neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = true;
                    ++reached;
                    stack.push_back(u);
                }
            }
        }
        if (reached < x.size()) {
            std::vector<VertexId> inside, outside;
            for (std::size_t i = 0; i < x.size(); ++i)
                (seen[i] ? inside : outside).push_back(view.global_id(i));
            refine(state, VertexSet(x.universe_size(), std::move(inside)),
                   depth + 1);
            refine(state, VertexSet(x.universe_size(), std::move(outside)),
                   depth + 1);
            return;
        }
    }

    if (auto cut = fiedler_sweep(view, state.phi)) {
        std::vector<VertexId> rest;
        rest.reserve(x.size() - cut->side.size());
        for (VertexId v : x.ids())
            if (!cut->side.contains(v)) rest.push_back(v);
        refine(state, cut->side, depth + 1);
        refine(state, VertexSet(x.universe_size(), std::move(rest)),
               depth + 1);
        return;
    }

    // Subset enumeration uses 32-bit masks, so the exhaustive route is
    // capped at 31 vertices no matter the configured limit.
    const std::size_t enumerable =
        std::min<std::size_t>(state.options.exhaustive_limit, 31);
    if (x.size() <= enumerable) {
        if (certify_exhaustive(state.g, x, state.phi, enumerable)) {
            emit(state, x, CertStatus::exhaustive());
            return;
        }
    } else {
        CertStatus cert = certify_spectral(view, state.phi,
                                           state.options.spectral_dense_limit);
        if (cert.kind == CertStatus::Kind::Spectral) {
            emit(state, x, cert);
            return;
        }
    }

    ++state.fallback_count;
    emit_singletons(state, x);
}

Partition assemble(const SimpleGraph& g,
                   std::vector<std::pair<VertexSet, CertStatus>> emitted) {
    std::sort(emitted.begin(), emitted.end(),
              [](const auto& a, const auto& b) {
                  return a.first.ids().front() < b.first.ids().front();
              });
    Partition partition;
    partition.part_of.assign(g.vertex_count(), 0);
    partition.parts.reserve(emitted.size());
    partition.cert.reserve(emitted.size());
    for (std::size_t p = 0; p < emitted.size(); ++p) {
        for (VertexId v : emitted[p].first.ids())
            partition.part_of[v] = static_cast<std::uint32_t>(p);
        partition.parts.push_back(std::move(emitted[p].first));
        partition.cert.push_back(emitted[p].second);
    }
    return partition;
}

}  // namespace

std::pair<Partition, DecompositionReport> expander_decompose(
    const SimpleGraph& g, double phi, const DecomposeOptions& options) {
    if (!(phi >= 0.0) || !std::isfinite(phi))
        throw InvalidPhi("phi must be finite and nonnegative, got " +
                         std::to_string(phi));

    DecomposeState state{g, phi, options, {}, 0, 0};
    if (phi >= 1.0) {
        emit_singletons(state, VertexSet::full(g.vertex_count()));
    } else if (phi == 0.0) {
        for (VertexSet& component : components(g)) {
            CertStatus cert =
                component.size() == 1
                    ? CertStatus::singleton()
                    : (component.size() <= options.exhaustive_limit
                           ? CertStatus::exhaustive()
                           : CertStatus::spectral(0.0, 0.0));
            emit(state, std::move(component), cert);
        }
    } else {
        for (VertexSet& component : components(g))
            refine(state, component, 0);
    }

    Partition partition = assemble(g, std::move(state.emitted));
    partition.validate(g, options.exhaustive_limit);

    DecompositionReport report;
    report.phi = phi;
    report.fallback_count = state.fallback_count;
    report.recursion_depth = state.max_depth;
    for (const VertexSet& part : partition.parts) {
        ++report.part_sizes[part.size()];
        report.crossing_edges += cut_size(g, part, part.complement());
    }
    return {std::move(partition), std::move(report)};
}

}  // namespace mincut
