#include "mincut/verification.hpp"

#include <algorithm>
#include <string>

#include "mincut/generate.hpp"
#include "mincut/pipeline.hpp"
#include "mincut/trimshave.hpp"

namespace mincut {

namespace {

std::uint64_t pipeline_answer(const SimpleGraph& g, OracleChoice oracle) {
    PipelineOptions options;
    options.oracle = oracle;
    options.recover_cut = true;
    return edge_connectivity(g, options).second.answer;
}

void compare(const SimpleGraph& g, OracleChoice oracle,
             const std::string& name, bool with_exhaustive,
             OracleEquivalenceSummary& summary) {
    std::uint64_t answer = pipeline_answer(g, oracle);
    MultiGraph identity = contract(g, {});

    std::uint64_t reference = stoer_wagner(identity).lambda;
    ++summary.stoer_wagner_total;
    if (answer != reference) {
        ++summary.stoer_wagner_mismatches;
        summary.failures.push_back(name + ": pipeline " +
                                   std::to_string(answer) + " != stoer-wagner " +
                                   std::to_string(reference));
    }
    if (with_exhaustive && g.vertex_count() <= 14) {
        std::uint64_t exact = exhaustive_min_cut(identity).lambda;
        ++summary.exhaustive_total;
        if (answer != exact) {
            ++summary.exhaustive_mismatches;
            summary.failures.push_back(name + ": pipeline " +
                                       std::to_string(answer) +
                                       " != exhaustive " +
                                       std::to_string(exact));
        }
    }
}

}  // namespace

OracleEquivalenceSummary run_oracle_equivalence(std::size_t trials,
                                                std::size_t max_n,
                                                std::uint64_t seed,
                                                OracleChoice oracle,
                                                std::size_t min_exhaustive) {
    OracleEquivalenceSummary summary;

    for (std::size_t n = 3; n <= std::min<std::size_t>(60, max_n); ++n)
        compare(make_cycle(n), oracle, "cycle-" + std::to_string(n), true,
                summary);

    for (unsigned d = 2; d <= 5; ++d) {
        if ((std::size_t{1} << d) > max_n) break;
        compare(make_hypercube(d), oracle, "hypercube-" + std::to_string(d),
                true, summary);
    }

    for (std::size_t q = 3; q <= 12; ++q) {
        if (2 * q > max_n) break;
        for (std::size_t t : {std::size_t{1}, (q + 1) / 2, q})
            compare(make_clique_pair(q, t), oracle,
                    "clique-pair-" + std::to_string(q) + "-" +
                        std::to_string(t),
                    true, summary);
    }

    // Seed rounds of gnp until the Stoer-Wagner comparison count reaches
    // the requested number of trials.
    const double densities[] = {0.1, 0.3, 0.6};
    for (std::uint64_t round = 0;
         max_n >= 6 && summary.stoer_wagner_total < trials; ++round) {
        for (std::size_t n = 6;
             n <= max_n && summary.stoer_wagner_total < trials; n += 2) {
            for (std::size_t pi = 0; pi < 3; ++pi) {
                std::uint64_t instance_seed =
                    seed + 1000003 * round + 17 * n + pi;
                compare(make_gnp(n, densities[pi], instance_seed), oracle,
                        "gnp-" + std::to_string(n) + "-p" +
                            std::to_string(pi) + "-s" +
                            std::to_string(instance_seed),
                        true, summary);
            }
        }
    }

    // Extra small-graph rounds until the exhaustive-oracle block is
    // large enough.
    for (std::uint64_t round = 1000;
         max_n >= 6 && summary.exhaustive_total < min_exhaustive; ++round) {
        for (std::size_t n = 6;
             n <= std::min<std::size_t>(14, max_n) &&
             summary.exhaustive_total < min_exhaustive;
             n += 2) {
            for (std::size_t pi = 0; pi < 3; ++pi) {
                std::uint64_t instance_seed =
                    seed + 1000003 * round + 17 * n + pi;
                compare(make_gnp(n, densities[pi], instance_seed), oracle,
                        "gnp-small-" + std::to_string(n) + "-p" +
                            std::to_string(pi) + "-s" +
                            std::to_string(instance_seed),
                        true, summary);
            }
        }
    }

    // Planted instances whose minimum degree exceeds the oracle-only
    // cutoff, so the decomposition, trim/shave, and contraction stages
    // all execute. q = 42 sits just above the cutoff where cliques fail
    // spectral certification and the singleton fallback carries the run.
    for (std::size_t q : {std::size_t{42}, std::size_t{85}, std::size_t{100}}) {
        for (std::size_t t : {std::size_t{1}, std::size_t{5}, std::size_t{11}}) {
            SimpleGraph g = make_clique_pair(q, t);
            std::uint64_t answer = pipeline_answer(g, oracle);
            std::uint64_t reference = stoer_wagner(contract(g, {})).lambda;
            ++summary.decompose_path_total;
            if (answer != reference) {
                ++summary.decompose_path_mismatches;
                summary.failures.push_back(
                    "clique-pair-" + std::to_string(q) + "-" +
                    std::to_string(t) + ": pipeline " + std::to_string(answer) +
                    " != stoer-wagner " + std::to_string(reference));
            }
        }
    }
    return summary;
}

namespace {

struct SafetyInstance {
    std::string name;
    SimpleGraph graph;
};

// Integer evaluation of the three contraction-safety assertions for one
// (part, cut side) pair.
bool check_part_against_cut(const VertexSet& part, const VertexSet& trimmed,
                            const VertexSet& shaved, const VertexSet& cut_side,
                            std::uint64_t lambda, std::string* why) {
    auto min_overlap = [&cut_side](const VertexSet& x) {
        std::size_t inside = intersection_size(x, cut_side);
        return std::min(inside, x.size() - inside);
    };
    std::size_t part_overlap = min_overlap(part);
    if (40 * part_overlap > lambda) {
        *why = "part overlap " + std::to_string(part_overlap) +
               " exceeds lambda/40 with lambda = " + std::to_string(lambda);
        return false;
    }
    std::size_t trim_overlap = min_overlap(trimmed);
    if (trim_overlap > 2) {
        *why = "trimmed overlap " + std::to_string(trim_overlap) + " exceeds 2";
        return false;
    }
    std::size_t shave_overlap = min_overlap(shaved);
    if (shave_overlap != 0) {
        *why = "shaved part straddles the cut by " +
               std::to_string(shave_overlap);
        return false;
    }
    return true;
}

}  // namespace

ContractionSafetySummary run_contraction_safety_checks(std::uint64_t seed) {
    ContractionSafetySummary summary;

    std::vector<SafetyInstance> corpus;
    for (std::size_t n = 4; n <= 14; ++n)
        corpus.push_back({"cycle-" + std::to_string(n), make_cycle(n)});
    for (std::size_t q = 3; q <= 7; ++q)
        for (std::size_t t : {std::size_t{1}, std::size_t{2}})
            corpus.push_back({"clique-pair-" + std::to_string(q) + "-" +
                                  std::to_string(t),
                              make_clique_pair(q, t)});
    const double densities[] = {0.25, 0.4, 0.6};
    for (std::size_t n = 6; n <= 14; ++n)
        for (std::size_t pi = 0; pi < 3; ++pi)
            for (std::uint64_t round = 0; round < 6; ++round)
                corpus.push_back(
                    {"gnp-" + std::to_string(n) + "-p" + std::to_string(pi) +
                         "-r" + std::to_string(round),
                     make_gnp(n, densities[pi],
                              seed + 7919 * round + 31 * n + pi)});

    for (const SafetyInstance& instance : corpus) {
        const SimpleGraph& g = instance.graph;
        if (!is_connected(g)) continue;
        ++summary.instances;

        const std::uint64_t delta = min_degree(g);
        const double phi = 40.0 / static_cast<double>(delta);
        auto [partition, report] = expander_decompose(g, phi);

        bool all_certified = true;
        for (const VertexSet& part : partition.parts) {
            if (part.size() > 18 || !certify_exhaustive(g, part, phi)) {
                all_certified = false;
                break;
            }
        }
        if (!all_certified) continue;

        MultiGraph identity = contract(g, {});
        std::uint64_t lambda = exhaustive_min_cut(identity).lambda;
        std::vector<VertexSet> cut_sides = all_min_cut_sides(identity, true);
        if (cut_sides.empty()) continue;
        ++summary.nonvacuous_instances;

        for (const VertexSet& part : partition.parts) {
            VertexSet trimmed = trim(g, part);
            VertexSet shaved = shave(g, trimmed);
            for (const VertexSet& cut_side : cut_sides) {
                ++summary.checks;
                std::string why;
                if (!check_part_against_cut(part, trimmed, shaved, cut_side,
                                            lambda, &why)) {
                    ++summary.violations;
                    summary.failures.push_back(instance.name + ": " + why);
                }
            }
        }
    }

    // Planted block: the unique non-trivial minimum cut of a clique pair
    // with t < q - 1 bridges is the bridge cut, so the assertions can be
    // evaluated at scale where the decomposition path actually runs.
    for (auto [q, t] : {std::pair<std::size_t, std::size_t>{85, 5},
                        {85, 41},
                        {100, 10},
                        {100, 41}}) {
        SimpleGraph g = make_clique_pair(q, t);
        ++summary.planted_instances;
        const std::uint64_t lambda = t;
        std::vector<VertexId> first_clique(q);
        for (std::size_t i = 0; i < q; ++i)
            first_clique[i] = static_cast<VertexId>(i);
        VertexSet cut_side(g.vertex_count(), std::move(first_clique));

        const std::uint64_t delta = min_degree(g);
        auto [partition, report] =
            expander_decompose(g, 40.0 / static_cast<double>(delta));

        std::vector<VertexSet> contractible;
        for (const VertexSet& part : partition.parts) {
            VertexSet trimmed = trim(g, part);
            VertexSet shaved = shave(g, trimmed);
            ++summary.planted_checks;
            std::string why;
            if (!check_part_against_cut(part, trimmed, shaved, cut_side,
                                        lambda, &why)) {
                ++summary.planted_violations;
                summary.failures.push_back("planted-" + std::to_string(q) +
                                           "-" + std::to_string(t) + ": " +
                                           why);
            }
            if (!shaved.is_empty()) contractible.push_back(std::move(shaved));
        }

        // The planted cut must survive contraction with its weight.
        MultiGraph contracted = contract(g, contractible);
        if (contracted.vertex_count() >= 2) {
            std::uint64_t preserved = stoer_wagner(contracted).lambda;
            if (preserved != lambda) {
                ++summary.planted_violations;
                summary.failures.push_back(
                    "planted-" + std::to_string(q) + "-" + std::to_string(t) +
                    ": contracted connectivity " + std::to_string(preserved) +
                    " != " + std::to_string(lambda));
            }
        }
    }
    return summary;
}

}  // namespace mincut
