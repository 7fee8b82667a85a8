#ifndef MINCUT_REPORT_JSON_HPP_
#define MINCUT_REPORT_JSON_HPP_

#include <string>

#include "mincut/decompose.hpp"
#include "mincut/pipeline.hpp"

namespace mincut {

/// Pipeline report as a single JSON line with the fixed key order
/// {n, m, delta, phi, decomposition, trimmed_vertices, shaved_vertices,
/// contracted_n, contracted_m, lambda_prime, answer, timings_ms}.
/// Deterministic except for the timings_ms values.
std::string to_json_string(const PipelineReport& report);

/// Partition plus its report as a single JSON line:
/// {phi, parts, cert, crossing_edges, report}.
std::string to_json_string(const Partition& partition,
                           const DecompositionReport& report);

}  // namespace mincut

#endif  // MINCUT_REPORT_JSON_HPP_
