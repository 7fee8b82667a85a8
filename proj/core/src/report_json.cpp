#include "mincut/report_json.hpp"

#include <json.hpp>

namespace mincut {

namespace {

using Json = nlohmann::ordered_json;

Json decomposition_to_json(const DecompositionReport& report) {
    Json sizes = Json::object();
    for (const auto& [size, count] : report.part_sizes)
        sizes[std::to_string(size)] = count;
    return Json{{"phi", report.phi},
                {"crossing_edges", report.crossing_edges},
                {"part_sizes", std::move(sizes)},
                {"fallback_count", report.fallback_count},
                {"recursion_depth", report.recursion_depth}};
}

}  // namespace

std::string to_json_string(const PipelineReport& report) {
    Json timings{{"decompose", report.timings.decompose_ms},
                 {"trim_shave", report.timings.trim_shave_ms},
                 {"contract", report.timings.contract_ms},
                 {"oracle", report.timings.oracle_ms},
                 {"total", report.timings.total_ms}};
    Json j{{"n", report.n},
           {"m", report.m},
           {"delta", report.delta},
           {"phi", report.phi},
           {"decomposition", decomposition_to_json(report.decomposition)},
           {"trimmed_vertices", report.trimmed_vertices},
           {"shaved_vertices", report.shaved_vertices},
           {"contracted_n", report.contracted_n},
           {"contracted_m", report.contracted_m},
           {"lambda_prime", report.lambda_prime},
           {"answer", report.answer},
           {"timings_ms", std::move(timings)}};
    return j.dump();
}

std::string to_json_string(const Partition& partition,
                           const DecompositionReport& report) {
    Json parts = Json::array();
    for (const VertexSet& part : partition.parts)
        parts.push_back(part.ids());
    Json certs = Json::array();
    for (const CertStatus& cert : partition.cert) {
        Json entry{{"kind", to_string(cert.kind)}};
        if (cert.kind == CertStatus::Kind::Spectral) {
            entry["lambda2_estimate"] = cert.lambda2_estimate;
            entry["residual"] = cert.residual;
        }
        certs.push_back(std::move(entry));
    }
    Json j{{"phi", report.phi},
           {"parts", std::move(parts)},
           {"cert", std::move(certs)},
           {"crossing_edges", report.crossing_edges},
           {"report", decomposition_to_json(report)}};
    return j.dump();
}

}  // namespace mincut
