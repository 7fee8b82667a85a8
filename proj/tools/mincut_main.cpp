// Command-line front end: ingest graphs, generate test families, run the
// connectivity pipeline or individual stages, emit JSON reports, and run
// verification sweeps.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "mincut/generate.hpp"
#include "mincut/io.hpp"
#include "mincut/pipeline.hpp"
#include "mincut/report_json.hpp"
#include "mincut/trimshave.hpp"
#include "mincut/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;

mincut::GraphFormat format_from_name(const std::string& name) {
    if (name == "edgelist") return mincut::GraphFormat::EdgeList;
    if (name == "dimacs") return mincut::GraphFormat::Dimacs;
    throw mincut::FormatMismatch("unknown format '" + name + "'");
}

mincut::OracleChoice oracle_from_name(const std::string& name) {
    if (name == "flow") return mincut::OracleChoice::FlowBounded;
    if (name == "sw") return mincut::OracleChoice::StoerWagner;
    if (name == "exhaustive") return mincut::OracleChoice::Exhaustive;
    throw mincut::Error("unknown oracle '" + name + "'");
}

mincut::ParsedGraph load_graph(const std::string& path,
                               const std::string& format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mincut::Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return mincut::parse_graph(buffer.str(), format_from_name(format));
}

struct RunArgs {
    std::string file;
    std::string format = "edgelist";
    std::string oracle = "flow";
    bool json = false;
    bool print_cut = false;
    std::size_t certify_limit = 18;
};

int cmd_run(const RunArgs& args) {
    mincut::ParsedGraph parsed = load_graph(args.file, args.format);

    mincut::PipelineOptions options;
    options.oracle = oracle_from_name(args.oracle);
    options.decompose.exhaustive_limit = args.certify_limit;
    auto [cut, report] = mincut::edge_connectivity(parsed.graph, options);

    if (args.json) {
        std::cout << mincut::to_json_string(report) << "\n";
    } else {
        std::cout << "lambda=" << cut.lambda << "\n";
        if (args.print_cut && cut.side) {
            std::cout << "cut_side=";
            const auto& ids = cut.side->ids();
            for (std::size_t i = 0; i < ids.size(); ++i) {
                if (i > 0) std::cout << " ";
                std::cout << parsed.labels[ids[i]];
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

struct GenerateArgs {
    std::string family;
    std::vector<std::string> params;
    std::uint64_t seed = 1;
    std::string output;
};

int cmd_generate(const GenerateArgs& args) {
    auto need = [&args](std::size_t count) {
        if (args.params.size() != count)
            throw mincut::Error("family '" + args.family + "' expects " +
                                std::to_string(count) + " parameter(s)");
    };
    mincut::SimpleGraph graph = [&]() {
        if (args.family == "clique-pair") {
            need(2);
            return mincut::make_clique_pair(std::stoull(args.params[0]),
                                            std::stoull(args.params[1]));
        }
        if (args.family == "gnp") {
            need(2);
            return mincut::make_gnp(std::stoull(args.params[0]),
                                    std::stod(args.params[1]), args.seed);
        }
        if (args.family == "cycle") {
            need(1);
            return mincut::make_cycle(std::stoull(args.params[0]));
        }
        if (args.family == "hypercube") {
            need(1);
            return mincut::make_hypercube(
                static_cast<unsigned>(std::stoul(args.params[0])));
        }
        throw mincut::Error("unknown family '" + args.family +
                            "' (expected clique-pair, gnp, cycle, hypercube)");
    }();

    std::string text =
        mincut::serialize_graph(graph, mincut::GraphFormat::EdgeList);
    if (args.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(args.output, std::ios::binary);
        if (!out) throw mincut::Error("cannot write '" + args.output + "'");
        out << text;
    }
    return kExitOk;
}

struct DecomposeArgs {
    std::string file;
    std::string format = "edgelist";
    double phi = 0.0;
    std::string post = "none";
    std::size_t certify_limit = 18;
};

int cmd_decompose(const DecomposeArgs& args) {
    mincut::ParsedGraph parsed = load_graph(args.file, args.format);

    mincut::DecomposeOptions options;
    options.exhaustive_limit = args.certify_limit;
    auto [partition, report] =
        mincut::expander_decompose(parsed.graph, args.phi, options);

    nlohmann::ordered_json j =
        nlohmann::ordered_json::parse(mincut::to_json_string(partition, report));
    if (args.post == "trim" || args.post == "trim,shave") {
        nlohmann::ordered_json trimmed = nlohmann::ordered_json::array();
        nlohmann::ordered_json shaved = nlohmann::ordered_json::array();
        for (const mincut::VertexSet& part : partition.parts) {
            mincut::VertexSet t = mincut::trim(parsed.graph, part);
            trimmed.push_back(t.ids());
            if (args.post == "trim,shave")
                shaved.push_back(mincut::shave(parsed.graph, t).ids());
        }
        j["trimmed"] = std::move(trimmed);
        if (args.post == "trim,shave") j["shaved"] = std::move(shaved);
    } else if (args.post != "none") {
        throw mincut::Error("unknown --post value '" + args.post + "'");
    }
    std::cout << j.dump() << "\n";
    return kExitOk;
}

struct VerifyArgs {
    std::string file;  // optional: also check one specific graph
    std::string format = "edgelist";
    std::size_t trials = 1000;
    std::size_t max_n = 60;
    std::uint64_t seed = 1;
    std::string oracle = "flow";
    std::size_t min_safety_checks = 50;
};

int cmd_verify(const VerifyArgs& args) {
    bool file_ok = true;
    if (!args.file.empty()) {
        mincut::ParsedGraph parsed = load_graph(args.file, args.format);
        mincut::PipelineOptions options;
        options.oracle = oracle_from_name(args.oracle);
        auto [cut, report] = mincut::edge_connectivity(parsed.graph, options);
        std::uint64_t reference =
            mincut::stoer_wagner(mincut::contract(parsed.graph, {})).lambda;
        file_ok = report.answer == reference;
        std::cout << "file-check: pipeline " << report.answer
                  << (file_ok ? " == " : " != ") << "stoer-wagner "
                  << reference << "\n";
    }

    mincut::OracleEquivalenceSummary equivalence =
        mincut::run_oracle_equivalence(args.trials, args.max_n, args.seed,
                                       oracle_from_name(args.oracle));
    std::cout << "oracle-equal: "
              << (equivalence.stoer_wagner_total -
                  equivalence.stoer_wagner_mismatches)
              << "/" << equivalence.stoer_wagner_total << "\n";
    if (args.max_n >= 14) {
        std::cout << "exhaustive-equal: "
                  << (equivalence.exhaustive_total -
                      equivalence.exhaustive_mismatches)
                  << "/" << equivalence.exhaustive_total << "\n";
    }
    std::cout << "decompose-path-equal: "
              << (equivalence.decompose_path_total -
                  equivalence.decompose_path_mismatches)
              << "/" << equivalence.decompose_path_total << "\n";

    mincut::ContractionSafetySummary safety =
        mincut::run_contraction_safety_checks(args.seed);
    std::cout << "contraction-safety: " << safety.checks << " non-vacuous over "
              << safety.nonvacuous_instances << "/" << safety.instances
              << " instances, " << safety.violations << " violations\n";
    std::cout << "contraction-safety-planted: " << safety.planted_checks << " checks over "
              << safety.planted_instances << " instances, "
              << safety.planted_violations << " violations\n";

    bool ok = file_ok && equivalence.ok() && safety.ok(args.min_safety_checks);
    if (!ok) {
        for (const std::string& failure : equivalence.failures)
            std::cerr << "FAIL " << failure << "\n";
        for (const std::string& failure : safety.failures)
            std::cerr << "FAIL " << failure << "\n";
        if (safety.checks < args.min_safety_checks)
            std::cerr << "FAIL contraction-safety suite under-powered: " << safety.checks
                      << " < " << args.min_safety_checks << " checks\n";
    }
    return ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic edge-connectivity toolkit"};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run = app.add_subcommand(
        "run", "Compute the edge connectivity of a graph file");
    run->add_option("file", run_args.file, "graph file")->required();
    run->add_option("--format", run_args.format, "edgelist or dimacs");
    run->add_option("--oracle", run_args.oracle, "flow, sw, or exhaustive");
    run->add_flag("--json", run_args.json, "emit the full JSON report");
    run->add_flag("--cut", run_args.print_cut, "also print one cut side");
    run->add_option("--certify-limit", run_args.certify_limit,
                    "largest part certified by enumeration");

    GenerateArgs generate_args;
    CLI::App* generate = app.add_subcommand(
        "generate", "Emit a deterministic test graph in edge-list format");
    generate->add_option("family", generate_args.family,
                         "clique-pair, gnp, cycle, or hypercube")
        ->required();
    generate->add_option("params", generate_args.params, "family parameters");
    generate->add_option("--seed", generate_args.seed, "gnp seed");
    generate->add_option("-o,--output", generate_args.output, "output file");

    DecomposeArgs decompose_args;
    CLI::App* decompose = app.add_subcommand(
        "decompose", "Partition a graph into certified expander parts");
    decompose->add_option("file", decompose_args.file, "graph file")
        ->required();
    decompose->add_option("--format", decompose_args.format,
                          "edgelist or dimacs");
    decompose->add_option("--phi", decompose_args.phi, "conductance parameter")
        ->required();
    decompose->add_option("--post", decompose_args.post,
                          "none, trim, or trim,shave");
    decompose->add_option("--certify-limit", decompose_args.certify_limit,
                          "largest part certified by enumeration");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "Run oracle-equivalence and contraction-safety sweeps");
    verify->add_option("file", verify_args.file,
                       "also check this graph against the reference oracle");
    verify->add_option("--format", verify_args.format, "edgelist or dimacs");
    verify->add_option("--trials", verify_args.trials,
                       "minimum number of oracle comparisons");
    verify->add_option("--max-n", verify_args.max_n,
                       "largest generated graph");
    verify->add_option("--seed", verify_args.seed, "corpus seed");
    verify->add_option("--oracle", verify_args.oracle,
                       "pipeline oracle backend");
    verify->add_option("--min-safety-checks", verify_args.min_safety_checks,
                       "required non-vacuous safety checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run_args);
        if (generate->parsed()) return cmd_generate(generate_args);
        if (decompose->parsed()) return cmd_decompose(decompose_args);
        if (verify->parsed()) return cmd_verify(verify_args);
    } catch (const mincut::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const mincut::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
