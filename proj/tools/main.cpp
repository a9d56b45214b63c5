// Command-line front end: runs an algorithm, writes the per-step saturation
// CSV, a JSON run manifest, and (optionally) the raw entropy vectors.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>

#include "entrack/runner.hpp"

namespace {

struct CommonOpts {
    std::string out;
    std::string manifest;
    std::string vectors;
    double tol_fail = entrack::kDefaultFailureTolerance;
    int max_qubits = 8;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--out", opts.out, "CSV output path")->required();
    cmd->add_option("--manifest", opts.manifest,
                    "JSON manifest path (default: <out>.manifest.json)");
    cmd->add_option("--emit-vectors", opts.vectors, "write per-step entropy vectors (JSON)");
    cmd->add_option("--tol-fail", opts.tol_fail,
                    "saturation below -tol counts as a failure")
        ->capture_default_str();
    cmd->add_option("--max-qubits", opts.max_qubits, "refuse registers larger than this")
        ->capture_default_str();
}

void fill_common(entrack::RunConfig& config, const CommonOpts& opts) {
    config.csv_path = opts.out;
    config.manifest_path = opts.manifest.empty() ? opts.out + ".manifest.json" : opts.manifest;
    config.vectors_path = opts.vectors;
    config.tol_fail = opts.tol_fail;
    config.max_qubits = opts.max_qubits;
}

int run_and_report(const entrack::RunConfig& config) {
    const entrack::RunResult result = entrack::execute(config);
    const auto& last = result.reports.back();
    std::printf("%s: %zu report rows (%d qubits), %.0f ms\n", result.circuit.name.c_str(),
                result.reports.size(), result.circuit.num_qubits, result.total_wall_ms);
    std::printf("final step: mmi failure ratio %.6g, entropy norm %.6g\n",
                last.of(entrack::Inequality::MMI).failure_ratio, last.entropy_norm);
    std::printf("wrote %s\n", config.csv_path.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entrack: entropy-inequality tracking through quantum circuit runs"};
    app.set_version_flag("--version", std::string("entrack ") + entrack::kToolVersion);
    app.require_subcommand(1);

    // grover
    auto* grover = app.add_subcommand("grover", "Grover search with an X-prepared ancilla");
    int grover_qubits = 0, grover_iters = 16;
    std::string grover_goal;
    CommonOpts grover_opts;
    grover->add_option("--goal", grover_goal, "goal bitstring, one bit per search qubit")
        ->required();
    grover->add_option("--qubits", grover_qubits,
                       "search qubits (default: goal length; register adds one ancilla)");
    grover->add_option("--iterations", grover_iters, "Grover iterations")
        ->capture_default_str();
    add_common(grover, grover_opts);

    // qft
    auto* qft = app.add_subcommand("qft", "quantum Fourier transform");
    int qft_qubits = 0;
    bool qft_inverse = false;
    std::uint64_t qft_seed = 0;
    std::string qft_input;
    CommonOpts qft_opts;
    qft->add_option("--qubits", qft_qubits, "register size")->required();
    qft->add_flag("--inverse", qft_inverse, "emit the inverse transform");
    qft->add_option("--seed", qft_seed, "run on a seeded Haar-random input");
    qft->add_option("--input-file", qft_input, "run on amplitudes from a file (re im per line)");
    add_common(qft, qft_opts);

    // qpe
    auto* qpe = app.add_subcommand("qpe", "quantum phase estimation");
    int qpe_t = 0;
    double qpe_phase = 0.125;
    std::string qpe_unitary, qpe_eigvec;
    CommonOpts qpe_opts;
    qpe->add_option("--precision-qubits", qpe_t, "precision (auxiliary) qubits")->required();
    qpe->add_option("--phase", qpe_phase,
                    "phase of the default single-qubit unitary diag(1, e^{2 pi i phase})")
        ->capture_default_str();
    qpe->add_option("--unitary-file", qpe_unitary, "matrix file for the estimated unitary");
    qpe->add_option("--eigenvector-file", qpe_eigvec,
                    "amplitude file for its eigenvector (required with --unitary-file)");
    add_common(qpe, qpe_opts);

    // custom
    auto* custom = app.add_subcommand("custom", "gate list from a circuit file");
    std::string custom_circuit;
    int custom_qubits = 0;
    std::uint64_t custom_seed = 0;
    std::string custom_input;
    CommonOpts custom_opts;
    custom->add_option("circuit", custom_circuit, "circuit file, one gate per line")->required();
    custom->add_option("--qubits", custom_qubits, "register size")->required();
    custom->add_option("--seed", custom_seed, "run on a seeded Haar-random input");
    custom->add_option("--input-file", custom_input, "run on amplitudes from a file");
    add_common(custom, custom_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        entrack::RunConfig config;
        if (grover->parsed()) {
            if (grover_qubits == 0) grover_qubits = static_cast<int>(grover_goal.size());
            config.algorithm = entrack::GroverSpec{grover_qubits, grover_goal, grover_iters};
            fill_common(config, grover_opts);
        } else if (qft->parsed()) {
            config.algorithm = entrack::QftSpec{qft_qubits, qft_inverse};
            const bool qft_seed_set = qft->count("--seed") > 0;
            if (qft_seed_set && !qft_input.empty())
                throw entrack::config_error("--seed and --input-file are mutually exclusive");
            if (qft_seed_set) {
                config.input_source = entrack::RunConfig::InputSource::Random;
                config.seed = qft_seed;
            } else if (!qft_input.empty()) {
                config.input_source = entrack::RunConfig::InputSource::Amplitudes;
                config.input_amplitudes = entrack::load_amplitudes(qft_input, qft_qubits);
            }
            fill_common(config, qft_opts);
        } else if (qpe->parsed()) {
            entrack::QpeSpec spec;
            spec.precision_qubits = qpe_t;
            if (!qpe_unitary.empty()) {
                if (qpe_eigvec.empty())
                    throw entrack::config_error("--unitary-file requires --eigenvector-file");
                spec.unitary = entrack::load_matrix(qpe_unitary);
                int m = 0;
                while ((std::size_t{1} << m) < spec.unitary.rows()) ++m;
                spec.eigenvector = entrack::load_amplitudes(qpe_eigvec, m);
            } else {
                spec.unitary = entrack::ComplexMatrix::identity(2);
                spec.unitary(1, 1) = std::polar(1.0, 2.0 * std::numbers::pi * qpe_phase);
                spec.eigenvector = {entrack::cplx(0.0), entrack::cplx(1.0)};
            }
            config.algorithm = std::move(spec);
            fill_common(config, qpe_opts);
        } else {
            const bool custom_seed_set = custom->count("--seed") > 0;
            if (custom_seed_set && !custom_input.empty())
                throw entrack::config_error("--seed and --input-file are mutually exclusive");
            entrack::CustomSpec spec;
            spec.circuit = entrack::parse_circuit_file(custom_circuit, custom_qubits);
            config.algorithm = std::move(spec);
            if (custom_seed_set) {
                config.input_source = entrack::RunConfig::InputSource::Random;
                config.seed = custom_seed;
            } else if (!custom_input.empty()) {
                config.input_source = entrack::RunConfig::InputSource::Amplitudes;
                config.input_amplitudes = entrack::load_amplitudes(custom_input, custom_qubits);
            }
            fill_common(config, custom_opts);
        }
        return run_and_report(config);
    } catch (const entrack::config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const entrack::integrity_error& e) {
        std::cerr << "integrity failure: " << e.what() << '\n';
        return 3;
    } catch (const entrack::io_error& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
