#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "entrack/algorithms.hpp"
#include "entrack/circuit.hpp"
#include "entrack/inequalities.hpp"

namespace entrack {

inline constexpr const char* kToolVersion = "0.1.0";

// Exit-code categories for the CLI: 2 / 3 / 4.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// A proven inequality (SA or SSA) dropped below -tol_fail: the simulation
// itself is broken, so the run aborts instead of emitting garbage.
struct integrity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CustomSpec {
    Circuit circuit;
};

struct RunConfig {
    std::variant<GroverSpec, QftSpec, QpeSpec, CustomSpec> algorithm;

    enum class InputSource { Default, Random, Amplitudes };
    InputSource input_source = InputSource::Default;
    std::uint64_t seed = 0;
    std::vector<cplx> input_amplitudes;

    double tol_fail = kDefaultFailureTolerance;
    int max_qubits = 8;

    // Output paths; empty means "do not write".
    std::string csv_path;
    std::string manifest_path;
    std::string vectors_path;
};

struct RunResult {
    Circuit circuit;
    PureState input_state;
    std::vector<StepTrace> traces;     // entropy_after filled
    std::vector<StepReport> reports;   // row 0 is the raw input state
    double total_wall_ms = 0.0;

    RunResult() : input_state(1) {}
};

// Builds the circuit, runs it, analyzes step 0 (the input) and every condensed
// step, and writes whichever outputs the config names. Throws config_error,
// integrity_error or io_error.
RunResult execute(const RunConfig& config);

// One row per report; fixed column order, 12 significant digits, LF endings.
void write_csv(const std::vector<StepReport>& reports, std::ostream& out);
void write_csv_file(const std::vector<StepReport>& reports, const std::string& path);

// Per step, the full entropy vector keyed by subset bitmask in ascending
// order; lets every inequality be re-verified from raw data.
void write_entropy_vectors(const RunResult& result, std::ostream& out);
void write_entropy_vectors_file(const RunResult& result, const std::string& path);

// Serialized JSON run manifest: config echo, tool version, tolerance values,
// closed-form check counts, the failure-ratio denominator convention, and
// per-step wall-clock times.
std::string build_manifest_json(const RunConfig& config, const RunResult& result,
                                const std::vector<double>& step_wall_ms);

// Line-oriented circuit description: one gate per line, e.g.
//   H 0
//   CPSIX 1101 0 1 2 3 -> 4
//   CRK 2 ctrl 3 tgt 0
//   C0Z 0 1 -> 2
//   CU u.mat pow 4 ctrl 0 tgt 5 6
// '#' starts a comment. Matrix paths resolve relative to the circuit file.
Circuit parse_circuit_file(const std::string& path, int num_qubits);

// 2^num_qubits lines of "re im", basis labels ascending (qubit 0 = MSB).
// Renormalizes, but rejects vectors whose norm is off by more than 1e-6.
std::vector<cplx> load_amplitudes(const std::string& path, int num_qubits);

// First line: dimension d. Then d rows of d "re im" pairs.
ComplexMatrix load_matrix(const std::string& path);

}  // namespace entrack
