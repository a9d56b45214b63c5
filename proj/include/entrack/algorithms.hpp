#pragma once

#include <cstdint>
#include <string>

#include "entrack/circuit.hpp"
#include "entrack/complex_matrix.hpp"
#include "entrack/pure_state.hpp"

namespace entrack {

struct GroverSpec {
    int search_qubits = 0;  // register size is search_qubits + 1 (ancilla last)
    std::string goal;       // bitstring of length search_qubits
    int iterations = 1;
};

struct QftSpec {
    int num_qubits = 0;
    bool inverse = false;
};

struct QpeSpec {
    int precision_qubits = 0;       // t; precision register occupies qubits 0..t-1
    ComplexMatrix unitary;          // acts on the eigenvector qubits
    std::vector<cplx> eigenvector;  // length 2^m, an eigenvector of `unitary`
};

// Initial column (H on each search qubit, X on the ancilla), then per
// iteration: the goal-matching controlled-X oracle, an H layer, the
// all-zero-controlled Z diffusion gate, and another H layer. No measurement.
Circuit build_grover(const GroverSpec& spec);

// For qubit i = 0..n-1: H on i, then CR_k (k = 2..n-i) with control i+k-1 and
// target i. No terminal swap layer: the output register is in bit-reversed
// qubit order. inverse=true emits the adjoint gates in reverse order.
Circuit build_qft(const QftSpec& spec);

// H layer on the t precision qubits; controlled-U^{2^j} with control qubit
// t-1-j; then the inverse transform on the precision register, wired in
// mirrored qubit order so that it inverts the phase pattern the controlled
// powers write (the estimate lands in a bit-reversed basis state, matching the
// swap-free transform convention). Throws if `eigenvector` is not an
// eigenvector of `unitary` within 1e-8.
Circuit build_qpe(const QpeSpec& spec);

// |0...0> (x) eigenvector on t + m qubits.
PureState qpe_input(const QpeSpec& spec);

// Haar-distributed pure state: amplitudes drawn as independent standard
// complex Gaussians, then normalized. The generator is fully specified
// (mt19937_64 + Box-Muller on 53-bit uniforms), so a seed pins the state
// across platforms.
PureState random_state(int num_qubits, std::uint64_t seed);

}  // namespace entrack
