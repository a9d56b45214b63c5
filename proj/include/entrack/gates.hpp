#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entrack/complex_matrix.hpp"
#include "entrack/pure_state.hpp"

namespace entrack {

// A unitary bound to specific register qubits. target_qubits[j] is the qubit
// acted on by gate-local qubit j (local qubit 0 = most significant bit of the
// gate matrix index, same convention as the register).
struct Gate {
    std::string label;
    std::vector<int> target_qubits;
    ComplexMatrix matrix;

    int arity() const { return static_cast<int>(target_qubits.size()); }
    bool single_qubit() const { return arity() == 1; }

    // "H[0]", "CpsiX(1101)[0 1 2 3 4]" -- used in reports.
    std::string describe() const;
};

// Validates unitarity (1e-10) and target uniqueness. All factories go through
// this, so a Gate in a Circuit is always well formed.
Gate make_gate(std::string label, std::vector<int> targets, ComplexMatrix matrix);

// H, X or Z as printed in the source gate set.
Gate standard_gate(const std::string& name, int target);

// CR_k = diag(1, 1, 1, e^{i 2 pi / 2^k}) on (control, target); k >= 1.
Gate controlled_phase(int k, int control, int target);
// Adjoint of CR_k; used when a transform runs in reverse.
Gate controlled_phase_inverse(int k, int control, int target);

// Flips `target` iff the control qubits match `goal` ('1' = closed control,
// '0' = open control). controls.size() must equal goal.size() >= 1.
Gate multi_controlled_x(const std::string& goal, const std::vector<int>& controls, int target);

// Applies Z to `target` iff every control qubit is |0>.
Gate multi_controlled_z(const std::vector<int>& controls, int target);

// Block-diagonal [I, u^power] on (control, target block). u must be unitary,
// power >= 1 (computed by repeated squaring for powers of two).
Gate controlled_unitary_power(const ComplexMatrix& u, std::uint64_t power, int control,
                              const std::vector<int>& targets);

// Applies the gate embedded at its target qubits with identity elsewhere.
PureState apply(const Gate& gate, const PureState& psi);

}  // namespace entrack
