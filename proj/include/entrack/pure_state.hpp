#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "entrack/complex_matrix.hpp"
#include "entrack/qubit_set.hpp"

namespace entrack {

// Pure state of an N-qubit register: 2^N complex amplitudes.
//
// Basis-label convention, fixed globally: qubit 0 is the MOST significant bit
// of the computational-basis index. |10> means qubit 0 in |1>, qubit 1 in |0>,
// and has index 2.
class PureState {
public:
    // |00...0>
    explicit PureState(int num_qubits);

    // Throws if the size is not 2^num_qubits or the norm is off by > 1e-10.
    PureState(int num_qubits, std::vector<cplx> amplitudes);

    static PureState basis_state(int num_qubits, std::uint64_t index);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }

    const cplx& operator[](std::size_t i) const { return amps_[i]; }
    const std::vector<cplx>& amplitudes() const { return amps_; }

    double norm() const;
    double probability(std::uint64_t basis_index) const;

    // Value of qubit q in basis label `index` under the MSB-first convention.
    int bit(std::uint64_t index, int qubit) const {
        return static_cast<int>((index >> (num_qubits_ - 1 - qubit)) & 1u);
    }

    // |<this|other>|^2
    double fidelity(const PureState& other) const;

private:
    friend PureState apply_gate_unchecked(const PureState&, const ComplexMatrix&,
                                          const std::vector<int>&);
    int num_qubits_;
    std::vector<cplx> amps_;
};

inline constexpr double kNormTolerance = 1e-10;

// Internal fast path for gate application; validated wrapper lives in gates.hpp.
PureState apply_gate_unchecked(const PureState& psi, const ComplexMatrix& m,
                               const std::vector<int>& targets);

}  // namespace entrack
