#pragma once

#include <vector>

#include "entrack/density_matrix.hpp"
#include "entrack/pure_state.hpp"
#include "entrack/qubit_set.hpp"

namespace entrack {

// Eigenvalues below this are treated as exact zeros when computing entropies,
// so numerical noise from the eigensolver never reaches a logarithm.
inline constexpr double kEigenvalueTruncation = 1e-12;

// Von Neumann entropies (bits) of every nonempty subset of a pure register
// state, indexed by QubitSet bitmask. The full set carries 0 (global purity);
// S(A) = S(complement A) for the same reason, which is how the map is filled:
// only subsets of size <= N/2 are ever diagonalized.
class EntropyVector {
public:
    explicit EntropyVector(int num_qubits)
        : num_qubits_(num_qubits),
          entries_(std::size_t{1} << num_qubits, 0.0) {}

    int num_qubits() const { return num_qubits_; }

    double operator[](QubitSet subset) const { return entries_[subset]; }
    double& operator[](QubitSet subset) { return entries_[subset]; }

private:
    int num_qubits_;
    std::vector<double> entries_;  // index = bitmask; [0] unused, stays 0
};

// -sum lambda_i log2 lambda_i over the truncated spectrum of rho. The
// surviving eigenvalues are renormalized only if their sum strays from 1 by
// more than the truncation threshold.
double entropy_bits(const DensityMatrix& rho);

EntropyVector entropy_vector(const PureState& psi);

// I(A:B) = S(A) + S(B) - S(AB); blocks must be disjoint and nonempty.
double mutual_information(const EntropyVector& ev, QubitSet a, QubitSet b);

// I(A:B|C) = S(AC) + S(BC) - S(ABC) - S(C)
double conditional_mutual_information(const EntropyVector& ev, QubitSet a, QubitSet b,
                                      QubitSet c);

// -I3(A:B:C) = S(AB) + S(BC) + S(AC) - S(A) - S(B) - S(C) - S(ABC),
// the quantity that is >= 0 for monogamous mutual information.
double tripartite_information(const EntropyVector& ev, QubitSet a, QubitSet b, QubitSet c);

// 2-norm over all nonempty proper subsets.
double norm2(const EntropyVector& ev);

}  // namespace entrack
