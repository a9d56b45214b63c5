#pragma once

#include <vector>

#include "entrack/complex_matrix.hpp"
#include "entrack/pure_state.hpp"
#include "entrack/qubit_set.hpp"

namespace entrack {

// Density matrix of a subsystem, remembering which register qubits it
// describes. Matrix indexing follows the global convention restricted to the
// kept labels: the smallest label is the most significant bit.
class DensityMatrix {
public:
    // labels must be strictly increasing; matrix must be 2^k x 2^k, Hermitian
    // within kTauHermitian and unit trace within 1e-10.
    DensityMatrix(std::vector<int> labels, ComplexMatrix matrix);

    const std::vector<int>& labels() const { return labels_; }
    const ComplexMatrix& matrix() const { return mat_; }
    int num_qubits() const { return static_cast<int>(labels_.size()); }
    std::size_t dim() const { return mat_.rows(); }

private:
    std::vector<int> labels_;
    ComplexMatrix mat_;
};

// rho = |psi><psi|, labels 0..N-1.
DensityMatrix density_of(const PureState& psi);

// Trace out the qubits in `traced` (original register labels). Summation runs
// over computational-basis states of the traced qubits at their bit positions;
// the traced set need not be contiguous or trailing. Throws if `traced` is not
// a nonempty proper subset of rho's labels.
DensityMatrix partial_trace(const DensityMatrix& rho, QubitSet traced);

// Reduced density matrix of `keep` computed straight from the amplitudes,
// without materializing the 2^N x 2^N global matrix. Equals
// partial_trace(density_of(psi), complement(keep)).
DensityMatrix reduced_density(const PureState& psi, QubitSet keep);

}  // namespace entrack
