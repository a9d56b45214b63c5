#include "entrack/pure_state.hpp"

#include <cmath>
#include <stdexcept>

namespace entrack {

PureState::PureState(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 30)
        throw std::invalid_argument("PureState: qubit count out of range");
    amps_.assign(std::size_t{1} << num_qubits, cplx(0.0));
    amps_[0] = 1.0;
}

PureState::PureState(int num_qubits, std::vector<cplx> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    if (num_qubits < 1 || num_qubits > 30)
        throw std::invalid_argument("PureState: qubit count out of range");
    if (amps_.size() != (std::size_t{1} << num_qubits))
        throw std::invalid_argument("PureState: amplitude count is not 2^num_qubits");
    if (std::abs(norm() - 1.0) > kNormTolerance)
        throw std::invalid_argument("PureState: amplitudes not normalized");
}

PureState PureState::basis_state(int num_qubits, std::uint64_t index) {
    PureState s(num_qubits);
    if (index >= s.dim()) throw std::invalid_argument("basis_state: index out of range");
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

double PureState::norm() const {
    double n2 = 0.0;
    for (const auto& a : amps_) n2 += std::norm(a);
    return std::sqrt(n2);
}

double PureState::probability(std::uint64_t basis_index) const {
    return std::norm(amps_.at(basis_index));
}

double PureState::fidelity(const PureState& other) const {
    if (num_qubits_ != other.num_qubits_)
        throw std::invalid_argument("fidelity: qubit counts differ");
    cplx overlap = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i)
        overlap += std::conj(amps_[i]) * other.amps_[i];
    return std::norm(overlap);
}

}  // namespace entrack
