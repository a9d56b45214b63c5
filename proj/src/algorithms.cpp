#include "entrack/algorithms.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "entrack/gates.hpp"

namespace entrack {

Circuit build_grover(const GroverSpec& spec) {
    const int m = spec.search_qubits;
    if (m < 1) throw std::invalid_argument("build_grover: need at least one search qubit");
    if (static_cast<int>(spec.goal.size()) != m)
        throw std::invalid_argument("build_grover: goal length does not match search qubits");
    if (spec.iterations < 1) throw std::invalid_argument("build_grover: iterations must be >= 1");

    const int ancilla = m;
    std::vector<int> search(m);
    for (int q = 0; q < m; ++q) search[q] = q;

    Circuit c;
    c.num_qubits = m + 1;
    c.name = "grover(n=" + std::to_string(m) + ",goal=" + spec.goal +
             ",iters=" + std::to_string(spec.iterations) + ")";
    for (int q = 0; q < m; ++q) c.gates.push_back(standard_gate("H", q));
    c.gates.push_back(standard_gate("X", ancilla));
    for (int it = 0; it < spec.iterations; ++it) {
        c.gates.push_back(multi_controlled_x(spec.goal, search, ancilla));
        for (int q = 0; q < m; ++q) c.gates.push_back(standard_gate("H", q));
        c.gates.push_back(multi_controlled_z(search, ancilla));
        for (int q = 0; q < m; ++q) c.gates.push_back(standard_gate("H", q));
    }
    return c;
}

Circuit build_qft(const QftSpec& spec) {
    const int n = spec.num_qubits;
    if (n < 1) throw std::invalid_argument("build_qft: need at least one qubit");

    Circuit c;
    c.num_qubits = n;
    c.name = std::string(spec.inverse ? "qft_inverse(n=" : "qft(n=") + std::to_string(n) + ")";
    for (int i = 0; i < n; ++i) {
        c.gates.push_back(standard_gate("H", i));
        for (int k = 2; k <= n - i; ++k)
            c.gates.push_back(controlled_phase(k, i + k - 1, i));
    }
    if (spec.inverse) {
        std::vector<Gate> reversed;
        reversed.reserve(c.gates.size());
        for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
            if (it->label == "H")
                reversed.push_back(*it);  // self-adjoint
            else
                reversed.push_back(make_gate(it->label + "inv", it->target_qubits,
                                             it->matrix.adjoint()));
        }
        c.gates = std::move(reversed);
    }
    return c;
}

Circuit build_qpe(const QpeSpec& spec) {
    const int t = spec.precision_qubits;
    if (t < 1) throw std::invalid_argument("build_qpe: need at least one precision qubit");
    const std::size_t d = spec.unitary.rows();
    if (d < 2 || spec.unitary.cols() != d || (d & (d - 1)) != 0)
        throw std::invalid_argument("build_qpe: unitary dimension is not a power of two");
    if (spec.eigenvector.size() != d)
        throw std::invalid_argument("build_qpe: eigenvector length does not match unitary");

    // U v = e^{i theta} v within 1e-8 for some real theta.
    std::vector<cplx> uv(d, cplx(0.0));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t cidx = 0; cidx < d; ++cidx)
            uv[r] += spec.unitary(r, cidx) * spec.eigenvector[cidx];
    cplx overlap = 0.0;
    for (std::size_t r = 0; r < d; ++r) overlap += std::conj(spec.eigenvector[r]) * uv[r];
    const cplx phase = overlap / std::abs(overlap);
    for (std::size_t r = 0; r < d; ++r)
        if (std::abs(uv[r] - phase * spec.eigenvector[r]) > 1e-8)
            throw std::invalid_argument("build_qpe: state is not an eigenvector of the unitary");

    int m = 0;
    while ((std::size_t{1} << m) < d) ++m;

    Circuit c;
    c.num_qubits = t + m;
    c.name = "qpe(t=" + std::to_string(t) + ",m=" + std::to_string(m) + ")";
    for (int q = 0; q < t; ++q) c.gates.push_back(standard_gate("H", q));
    std::vector<int> targets(m);
    for (int j = 0; j < m; ++j) targets[j] = t + j;
    for (int j = 0; j < t; ++j)
        c.gates.push_back(controlled_unitary_power(spec.unitary, std::uint64_t{1} << j,
                                                   t - 1 - j, targets));
    Circuit inv = build_qft(QftSpec{t, true});
    for (Gate g : inv.gates) {
        for (int& q : g.target_qubits) q = t - 1 - q;  // mirrored wiring
        c.gates.push_back(std::move(g));
    }
    return c;
}

PureState qpe_input(const QpeSpec& spec) {
    const int t = spec.precision_qubits;
    int m = 0;
    while ((std::size_t{1} << m) < spec.eigenvector.size()) ++m;
    std::vector<cplx> amps(std::size_t{1} << (t + m), cplx(0.0));
    // Precision qubits are the high bits; |0...0> there puts the eigenvector
    // amplitudes in the first 2^m slots.
    for (std::size_t i = 0; i < spec.eigenvector.size(); ++i) amps[i] = spec.eigenvector[i];
    double n2 = 0.0;
    for (const auto& a : amps) n2 += std::norm(a);
    const double inv_norm = 1.0 / std::sqrt(n2);
    for (auto& a : amps) a *= inv_norm;
    return PureState(t + m, std::move(amps));
}

PureState random_state(int num_qubits, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    // 53-bit uniforms in (0,1], then Box-Muller; avoids the
    // implementation-defined std::*_distribution transforms.
    auto uniform = [&rng]() {
        return (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
    };
    const std::size_t dim = std::size_t{1} << num_qubits;
    std::vector<cplx> amps(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const double u1 = uniform(), u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        amps[i] = cplx(r * std::cos(2.0 * std::numbers::pi * u2),
                       r * std::sin(2.0 * std::numbers::pi * u2));
    }
    double n2 = 0.0;
    for (const auto& a : amps) n2 += std::norm(a);
    const double inv_norm = 1.0 / std::sqrt(n2);
    for (auto& a : amps) a *= inv_norm;
    return PureState(num_qubits, std::move(amps));
}

}  // namespace entrack
