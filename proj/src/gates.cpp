#include "entrack/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_set>

namespace entrack {

std::string Gate::describe() const {
    std::string s = label + "[";
    for (std::size_t i = 0; i < target_qubits.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(target_qubits[i]);
    }
    return s + "]";
}

Gate make_gate(std::string label, std::vector<int> targets, ComplexMatrix matrix) {
    if (targets.empty()) throw std::invalid_argument("make_gate: no target qubits");
    std::unordered_set<int> seen;
    for (int t : targets) {
        if (t < 0) throw std::invalid_argument("make_gate: negative target index");
        if (!seen.insert(t).second) throw std::invalid_argument("make_gate: duplicate target qubit");
    }
    const std::size_t d = std::size_t{1} << targets.size();
    if (matrix.rows() != d || matrix.cols() != d)
        throw std::invalid_argument("make_gate: matrix dimension does not match arity");
    if (!matrix.is_unitary(1e-10))
        throw std::invalid_argument("make_gate: matrix is not unitary");
    return Gate{std::move(label), std::move(targets), std::move(matrix)};
}

Gate standard_gate(const std::string& name, int target) {
    ComplexMatrix m(2, 2);
    if (name == "H") {
        const double r = 1.0 / std::numbers::sqrt2;
        m(0, 0) = r; m(0, 1) = r;
        m(1, 0) = r; m(1, 1) = -r;
    } else if (name == "X") {
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
    } else if (name == "Z") {
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
    } else {
        throw std::invalid_argument("standard_gate: unknown gate " + name);
    }
    return make_gate(name, {target}, std::move(m));
}

namespace {

Gate phase_gate(int k, int control, int target, double sign, const std::string& suffix) {
    if (k < 1) throw std::invalid_argument("controlled_phase: k must be >= 1");
    const double angle = sign * 2.0 * std::numbers::pi / static_cast<double>(std::uint64_t{1} << k);
    ComplexMatrix m = ComplexMatrix::identity(4);
    m(3, 3) = std::polar(1.0, angle);
    return make_gate("CR" + std::to_string(k) + suffix, {control, target}, std::move(m));
}

}  // namespace

Gate controlled_phase(int k, int control, int target) {
    return phase_gate(k, control, target, 1.0, "");
}

Gate controlled_phase_inverse(int k, int control, int target) {
    return phase_gate(k, control, target, -1.0, "inv");
}

Gate multi_controlled_x(const std::string& goal, const std::vector<int>& controls, int target) {
    if (goal.empty()) throw std::invalid_argument("multi_controlled_x: empty goal");
    if (goal.size() != controls.size())
        throw std::invalid_argument("multi_controlled_x: goal length != control count");
    std::uint64_t g = 0;
    for (char c : goal) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("multi_controlled_x: goal must be a bitstring");
        g = (g << 1) | static_cast<std::uint64_t>(c - '0');
    }
    // |psi><psi| (x) X + sum_{j != psi} |j><j| (x) I: a permutation swapping the
    // two basis states whose control bits spell the goal.
    const std::size_t d = std::size_t{2} << goal.size();
    ComplexMatrix m = ComplexMatrix::identity(d);
    const std::size_t i0 = g << 1, i1 = (g << 1) | 1;
    m(i0, i0) = 0.0; m(i1, i1) = 0.0;
    m(i0, i1) = 1.0; m(i1, i0) = 1.0;
    std::vector<int> targets = controls;
    targets.push_back(target);
    return make_gate("CpsiX(" + goal + ")", std::move(targets), std::move(m));
}

Gate multi_controlled_z(const std::vector<int>& controls, int target) {
    if (controls.empty()) throw std::invalid_argument("multi_controlled_z: no control qubits");
    // |0..0><0..0| (x) Z + sum_{j != 0..0} |j><j| (x) I
    const std::size_t d = std::size_t{2} << controls.size();
    ComplexMatrix m = ComplexMatrix::identity(d);
    m(1, 1) = -1.0;
    std::vector<int> targets = controls;
    targets.push_back(target);
    return make_gate("C0Z", std::move(targets), std::move(m));
}

Gate controlled_unitary_power(const ComplexMatrix& u, std::uint64_t power, int control,
                              const std::vector<int>& targets) {
    if (power < 1) throw std::invalid_argument("controlled_unitary_power: power must be >= 1");
    if (u.rows() != u.cols() || u.rows() != (std::size_t{1} << targets.size()))
        throw std::invalid_argument("controlled_unitary_power: dimension does not match targets");
    if (!u.is_unitary(1e-10))
        throw std::invalid_argument("controlled_unitary_power: u is not unitary");

    ComplexMatrix up = ComplexMatrix::identity(u.rows());
    ComplexMatrix base = u;
    for (std::uint64_t p = power; p > 0; p >>= 1) {
        if (p & 1) up = matmul(up, base);
        if (p > 1) base = matmul(base, base);
    }

    const std::size_t d = u.rows();
    ComplexMatrix m = ComplexMatrix::identity(2 * d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            m(d + r, d + c) = up(r, c);

    std::vector<int> all = {control};
    all.insert(all.end(), targets.begin(), targets.end());
    return make_gate("CU^" + std::to_string(power), std::move(all), std::move(m));
}

PureState apply(const Gate& gate, const PureState& psi) {
    const int n = psi.num_qubits();
    for (int t : gate.target_qubits)
        if (t >= n) throw std::invalid_argument("apply: target qubit out of range");
    return apply_gate_unchecked(psi, gate.matrix, gate.target_qubits);
}

PureState apply_gate_unchecked(const PureState& psi, const ComplexMatrix& m,
                               const std::vector<int>& targets) {
    const int n = psi.num_qubits_;
    const int a = static_cast<int>(targets.size());
    const std::size_t dl = std::size_t{1} << a;

    std::vector<std::size_t> target_bit(a);
    for (int j = 0; j < a; ++j) target_bit[j] = std::size_t{1} << (n - 1 - targets[j]);
    std::size_t target_mask = 0;
    for (auto b : target_bit) target_mask |= b;

    // Full-index offset of each local basis state.
    std::vector<std::size_t> local_index(dl);
    for (std::size_t l = 0; l < dl; ++l) {
        std::size_t idx = 0;
        for (int j = 0; j < a; ++j)
            if ((l >> (a - 1 - j)) & 1u) idx |= target_bit[j];
        local_index[l] = idx;
    }

    PureState out = psi;
    std::vector<cplx> in(dl);
    const std::size_t dim = psi.dim();
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & target_mask) continue;  // enumerate environment patterns only
        for (std::size_t l = 0; l < dl; ++l) in[l] = psi.amps_[base | local_index[l]];
        for (std::size_t r = 0; r < dl; ++r) {
            cplx acc = 0.0;
            for (std::size_t c = 0; c < dl; ++c) acc += m(r, c) * in[c];
            out.amps_[base | local_index[r]] = acc;
        }
    }
    return out;
}

}  // namespace entrack
