#include "entrack/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace entrack {

double entropy_bits(const DensityMatrix& rho) {
    const std::vector<double> lambda = hermitian_eigenvalues(rho.matrix());
    double sum = 0.0;
    for (double l : lambda)
        if (l >= kEigenvalueTruncation) sum += l;
    const bool renormalize = std::abs(sum - 1.0) > kEigenvalueTruncation;
    double s = 0.0;
    for (double l : lambda) {
        if (l < kEigenvalueTruncation) continue;
        if (renormalize) l /= sum;
        s -= l * std::log2(l);
    }
    return s;
}

EntropyVector entropy_vector(const PureState& psi) {
    const int n = psi.num_qubits();
    const QubitSet full = full_set(n);
    EntropyVector ev(n);
    for (QubitSet mask = 1; mask < full; ++mask) {
        const QubitSet comp = complement(mask, n);
        const int sz = set_size(mask), csz = set_size(comp);
        // Diagonalize the smaller side; on ties pick the side holding qubit 0.
        const bool compute_here = sz < csz || (sz == csz && contains(mask, 0));
        if (!compute_here) continue;
        const double s = entropy_bits(reduced_density(psi, mask));
        ev[mask] = s;
        ev[comp] = s;
    }
    ev[full] = 0.0;
    return ev;
}

namespace {

void require_disjoint(std::initializer_list<QubitSet> sets) {
    QubitSet seen = 0;
    for (QubitSet s : sets) {
        if (s == 0) throw std::invalid_argument("information quantity: empty block");
        if (seen & s) throw std::invalid_argument("information quantity: blocks overlap");
        seen |= s;
    }
}

}  // namespace

double mutual_information(const EntropyVector& ev, QubitSet a, QubitSet b) {
    require_disjoint({a, b});
    return ev[a] + ev[b] - ev[a | b];
}

double conditional_mutual_information(const EntropyVector& ev, QubitSet a, QubitSet b,
                                      QubitSet c) {
    require_disjoint({a, b, c});
    return ev[a | c] + ev[b | c] - ev[a | b | c] - ev[c];
}

double tripartite_information(const EntropyVector& ev, QubitSet a, QubitSet b, QubitSet c) {
    require_disjoint({a, b, c});
    return ev[a | b] + ev[b | c] + ev[a | c] - ev[a] - ev[b] - ev[c] - ev[a | b | c];
}

double norm2(const EntropyVector& ev) {
    const QubitSet full = full_set(ev.num_qubits());
    double acc = 0.0;
    for (QubitSet mask = 1; mask < full; ++mask) acc += ev[mask] * ev[mask];
    return std::sqrt(acc);
}

}  // namespace entrack
