#include "entrack/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entrack {

namespace {

bool strictly_increasing(const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] <= v[i - 1]) return false;
    return true;
}

}  // namespace

DensityMatrix::DensityMatrix(std::vector<int> labels, ComplexMatrix matrix)
    : labels_(std::move(labels)), mat_(std::move(matrix)) {
    if (labels_.empty() || !strictly_increasing(labels_))
        throw std::invalid_argument("DensityMatrix: labels must be nonempty and strictly increasing");
    const std::size_t d = std::size_t{1} << labels_.size();
    if (mat_.rows() != d || mat_.cols() != d)
        throw std::invalid_argument("DensityMatrix: matrix dimension is not 2^k");
    if (mat_.hermitian_defect() > kTauHermitian)
        throw std::invalid_argument("DensityMatrix: matrix not Hermitian within tolerance");
    if (std::abs(mat_.trace() - cplx(1.0)) > 1e-10)
        throw std::invalid_argument("DensityMatrix: trace differs from 1");
}

DensityMatrix density_of(const PureState& psi) {
    const std::size_t d = psi.dim();
    ComplexMatrix rho(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            rho(r, c) = psi[r] * std::conj(psi[c]);
    std::vector<int> labels(psi.num_qubits());
    for (int q = 0; q < psi.num_qubits(); ++q) labels[q] = q;
    return DensityMatrix(std::move(labels), std::move(rho));
}

DensityMatrix partial_trace(const DensityMatrix& rho, QubitSet traced) {
    const int k = rho.num_qubits();

    // Positions (within rho's own index, MSB-first) of kept and traced labels.
    std::vector<int> keep_pos, trace_pos;
    std::vector<int> keep_labels;
    QubitSet label_set = 0;
    for (int p = 0; p < k; ++p) label_set |= QubitSet{1} << rho.labels()[p];
    if (traced == 0 || !subset_of(traced, label_set))
        throw std::invalid_argument("partial_trace: traced qubits not among the labels");
    if (traced == label_set)
        throw std::invalid_argument("partial_trace: cannot trace out every qubit");
    for (int p = 0; p < k; ++p) {
        if (contains(traced, rho.labels()[p]))
            trace_pos.push_back(p);
        else {
            keep_pos.push_back(p);
            keep_labels.push_back(rho.labels()[p]);
        }
    }

    const int nk = static_cast<int>(keep_pos.size());
    const int nt = static_cast<int>(trace_pos.size());
    const std::size_t dk = std::size_t{1} << nk;
    const std::size_t dt = std::size_t{1} << nt;

    // Index into the parent matrix from a reduced index r and traced pattern e.
    auto parent_index = [&](std::size_t r, std::size_t e) {
        std::size_t idx = 0;
        for (int j = 0; j < nk; ++j)
            if ((r >> (nk - 1 - j)) & 1u) idx |= std::size_t{1} << (k - 1 - keep_pos[j]);
        for (int j = 0; j < nt; ++j)
            if ((e >> (nt - 1 - j)) & 1u) idx |= std::size_t{1} << (k - 1 - trace_pos[j]);
        return idx;
    };

    ComplexMatrix out(dk, dk);
    for (std::size_t r = 0; r < dk; ++r)
        for (std::size_t c = 0; c < dk; ++c) {
            cplx acc = 0.0;
            for (std::size_t e = 0; e < dt; ++e)
                acc += rho.matrix()(parent_index(r, e), parent_index(c, e));
            out(r, c) = acc;
        }
    return DensityMatrix(std::move(keep_labels), std::move(out));
}

DensityMatrix reduced_density(const PureState& psi, QubitSet keep) {
    const int n = psi.num_qubits();
    if (keep == 0 || !subset_of(keep, full_set(n)))
        throw std::invalid_argument("reduced_density: keep set empty or out of range");

    const std::vector<int> kept = set_qubits(keep);
    const std::vector<int> env = set_qubits(complement(keep, n));
    const int nk = static_cast<int>(kept.size());
    const int ne = static_cast<int>(env.size());
    const std::size_t dk = std::size_t{1} << nk;
    const std::size_t de = std::size_t{1} << ne;

    // Bit (in the full index) carried by reduced-index bit j / env bit j.
    std::vector<std::size_t> keep_bit(nk), env_bit(ne);
    for (int j = 0; j < nk; ++j) keep_bit[j] = std::size_t{1} << (n - 1 - kept[j]);
    for (int j = 0; j < ne; ++j) env_bit[j] = std::size_t{1} << (n - 1 - env[j]);

    std::vector<std::size_t> keep_index(dk), env_index(de);
    for (std::size_t r = 0; r < dk; ++r) {
        std::size_t idx = 0;
        for (int j = 0; j < nk; ++j)
            if ((r >> (nk - 1 - j)) & 1u) idx |= keep_bit[j];
        keep_index[r] = idx;
    }
    for (std::size_t e = 0; e < de; ++e) {
        std::size_t idx = 0;
        for (int j = 0; j < ne; ++j)
            if ((e >> (ne - 1 - j)) & 1u) idx |= env_bit[j];
        env_index[e] = idx;
    }

    ComplexMatrix out(dk, dk);
    for (std::size_t e = 0; e < de; ++e) {
        const std::size_t base = env_index[e];
        for (std::size_t r = 0; r < dk; ++r) {
            const cplx ar = psi[keep_index[r] | base];
            if (ar == cplx(0.0)) continue;
            for (std::size_t c = 0; c < dk; ++c)
                out(r, c) += ar * std::conj(psi[keep_index[c] | base]);
        }
    }

    return DensityMatrix(kept, std::move(out));
}

}  // namespace entrack
