#include "entrack/inequalities.hpp"

#include <stdexcept>

namespace entrack {

namespace {

// Stirling numbers of the second kind S(n, j) for j <= 4, n <= 32.
std::uint64_t stirling2(int n, int j) {
    if (n == 0 && j == 0) return 1;
    if (n <= 0 || j <= 0 || j > n) return 0;
    std::uint64_t prev[5] = {1, 0, 0, 0, 0};  // row n = 0
    std::uint64_t row[5];
    for (int r = 1; r <= n; ++r) {
        row[0] = 0;
        for (int c = 1; c <= 4; ++c)
            row[c] = static_cast<std::uint64_t>(c) * prev[c] + prev[c - 1];
        for (int c = 0; c <= 4; ++c) prev[c] = row[c];
    }
    return prev[j];
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

// Partitions of the elements of T into exactly `blocks_wanted` nonempty blocks.
void partitions_of(QubitSet T, int blocks_wanted, std::vector<QubitSet>& blocks,
                   const std::vector<int>& elems, std::size_t i,
                   const std::function<void(const Partition&)>& fn) {
    const int remaining = static_cast<int>(elems.size() - i);
    if (static_cast<int>(blocks.size()) > blocks_wanted) return;
    if (static_cast<int>(blocks.size()) + remaining < blocks_wanted) return;
    if (i == elems.size()) {
        if (static_cast<int>(blocks.size()) == blocks_wanted) fn(Partition{T, blocks});
        return;
    }
    const QubitSet bit = QubitSet{1} << elems[i];
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        blocks[b] |= bit;
        partitions_of(T, blocks_wanted, blocks, elems, i + 1, fn);
        blocks[b] &= ~bit;
    }
    blocks.push_back(bit);
    partitions_of(T, blocks_wanted, blocks, elems, i + 1, fn);
    blocks.pop_back();
}

}  // namespace

void for_each_partition(int num_qubits, int arity,
                        const std::function<void(const Partition&)>& fn) {
    if (arity < 2 || arity > 4) throw std::invalid_argument("for_each_partition: arity must be 2..4");
    const QubitSet full = full_set(num_qubits);
    std::vector<QubitSet> blocks;
    for (QubitSet T = 1; T <= full; ++T) {
        if (set_size(T) < arity) continue;
        partitions_of(T, arity, blocks, set_qubits(T), 0, fn);
    }
}

std::vector<Partition> enumerate_partitions(int num_qubits, int arity) {
    std::vector<Partition> out;
    for_each_partition(num_qubits, arity, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::uint64_t partition_count(int num_qubits, int arity) {
    std::uint64_t total = 0;
    for (int k = arity; k <= num_qubits; ++k)
        total += binomial(num_qubits, k) * stirling2(k, arity);
    return total;
}

std::uint64_t check_count(int num_qubits, Inequality ineq) {
    static constexpr std::array<std::uint64_t, 4> role_multiplier = {1, 3, 1, 6};
    return partition_count(num_qubits, kInequalityArity[static_cast<int>(ineq)]) *
           role_multiplier[static_cast<int>(ineq)];
}

std::uint64_t ratio_basis(int num_qubits, Inequality ineq) {
    // Role-assignment counts (modulo each family's symmetry group) for a
    // subsystem partitioned into exactly j nonempty blocks, j = 0..arity.
    // Degenerate assignments put the leftover roles on empty sets.
    static constexpr std::uint64_t kRoles[4][5] = {
        //                 j=0  1  2  3  4
        /* SA {A,B}    */ {1, 1, 1, 0, 0},
        /* SSA A,B|C   */ {1, 2, 3, 3, 0},
        /* MMI {A,B,C} */ {1, 1, 1, 1, 0},
        /* Ingleton    */ {1, 2, 4, 6, 6},
    };
    const int fam = static_cast<int>(ineq);
    const int arity = kInequalityArity[fam];
    std::uint64_t total = 0;
    for (int k = 0; k <= num_qubits; ++k) {
        std::uint64_t per_subsystem = 0;
        for (int j = 0; j <= arity; ++j)
            per_subsystem += stirling2(k, j) * kRoles[fam][j];
        total += binomial(num_qubits, k) * per_subsystem;
    }
    return total;
}

double saturation_sa(const EntropyVector& ev, QubitSet a, QubitSet b) {
    return ev[a] + ev[b] - ev[a | b];
}

double saturation_ssa(const EntropyVector& ev, QubitSet a, QubitSet b, QubitSet c) {
    return ev[a | b] + ev[b | c] - ev[a | b | c] - ev[b];
}

double saturation_mmi(const EntropyVector& ev, QubitSet a, QubitSet b, QubitSet c) {
    return ev[a | b] + ev[b | c] + ev[a | c] - ev[a] - ev[b] - ev[c] - ev[a | b | c];
}

double saturation_ingleton(const EntropyVector& ev, QubitSet a, QubitSet b, QubitSet c,
                           QubitSet d) {
    // I(A:B|C) + I(A:B|D) + I(C:D) - I(A:B) expanded into subset entropies.
    return ev[a | c] + ev[b | c] + ev[a | d] + ev[b | d] + ev[a | b] - ev[a] - ev[b] -
           ev[c | d] - ev[a | b | c] - ev[a | b | d];
}

namespace {

struct Accumulator {
    std::uint64_t n = 0;
    double sum = 0.0;
    double min = 0.0;
    std::uint64_t failures = 0;
    double failure_sum = 0.0;

    void add(double sat, double tol_fail) {
        if (n == 0 || sat < min) min = sat;
        ++n;
        sum += sat;
        if (sat < -tol_fail) {
            ++failures;
            failure_sum += sat;
        }
    }

    InequalityStats finish(std::uint64_t basis) const {
        InequalityStats s;
        s.check_count = n;
        s.min_saturation = n ? min : 0.0;
        s.mean_saturation = n ? sum / static_cast<double>(n) : 0.0;
        s.failure_count = failures;
        s.ratio_basis = basis;
        s.failure_ratio = basis ? static_cast<double>(failures) / static_cast<double>(basis) : 0.0;
        s.mean_failure_saturation =
            failures ? failure_sum / static_cast<double>(failures) : 0.0;
        return s;
    }
};

}  // namespace

StepReport analyze_step(const EntropyVector& ev, double tol_fail) {
    const int n = ev.num_qubits();
    Accumulator sa, ssa, mmi, ingleton;

    for_each_partition(n, 2, [&](const Partition& p) {
        sa.add(saturation_sa(ev, p.blocks[0], p.blocks[1]), tol_fail);
    });
    for_each_partition(n, 3, [&](const Partition& p) {
        const QubitSet x = p.blocks[0], y = p.blocks[1], z = p.blocks[2];
        ssa.add(saturation_ssa(ev, y, x, z), tol_fail);  // center x
        ssa.add(saturation_ssa(ev, x, y, z), tol_fail);  // center y
        ssa.add(saturation_ssa(ev, x, z, y), tol_fail);  // center z
        mmi.add(saturation_mmi(ev, x, y, z), tol_fail);
    });
    for_each_partition(n, 4, [&](const Partition& p) {
        static constexpr int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        for (const auto& pr : pairs) {
            int rest[2], r = 0;
            for (int i = 0; i < 4; ++i)
                if (i != pr[0] && i != pr[1]) rest[r++] = i;
            ingleton.add(saturation_ingleton(ev, p.blocks[pr[0]], p.blocks[pr[1]],
                                             p.blocks[rest[0]], p.blocks[rest[1]]),
                         tol_fail);
        }
    });

    StepReport report;
    report.stats[0] = sa.finish(ratio_basis(n, Inequality::SA));
    report.stats[1] = ssa.finish(ratio_basis(n, Inequality::SSA));
    report.stats[2] = mmi.finish(ratio_basis(n, Inequality::MMI));
    report.stats[3] = ingleton.finish(ratio_basis(n, Inequality::Ingleton));
    report.entropy_norm = norm2(ev);
    return report;
}

}  // namespace entrack
