#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "entrack/entropy.hpp"
#include "entrack/qubit_set.hpp"

namespace entrack {

// A check "fails" only when its saturation drops below -kDefaultFailureTolerance;
// anything in [-tol, tol] counts as saturated.
inline constexpr double kDefaultFailureTolerance = 1e-9;

enum class Inequality : int { SA = 0, SSA = 1, MMI = 2, Ingleton = 3 };

inline constexpr std::array<const char*, 4> kInequalityNames = {"sa", "ssa", "mmi", "ingleton"};
inline constexpr std::array<int, 4> kInequalityArity = {2, 3, 3, 4};

// Partition of `subsystem` into pairwise-disjoint nonempty blocks, ordered by
// ascending minimum element.
struct Partition {
    QubitSet subsystem = 0;
    std::vector<QubitSet> blocks;
};

// Every set partition of every subsystem T (all nonempty subsets of the
// register, the full set included) with |T| >= arity into exactly `arity`
// nonempty blocks. Deterministic order: subsystems by ascending bitmask,
// partitions in restricted-growth order, blocks by ascending minimum element.
void for_each_partition(int num_qubits, int arity, const std::function<void(const Partition&)>& fn);
std::vector<Partition> enumerate_partitions(int num_qubits, int arity);

// Closed-form count of what for_each_partition emits (no role expansion).
std::uint64_t partition_count(int num_qubits, int arity);

// Number of evaluated checks per step after role expansion:
//   SA   1 per bipartition ({A,B} symmetric)
//   SSA  3 per tripartition (center block distinguished, outer pair symmetric)
//   MMI  1 per tripartition (fully symmetric)
//   Ingleton 6 per 4-partition (choice of the {A,B} pair; A<->B and C<->D symmetric)
std::uint64_t check_count(int num_qubits, Inequality ineq);

// Denominator of the failure ratio: all role assignments of up to `arity`
// blocks over every subsystem (the empty one included), i.e. degenerate
// assignments with empty roles are counted even though they saturate
// identically and are never evaluated. For MMI this equals the number of ways
// to pick three disjoint possibly-empty unordered subsets of the register.
std::uint64_t ratio_basis(int num_qubits, Inequality ineq);

// Saturations: LHS of the inequality written as LHS >= 0.
double saturation_sa(const EntropyVector& ev, QubitSet a, QubitSet b);
double saturation_ssa(const EntropyVector& ev, QubitSet a, QubitSet b, QubitSet c);
double saturation_mmi(const EntropyVector& ev, QubitSet a, QubitSet b, QubitSet c);
double saturation_ingleton(const EntropyVector& ev, QubitSet a, QubitSet b, QubitSet c,
                           QubitSet d);

struct InequalityStats {
    std::uint64_t check_count = 0;
    double min_saturation = 0.0;
    double mean_saturation = 0.0;
    std::uint64_t failure_count = 0;
    std::uint64_t ratio_basis = 0;
    double failure_ratio = 0.0;           // failure_count / ratio_basis
    double mean_failure_saturation = 0.0;  // mean over failing checks; 0 if none
};

struct StepReport {
    int step_index = 0;
    std::string step_kind;
    std::string gate_label;
    std::array<InequalityStats, 4> stats;  // indexed by Inequality
    double entropy_norm = 0.0;

    const InequalityStats& of(Inequality ineq) const {
        return stats[static_cast<int>(ineq)];
    }
};

// Evaluates all four inequality families over their full partition
// enumerations and aggregates the per-step statistics. step_index/kind/label
// are left for the caller.
StepReport analyze_step(const EntropyVector& ev, double tol_fail = kDefaultFailureTolerance);

}  // namespace entrack
