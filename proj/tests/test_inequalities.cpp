#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "entrack/inequalities.hpp"
#include "oracles.hpp"

using namespace entrack;

namespace {

// Independent partition counter: enumerate submask-based recursion and count.
std::uint64_t count_partitions_by_enumeration(int n, int arity) {
    std::uint64_t count = 0;
    for_each_partition(n, arity, [&](const Partition&) { ++count; });
    return count;
}

}  // namespace

TEST_CASE("partition enumeration counts and shapes") {
    // N=3 MMI: the only tripartitionable subsystem is the full set
    auto parts = enumerate_partitions(3, 3);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].subsystem == 0b111);
    CHECK(parts[0].blocks == std::vector<QubitSet>{0b001, 0b010, 0b100});

    // N=4 MMI: 4 subsystems of size 3 plus S(4,3)=6 for the full set
    CHECK(enumerate_partitions(4, 3).size() == 10);
    CHECK(partition_count(4, 3) == 10);

    // N=3 SA: 3 size-2 subsystems x 1 + full set x 3 = 6
    CHECK(enumerate_partitions(3, 2).size() == 6);
    CHECK(partition_count(3, 2) == 6);

    for (int n = 2; n <= 6; ++n)
        for (int arity = 2; arity <= 4; ++arity)
            CHECK(partition_count(n, arity) == count_partitions_by_enumeration(n, arity));

    // blocks are disjoint, nonempty, ordered by minimum element, and union to T
    for (const Partition& p : enumerate_partitions(5, 3)) {
        QubitSet seen = 0;
        int prev_min = -1;
        for (QubitSet b : p.blocks) {
            REQUIRE(b != 0);
            CHECK((seen & b) == 0);
            seen |= b;
            const int mn = set_qubits(b).front();
            CHECK(mn > prev_min);
            prev_min = mn;
        }
        CHECK(seen == p.subsystem);
    }
}

TEST_CASE("per-family check counts and ratio bases") {
    // role expansion: SA x1, SSA x3, MMI x1, Ingleton x6
    CHECK(check_count(5, Inequality::SA) == 90);
    CHECK(check_count(5, Inequality::SSA) == 195);
    CHECK(check_count(5, Inequality::MMI) == 65);
    CHECK(check_count(6, Inequality::MMI) == 350);
    CHECK(check_count(7, Inequality::MMI) == 1701);
    CHECK(check_count(5, Inequality::Ingleton) == 90);

    // the MMI ratio basis counts every unordered triple of disjoint
    // possibly-empty subsets: 187 / 715 / 2795 for 5 / 6 / 7 qubits
    CHECK(ratio_basis(5, Inequality::MMI) == 187);
    CHECK(ratio_basis(6, Inequality::MMI) == 715);
    CHECK(ratio_basis(7, Inequality::MMI) == 2795);
    CHECK(ratio_basis(4, Inequality::MMI) == 51);

    // a family's basis always covers its evaluated checks
    for (int n = 3; n <= 7; ++n)
        for (int fam = 0; fam < 4; ++fam)
            CHECK(ratio_basis(n, static_cast<Inequality>(fam)) >=
                  check_count(n, static_cast<Inequality>(fam)));
}

TEST_CASE("saturations on frozen examples") {
    const double r = 1.0 / std::numbers::sqrt2;
    const EntropyVector bell = entropy_vector(PureState(2, {r, 0.0, 0.0, r}));
    CHECK(saturation_sa(bell, 0b01, 0b10) == doctest::Approx(2.0).epsilon(1e-9));

    const EntropyVector prod = entropy_vector(PureState(4));
    CHECK(saturation_sa(prod, 0b0001, 0b0010) == doctest::Approx(0.0));
    CHECK(saturation_ssa(prod, 0b0001, 0b0010, 0b0100) == doctest::Approx(0.0));
    CHECK(saturation_mmi(prod, 0b0001, 0b0010, 0b0100) == doctest::Approx(0.0));
    CHECK(saturation_ingleton(prod, 0b0001, 0b0010, 0b0100, 0b1000) == doctest::Approx(0.0));

    const EntropyVector ghz4 = entropy_vector(oracles::ghz(4));
    CHECK(saturation_sa(ghz4, 0b0001, 0b0010) == doctest::Approx(1.0).epsilon(1e-9));
    // SSA saturates exactly on a 3-qubit subsystem of GHZ4
    CHECK(saturation_ssa(ghz4, 0b0001, 0b0010, 0b0100) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(saturation_mmi(ghz4, 0b0001, 0b0010, 0b0100) == doctest::Approx(-1.0).epsilon(1e-9));
    // Ingleton on the four singletons: 0 + 0 + 1 - 1 = 0
    CHECK(saturation_ingleton(ghz4, 0b0001, 0b0010, 0b0100, 0b1000) ==
          doctest::Approx(0.0).epsilon(1e-9));

    const EntropyVector ghz3 = entropy_vector(oracles::ghz(3));
    CHECK(saturation_ssa(ghz3, 0b001, 0b010, 0b100) == doctest::Approx(1.0).epsilon(1e-9));

    const EntropyVector bz = entropy_vector(oracles::bell_times_zero());
    CHECK(saturation_mmi(bz, 0b001, 0b010, 0b100) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("MMI decomposes into SSA plus a reversed subadditivity term") {
    // -I3(A:B:C) = SSA(A,B,C) + S(AC) - S(A) - S(C), checked on random vectors
    for (std::uint64_t seed : {5u, 6u, 7u}) {
        const PureState psi = oracles::scrambled_state(5, seed);
        const EntropyVector ev = entropy_vector(psi);
        for_each_partition(5, 3, [&](const Partition& p) {
            const QubitSet a = p.blocks[0], b = p.blocks[1], c = p.blocks[2];
            const double lhs = saturation_mmi(ev, a, b, c);
            const double rhs = saturation_ssa(ev, a, b, c) + ev[a | c] - ev[a] - ev[c];
            CHECK(std::abs(lhs - rhs) < 1e-12);
        });
    }
}

TEST_CASE("analyze_step on a product state") {
    const StepReport rep = analyze_step(entropy_vector(PureState(4)));
    for (const InequalityStats& s : rep.stats) {
        CHECK(s.min_saturation == doctest::Approx(0.0));
        CHECK(s.mean_saturation == doctest::Approx(0.0));
        CHECK(s.failure_count == 0);
        CHECK(s.failure_ratio == doctest::Approx(0.0));
        CHECK(s.mean_failure_saturation == doctest::Approx(0.0));
    }
    CHECK(rep.entropy_norm == doctest::Approx(0.0));
    CHECK(rep.of(Inequality::MMI).check_count == 10);
    CHECK(rep.of(Inequality::SA).check_count == check_count(4, Inequality::SA));
}

TEST_CASE("analyze_step on GHZ4") {
    const StepReport rep = analyze_step(entropy_vector(oracles::ghz(4)));
    const InequalityStats& mmi = rep.of(Inequality::MMI);
    CHECK(mmi.check_count == 10);

    // The four tripartitions of proper subsystems fail at exactly -1; the six
    // tripartitions of the full register saturate identically (purity forces
    // S(AB) = S(C) there), so they sit at 0.
    CHECK(mmi.failure_count == 4);
    CHECK(mmi.min_saturation == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(mmi.mean_failure_saturation == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(mmi.failure_ratio == doctest::Approx(4.0 / 51.0).epsilon(1e-12));

    int fails = 0, zeros = 0;
    const EntropyVector ev = entropy_vector(oracles::ghz(4));
    for_each_partition(4, 3, [&](const Partition& p) {
        const double s = saturation_mmi(ev, p.blocks[0], p.blocks[1], p.blocks[2]);
        if (std::abs(s + 1.0) < 1e-9) ++fails;
        if (std::abs(s) < 1e-9) ++zeros;
        if (p.subsystem == full_set(4)) CHECK(std::abs(s) < 1e-9);
    });
    CHECK(fails == 4);
    CHECK(zeros == 6);

    CHECK(rep.of(Inequality::SA).failure_count == 0);
    CHECK(rep.of(Inequality::SSA).failure_count == 0);
    CHECK(rep.of(Inequality::SSA).min_saturation >= -1e-9);
    CHECK(rep.of(Inequality::Ingleton).failure_count == 0);
    CHECK(rep.entropy_norm == doctest::Approx(std::sqrt(14.0)).epsilon(1e-9));
}

TEST_CASE("stabilizer-reachable states respect Ingleton everywhere") {
    // A few states reachable from |0..0> with H/X/Z/CNOT/CZ
    std::vector<PureState> states;
    states.push_back(oracles::ghz(4));
    {
        PureState s(4);
        s = apply(standard_gate("H", 0), s);
        s = apply(standard_gate("H", 2), s);
        s = apply(multi_controlled_x("1", {0}, 1), s);
        s = apply(multi_controlled_x("1", {2}, 3), s);  // two Bell pairs
        states.push_back(s);
        s = apply(controlled_phase(1, 1, 2), s);  // CZ bridges the pairs
        states.push_back(s);
        s = apply(standard_gate("H", 1), s);
        s = apply(multi_controlled_x("1", {3}, 0), s);
        states.push_back(s);
    }
    for (const PureState& s : states) {
        const StepReport rep = analyze_step(entropy_vector(s));
        CHECK(rep.of(Inequality::Ingleton).min_saturation >= -1e-9);
    }
}
