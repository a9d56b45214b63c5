#include <doctest.h>

#include <cmath>
#include <numbers>

#include "entrack/density_matrix.hpp"
#include "entrack/pure_state.hpp"
#include "oracles.hpp"

using namespace entrack;

TEST_CASE("pure state construction and invariants") {
    const PureState zero(3);
    CHECK(zero.dim() == 8);
    CHECK(zero.probability(0) == doctest::Approx(1.0));

    // qubit 0 is the MSB: |10> has index 2
    const PureState ten = PureState::basis_state(2, 2);
    CHECK(ten.bit(2, 0) == 1);
    CHECK(ten.bit(2, 1) == 0);

    CHECK_THROWS_AS(PureState(2, std::vector<cplx>{1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(PureState(1, std::vector<cplx>{0.8, 0.7}), std::invalid_argument);
}

TEST_CASE("density_of known states") {
    // |0> -> diag(1, 0)
    DensityMatrix d0 = density_of(PureState(1));
    CHECK(d0.matrix()(0, 0) == cplx(1.0));
    CHECK(d0.matrix()(1, 1) == cplx(0.0));

    // |+> -> all entries 1/2
    const double r = 1.0 / std::numbers::sqrt2;
    DensityMatrix dplus = density_of(PureState(1, {r, r}));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(dplus.matrix()(i, j).real() == doctest::Approx(0.5));

    // GHZ4: 1/2 at the four corners, zero elsewhere
    DensityMatrix ghz = density_of(oracles::ghz(4));
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j) {
            const bool corner = (i == 0 || i == 15) && (j == 0 || j == 15);
            CHECK(ghz.matrix()(i, j).real() == doctest::Approx(corner ? 0.5 : 0.0));
            CHECK(ghz.matrix()(i, j).imag() == doctest::Approx(0.0));
        }
}

TEST_CASE("partial trace on known states") {
    const double r = 1.0 / std::numbers::sqrt2;

    // Bell pair, trace qubit 1 -> maximally mixed qubit
    const PureState bell(2, {r, 0.0, 0.0, r});
    DensityMatrix red = partial_trace(density_of(bell), /*traced=*/0b10);
    CHECK(red.labels() == std::vector<int>{0});
    CHECK(red.matrix()(0, 0).real() == doctest::Approx(0.5));
    CHECK(red.matrix()(1, 1).real() == doctest::Approx(0.5));
    CHECK(std::abs(red.matrix()(0, 1)) == doctest::Approx(0.0));

    // |0> (x) |+>, trace qubit 0 -> |+><+|
    const PureState zero_plus(2, {r, r, 0.0, 0.0});
    red = partial_trace(density_of(zero_plus), 0b01);
    CHECK(red.labels() == std::vector<int>{1});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(red.matrix()(i, j).real() == doctest::Approx(0.5));

    // GHZ4, trace qubit 3 -> (|000><000| + |111><111|)/2
    red = partial_trace(density_of(oracles::ghz(4)), 0b1000);
    CHECK(red.labels() == std::vector<int>{0, 1, 2});
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            const double expect = (i == j && (i == 0 || i == 7)) ? 0.5 : 0.0;
            CHECK(red.matrix()(i, j).real() == doctest::Approx(expect));
        }

    CHECK_THROWS_AS(partial_trace(density_of(bell), 0b11), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(density_of(bell), 0b100), std::invalid_argument);
}

TEST_CASE("reduced density on known states") {
    // GHZ4 keep {0} -> diag(1/2, 1/2)
    DensityMatrix red = reduced_density(oracles::ghz(4), 0b0001);
    CHECK(red.matrix()(0, 0).real() == doctest::Approx(0.5));
    CHECK(red.matrix()(1, 1).real() == doctest::Approx(0.5));
    CHECK(std::abs(red.matrix()(0, 1)) < 1e-12);

    // |0000> keep {1,2} -> diag(1,0,0,0)
    red = reduced_density(PureState(4), 0b0110);
    CHECK(red.labels() == std::vector<int>{1, 2});
    CHECK(red.matrix()(0, 0).real() == doctest::Approx(1.0));
    for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(red.matrix()(i, i)) < 1e-12);

    // Bell (x) |0>, keep {0,1} -> the Bell projector
    red = reduced_density(oracles::bell_times_zero(), 0b011);
    CHECK(red.matrix()(0, 0).real() == doctest::Approx(0.5));
    CHECK(red.matrix()(0, 3).real() == doctest::Approx(0.5));
    CHECK(red.matrix()(3, 0).real() == doctest::Approx(0.5));
    CHECK(red.matrix()(3, 3).real() == doctest::Approx(0.5));
    CHECK(std::abs(red.matrix()(1, 1)) < 1e-12);
    CHECK(std::abs(red.matrix()(2, 2)) < 1e-12);
}

TEST_CASE("reduced_density equals the matrix path and the reordering oracle") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const int n = 2 + static_cast<int>(seed % 4);  // 2..5
        const PureState psi = oracles::scrambled_state(n, seed);
        for (QubitSet keep = 1; keep < full_set(n); ++keep) {
            const DensityMatrix direct = reduced_density(psi, keep);
            const QubitSet traced = complement(keep, n);
            const DensityMatrix via_matrix = partial_trace(density_of(psi), traced);
            CHECK(direct.matrix().max_abs_diff(via_matrix.matrix()) < 1e-10);
            CHECK(direct.matrix().max_abs_diff(oracles::reduced_by_reordering(psi, keep)) <
                  1e-10);
        }
    }
}

TEST_CASE("partial trace preserves trace and composes") {
    const PureState psi = oracles::scrambled_state(5, 77);
    const DensityMatrix rho = density_of(psi);

    // trace preservation
    const DensityMatrix r1 = partial_trace(rho, 0b01010);
    CHECK(r1.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-10));

    // tracing T1 then T2 equals tracing T1 | T2 at once
    const DensityMatrix two_step = partial_trace(partial_trace(rho, 0b00011), 0b01000);
    const DensityMatrix one_step = partial_trace(rho, 0b01011);
    CHECK(two_step.matrix().max_abs_diff(one_step.matrix()) < 1e-10);
    CHECK(two_step.labels() == one_step.labels());
}

TEST_CASE("complementary subsets share their nonzero spectrum") {
    const PureState psi = oracles::scrambled_state(5, 123);
    for (QubitSet keep : {QubitSet{0b00001}, QubitSet{0b01010}, QubitSet{0b00111}}) {
        auto sa = hermitian_eigenvalues(reduced_density(psi, keep).matrix());
        auto sb = hermitian_eigenvalues(
            reduced_density(psi, complement(keep, 5)).matrix());
        // descending order: leading values agree, the longer tail is zero
        const std::size_t k = std::min(sa.size(), sb.size());
        for (std::size_t i = 0; i < k; ++i)
            CHECK(sa[i] == doctest::Approx(sb[i]).epsilon(1e-9));
        const auto& longer = sa.size() >= sb.size() ? sa : sb;
        for (std::size_t i = k; i < longer.size(); ++i) CHECK(std::abs(longer[i]) < 1e-9);
    }
}
