#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qdense/bell.hpp"
#include "qdense/tensor.hpp"
#include "test_helpers.hpp"

using namespace qdense;
using namespace qdense::testing;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("layout validates dimensions and enforces the size guard") {
    CHECK_THROWS_AS(SubsystemLayout({}), std::invalid_argument);
    CHECK_THROWS_AS(SubsystemLayout({3, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(SubsystemLayout({1024, 1024, 1024}), std::invalid_argument);
    CHECK(SubsystemLayout({3, 2}).total() == 6);
    CHECK(SubsystemLayout({1, 1}).total() == 1);
}

TEST_CASE("flat index convention: particle 1 most significant") {
    SubsystemLayout layout({3, 2});
    CHECK(layout.encode({0, 0}) == 0);
    CHECK(layout.encode({1, 1}) == 3);
    CHECK(layout.encode({2, 1}) == 5);
    CHECK(layout.decode(4) == std::vector<std::size_t>{2, 0});
}

TEST_CASE("flat index round-trips for assorted layouts") {
    for (const auto& dims : {std::vector<std::size_t>{2, 3, 5}, {7, 11}, {2, 2, 2, 2, 2}, {9973}}) {
        SubsystemLayout layout(dims);
        REQUIRE(layout.total() <= 10000);
        for (std::size_t flat = 0; flat < layout.total(); ++flat) {
            CHECK(layout.encode(layout.decode(flat)) == flat);
        }
    }
}

TEST_CASE("make_state accepts the shared (3,2) channel") {
    std::vector<cplx> amps(6, 0.0);
    amps[0] = kInvSqrt2;
    amps[3] = kInvSqrt2;  // |11> with |ab> -> a*2+b
    StateVector psi = make_state(SubsystemLayout({3, 2}), amps);
    CHECK(psi.amp(0).real() == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(psi.amp(3).real() == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(max_amp_distance(psi, channel_state(3, 2)) < 1e-12);
}

TEST_CASE("make_state handles trivial inputs and rejects bad ones") {
    StateVector ket = make_state(SubsystemLayout({2}), {1.0, 0.0});
    CHECK(std::abs(ket.amp(0) - cplx{1.0, 0.0}) < 1e-15);

    StateVector uniform = make_state(SubsystemLayout({2, 2}), {0.5, 0.5, 0.5, 0.5});
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(uniform.amp(i) - cplx{0.5, 0.0}) < 1e-15);

    CHECK_THROWS_AS(make_state(SubsystemLayout({2, 2}), {1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_state(SubsystemLayout({2}), {0.0, 0.0}), std::invalid_argument);
    // Slightly off-norm input is renormalized exactly.
    StateVector nudged = make_state(SubsystemLayout({2}), {1.0 + 5e-9, 0.0});
    CHECK(std::abs(nudged.amp(0) - cplx{1.0, 0.0}) < 1e-12);
}

TEST_CASE("tensor appends the ancilla to the two-particle channel") {
    StateVector three = tensor(channel_state(2, 2), basis_ket(SubsystemLayout({3}), {0}));
    REQUIRE(three.layout().dims() == std::vector<std::size_t>{2, 2, 3});
    CHECK(std::abs(three.amp(three.layout().encode({0, 0, 0})) - cplx{kInvSqrt2, 0.0}) < 1e-12);
    CHECK(std::abs(three.amp(three.layout().encode({1, 1, 0})) - cplx{kInvSqrt2, 0.0}) < 1e-12);
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < three.size(); ++i) {
        if (std::abs(three.amp(i)) > 1e-14) ++nonzero;
    }
    CHECK(nonzero == 2);
}

TEST_CASE("tensor of basis kets is a basis ket") {
    StateVector zz = tensor(basis_ket(SubsystemLayout({2}), {0}), basis_ket(SubsystemLayout({2}), {0}));
    CHECK(std::abs(zz.amp(0) - cplx{1.0, 0.0}) < 1e-15);
}

TEST_CASE("tensor of random normalized states stays normalized") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        StateVector a = random_state(SubsystemLayout({3, 2}), seed);
        StateVector b = random_state(SubsystemLayout({4}), seed + 1000);
        CHECK(std::abs(inner(tensor(a, b), tensor(a, b)) - cplx{1.0, 0.0}) < 1e-12);
    }
}

TEST_CASE("inner products match the (3,2) Bell family") {
    CHECK(std::abs(inner(channel_state(3, 2), channel_state(3, 2)) - cplx{1.0, 0.0}) < 1e-12);
    CHECK(std::abs(inner(bell_state(3, 2, 0, 1), bell_state(3, 2, 0, 0))) < 1e-12);

    // Brute-force Gram matrix of the whole family.
    for (std::size_t k = 0; k < 6; ++k) {
        for (std::size_t l = 0; l < 6; ++l) {
            const cplx want = (k == l) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            CHECK(std::abs(inner(bell_state(3, 2, k / 2, k % 2), bell_state(3, 2, l / 2, l % 2)) -
                           want) < 1e-10);
        }
    }
}

TEST_CASE("inner requires identical layouts and is conjugate-symmetric") {
    CHECK_THROWS_AS(inner(channel_state(3, 2), channel_state(2, 2)), std::invalid_argument);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        StateVector a = random_state(SubsystemLayout({2, 3}), seed);
        StateVector b = random_state(SubsystemLayout({2, 3}), seed + 77);
        CHECK(std::abs(inner(a, b) - std::conj(inner(b, a))) < 1e-15);
    }
}

TEST_CASE("apply_on reproduces the shift on particle 1") {
    StateVector shifted =
        apply_on(UnitaryOperator(fixture_unitary_3x2(1, 0)), channel_state(3, 2), {0});
    CHECK(max_amp_distance(shifted, bell_state(3, 2, 1, 0)) < 1e-12);
    // 1/sqrt(2)(|10> + |21>)
    CHECK(std::abs(shifted.amp(2) - cplx{kInvSqrt2, 0.0}) < 1e-12);
    CHECK(std::abs(shifted.amp(5) - cplx{kInvSqrt2, 0.0}) < 1e-12);
}

TEST_CASE("apply_on with the identity leaves the state unchanged") {
    StateVector s = random_state(SubsystemLayout({2, 3, 2}), 5);
    CHECK(max_amp_distance(apply_on(UnitaryOperator::identity(6), s, {1, 2}), s) < 1e-15);
}

TEST_CASE("apply_on on non-adjacent subsystems (1,3) of a three-particle state") {
    StateVector three = tensor(channel_state(2, 2), basis_ket(SubsystemLayout({3}), {0}));
    StateVector swapped = apply_on(UnitaryOperator(fixture_transfer_first()), three, {0, 2});
    CHECK(std::abs(swapped.amp(swapped.layout().encode({0, 0, 0})) - cplx{kInvSqrt2, 0.0}) < 1e-12);
    CHECK(std::abs(swapped.amp(swapped.layout().encode({1, 1, 1})) - cplx{kInvSqrt2, 0.0}) < 1e-12);
}

TEST_CASE("apply_on validates its targets") {
    StateVector s = channel_state(3, 2);
    CHECK_THROWS_AS(apply_on(UnitaryOperator::identity(2), s, {0}), std::invalid_argument);
    CHECK_THROWS_AS(apply_on(UnitaryOperator::identity(9), s, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(apply_on(UnitaryOperator::identity(3), s, {2}), std::out_of_range);
}

TEST_CASE("apply_on preserves the norm for random unitaries") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        StateVector s = random_state(SubsystemLayout({2, 3, 2}), seed);
        StateVector out = apply_on(random_unitary(6, seed + 31), s, {0, 1});
        CHECK(std::abs(inner(out, out) - cplx{1.0, 0.0}) < 1e-12);
    }
}

TEST_CASE("operators on disjoint targets commute") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        StateVector s = random_state(SubsystemLayout({2, 3, 2}), seed);
        UnitaryOperator u = random_unitary(2, seed + 100);
        UnitaryOperator v = random_unitary(3, seed + 200);
        StateVector uv = apply_on(u, apply_on(v, s, {1}), {2});
        StateVector vu = apply_on(v, apply_on(u, s, {2}), {1});
        CHECK(max_amp_distance(uv, vu) < 1e-12);
    }
}

TEST_CASE("reduce of the channel's receiver particle is maximally mixed") {
    DensityMatrix rho = reduce(channel_state(3, 2), {1});
    REQUIRE(rho.dim() == 2);
    CHECK(std::abs(rho.at(0, 0) - cplx{0.5, 0.0}) < 1e-12);
    CHECK(std::abs(rho.at(1, 1) - cplx{0.5, 0.0}) < 1e-12);
    CHECK(std::abs(rho.at(0, 1)) < 1e-12);
}

TEST_CASE("reduce of a product factor is a pure projector") {
    // |0>_1 (x) (|00>+|11>)_23 / sqrt(2), particle 1 disentangled.
    StateVector s = tensor(basis_ket(SubsystemLayout({2}), {0}), channel_state(2, 2));
    DensityMatrix rho = reduce(s, {0});
    CHECK(std::abs(rho.at(0, 0) - cplx{1.0, 0.0}) < 1e-12);
    CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("reduce of random states yields valid density matrices") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        StateVector s = random_state(SubsystemLayout({2, 3, 2}), seed);
        DensityMatrix rho = reduce(s, {0, 2});
        CHECK(std::abs(rho.matrix().trace() - cplx{1.0, 0.0}) < 1e-12);
        for (double ev : rho.eigenvalues()) {
            CHECK(ev >= -1e-10);
            CHECK(ev <= 1.0 + 1e-10);
        }
    }
    CHECK_THROWS_AS(reduce(channel_state(3, 2), {7}), std::out_of_range);
}

TEST_CASE("tensor then reduce recovers the original projector") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        StateVector a = random_state(SubsystemLayout({2, 2}), seed);
        StateVector b = random_state(SubsystemLayout({3}), seed + 50);
        DensityMatrix rho = reduce(tensor(a, b), {0, 1});
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = 0; c < 4; ++c) {
                CHECK(std::abs(rho.at(r, c) - a.amp(r) * std::conj(a.amp(c))) < 1e-12);
            }
        }
    }
}

TEST_CASE("unitary constructor rejects non-unitary matrices") {
    ComplexMatrix bad(2);
    bad.at(0, 0) = 1.0;
    bad.at(1, 1) = 0.5;
    CHECK_THROWS_AS(UnitaryOperator(std::move(bad)), std::invalid_argument);
}

TEST_CASE("density constructor rejects invalid matrices") {
    ComplexMatrix not_hermitian(2);
    not_hermitian.at(0, 0) = 0.5;
    not_hermitian.at(1, 1) = 0.5;
    not_hermitian.at(0, 1) = cplx{0.0, 0.3};
    not_hermitian.at(1, 0) = cplx{0.0, 0.3};
    CHECK_THROWS_AS(DensityMatrix(std::move(not_hermitian)), std::invalid_argument);

    ComplexMatrix bad_trace(2);
    bad_trace.at(0, 0) = 1.0;
    bad_trace.at(1, 1) = 1.0;
    CHECK_THROWS_AS(DensityMatrix(std::move(bad_trace)), std::invalid_argument);

    ComplexMatrix negative(2);
    negative.at(0, 0) = 1.5;
    negative.at(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix(std::move(negative)), std::invalid_argument);
}

TEST_CASE("hermitian eigenvalues match hand-computed spectra") {
    // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
    ComplexMatrix m(2);
    m.at(0, 0) = 2.0;
    m.at(1, 1) = 2.0;
    m.at(0, 1) = cplx{0.0, 1.0};
    m.at(1, 0) = cplx{0.0, -1.0};
    auto evs = hermitian_eigenvalues(m);
    CHECK(evs[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(evs[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("root_of_unity hits quarter turns exactly") {
    CHECK(root_of_unity(0, 4) == cplx{1.0, 0.0});
    CHECK(root_of_unity(1, 4) == cplx{0.0, 1.0});
    CHECK(root_of_unity(2, 4) == cplx{-1.0, 0.0});
    CHECK(root_of_unity(3, 4) == cplx{0.0, -1.0});
    CHECK(root_of_unity(1, 2) == cplx{-1.0, 0.0});
    CHECK(std::abs(root_of_unity(1, 3) - std::polar(1.0, 2.0 * M_PI / 3.0)) < 1e-15);
}
