#include <doctest.h>

#include <cmath>

#include "complab/qubit.hpp"
#include "test_support.hpp"

using namespace complab;

TEST_CASE("bloch_to_density on reference states") {
    // maximally mixed
    const DensityMatrix mixed = bloch_to_density(BlochState{0, 0, 0});
    CHECK(mixed(0, 0) == Complex{0.5, 0.0});
    CHECK(mixed(1, 1) == Complex{0.5, 0.0});
    CHECK(mixed(0, 1) == Complex{0.0, 0.0});

    // sigma_z eigenstate
    const DensityMatrix up = bloch_to_density(BlochState{0, 0, 1});
    CHECK(up(0, 0) == Complex{1.0, 0.0});
    CHECK(up(1, 1) == Complex{0.0, 0.0});
    CHECK(up(0, 1) == Complex{0.0, 0.0});

    // s = (0, 0.9, 0): diagonal 1/2, off-diagonal -+0.45i
    const DensityMatrix y = bloch_to_density(BlochState{0, 0.9, 0});
    CHECK(y(0, 0).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(y(0, 1) == Complex{0.0, -0.45});
    CHECK(y(1, 0) == Complex{0.0, 0.45});
}

TEST_CASE("bloch_to_density rejects unphysical states") {
    CHECK_THROWS_AS(BlochState(1.1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(BlochState(0.8, 0.8, 0.8), std::invalid_argument);
    CHECK_NOTHROW(BlochState(1.0, 0, 0));
    CHECK_NOTHROW(BlochState(1.0 + 0.5e-9, 0, 0));  // inside the tolerance
}

TEST_CASE("expectation values") {
    CHECK(expectation(BlochState{0, 0, 0}, Direction::x_axis()) == 0.0);
    CHECK(expectation(BlochState{1, 0, 0}, Direction::x_axis()) == 1.0);
    CHECK(expectation(BlochState{0, 0.9, 0}, Direction::y_axis()) ==
          doctest::Approx(0.9).epsilon(1e-15));
}

TEST_CASE("expectation equals the trace formula") {
    auto rng = testing::make_rng(11);
    for (int i = 0; i < 500; ++i) {
        const BlochState s = testing::random_state(rng);
        const Direction n = testing::random_direction(rng);
        const Matrix2 prod = bloch_to_density(s).matrix() * pauli_dot(n.vec());
        CHECK(std::abs(expectation(s, n) - prod.trace().real()) < 1e-14);
        CHECK(std::abs(prod.trace().imag()) < 1e-15);
    }
}

TEST_CASE("bloch_to_density is affine") {
    auto rng = testing::make_rng(12);
    for (int i = 0; i < 200; ++i) {
        const BlochState s1 = testing::random_state(rng);
        const BlochState s2 = testing::random_state(rng);
        const double lam = testing::uniform(rng, 0.0, 1.0);
        const Vec3 mixv = s1.vec() * lam + s2.vec() * (1.0 - lam);
        const Matrix2 lhs = bloch_to_density(BlochState{mixv}).matrix();
        const Matrix2 rhs = bloch_to_density(s1).matrix() * lam +
                            bloch_to_density(s2).matrix() * (1.0 - lam);
        CHECK(lhs.max_abs_diff(rhs) < 1e-15);
    }
}

TEST_CASE("min_eigenvalue closed form") {
    CHECK(min_eigenvalue(Matrix2::identity()) == 1.0);
    CHECK(min_eigenvalue(Matrix2{1, 0, 0, 0}) == 0.0);

    // (sigma_0 + 0.6 sigma_x + 0.8 sigma_z)/4: Bloch length 1, eigenvalues (1 +- 1)/4
    const Matrix2 m =
        (Matrix2::identity() + pauli_x() * 0.6 + pauli_z() * 0.8) * 0.25;
    CHECK(min_eigenvalue(m) == doctest::Approx(0.0).epsilon(0).scale(1).epsilon(1e-15));

    CHECK_THROWS_AS(min_eigenvalue(Matrix2{0, 1, 2, 0}), std::invalid_argument);
}

TEST_CASE("min_eigenvalue of a state matrix is (1-|s|)/2") {
    auto rng = testing::make_rng(13);
    for (int i = 0; i < 500; ++i) {
        const BlochState s = testing::random_state(rng);
        const double lo = min_eigenvalue(bloch_to_density(s).matrix());
        CHECK(std::abs(lo - 0.5 * (1.0 - s.norm())) < 1e-12);
    }
}

TEST_CASE("orthonormal_complement builds a deterministic triad") {
    auto rng = testing::make_rng(14);
    for (int i = 0; i < 200; ++i) {
        const Direction n = testing::random_direction(rng);
        const auto [ax, az] = orthonormal_complement(n);
        CHECK(std::abs(ax.vec().norm() - 1.0) < 1e-12);
        CHECK(std::abs(az.vec().norm() - 1.0) < 1e-12);
        CHECK(std::abs(ax.vec().dot(n.vec())) < 1e-12);
        CHECK(std::abs(az.vec().dot(n.vec())) < 1e-12);
        CHECK(std::abs(ax.vec().dot(az.vec())) < 1e-12);

        // deterministic: same input, same triad
        const auto [bx, bz] = orthonormal_complement(n);
        CHECK((ax.vec() - bx.vec()).norm() == 0.0);
        CHECK((az.vec() - bz.vec()).norm() == 0.0);
    }
}

TEST_CASE("density matrix validation") {
    CHECK_THROWS_AS(DensityMatrix(Matrix2{1, 0, 0, 1}), std::invalid_argument);  // trace 2
    CHECK_THROWS_AS(DensityMatrix(Matrix2{1.5, 0, 0, -0.5}), std::invalid_argument);
    CHECK_THROWS_AS(DensityMatrix(Matrix2{0.5, 1, 0, 0.5}), std::invalid_argument);
}
