#include "pdiv/bloch.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <random>

using namespace pdiv;
using cd = std::complex<double>;

TEST_CASE("to_bloch on textbook operators") {
    Eigen::Matrix2cd half = 0.5 * Eigen::Matrix2cd::Identity();
    HermitianOp2 q = to_bloch(half);
    CHECK(q.trace == 1.0);
    CHECK(q.x == 0.0);
    CHECK(q.y == 0.0);
    CHECK(q.z == 0.0);

    Eigen::Matrix2cd up = Eigen::Matrix2cd::Zero();
    up(0, 0) = 1.0;
    q = to_bloch(up);
    CHECK(q.trace == 1.0);
    CHECK(q.z == 1.0);

    Eigen::Matrix2cd sx;
    sx << 0, 1, 1, 0;
    q = to_bloch(sx);
    CHECK(q.trace == 0.0);
    CHECK(q.x == 2.0);
    CHECK(q.y == 0.0);

    // sigma_y: q12 = -i, so y = -2 Im(q12) = 2.
    Eigen::Matrix2cd sy;
    sy << 0, cd(0, -1), cd(0, 1), 0;
    CHECK(to_bloch(sy).y == 2.0);
}

TEST_CASE("to_bloch rejects non-Hermitian input") {
    Eigen::Matrix2cd m;
    m << 1, 1, 0, 0;
    CHECK_THROWS_AS(to_bloch(m), std::invalid_argument);
    m << cd(1, 0.1), 0, 0, 0;
    CHECK_THROWS_AS(to_bloch(m), std::invalid_argument);
}

TEST_CASE("from_bloch examples") {
    CHECK(from_bloch({1, 0, 0, 0}).isApprox(0.5 * Eigen::Matrix2cd::Identity()));
    Eigen::Matrix2cd up = Eigen::Matrix2cd::Zero();
    up(0, 0) = 1.0;
    CHECK(from_bloch({1, 0, 0, 1}) == up);
    Eigen::Matrix2cd sx;
    sx << 0, 1, 1, 0;
    CHECK(from_bloch({0, 2, 0, 0}) == sx);
}

TEST_CASE("eigenvalues and trace norm examples") {
    auto [a, b] = eigenvalues({1, 0, 0, 0});
    CHECK(a == 0.5);
    CHECK(b == 0.5);
    std::tie(a, b) = eigenvalues({1, 0, 0, 1});
    CHECK(a == 1.0);
    CHECK(b == 0.0);
    std::tie(a, b) = eigenvalues({0, 0, 0, 2});
    CHECK(a == 1.0);
    CHECK(b == -1.0);

    CHECK(trace_norm({0, 0, 0, 2}) == 2.0);
    CHECK(trace_norm({1, 0.3, -0.2, 0.5}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(trace_norm({1, 1, 1, 0}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(trace_norm({-3, 0, 0, 1}) == 3.0);
}

TEST_CASE("random round trips and eigen-decomposition oracle") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 2000; ++i) {
        const HermitianOp2 q{u(rng), u(rng), u(rng), u(rng)};
        const Eigen::Matrix2cd m = from_bloch(q);
        const HermitianOp2 back = to_bloch(m);
        CHECK(back.trace == doctest::Approx(q.trace).epsilon(1e-14));
        CHECK(back.x == doctest::Approx(q.x).epsilon(1e-14));
        CHECK(back.y == doctest::Approx(q.y).epsilon(1e-14));
        CHECK(back.z == doctest::Approx(q.z).epsilon(1e-14));

        const HermitianOp2 dv = devectorize(vectorize(q));
        CHECK(dv.x == doctest::Approx(q.x).epsilon(1e-14));
        CHECK(dv.y == doctest::Approx(q.y).epsilon(1e-14));

        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(m);
        const auto ev = es.eigenvalues();
        const auto [hi, lo] = eigenvalues(q);
        CHECK(hi == doctest::Approx(ev(1)).epsilon(1e-12).scale(1.0));
        CHECK(lo == doctest::Approx(ev(0)).epsilon(1e-12).scale(1.0));
        const double oracle = std::abs(ev(0)) + std::abs(ev(1));
        CHECK(trace_norm(q) == doctest::Approx(oracle).epsilon(1e-12));
    }
}

TEST_CASE("density predicate") {
    CHECK(HermitianOp2{1, 0, 0, 1}.is_density());
    CHECK(HermitianOp2{1, 0.6, 0, 0.8}.is_density());
    CHECK_FALSE(HermitianOp2{1, 1, 1, 0}.is_density());
    CHECK_FALSE(HermitianOp2{0.5, 0, 0, 0}.is_density());
    CHECK(bloch_radius({1, 0.6, 0, 0.8}).r == doctest::Approx(1.0));
}
