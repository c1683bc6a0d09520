// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#include <doctest.h>

#include "conric/instances.hpp"
#include "conric/sylvester.hpp"
#include "test_support.hpp"

using namespace conric;
using namespace conric::sylvester;
using testsupport::random_cone;
using testsupport::random_matrix;
using testsupport::random_nonneg;
using testsupport::random_stable_metzler;
using Rng = instances::Rng;

namespace {

double rel_diff(const Matrix& a, const Matrix& b) {
    return (a - b).norm() / std::max(1.0, b.norm());
}

}  // namespace

TEST_CASE("scalar closed form") {
    const Matrix a = Matrix::Constant(1, 1, -2.0);
    const Matrix d = Matrix::Constant(1, 1, -2.0);
    const Matrix c = Matrix::Constant(1, 1, 1.0);
    for (Method method : {Method::SchurBased, Method::Kronecker, Method::Quadrature}) {
        const Matrix x = solve_sylvester({a, d, c, method});
        CHECK(x(0, 0) == doctest::Approx(0.25).epsilon(1e-9));
    }
}

TEST_CASE("zero right-hand side forces the zero solution") {
    Rng rng(51);
    const Matrix a = random_stable_metzler(rng, 4, 1.0);
    const Matrix d = random_stable_metzler(rng, 4, 1.0);
    const Matrix x = solve_sylvester({a, d, Matrix::Zero(4, 4), Method::SchurBased});
    CHECK(x.norm() < 1e-12);
}

TEST_CASE("Schur path satisfies the residual contract") {
    Rng rng(52);
    for (int trial = 0; trial < 10; ++trial) {
        const Index n = 2 + 3 * (trial % 5);
        const Matrix a = random_stable_metzler(rng, n, 0.5);
        const Matrix d = random_stable_metzler(rng, n, 0.5);
        const Matrix c = random_matrix(rng, n);
        const Matrix x = solve_sylvester({a, d, c, Method::SchurBased});
        const double res = (d * x + x * a + c).norm();
        CHECK(res <= 1e-10 * (d.norm() + a.norm()) * x.norm() + 1e-12 * c.norm());
    }
}

TEST_CASE("Schur and Kronecker agree") {
    Rng rng(53);
    for (int trial = 0; trial < 8; ++trial) {
        const Index n = 2 + 2 * trial;  // up to 16
        const Matrix a = random_stable_metzler(rng, n, 0.5);
        const Matrix d = random_stable_metzler(rng, n, 0.5);
        const Matrix c = random_nonneg(rng, n);
        const Matrix xs = solve_sylvester({a, d, c, Method::SchurBased});
        const Matrix xk = solve_sylvester({a, d, c, Method::Kronecker});
        CHECK(rel_diff(xs, xk) <= 1e-10);
    }
}

TEST_CASE("scalar integral") {
    const Matrix minus1 = Matrix::Constant(1, 1, -1.0);
    const Matrix one = Matrix::Constant(1, 1, 1.0);
    const Matrix x = integral_solution(minus1, minus1, one);
    CHECK(x(0, 0) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(integral_solution(minus1, minus1, Matrix::Zero(1, 1)).norm() == doctest::Approx(0.0));
}

TEST_CASE("quadrature agrees with the Schur path on stable instances") {
    Rng rng(54);
    for (int trial = 0; trial < 5; ++trial) {
        const Index n = 2 + trial;
        const Matrix a = random_stable_metzler(rng, n, 1.0);
        const Matrix d = random_stable_metzler(rng, n, 1.0);
        const Matrix c = random_nonneg(rng, n);
        const Matrix xs = solve_sylvester({a, d, c, Method::SchurBased});
        const Matrix xq = integral_solution(a, d, c);
        CHECK(rel_diff(xq, xs) <= 1e-6);
    }
}

TEST_CASE("quadrature refuses unstable coefficients") {
    const Matrix unstable = Matrix::Constant(1, 1, 0.5);
    const Matrix stable = Matrix::Constant(1, 1, -1.0);
    CHECK_THROWS_AS(integral_solution(unstable, stable, stable), PreconditionError);
}

TEST_CASE("solution is linear in the right-hand side") {
    Rng rng(55);
    const Index n = 5;
    const Matrix a = random_stable_metzler(rng, n, 0.5);
    const Matrix d = random_stable_metzler(rng, n, 0.5);
    const Matrix c1 = random_matrix(rng, n);
    const Matrix c2 = random_matrix(rng, n);
    const SchurSylvesterSolver solver(a, d);
    const Matrix sum = solver.solve(Matrix(c1 + c2));
    const Matrix parts = solver.solve(c1) + solver.solve(c2);
    CHECK(rel_diff(sum, parts) <= 1e-10);
}

TEST_CASE("shared eigenvalue is flagged as ill-posed") {
    const Matrix a = Matrix::Constant(1, 1, 1.0);
    const Matrix d = Matrix::Constant(1, 1, -1.0);  // lambda_D + lambda_A = 0
    const Matrix c = Matrix::Constant(1, 1, 1.0);
    try {
        solve_sylvester({a, d, c, Method::SchurBased});
        FAIL("expected IllPosedError");
    } catch (const IllPosedError& e) {
        CHECK(e.min_eigensum_magnitude == doctest::Approx(0.0));
    }
}

TEST_CASE("cone preservation of the solution: scalar and coupled") {
    const auto k1 = cones::ConeSpec::orthant(1);
    CHECK(sylvester_preserves_cone(k1, Matrix::Constant(1, 1, -2.0),
                                   Matrix::Constant(1, 1, -2.0), Matrix::Constant(1, 1, 1.0)));

    Matrix a(2, 2);
    a << -3, 1, 1, -3;
    const Matrix c = Matrix::Ones(2, 2);
    const auto k2 = cones::ConeSpec::orthant(2);
    CHECK(sylvester_preserves_cone(k2, a, a, c));
    // entrywise check against the Kronecker oracle
    const Matrix x = solve_sylvester({a, a, c, Method::Kronecker});
    CHECK(x.minCoeff() >= 0.0);
}

TEST_CASE("cone preservation holds on conjugated cones") {
    Rng rng(56);
    for (int trial = 0; trial < 10; ++trial) {
        const Index n = 2 + trial % 5;
        const auto change = random_cone(rng, n);
        const Matrix a = change.push(random_stable_metzler(rng, n, 0.75));
        const Matrix d = change.push(random_stable_metzler(rng, n, 0.75));
        const Matrix c = change.push(random_nonneg(rng, n));
        CHECK(sylvester_preserves_cone(change.cone, a, d, c));
    }
}

TEST_CASE("cone preservation rejects violated hypotheses") {
    const auto k = cones::ConeSpec::orthant(1);
    const Matrix stable = Matrix::Constant(1, 1, -1.0);
    const Matrix unstable = Matrix::Constant(1, 1, 1.0);
    const Matrix neg = Matrix::Constant(1, 1, -1.0);
    CHECK_THROWS_AS(sylvester_preserves_cone(k, unstable, stable, Matrix::Ones(1, 1)),
                    PreconditionError);
    CHECK_THROWS_AS(sylvester_preserves_cone(k, stable, stable, neg), PreconditionError);
}

TEST_CASE("Kronecker oracle is capped at n = 20") {
    Rng rng(57);
    const Matrix a = random_stable_metzler(rng, 21, 1.0);
    CHECK_THROWS_AS(solve_sylvester({a, a, Matrix::Ones(21, 21), Method::Kronecker}),
                    PreconditionError);
}
