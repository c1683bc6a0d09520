// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#include <doctest.h>

#include <cmath>

#include "conric/monotone.hpp"
#include "test_support.hpp"

using namespace conric;
using namespace conric::monotone;

TEST_CASE("geometric vector sequence converges under its bound") {
    const auto k = cones::ConeSpec::orthant(3);
    std::vector<Vector> seq;
    for (int i = 0; i <= 50; ++i)
        seq.push_back(Vector::Constant(3, 1.0 - std::ldexp(1.0, -i)));
    const auto cert = check_vector_sequence(k, seq, Vector::Ones(3));
    CHECK(cert.monotone_up_to == 50);
    CHECK(cert.bound_holds_up_to == 50);
    CHECK(cert.converged);
    CHECK(cert.cauchy_tail <= 1e-12);
}

TEST_CASE("constant sequence is monotone by equality and converged") {
    const auto k = cones::ConeSpec::orthant(2);
    const std::vector<Vector> seq(5, Vector::Constant(2, 0.7));
    const auto cert = check_vector_sequence(k, seq, Vector::Ones(2));
    CHECK(cert.monotone_up_to == 4);
    CHECK(cert.converged);
    CHECK(cert.cauchy_tail == doctest::Approx(0.0));
}

TEST_CASE("a decreasing step pins monotone_up_to at the break") {
    const auto k = cones::ConeSpec::orthant(1);
    std::vector<Vector> seq;
    for (double v : {0.0, 0.5, 0.75, 0.6, 0.9}) seq.push_back(Vector::Constant(1, v));
    const auto cert = check_vector_sequence(k, seq, Vector::Ones(1));
    CHECK(cert.monotone_up_to == 2);  // step 2 -> 3 decreases
}

TEST_CASE("bound violation pins bound_holds_up_to") {
    const auto k = cones::ConeSpec::orthant(1);
    std::vector<Vector> seq;
    for (double v : {0.0, 0.5, 1.5}) seq.push_back(Vector::Constant(1, v));
    const auto cert = check_vector_sequence(k, seq, Vector::Ones(1));
    CHECK(cert.monotone_up_to == 2);
    CHECK(cert.bound_holds_up_to == 1);
}

TEST_CASE("geometric matrix sequence with interior bound direction") {
    const auto k = cones::ConeSpec::orthant(3);
    std::vector<Matrix> seq;
    for (int i = 0; i <= 50; ++i)
        seq.push_back((1.0 - std::ldexp(1.0, -i)) * Matrix::Identity(3, 3));
    const auto cert = check_matrix_sequence(k, seq, Vector::Ones(3), Vector::Ones(3));
    CHECK(cert.monotone_up_to == 50);
    CHECK(cert.bound_holds_up_to == 50);
    CHECK(cert.nonneg_up_to == 50);
    CHECK(cert.converged);
    CHECK((cert.limit_estimate - Matrix::Identity(3, 3)).norm() < 1e-12);
}

TEST_CASE("boundary bound direction is a hard error") {
    // X_i = i e_1 e_2^T grows without bound, yet X_i e_1 = 0 for every i: a
    // boundary direction r cannot certify anything.
    const auto k = cones::ConeSpec::orthant(2);
    std::vector<Matrix> seq;
    for (int i = 0; i < 5; ++i) {
        Matrix m = Matrix::Zero(2, 2);
        m(0, 1) = i;
        seq.push_back(m);
    }
    Vector r(2);
    r << 1.0, 0.0;
    CHECK_THROWS_AS(check_matrix_sequence(k, seq, r, Vector::Ones(2)), PreconditionError);
}

TEST_CASE("matrix sequence escaping the cone is reported") {
    const auto k = cones::ConeSpec::orthant(2);
    std::vector<Matrix> seq{Matrix::Zero(2, 2), Matrix::Ones(2, 2)};
    seq[0](0, 0) = -1.0;
    const auto cert = check_matrix_sequence(k, seq, Vector::Ones(2), Vector::Constant(2, 10.0));
    CHECK(cert.nonneg_up_to == -1);
}

TEST_CASE("non-converged tail is detected") {
    const auto k = cones::ConeSpec::orthant(1);
    std::vector<Vector> seq;
    for (int i = 0; i < 10; ++i) seq.push_back(Vector::Constant(1, 0.1 * i));
    const auto cert = check_vector_sequence(k, seq, Vector::Constant(1, 10.0));
    CHECK(cert.monotone_up_to == 9);
    CHECK(!cert.converged);
    CHECK(cert.cauchy_tail == doctest::Approx(0.1));
}

TEST_CASE("empty sequences are rejected") {
    const auto k = cones::ConeSpec::orthant(1);
    CHECK_THROWS_AS(check_vector_sequence(k, {}, Vector::Ones(1)), PreconditionError);
    CHECK_THROWS_AS(check_matrix_sequence(k, {}, Vector::Ones(1), Vector::Ones(1)),
                    PreconditionError);
}
