// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#include <doctest.h>

#include <cmath>

#include "conric/cones.hpp"
#include "conric/instances.hpp"
#include "conric/spectral.hpp"
#include "test_support.hpp"

using namespace conric;
using namespace conric::instances;

TEST_CASE("diagonal dominance construction") {
    InstanceRecipe recipe{81, 4, Kind::OrthantMMatrix, 1.5, 10.0};
    const BlockSystem sys = gen_orthant_mmatrix(recipe);
    const Matrix l = sys.assembled();
    for (Index i = 0; i < l.rows(); ++i) {
        double off = 0.0;
        for (Index j = 0; j < l.cols(); ++j)
            if (i != j) {
                CHECK(l(i, j) >= 0.0);
                CHECK(l(i, j) <= 1.0);
                off += l(i, j);
            }
        CHECK(l(i, i) == doctest::Approx(-off - recipe.shift));
    }
}

TEST_CASE("large shift pushes the spectral abscissa down") {
    for (double shift : {0.5, 2.0, 8.0}) {
        InstanceRecipe recipe{82, 5, Kind::OrthantMMatrix, shift, 10.0};
        const auto report = spectral::eigenvalues(gen_orthant_mmatrix(recipe).assembled());
        CHECK(report.spectral_abscissa <= -shift + 1e-9);
    }
}

TEST_CASE("every generated instance satisfies both solver hypotheses") {
    for (int trial = 0; trial < 50; ++trial) {
        InstanceRecipe recipe{static_cast<std::uint64_t>(8300 + trial),
                              1 + trial % 12, Kind::OrthantMMatrix, 0.25 + 0.1 * (trial % 10),
                              10.0};
        const BlockSystem sys = gen_orthant_mmatrix(recipe);
        const auto k = cones::ConeSpec::orthant(sys.n());
        CHECK(cones::block_cross_positive(k, sys).verdict);
        CHECK(spectral::eigenvalues(sys.assembled()).stable);
    }
}

TEST_CASE("same recipe reproduces the instance bit for bit") {
    InstanceRecipe recipe{84, 6, Kind::OrthantMMatrix, 1.0, 10.0};
    const BlockSystem first = gen_orthant_mmatrix(recipe);
    const BlockSystem second = gen_orthant_mmatrix(recipe);
    CHECK(first.assembled() == second.assembled());

    // assembled blocks are bit-identical to the stored ones
    const Matrix l = first.assembled();
    CHECK(l.topLeftCorner(6, 6) == first.A);
    CHECK(l.topRightCorner(6, 6) == first.B);
    CHECK(l.bottomLeftCorner(6, 6) == first.C);
    CHECK(l.bottomRightCorner(6, 6) == first.D);

    InstanceRecipe conj{84, 3, Kind::ConjugatedCone, 1.0, 10.0};
    const auto c1 = gen_conjugated(conj);
    const auto c2 = gen_conjugated(conj);
    CHECK(c1.G == c2.G);
    CHECK(c1.sys.assembled() == c2.sys.assembled());
}

TEST_CASE("identity cone change is the identity on systems") {
    InstanceRecipe recipe{85, 3, Kind::OrthantMMatrix, 1.0, 10.0};
    const BlockSystem sys = gen_orthant_mmatrix(recipe);
    const BlockSystem same = conjugate_system(sys, Matrix::Identity(3, 3));
    CHECK((same.assembled() - sys.assembled()).norm() == doctest::Approx(0.0));
}

TEST_CASE("orthogonal cone change preserves the spectrum") {
    Rng rng(86);
    InstanceRecipe recipe{86, 4, Kind::OrthantMMatrix, 1.0, 10.0};
    const BlockSystem sys = gen_orthant_mmatrix(recipe);
    const Matrix q =
        Eigen::HouseholderQR<Matrix>(testsupport::random_matrix(rng, 4)).householderQ();
    const BlockSystem rotated = conjugate_system(sys, q);
    const auto ev1 = spectral::eigenvalues(sys.assembled());
    const auto ev2 = spectral::eigenvalues(rotated.assembled());
    CHECK(ev1.spectral_abscissa == doctest::Approx(ev2.spectral_abscissa).epsilon(1e-10));
}

TEST_CASE("conjugated instances stay within the condition cap") {
    for (int trial = 0; trial < 10; ++trial) {
        InstanceRecipe recipe{static_cast<std::uint64_t>(8700 + trial), 2 + trial,
                              Kind::ConjugatedCone, 1.0, 25.0};
        const auto inst = gen_conjugated(recipe);
        CHECK(inst.cone.condition() <= 25.0 * (1.0 + 1e-9));
        // blocks conjugate back onto the twin
        const Matrix g_inv = Eigen::PartialPivLU<Matrix>(inst.G).inverse();
        CHECK((g_inv * inst.sys.A * inst.G - inst.orthant_twin.A).norm() <
              1e-10 * inst.cone.condition() * inst.orthant_twin.A.norm());
    }
}

TEST_CASE("conjugated blocks are cross-positive on their cone") {
    InstanceRecipe recipe{88, 5, Kind::ConjugatedCone, 1.0, 10.0};
    const auto inst = gen_conjugated(recipe);
    CHECK(cones::block_cross_positive(inst.cone, inst.sys).verdict);
}

TEST_CASE("scalar oracle closed forms") {
    const auto symmetric = scalar_oracle(-2, 1, 1, -2);
    CHECK(symmetric.exists);
    CHECK(symmetric.x_star == doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-14));

    const auto linear = scalar_oracle(-1, 0, 3, -2);
    CHECK(linear.exists);
    CHECK(linear.x_star == doctest::Approx(1.0));

    CHECK(!scalar_oracle(0, 1, 1, 0).exists);

    CHECK_THROWS_AS(scalar_oracle(-1, -1, 1, -1), PreconditionError);
}

TEST_CASE("scalar kind forces n = 1") {
    InstanceRecipe recipe{89, 7, Kind::Scalar, 1.0, 10.0};
    CHECK(gen_orthant_mmatrix(recipe).n() == 1);
}

TEST_CASE("recipes are validated") {
    CHECK_THROWS_AS(gen_orthant_mmatrix({1, 0, Kind::OrthantMMatrix, 1.0, 10.0}),
                    PreconditionError);
    CHECK_THROWS_AS(gen_orthant_mmatrix({1, 2, Kind::OrthantMMatrix, 0.0, 10.0}),
                    PreconditionError);
    CHECK_THROWS_AS(gen_conjugated({1, 2, Kind::ConjugatedCone, 1.0, 0.5}), PreconditionError);
}
