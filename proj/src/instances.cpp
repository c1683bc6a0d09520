// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#include "conric/instances.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

namespace conric::instances {

const char* to_string(Kind k) {
    switch (k) {
        case Kind::OrthantMMatrix: return "orthant-mmatrix";
        case Kind::ConjugatedCone: return "conjugated-cone";
        case Kind::Scalar: return "scalar";
    }
    return "unknown";
}

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

namespace {

void validate(const InstanceRecipe& r) {
    if (r.n < 1) throw PreconditionError("instance dimension must be positive");
    if (!(r.shift > 0.0)) throw PreconditionError("diagonal dominance shift must be positive");
    if (!(r.cond_cap >= 1.0)) throw PreconditionError("condition cap must be >= 1");
}

}  // namespace

BlockSystem gen_orthant_mmatrix(const InstanceRecipe& recipe) {
    validate(recipe);
    const Index n = recipe.kind == Kind::Scalar ? 1 : recipe.n;
    const Index m = 2 * n;
    Rng rng(recipe.seed);

    Matrix l(m, m);
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j) l(i, j) = (i == j) ? 0.0 : rng.uniform();
    for (Index i = 0; i < m; ++i) l(i, i) = -l.row(i).sum() - recipe.shift;

    return BlockSystem(l.topLeftCorner(n, n), l.topRightCorner(n, n), l.bottomLeftCorner(n, n),
                       l.bottomRightCorner(n, n));
}

Matrix random_conditioned(Rng& rng, Index n, double cond_cap) {
    if (n == 1) return Matrix::Constant(1, 1, rng.uniform(0.5, 2.0));
    const auto gaussian_matrix = [&] {
        Matrix g(n, n);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) g(i, j) = rng.gaussian();
        return g;
    };
    const Matrix u = Eigen::HouseholderQR<Matrix>(gaussian_matrix()).householderQ();
    const Matrix v = Eigen::HouseholderQR<Matrix>(gaussian_matrix()).householderQ();
    const double kappa = 1.0 + rng.uniform() * (cond_cap - 1.0);
    Vector sigma(n);
    for (Index i = 0; i < n; ++i)
        sigma(i) = std::pow(kappa, static_cast<double>(i) / (n - 1) - 0.5);
    return u * sigma.asDiagonal() * v.transpose();
}

BlockSystem conjugate_system(const BlockSystem& sys, const Matrix& g) {
    if (g.rows() != sys.n() || g.cols() != sys.n())
        throw DimensionError("cone change dimension mismatch");
    const Matrix g_inv = Eigen::PartialPivLU<Matrix>(g).inverse();
    return BlockSystem(g * sys.A * g_inv, g * sys.B * g_inv, g * sys.C * g_inv,
                       g * sys.D * g_inv);
}

ConjugatedInstance gen_conjugated(const InstanceRecipe& recipe) {
    validate(recipe);
    BlockSystem twin = gen_orthant_mmatrix(recipe);
    Rng rng(recipe.seed ^ 0x9e3779b97f4a7c15ull);  // independent stream for the cone
    Matrix g = random_conditioned(rng, twin.n(), recipe.cond_cap);
    BlockSystem sys = conjugate_system(twin, g);
    cones::ConeSpec cone = cones::ConeSpec::simplicial(g);
    return ConjugatedInstance{std::move(cone), std::move(sys), std::move(twin), std::move(g)};
}

ScalarRoot scalar_oracle(double a, double b, double c, double d) {
    if (!(b >= 0.0) || !(c >= 0.0))
        throw PreconditionError("scalar oracle requires b, c >= 0");

    ScalarRoot out;
    if (b == 0.0) {
        if (a + d < 0.0) {
            out.x_star = -c / (a + d);
            out.exists = out.x_star >= 0.0;
        }
        return out;
    }
    const double disc = (a + d) * (a + d) - 4.0 * b * c;
    if (disc < 0.0) return out;

    // roots of b x^2 + (a+d) x + c = 0; the larger is computed directly and
    // the smaller via Vieta to avoid cancellation
    const double root_big = (-(a + d) + std::sqrt(disc)) / (2.0 * b);
    const double root_small = (root_big != 0.0) ? c / (b * root_big) : -(a + d) / b;
    for (double candidate : {root_small, root_big}) {
        if (a + b * candidate < 0.0) {
            out.x_star = candidate;
            out.exists = candidate >= 0.0;
            return out;
        }
    }
    return out;
}

}  // namespace conric::instances
