// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <random>

#include "conric/block_system.hpp"
#include "conric/cones.hpp"
#include "conric/types.hpp"

namespace conric::instances {

enum class Kind { OrthantMMatrix, ConjugatedCone, Scalar };

const char* to_string(Kind k);

/// Everything needed to regenerate an instance bit-for-bit.
struct InstanceRecipe {
    std::uint64_t seed = 0;
    Index n = 1;
    Kind kind = Kind::OrthantMMatrix;
    double shift = 1.0;      // diagonal dominance margin; abscissa <= -shift
    double cond_cap = 10.0;  // max condition number of the cone generator
};

/// Deterministic generator: mt19937_64 with explicit uniform/gaussian
/// derivations, so the stream does not depend on the standard library's
/// distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double gaussian();
    std::uint64_t raw() { return gen_(); }

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Draws the off-diagonals of the assembled 2n x 2n matrix L uniformly in
/// [0,1] and sets each diagonal entry to -(row sum of off-diagonals) - shift.
/// L is then strictly diagonally dominant with negative diagonal: stable and
/// cross-positive on the orthant by construction.
BlockSystem gen_orthant_mmatrix(const InstanceRecipe& recipe);

struct ConjugatedInstance {
    cones::ConeSpec cone;       // Simplicial(G)
    BlockSystem sys;            // blocks G M G^-1 of the twin
    BlockSystem orthant_twin;   // oracle: twin solution = G^-1 X' G
    Matrix G;
};

/// An orthant instance pushed onto the cone spanned by a random invertible G
/// with condition <= cond_cap. Results on the simplicial cone have an exact
/// orthant oracle through conjugation.
ConjugatedInstance gen_conjugated(const InstanceRecipe& recipe);

/// Applies the cone change explicitly (exposed for conjugation-covariance
/// tests with a caller-chosen G).
BlockSystem conjugate_system(const BlockSystem& sys, const Matrix& g);

/// Random G = U diag(sigma) V^T with orthogonal U, V and log-spaced singular
/// values; the condition number is drawn in [1, cond_cap].
Matrix random_conditioned(Rng& rng, Index n, double cond_cap);

struct ScalarRoot {
    double x_star = std::numeric_limits<double>::quiet_NaN();
    bool exists = false;
};

/// Closed-form n = 1 oracle: the root of b x^2 + (a+d) x + c = 0 with
/// a + b x < 0 (the stabilizing one), or -c/(a+d) in the linear case b = 0.
/// Requires b, c >= 0.
ScalarRoot scalar_oracle(double a, double b, double c, double d);

}  // namespace conric::instances
