// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "conric/block_system.hpp"
#include "conric/cones.hpp"
#include "conric/types.hpp"

namespace conric::spectral {

inline constexpr double kDefaultStabilityMargin = 1e-9;

/// Eigenvalues and the stability verdict of a square real matrix. "Stable"
/// means spectral_abscissa < -margin_tol; the dead band avoids classifying a
/// marginal matrix either way on numerical noise.
struct StabilityReport {
    std::vector<std::complex<double>> eigenvalues;
    double spectral_abscissa = 0.0;
    bool stable = false;
    double margin_tol = kDefaultStabilityMargin;
    bool converged = true;  // eigen-solver convergence; false => no verdict
};

StabilityReport eigenvalues(const Matrix& m, double margin_tol = kDefaultStabilityMargin);

/// Matrix exponential e^{M t} by scaling-and-squaring with a diagonal Pade
/// approximant. t must be >= 0.
Matrix expm(const Matrix& m, double t = 1.0);

/// The three equivalent stability conditions for a matrix that is
/// cross-positive on K, each evaluated independently:
///   (i)  all eigenvalues in the open left half plane,
///   (ii) some x interior to K with A x interior to -K,
///   (iii) -A^-1 maps K into K.
struct StabilityEquivalences {
    bool cross_positive = false;
    StabilityReport stability;
    bool stable = false;                           // (i)
    bool interior_witness_found = false;           // (ii)
    std::optional<Vector> interior_witness;        // x = -A^-1 w when interior
    std::optional<bool> neg_inverse_nonneg;        // (iii); nullopt when A singular
};

/// Evaluates all three conditions. The candidate witness is x = -A^-1 w for
/// the cone's canonical interior point w, so A x = -w is interior to -K by
/// construction and only membership of x is in question. When A is
/// cross-positive, nonsingular and clear of the stability margin, the three
/// verdicts must agree; disagreement raises NumericalConsistencyError.
StabilityEquivalences stable_cross_positive_checks(
    const cones::ConeSpec& cone, const Matrix& a,
    double margin_tol = kDefaultStabilityMargin);

/// Interior vectors certifying stability of a cross-positive block matrix:
/// v1, v2 interior to K and u1, u2 interior to -K with
/// A v1 + B v2 = u1 and C v1 + D v2 = u2.
struct Witness {
    Vector v1, v2;
    Vector u1, u2;
    Vector source_w;  // the interior point of K x K used, v = -L^-1 w
    double residual = 0.0;  // ||L v - u||_2
    bool a_stable = false;  // stability of the diagonal blocks, implied
    bool d_stable = false;
};

/// Builds a witness for a system whose assembled L is stable and
/// cross-positive on K x K (both preconditions are verified). v = -L^-1 w
/// for an interior w; since -L^-1 is (K x K)-nonnegative and invertible it
/// maps the interior to the interior, so v1, v2 land strictly inside K.
Witness witness(const cones::ConeSpec& cone, const BlockSystem& sys,
                double margin_tol = kDefaultStabilityMargin);

/// Same with a caller-chosen interior point w of K x K.
Witness witness(const cones::ConeSpec& cone, const BlockSystem& sys,
                const Vector& w, double margin_tol = kDefaultStabilityMargin);

}  // namespace conric::spectral
