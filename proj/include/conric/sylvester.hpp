// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#pragma once

#include "conric/cones.hpp"
#include "conric/errors.hpp"
#include "conric/types.hpp"

namespace conric::sylvester {

enum class Method { SchurBased, Kronecker, Quadrature };

/// The Sylvester equation D X + X A + C = 0. Solvable iff no eigenvalue of D
/// is the negative of an eigenvalue of A; automatic when A and D are stable.
struct SylvesterProblem {
    Matrix A, D, C;
    Method method = Method::SchurBased;
};

/// Solves D X + X A + C = 0.
///   SchurBased  - triangularize A and D once, back-substitute columnwise (O(n^3)).
///   Kronecker   - dense solve of (I (x) D + A^T (x) I) vec(X) = -vec(C); oracle only, n <= 20.
///   Quadrature  - integral formula, stable A and D only; oracle.
/// Raises IllPosedError when the eigenvalue separation min |lambda_D + lambda_A|
/// falls below 1e-8 (||A||_F + ||D||_F).
Matrix solve_sylvester(const SylvesterProblem& p);

/// Evaluates X = integral_0^tmax e^{D t} C e^{A t} dt with composite
/// Gauss-Legendre panels, log-spaced towards 0. Requires A and D stable.
/// t_max <= 0 selects the truncation point where e^{(alpha_A+alpha_D) t}
/// drops below 1e-10, alpha the spectral abscissas.
Matrix integral_solution(const Matrix& a, const Matrix& d, const Matrix& c,
                         double t_max = 0.0, int steps = 200);

/// For A, D stable and cross-positive on K and C K-nonnegative (all verified;
/// violation is a PreconditionError), the Sylvester solution must itself be
/// K-nonnegative. Returns true; a solution escaping the cone raises
/// NumericalConsistencyError.
bool sylvester_preserves_cone(const cones::ConeSpec& cone, const Matrix& a,
                              const Matrix& d, const Matrix& c);

/// Repeated solves of D X + X A = -C for fixed A and D: the Schur forms are
/// computed once and reused, as in the Riccati fixed-point loop.
class SchurSylvesterSolver {
  public:
    SchurSylvesterSolver(const Matrix& a, const Matrix& d);

    /// X with D X + X A + C = 0.
    Matrix solve(const Matrix& c) const;

    Index n() const { return ta_.rows(); }
    double min_eigensum() const { return min_eigensum_; }

  private:
    ComplexMatrix ta_, ua_;  // A = Ua Ta Ua^H
    ComplexMatrix td_, ud_;  // D = Ud Td Ud^H
    double min_eigensum_ = 0.0;
};

}  // namespace conric::sylvester
