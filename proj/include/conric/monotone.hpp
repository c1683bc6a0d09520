// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#pragma once

#include <limits>
#include <vector>

#include "conric/cones.hpp"
#include "conric/types.hpp"

namespace conric::monotone {

struct ConvergenceOpts {
    double tol = 1e-12;      // relative gap below which the tail counts as converged
    int stall_window = 50;   // iterations without gap improvement => stalled
};

/// Verdicts for a monotone, vectorially bounded sequence. Indices are
/// inclusive: monotone_up_to = m means every step s_i <= s_{i+1} with i < m
/// held, so a first break at step i -> i+1 reports m = i. A full pass reports
/// the last index of the sequence.
struct SequenceCertificate {
    Index monotone_up_to = 0;
    Index nonneg_up_to = 0;      // matrix sequences: prefix with X_i >=_K 0
    Vector bound_r, bound_s;     // the pair (r, s) tested, s alone for vectors
    Index bound_holds_up_to = 0;
    bool converged = false;
    Matrix limit_estimate;       // last element (n x 1 for vector sequences)
    double cauchy_tail = std::numeric_limits<double>::infinity();  // final relative gap
};

/// Checks s_i <=_K s_{i+1} and s_i <=_K t along the sequence; convergence is
/// judged by the final gap ||s_N - s_{N-1}||_inf relative to max(1, ||s_N||_inf).
SequenceCertificate check_vector_sequence(const cones::ConeSpec& cone,
                                          const std::vector<Vector>& seq,
                                          const Vector& t,
                                          const ConvergenceOpts& opts = {});

/// Checks 0 <=_K X_i <=_K X_{i+1} in the matrix order and X_i r <=_K s along
/// the sequence; convergence by relative Frobenius gap. r must be interior to
/// K — a boundary r cannot bound the sequence (a growing column orthogonal to
/// r is invisible to X_i r), so violation is a hard PreconditionError.
SequenceCertificate check_matrix_sequence(const cones::ConeSpec& cone,
                                          const std::vector<Matrix>& seq,
                                          const Vector& r, const Vector& s,
                                          const ConvergenceOpts& opts = {});

}  // namespace conric::monotone
