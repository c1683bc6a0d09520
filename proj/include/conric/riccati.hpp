// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "conric/block_system.hpp"
#include "conric/cones.hpp"
#include "conric/monotone.hpp"
#include "conric/spectral.hpp"
#include "conric/types.hpp"

namespace conric::riccati {

struct SolveOptions {
    double tol = 1e-12;        // relative residual target
    int max_iter = 10000;
    bool record_trace = false;  // keep every iterate (memory O(max_iter n^2))
    double margin = spectral::kDefaultStabilityMargin;
};

/// How a solve attempt ended. The taxonomy mirrors the equivalence the solver
/// certifies: a stable cross-positive L yields a certificate, an unstable one
/// is a definitive negative (no stabilizing cone-preserving solution exists),
/// a non-cross-positive L is outside the method's hypotheses.
enum class Verdict {
    Certificate,
    EquivalenceNegative,
    HypothesisFailure,
    NonConverged,
    InconclusiveAtMargin,
};

const char* to_string(Verdict v);

struct Solution {
    Matrix X_star;
    Matrix closed_loop_A;  // A + B X*
    Matrix closed_loop_D;  // D + X* B
    double residual = 0.0;
    int iterations = 0;
};

/// Per-step record of the fixed-point run (X_0 = 0 included).
struct TraceSummary {
    std::vector<double> gaps;             // relative Frobenius gap per step
    std::vector<bool> monotone_steps;     // X_i <=_K X_{i+1}
    std::vector<bool> bound_steps;        // X_{i+1} r <=_K s
    monotone::SequenceCertificate certificate;
    std::vector<Matrix> iterates;         // only when record_trace
};

/// Everything needed to re-verify both directions of the solvability
/// equivalence offline: the solution and closed loops, cone verdicts,
/// stability reports, the witness vectors with the induced iteration bound,
/// the monotonicity trace and the block-inverse check.
struct Certificate {
    BlockSystem sys;
    Solution solution;
    cones::ConeOrder x_nonneg;
    cones::CrossPositivity loop_a_cross, loop_d_cross;
    spectral::StabilityReport loop_a_stab, loop_d_stab, l_stab;
    spectral::Witness witness;
    bool x_v1_leq_v2 = false;  // closure bound X* v1 <=_K v2
    TraceSummary trace;
    bool necessity_check = false;
    double solve_tol = 0.0;
    double margin = 0.0;
};

struct Outcome {
    Verdict verdict = Verdict::HypothesisFailure;
    std::optional<Certificate> certificate;
    std::string detail;
    spectral::StabilityReport l_stab;
    std::optional<TraceSummary> partial_trace;  // on non-convergence
    int iterations = 0;
    double final_residual = std::numeric_limits<double>::quiet_NaN();
};

/// Frobenius norm of X B X + D X + X A + C.
double residual(const BlockSystem& sys, const Matrix& x);

/// Scale against which the residual is measured:
/// (||A|| + ||B|| ||X|| + ||C|| + ||D||) max(1, ||X||), Frobenius norms.
double residual_scale(const BlockSystem& sys, const Matrix& x);

/// Runs the monotone fixed-point iteration
///     D X_{i+1} + X_{i+1} A = -X_i B X_i - C,   X_0 = 0,
/// after verifying the hypotheses (L cross-positive on K x K, L stable).
/// On success every certificate claim is verified before returning: X* is
/// K-nonnegative, both closed loops are stable and cross-positive, the trace
/// is monotone and bounded by the witness pair, and the block-inverse
/// necessity check passes.
Outcome solve(const cones::ConeSpec& cone, const BlockSystem& sys,
              const SolveOptions& opts = {});

/// Re-checks a certificate independently of the solver run: residual within
/// tolerance, X* K-nonnegative, both closed loops cross-positive and stable.
bool verify_sufficiency(const cones::ConeSpec& cone, const Certificate& cert);

/// Same checks from raw data (used by the CLI when re-verifying files).
bool verify_sufficiency(const cones::ConeSpec& cone, const BlockSystem& sys,
                        const Matrix& x, double tol, double margin,
                        std::string* why = nullptr);

struct NecessityReport {
    bool L_stable_implied = false;
    bool block_inverse_nonneg = false;
    double assembly_gap = 0.0;  // ||assembled - (-L^-1)||_F / max(1, ||L^-1||_F)
};

/// The reverse direction: given a stabilizing K-nonnegative solution X,
/// -L^-1 factors through the closed loops as
///     [[I, 0], [X, I]] [[P X - Ma^-1, P], [-Md^-1 X, -Md^-1]],
/// with Ma = A + B X, Md = D + X B, P = Ma^-1 B Md^-1. The assembled
/// expression must match -L^-1 to gap_tol relative (checked, error otherwise)
/// and be (K x K)-nonnegative, which forces L stable. The identity holds
/// exactly only for exact solutions, so a looser residual_tol needs a
/// correspondingly looser gap_tol.
NecessityReport verify_necessity(const cones::ConeSpec& cone, const BlockSystem& sys,
                                 const Matrix& x,
                                 double margin = spectral::kDefaultStabilityMargin,
                                 double residual_tol = 1e-8, double gap_tol = 1e-8);

struct TransposeDualResult {
    std::optional<Matrix> Z_star;
    bool matches_transpose = false;
    double gap = std::numeric_limits<double>::quiet_NaN();
    Outcome primal;
    Outcome dual;
};

/// Solves the transposed system Z B^T Z + A^T Z + Z D^T + C^T = 0 on the dual
/// cone with the same recursion and compares Z* against X*^T.
TransposeDualResult transpose_dual_solve(const cones::ConeSpec& cone,
                                         const BlockSystem& sys,
                                         const SolveOptions& opts = {});

}  // namespace conric::riccati
