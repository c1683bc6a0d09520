// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#include "conric/riccati.hpp"

#include <cmath>
#include <sstream>

#include "conric/sylvester.hpp"

namespace conric::riccati {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Certificate: return "certificate";
        case Verdict::EquivalenceNegative: return "equivalence-negative";
        case Verdict::HypothesisFailure: return "hypothesis-failure";
        case Verdict::NonConverged: return "non-converged";
        case Verdict::InconclusiveAtMargin: return "inconclusive-at-margin";
    }
    return "unknown";
}

double residual(const BlockSystem& sys, const Matrix& x) {
    if (x.rows() != sys.n() || x.cols() != sys.n())
        throw DimensionError("candidate solution shape mismatch");
    return (x * sys.B * x + sys.D * x + x * sys.A + sys.C).norm();
}

double residual_scale(const BlockSystem& sys, const Matrix& x) {
    const double xn = x.norm();
    return (sys.A.norm() + sys.B.norm() * xn + sys.C.norm() + sys.D.norm()) * std::max(1.0, xn);
}

namespace {

std::string format_eigenvalue(const std::complex<double>& z) {
    std::ostringstream os;
    os << z.real();
    if (z.imag() != 0.0) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

}  // namespace

Outcome solve(const cones::ConeSpec& cone, const BlockSystem& sys, const SolveOptions& opts) {
    const Index n = sys.n();
    if (cone.dim() != n) throw DimensionError("system dimension does not match cone");

    Outcome out;
    out.l_stab = spectral::eigenvalues(sys.assembled(), opts.margin);

    const auto blocks = cones::block_cross_positive(cone, sys);
    if (!blocks.verdict) {
        out.verdict = Verdict::HypothesisFailure;
        out.detail = "L is not cross-positive on K x K: block " + blocks.violated_block +
                     " violates the decomposition";
        return out;
    }
    if (!out.l_stab.converged) {
        out.verdict = Verdict::InconclusiveAtMargin;
        out.detail = "eigenvalue solver did not converge on L";
        return out;
    }
    const double abscissa = out.l_stab.spectral_abscissa;
    if (std::abs(abscissa) <= opts.margin) {
        std::ostringstream os;
        os << "spectral abscissa " << abscissa << " of L lies within the stability margin "
           << opts.margin << "; the solvability equivalence is undecided at this precision";
        out.verdict = Verdict::InconclusiveAtMargin;
        out.detail = os.str();
        return out;
    }
    if (abscissa > 0.0) {
        std::complex<double> worst = out.l_stab.eigenvalues.front();
        for (const auto& z : out.l_stab.eigenvalues)
            if (z.real() > worst.real()) worst = z;
        out.verdict = Verdict::EquivalenceNegative;
        out.detail = "L is cross-positive but unstable (eigenvalue " + format_eigenvalue(worst) +
                     "); no stabilizing K-nonnegative solution exists";
        return out;
    }

    try {
        // witness gives the bound direction r = v1 and cap s = v2 - D^-1 u2
        const spectral::Witness wit = spectral::witness(cone, sys, opts.margin);
        const Vector bound_r = wit.v1;
        const Vector bound_s = wit.v2 - Eigen::PartialPivLU<Matrix>(sys.D).solve(wit.u2);

        sylvester::SchurSylvesterSolver sylv(sys.A, sys.D);

        TraceSummary trace;
        Matrix x = Matrix::Zero(n, n);
        if (opts.record_trace) trace.iterates.push_back(x);

        bool converged = false;
        double res = std::numeric_limits<double>::quiet_NaN();
        double last_gap = std::numeric_limits<double>::infinity();
        double best_gap = std::numeric_limits<double>::infinity();
        int last_improvement = 0;
        int it = 0;
        for (it = 1; it <= opts.max_iter; ++it) {
            const Matrix next = sylv.solve(Matrix(x * sys.B * x + sys.C));
            last_gap = (next - x).norm() / std::max(1.0, next.norm());

            trace.gaps.push_back(last_gap);
            trace.monotone_steps.push_back(cones::matrix_leq(cone, x, next).in_cone());
            trace.bound_steps.push_back(cones::leq_vec(cone, Vector(next * bound_r), bound_s).in_cone());
            if (opts.record_trace) trace.iterates.push_back(next);

            x = next;
            res = residual(sys, x);
            if (res <= opts.tol * residual_scale(sys, x)) {
                converged = true;
                break;
            }
            if (last_gap < best_gap) {
                best_gap = last_gap;
                last_improvement = it;
            } else if (it - last_improvement >= 50) {
                break;  // stalled: gap stopped decreasing
            }
        }
        out.iterations = std::min(it, opts.max_iter);
        out.final_residual = res;

        // certificate for the run so far, whether or not it converged
        monotone::SequenceCertificate seq_cert;
        seq_cert.bound_r = bound_r;
        seq_cert.bound_s = bound_s;
        const Index steps = static_cast<Index>(trace.gaps.size());
        seq_cert.monotone_up_to = steps;  // sequence indices include X_0
        for (Index i = 0; i < steps; ++i)
            if (!trace.monotone_steps[i]) {
                seq_cert.monotone_up_to = i;
                break;
            }
        seq_cert.bound_holds_up_to = steps;
        for (Index i = 0; i < steps; ++i)
            if (!trace.bound_steps[i]) {
                seq_cert.bound_holds_up_to = i;
                break;
            }
        seq_cert.nonneg_up_to = steps;
        seq_cert.converged = converged;
        seq_cert.limit_estimate = x;
        seq_cert.cauchy_tail = last_gap;
        trace.certificate = seq_cert;

        if (!converged) {
            out.verdict = Verdict::NonConverged;
            std::ostringstream os;
            os << "no convergence after " << out.iterations << " iterations (residual " << res
               << ", gap " << last_gap << ")";
            out.detail = os.str();
            out.partial_trace = std::move(trace);
            return out;
        }

        Certificate cert{sys,
                         Solution{x, sys.A + sys.B * x, sys.D + x * sys.B, res, out.iterations},
                         cones::matrix_nonneg(cone, x),
                         cones::cross_positive(cone, Matrix(sys.A + sys.B * x)),
                         cones::cross_positive(cone, Matrix(sys.D + x * sys.B)),
                         spectral::eigenvalues(Matrix(sys.A + sys.B * x), opts.margin),
                         spectral::eigenvalues(Matrix(sys.D + x * sys.B), opts.margin),
                         out.l_stab,
                         wit,
                         cones::leq_vec(cone, Vector(x * wit.v1), wit.v2).in_cone(),
                         std::move(trace),
                         false,
                         opts.tol,
                         opts.margin};

        // every claim the certificate makes is checked before it is issued
        if (!cert.x_nonneg.in_cone())
            throw NumericalConsistencyError("converged solution is not K-nonnegative");
        if (!cert.loop_a_cross.cross_positive || !cert.loop_d_cross.cross_positive)
            throw NumericalConsistencyError("a closed loop lost cross-positivity");
        if (!cert.loop_a_stab.stable || !cert.loop_d_stab.stable)
            throw NumericalConsistencyError("a closed loop is not stable");
        if (!cert.x_v1_leq_v2)
            throw NumericalConsistencyError("closure bound X* v1 <=_K v2 failed");
        if (cert.trace.certificate.monotone_up_to != static_cast<Index>(cert.trace.gaps.size()) ||
            cert.trace.certificate.bound_holds_up_to != static_cast<Index>(cert.trace.gaps.size()))
            throw NumericalConsistencyError("iteration trace violated monotonicity or the bound");

        const NecessityReport nec =
            verify_necessity(cone, sys, x, opts.margin, std::max(1e-8, opts.tol),
                             std::max(1e-8, 100.0 * opts.tol));
        cert.necessity_check = nec.L_stable_implied && nec.block_inverse_nonneg;

        out.verdict = Verdict::Certificate;
        out.certificate = std::move(cert);
        return out;
    } catch (const IllPosedError& e) {
        // cannot happen under verified hypotheses: A and D are stable
        throw NumericalConsistencyError(std::string("Sylvester step became ill-posed: ") +
                                        e.what());
    }
}

bool verify_sufficiency(const cones::ConeSpec& cone, const BlockSystem& sys, const Matrix& x,
                        double tol, double margin, std::string* why) {
    const auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    const double res = residual(sys, x);
    if (!(res <= tol * residual_scale(sys, x)))
        return fail("residual " + std::to_string(res) + " exceeds tolerance");
    if (!cones::matrix_nonneg(cone, x).in_cone()) return fail("X* is not K-nonnegative");
    const Matrix loop_a = sys.A + sys.B * x;
    const Matrix loop_d = sys.D + x * sys.B;
    if (!cones::cross_positive(cone, loop_a).cross_positive)
        return fail("A + B X* is not cross-positive on K");
    if (!cones::cross_positive(cone, loop_d).cross_positive)
        return fail("D + X* B is not cross-positive on K");
    if (!spectral::eigenvalues(loop_a, margin).stable) return fail("A + B X* is not stable");
    if (!spectral::eigenvalues(loop_d, margin).stable) return fail("D + X* B is not stable");
    if (why) why->clear();
    return true;
}

bool verify_sufficiency(const cones::ConeSpec& cone, const Certificate& cert) {
    return verify_sufficiency(cone, cert.sys, cert.solution.X_star, cert.solve_tol, cert.margin);
}

NecessityReport verify_necessity(const cones::ConeSpec& cone, const BlockSystem& sys,
                                 const Matrix& x, double margin, double residual_tol,
                                 double gap_tol) {
    const Index n = sys.n();
    if (cone.dim() != n || x.rows() != n || x.cols() != n)
        throw DimensionError("dimensions do not match");

    const double res = residual(sys, x);
    if (!(res <= residual_tol * residual_scale(sys, x)))
        throw PreconditionError("X does not solve the Riccati equation to tolerance");
    if (!cones::matrix_nonneg(cone, x).in_cone())
        throw PreconditionError("X is not K-nonnegative");
    const Matrix loop_a = sys.A + sys.B * x;
    const Matrix loop_d = sys.D + x * sys.B;
    if (!cones::cross_positive(cone, loop_a).cross_positive ||
        !cones::cross_positive(cone, loop_d).cross_positive)
        throw PreconditionError("closed loops are not cross-positive on K");
    if (!spectral::eigenvalues(loop_a, margin).stable ||
        !spectral::eigenvalues(loop_d, margin).stable)
        throw PreconditionError("closed loops are not stable");

    Eigen::PartialPivLU<Matrix> lu_a(loop_a);
    Eigen::PartialPivLU<Matrix> lu_d(loop_d);
    const Matrix inv_a = lu_a.inverse();
    const Matrix inv_d = lu_d.inverse();
    if (!inv_a.allFinite() || !inv_d.allFinite())
        throw PreconditionError("a closed-loop matrix is numerically singular");
    const Matrix p = inv_a * sys.B * inv_d;

    Matrix inner(2 * n, 2 * n);
    inner.topLeftCorner(n, n) = p * x - inv_a;
    inner.topRightCorner(n, n) = p;
    inner.bottomLeftCorner(n, n) = -inv_d * x;
    inner.bottomRightCorner(n, n) = -inv_d;

    Matrix left = Matrix::Identity(2 * n, 2 * n);
    left.bottomLeftCorner(n, n) = x;
    const Matrix assembled = left * inner;

    const Matrix l = sys.assembled();
    const Matrix neg_l_inv = -Eigen::PartialPivLU<Matrix>(l).inverse();
    if (!neg_l_inv.allFinite()) throw PreconditionError("L is numerically singular");

    NecessityReport out;
    out.assembly_gap = (assembled - neg_l_inv).norm() / std::max(1.0, neg_l_inv.norm());
    if (out.assembly_gap > gap_tol) {
        std::ostringstream os;
        os << "assembled block expression deviates from -L^-1 by " << out.assembly_gap
           << " relative, beyond " << gap_tol;
        throw NumericalConsistencyError(os.str());
    }

    const cones::ConeSpec product = cones::ProductCone(cone).as_cone();
    out.block_inverse_nonneg = cones::matrix_nonneg(product, assembled).in_cone();
    out.L_stable_implied = spectral::eigenvalues(l, margin).stable;
    return out;
}

TransposeDualResult transpose_dual_solve(const cones::ConeSpec& cone, const BlockSystem& sys,
                                         const SolveOptions& opts) {
    TransposeDualResult out;
    out.primal = solve(cone, sys, opts);
    out.dual = solve(cone.dual(), sys.transposed_system(), opts);
    if (out.primal.certificate && out.dual.certificate) {
        const Matrix& x = out.primal.certificate->solution.X_star;
        const Matrix& z = out.dual.certificate->solution.X_star;
        out.Z_star = z;
        out.gap = (z - x.transpose()).norm();
        out.matches_transpose = out.gap <= 1e-8 * std::max(1.0, x.norm());
    }
    return out;
}

}  // namespace conric::riccati
