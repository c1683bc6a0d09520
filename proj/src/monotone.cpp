// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#include "conric/monotone.hpp"

namespace conric::monotone {

SequenceCertificate check_vector_sequence(const cones::ConeSpec& cone,
                                          const std::vector<Vector>& seq, const Vector& t,
                                          const ConvergenceOpts& opts) {
    if (seq.empty()) throw PreconditionError("empty sequence");
    const Index n = cone.dim();
    if (t.size() != n) throw DimensionError("bound vector dimension mismatch");
    for (const auto& s : seq)
        if (s.size() != n) throw DimensionError("sequence element dimension mismatch");

    const Index count = static_cast<Index>(seq.size());
    SequenceCertificate out;
    out.bound_s = t;

    out.monotone_up_to = count - 1;
    for (Index i = 0; i + 1 < count; ++i) {
        if (!cones::leq_vec(cone, seq[i], seq[i + 1]).in_cone()) {
            out.monotone_up_to = i;
            break;
        }
    }
    out.bound_holds_up_to = count - 1;
    for (Index i = 0; i < count; ++i) {
        if (!cones::leq_vec(cone, seq[i], t).in_cone()) {
            out.bound_holds_up_to = i - 1;
            break;
        }
    }
    out.nonneg_up_to = count - 1;  // not part of the vector-sequence contract

    out.limit_estimate = seq.back();
    if (count >= 2) {
        const double gap = (seq[count - 1] - seq[count - 2]).lpNorm<Eigen::Infinity>();
        out.cauchy_tail = gap / std::max(1.0, seq.back().lpNorm<Eigen::Infinity>());
        out.converged = out.cauchy_tail <= opts.tol;
    }
    return out;
}

SequenceCertificate check_matrix_sequence(const cones::ConeSpec& cone,
                                          const std::vector<Matrix>& seq, const Vector& r,
                                          const Vector& s, const ConvergenceOpts& opts) {
    if (seq.empty()) throw PreconditionError("empty sequence");
    const Index n = cone.dim();
    if (r.size() != n || s.size() != n) throw DimensionError("bound vector dimension mismatch");
    for (const auto& m : seq)
        if (m.rows() != n || m.cols() != n)
            throw DimensionError("sequence element dimension mismatch");
    if (!cones::member(cone, r).interior())
        throw PreconditionError("bound direction r must be interior to K");

    const Index count = static_cast<Index>(seq.size());
    SequenceCertificate out;
    out.bound_r = r;
    out.bound_s = s;

    out.nonneg_up_to = count - 1;
    for (Index i = 0; i < count; ++i) {
        if (!cones::matrix_nonneg(cone, seq[i]).in_cone()) {
            out.nonneg_up_to = i - 1;
            break;
        }
    }
    out.monotone_up_to = count - 1;
    for (Index i = 0; i + 1 < count; ++i) {
        if (!cones::matrix_leq(cone, seq[i], seq[i + 1]).in_cone()) {
            out.monotone_up_to = i;
            break;
        }
    }
    out.bound_holds_up_to = count - 1;
    for (Index i = 0; i < count; ++i) {
        if (!cones::leq_vec(cone, Vector(seq[i] * r), s).in_cone()) {
            out.bound_holds_up_to = i - 1;
            break;
        }
    }

    out.limit_estimate = seq.back();
    if (count >= 2) {
        const double gap = (seq[count - 1] - seq[count - 2]).norm();
        out.cauchy_tail = gap / std::max(1.0, seq.back().norm());
        out.converged = out.cauchy_tail <= opts.tol;
    }
    return out;
}

}  // namespace conric::monotone
