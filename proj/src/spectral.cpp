// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#include "conric/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace conric::spectral {

StabilityReport eigenvalues(const Matrix& m, double margin_tol) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw DimensionError("eigenvalues of a non-square matrix");
    if (!m.allFinite()) throw PreconditionError("eigenvalues of a non-finite matrix");

    StabilityReport out;
    out.margin_tol = margin_tol;
    Eigen::EigenSolver<Matrix> es(m, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) {
        out.converged = false;
        out.stable = false;
        out.spectral_abscissa = std::numeric_limits<double>::quiet_NaN();
        return out;
    }
    const ComplexVector ev = es.eigenvalues();
    out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    out.spectral_abscissa = ev.real().maxCoeff();
    out.stable = out.spectral_abscissa < -margin_tol;
    return out;
}

Matrix expm(const Matrix& m, double t) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw DimensionError("expm of a non-square matrix");
    if (!m.allFinite() || !std::isfinite(t)) throw PreconditionError("expm of non-finite input");
    if (t < 0.0) throw PreconditionError("expm requires t >= 0");

    const Index n = m.rows();
    Matrix a = m * t;

    // scaling and squaring with the order-13 diagonal Pade approximant
    const double theta13 = 5.371920351148152;
    const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm1 > theta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
        a /= std::ldexp(1.0, squarings);
    }

    static const double b[] = {
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
        1187353796428800.0, 129060195264000.0, 10559470521600.0, 670442572800.0,
        33522128640.0, 1323241920.0, 40840800.0, 960960.0, 16380.0, 182.0, 1.0};

    const Matrix id = Matrix::Identity(n, n);
    const Matrix a2 = a * a;
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a2 * a4;
    const Matrix u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) +
                          b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
    const Matrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) +
                     b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
    Matrix f = Eigen::PartialPivLU<Matrix>(v - u).solve(v + u);
    for (int s = 0; s < squarings; ++s) f = f * f;

    if (!f.allFinite()) {
        std::ostringstream os;
        os << "expm overflow: ||M t||_1 = " << norm1;
        throw Error(os.str());
    }
    return f;
}

StabilityEquivalences stable_cross_positive_checks(const cones::ConeSpec& cone,
                                                   const Matrix& a, double margin_tol) {
    if (a.rows() != cone.dim() || a.cols() != cone.dim())
        throw DimensionError("matrix dimension does not match cone");

    StabilityEquivalences out;
    out.cross_positive = cones::cross_positive(cone, a).cross_positive;
    out.stability = eigenvalues(a, margin_tol);
    out.stable = out.stability.stable;

    Eigen::FullPivLU<Matrix> lu(a);
    if (lu.isInvertible()) {
        const Matrix neg_inv = -lu.inverse();
        out.neg_inverse_nonneg = cones::matrix_nonneg(cone, neg_inv).in_cone();

        const Vector w = cone.interior_point();
        const Vector x = neg_inv * w;  // A x = -w, interior to -K by construction
        const bool x_interior = cones::member(cone, x).interior();
        const bool ax_interior = cones::member(cone, Vector(-(a * x))).interior();
        out.interior_witness_found = x_interior && ax_interior;
        if (x_interior) out.interior_witness = x;
    }

    // the three conditions are equivalent for nonsingular cross-positive
    // matrices clear of the stability margin
    const bool decidable = out.cross_positive && out.neg_inverse_nonneg.has_value() &&
                           out.stability.converged &&
                           std::abs(out.stability.spectral_abscissa) > margin_tol;
    if (decidable) {
        if (out.stable != out.interior_witness_found || out.stable != *out.neg_inverse_nonneg) {
            std::ostringstream os;
            os << "stability equivalences disagree for a cross-positive matrix: stable="
               << out.stable << " interior-witness=" << out.interior_witness_found
               << " neg-inverse-nonneg=" << *out.neg_inverse_nonneg;
            throw NumericalConsistencyError(os.str());
        }
    }
    return out;
}

Witness witness(const cones::ConeSpec& cone, const BlockSystem& sys, double margin_tol) {
    Vector w(2 * cone.dim());
    w << cone.interior_point(), cone.interior_point();
    return witness(cone, sys, w, margin_tol);
}

Witness witness(const cones::ConeSpec& cone, const BlockSystem& sys, const Vector& w,
                double margin_tol) {
    const Index n = cone.dim();
    if (sys.n() != n) throw DimensionError("system dimension does not match cone");
    if (w.size() != 2 * n) throw DimensionError("interior point must live in R^{2n}");

    const auto blocks = cones::block_cross_positive(cone, sys);
    if (!blocks.verdict)
        throw PreconditionError("witness requires L cross-positive on K x K (block " +
                                blocks.violated_block + " fails)");
    const Matrix l = sys.assembled();
    const StabilityReport l_stab = eigenvalues(l, margin_tol);
    if (!l_stab.stable) throw PreconditionError("witness requires a stable L");

    const cones::ConeSpec product = cones::ProductCone(cone).as_cone();
    if (!cones::member(product, w).interior())
        throw PreconditionError("chosen w is not interior to K x K");

    Eigen::PartialPivLU<Matrix> lu(l);
    Witness out;
    const Vector v = lu.solve(-w);
    if (!v.allFinite()) throw PreconditionError("L is numerically singular");
    out.source_w = w;
    out.v1 = v.head(n);
    out.v2 = v.tail(n);
    out.u1 = -w.head(n);
    out.u2 = -w.tail(n);

    Vector u(2 * n);
    u << out.u1, out.u2;
    out.residual = (l * v - u).norm();
    const double rel_cap = 1e-10 * l.norm() * std::max(1.0, v.norm());
    if (out.residual > rel_cap)
        throw NumericalConsistencyError("witness residual exceeds 1e-10 relative bound");
    if (!cones::member(cone, out.v1).interior() || !cones::member(cone, out.v2).interior())
        throw NumericalConsistencyError("witness v1, v2 failed interior membership");
    if (!cones::member(cone, Vector(-out.u1)).interior() ||
        !cones::member(cone, Vector(-out.u2)).interior())
        throw NumericalConsistencyError("witness u1, u2 failed negative-interior membership");

    out.a_stable = eigenvalues(sys.A, margin_tol).stable;
    out.d_stable = eigenvalues(sys.D, margin_tol).stable;
    return out;
}

}  // namespace conric::spectral
