// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#include "conric/cones.hpp"

#include <sstream>

namespace conric::cones {

const char* to_string(Relation r) {
    switch (r) {
        case Relation::NotInCone: return "not-in-cone";
        case Relation::InCone: return "in-cone";
        case Relation::InInterior: return "in-interior";
    }
    return "unknown";
}

ConeSpec::ConeSpec(Index dim, bool orthant, Matrix gen, Matrix gen_inv, double cond, double tol)
    : dim_(dim), orthant_(orthant), gen_(std::move(gen)), gen_inv_(std::move(gen_inv)),
      cond_(cond), tol_(tol) {}

ConeSpec ConeSpec::orthant(Index dim, double tol) {
    if (dim < 1) throw ConstructionError("cone dimension must be positive");
    if (!(tol >= 0.0)) throw ConstructionError("membership tolerance must be nonnegative");
    return ConeSpec(dim, true, Matrix::Identity(dim, dim), Matrix::Identity(dim, dim), 1.0, tol);
}

ConeSpec ConeSpec::simplicial(const Matrix& generators, double tol, double cond_cap) {
    const Index n = generators.rows();
    if (n < 1 || generators.cols() != n)
        throw ConstructionError("generator matrix must be square and non-empty");
    if (!generators.allFinite())
        throw ConstructionError("generator matrix has non-finite entries");
    if (!(tol >= 0.0)) throw ConstructionError("membership tolerance must be nonnegative");

    Eigen::JacobiSVD<Matrix> svd(generators);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(n - 1);
    if (!(smin > 0.0))
        throw ConstructionError("generator matrix is singular to working precision");
    const double cond = smax / smin;
    if (!std::isfinite(cond) || cond > cond_cap) {
        std::ostringstream os;
        os << "generator matrix condition " << cond << " exceeds cap " << cond_cap;
        throw ConstructionError(os.str());
    }
    Matrix inv = Eigen::PartialPivLU<Matrix>(generators).inverse();
    return ConeSpec(n, false, generators, std::move(inv), cond, tol);
}

Vector ConeSpec::coordinates(const Vector& x) const {
    if (x.size() != dim_) throw DimensionError("vector dimension does not match cone");
    return orthant_ ? x : Vector(gen_inv_ * x);
}

Matrix ConeSpec::coordinates(const Matrix& m) const {
    if (m.rows() != dim_ || m.cols() != dim_)
        throw DimensionError("matrix dimension does not match cone");
    return orthant_ ? m : Matrix(gen_inv_ * m * gen_);
}

ConeSpec ConeSpec::dual() const {
    if (orthant_) return *this;
    // dual generators h_j = columns of G^-T, so h_j^T g_i = delta_ij
    return ConeSpec(dim_, false, gen_inv_.transpose(), gen_.transpose(), cond_, tol_);
}

Vector ConeSpec::interior_point() const {
    return gen_ * Vector::Ones(dim_);
}

ConeSpec ProductCone::as_cone() const {
    const Index n = factor.dim();
    if (factor.is_orthant()) return ConeSpec::orthant(2 * n, factor.tol());
    Matrix g = Matrix::Zero(2 * n, 2 * n);
    g.topLeftCorner(n, n) = factor.generators();
    g.bottomRightCorner(n, n) = factor.generators();
    return ConeSpec::simplicial(g, factor.tol(), std::numeric_limits<double>::infinity());
}

namespace {

Relation classify(double margin, double threshold) {
    if (margin > threshold) return Relation::InInterior;
    if (margin >= -threshold) return Relation::InCone;
    return Relation::NotInCone;
}

}  // namespace

ConeOrder member(const ConeSpec& cone, const Vector& x) {
    if (!x.allFinite()) throw PreconditionError("membership query on non-finite vector");
    const Vector lam = cone.coordinates(x);
    ConeOrder out;
    out.margin = lam.minCoeff(&out.worst_index);
    out.relation = classify(out.margin, cone.tol() * entry_scale(x));
    return out;
}

ConeOrder leq_vec(const ConeSpec& cone, const Vector& x, const Vector& y) {
    if (x.size() != y.size()) throw DimensionError("vector order on mismatched lengths");
    return member(cone, Vector(y - x));
}

ConeOrder matrix_nonneg(const ConeSpec& cone, const Matrix& m) {
    if (!m.allFinite()) throw PreconditionError("cone query on non-finite matrix");
    const Matrix t = cone.coordinates(m);
    ConeOrder out;
    out.margin = t.minCoeff(&out.worst_row, &out.worst_col);
    out.relation = classify(out.margin, cone.tol() * entry_scale(m));
    return out;
}

ConeOrder matrix_leq(const ConeSpec& cone, const Matrix& m1, const Matrix& m2) {
    if (m1.rows() != m2.rows() || m1.cols() != m2.cols())
        throw DimensionError("matrix order on mismatched shapes");
    return matrix_nonneg(cone, Matrix(m2 - m1));
}

CrossPositivity cross_positive(const ConeSpec& cone, const Matrix& a) {
    if (!a.allFinite()) throw PreconditionError("cross-positivity query on non-finite matrix");
    const Matrix t = cone.coordinates(a);
    const double threshold = cone.tol() * entry_scale(a);
    CrossPositivity out;
    out.worst_value = std::numeric_limits<double>::infinity();
    const Index n = t.rows();
    for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < n; ++i) {
            if (i == j) continue;
            const double v = t(j, i);  // h_j^T a g_i
            out.worst_value = std::min(out.worst_value, v);
            if (v < -threshold) out.violations.push_back({i, j, v});
        }
    }
    if (n == 1) out.worst_value = 0.0;  // no off-diagonal pairs
    out.cross_positive = out.violations.empty();
    return out;
}

BlockVerdicts block_cross_positive(const ConeSpec& cone, const BlockSystem& sys) {
    if (sys.n() != cone.dim()) throw DimensionError("system dimension does not match cone");
    BlockVerdicts out;
    out.a = cross_positive(cone, sys.A);
    out.d = cross_positive(cone, sys.D);
    out.b = matrix_nonneg(cone, sys.B);
    out.c = matrix_nonneg(cone, sys.C);
    out.verdict = out.a.cross_positive && out.d.cross_positive && out.b.in_cone() && out.c.in_cone();
    if (!out.a.cross_positive) out.violated_block = "A";
    else if (!out.b.in_cone()) out.violated_block = "B";
    else if (!out.c.in_cone()) out.violated_block = "C";
    else if (!out.d.cross_positive) out.violated_block = "D";

    // cross-check against the direct test on K x K
    const ConeSpec product = ProductCone(cone).as_cone();
    out.product_direct = cross_positive(product, sys.assembled()).cross_positive;
    if (out.product_direct != out.verdict) {
        std::ostringstream os;
        os << "block decomposition and direct product-cone test disagree on cross-positivity"
           << " (blocks: " << (out.verdict ? "yes" : "no")
           << ", direct: " << (out.product_direct ? "yes" : "no") << ")";
        throw NumericalConsistencyError(os.str());
    }
    return out;
}

}  // namespace conric::cones
