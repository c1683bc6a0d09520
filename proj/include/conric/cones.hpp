// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "conric/block_system.hpp"
#include "conric/errors.hpp"
#include "conric/types.hpp"

namespace conric::cones {

inline constexpr double kDefaultMembershipTol = 1e-9;
inline constexpr double kDefaultConditionCap = 1e8;

enum class Relation { NotInCone, InCone, InInterior };

const char* to_string(Relation r);

/// Outcome of a membership or order query. `margin` is the smallest
/// coordinate in the cone's generator basis (lambda = G^-1 x for vectors,
/// entries of G^-1 M G for matrices); negative margins measure violation.
struct ConeOrder {
    Relation relation = Relation::NotInCone;
    double margin = 0.0;
    // most-violated (or tightest) coordinate: index for vectors, (row,col) for matrices
    Index worst_index = -1;
    Index worst_row = -1;
    Index worst_col = -1;

    bool in_cone() const { return relation != Relation::NotInCone; }
    bool interior() const { return relation == Relation::InInterior; }
};

/// A proper cone in R^n, either the nonnegative orthant or a simplicial cone
/// spanned by the columns of an invertible generator matrix G. Restricting to
/// simplicial cones keeps every query a finite exact test in the coordinates
/// lambda = G^-1 x: membership, the induced vector and matrix orders,
/// K-nonnegativity and cross-positivity all reduce to sign checks.
///
/// Tolerances are relative: a quantity q counts as nonnegative when
/// q >= -tol * max(1, magnitude of the input).
class ConeSpec {
  public:
    static ConeSpec orthant(Index dim, double tol = kDefaultMembershipTol);

    /// Builds the cone {G lambda : lambda >= 0}; columns of `generators` are
    /// the extreme rays. Fails with ConstructionError when G is singular or
    /// its condition number exceeds `cond_cap`.
    static ConeSpec simplicial(const Matrix& generators,
                               double tol = kDefaultMembershipTol,
                               double cond_cap = kDefaultConditionCap);

    Index dim() const { return dim_; }
    bool is_orthant() const { return orthant_; }
    double tol() const { return tol_; }
    double condition() const { return cond_; }

    /// Generator matrix G (identity for the orthant).
    const Matrix& generators() const { return gen_; }
    const Matrix& generators_inverse() const { return gen_inv_; }

    /// Coordinates lambda = G^-1 x of a vector in the generator basis.
    Vector coordinates(const Vector& x) const;
    /// Coordinates G^-1 M G of a linear map in the generator basis.
    Matrix coordinates(const Matrix& m) const;

    /// Dual cone: orthant is self-dual, Simplicial(G) dualizes to
    /// Simplicial(G^-T).
    ConeSpec dual() const;

    /// Canonical interior point: the sum of the generators, G * ones.
    Vector interior_point() const;

  private:
    ConeSpec(Index dim, bool orthant, Matrix gen, Matrix gen_inv, double cond, double tol);

    Index dim_ = 0;
    bool orthant_ = true;
    Matrix gen_;
    Matrix gen_inv_;
    double cond_ = 1.0;
    double tol_ = kDefaultMembershipTol;
};

/// The product K x K in R^{2n}; its dual is the product of the duals.
struct ProductCone {
    ConeSpec factor;

    explicit ProductCone(ConeSpec f) : factor(std::move(f)) {}

    /// The product as a 2n-dimensional cone (blkdiag(G, G) generators).
    ConeSpec as_cone() const;
};

/// Membership of x in K.
ConeOrder member(const ConeSpec& cone, const Vector& x);

/// Vector order x <=_K y, i.e. membership of y - x.
ConeOrder leq_vec(const ConeSpec& cone, const Vector& x, const Vector& y);

/// Whether M maps K into K (entrywise test on G^-1 M G).
ConeOrder matrix_nonneg(const ConeSpec& cone, const Matrix& m);

/// Matrix order M1 <=_K M2 in the order induced by K-nonnegativity.
ConeOrder matrix_leq(const ConeSpec& cone, const Matrix& m1, const Matrix& m2);

/// One orthogonal generator pair (g_i, h_j) of K and its dual with
/// h_j^T A g_i below tolerance.
struct ViolatingPair {
    Index generator = -1;  // index i of g_i in K
    Index dual_generator = -1;  // index j of h_j in K*
    double value = 0.0;  // h_j^T A g_i
};

struct CrossPositivity {
    bool cross_positive = false;
    std::vector<ViolatingPair> violations;  // empty when cross_positive
    double worst_value = 0.0;  // smallest off-diagonal of G^-1 A G
};

/// Cross-positivity of A on K: h_j^T A g_i >= 0 for every orthogonal pair of
/// extreme rays. For simplicial cones this is exactly the sign pattern of the
/// off-diagonal entries of G^-1 A G, since h_j^T g_i = delta_ij.
CrossPositivity cross_positive(const ConeSpec& cone, const Matrix& a);

/// Per-block breakdown of cross-positivity of L = [[A,B],[C,D]] on K x K:
/// equivalent to A and D cross-positive on K with B and C K-nonnegative.
struct BlockVerdicts {
    bool verdict = false;
    CrossPositivity a;
    CrossPositivity d;
    ConeOrder b;
    ConeOrder c;
    bool product_direct = false;  // the direct test on K x K (cross-check)
    std::string violated_block;  // "" or one of "A","B","C","D"
};

/// Evaluates the block decomposition and cross-checks it against the direct
/// 2n-dimensional test on the product cone; disagreement raises
/// NumericalConsistencyError.
BlockVerdicts block_cross_positive(const ConeSpec& cone, const BlockSystem& sys);

}  // namespace conric::cones
