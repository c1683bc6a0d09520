// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#pragma once

#include <filesystem>
#include <random>
#include <string>

#include "conric/cones.hpp"
#include "conric/instances.hpp"
#include "conric/types.hpp"

namespace testsupport {

using conric::Index;
using conric::Matrix;
using conric::Vector;
using conric::instances::Rng;

inline Matrix random_matrix(Rng& rng, Index n, double lo = -1.0, double hi = 1.0) {
    Matrix m(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) m(i, j) = rng.uniform(lo, hi);
    return m;
}

/// Entrywise-nonnegative matrix: K-nonnegative on the orthant.
inline Matrix random_nonneg(Rng& rng, Index n, double hi = 1.0) {
    return random_matrix(rng, n, 0.0, hi);
}

/// Nonnegative off-diagonals, diagonal drawn in [diag_lo, diag_hi]:
/// cross-positive on the orthant.
inline Matrix random_metzler(Rng& rng, Index n, double diag_lo, double diag_hi) {
    Matrix m = random_nonneg(rng, n);
    for (Index i = 0; i < n; ++i) m(i, i) = rng.uniform(diag_lo, diag_hi);
    return m;
}

/// Strictly diagonally dominant Metzler matrix: cross-positive and stable
/// with spectral abscissa <= -shift.
inline Matrix random_stable_metzler(Rng& rng, Index n, double shift) {
    Matrix m = random_nonneg(rng, n);
    for (Index i = 0; i < n; ++i) m(i, i) = 0.0;
    for (Index i = 0; i < n; ++i) m(i, i) = -m.row(i).sum() - shift;
    return m;
}

/// Metzler with one diagonal entry forced >= bump: spectral abscissa >= bump,
/// so clearly unstable.
inline Matrix random_unstable_metzler(Rng& rng, Index n, double bump) {
    Matrix m = random_stable_metzler(rng, n, 0.5);
    m(0, 0) = bump + rng.uniform();
    return m;
}

/// A cone change of basis: Simplicial(G) with everything needed to push
/// orthant data onto it. Maps must be conjugated as G M G^-1 and vectors as
/// G x for the cone-coordinate tests to line up.
struct ConeChange {
    conric::cones::ConeSpec cone;
    Matrix G, G_inv;

    Matrix push(const Matrix& m) const { return G * m * G_inv; }
    Vector push(const Vector& v) const { return G * v; }
};

inline ConeChange random_cone(Rng& rng, Index n, double cond_cap = 10.0) {
    Matrix g = conric::instances::random_conditioned(rng, n, cond_cap);
    Matrix g_inv = Eigen::PartialPivLU<Matrix>(g).inverse();
    return ConeChange{conric::cones::ConeSpec::simplicial(g), std::move(g), std::move(g_inv)};
}

/// Fresh temp directory for file-based tests.
class TempDir {
  public:
    explicit TempDir(const std::string& tag) {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() /
                ("conric-" + tag + "-" + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

  private:
    std::filesystem::path path_;
};

}  // namespace testsupport
