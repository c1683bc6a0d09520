// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#pragma once

#include <Eigen/Dense>

namespace conric {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Largest absolute entry, floored at 1. Used as the reference scale for
/// relative tolerances throughout the library.
inline double entry_scale(const Matrix& m) {
    return std::max(1.0, m.size() > 0 ? m.cwiseAbs().maxCoeff() : 0.0);
}

inline double entry_scale(const Vector& v) {
    return std::max(1.0, v.size() > 0 ? v.cwiseAbs().maxCoeff() : 0.0);
}

}  // namespace conric
