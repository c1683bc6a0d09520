// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#pragma once

#include "conric/errors.hpp"
#include "conric/types.hpp"

namespace conric {

/// Coefficient blocks of the Riccati equation X B X + D X + X A + C = 0,
/// together with the assembled 2n x 2n matrix L = [[A, B], [C, D]].
struct BlockSystem {
    Matrix A, B, C, D;

    BlockSystem(Matrix a, Matrix b, Matrix c, Matrix d);

    Index n() const { return A.rows(); }

    /// [[A, B], [C, D]]; assembled on demand so the blocks of L are always
    /// bit-identical to the stored A, B, C, D.
    Matrix assembled() const;

    /// Blocks of the transposed system Z B^T Z + A^T Z + Z D^T + C^T = 0,
    /// whose assembled matrix is a permutation similarity of L^T.
    BlockSystem transposed_system() const;
};

}  // namespace conric
