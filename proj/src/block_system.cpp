// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#include "conric/block_system.hpp"

namespace conric {

BlockSystem::BlockSystem(Matrix a, Matrix b, Matrix c, Matrix d)
    : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)) {
    const Index n = A.rows();
    if (n < 1 || A.cols() != n) throw DimensionError("block A must be square and non-empty");
    for (const Matrix* m : {&B, &C, &D}) {
        if (m->rows() != n || m->cols() != n)
            throw DimensionError("all four blocks must be square with equal size");
    }
    for (const Matrix* m : {&A, &B, &C, &D}) {
        if (!m->allFinite()) throw PreconditionError("block system has non-finite entries");
    }
}

Matrix BlockSystem::assembled() const {
    const Index n = this->n();
    Matrix l(2 * n, 2 * n);
    l.topLeftCorner(n, n) = A;
    l.topRightCorner(n, n) = B;
    l.bottomLeftCorner(n, n) = C;
    l.bottomRightCorner(n, n) = D;
    return l;
}

BlockSystem BlockSystem::transposed_system() const {
    return BlockSystem(D.transpose(), B.transpose(), C.transpose(), A.transpose());
}

}  // namespace conric
