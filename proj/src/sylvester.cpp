// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#include "conric/sylvester.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <sstream>

#include "conric/spectral.hpp"

namespace conric::sylvester {

namespace {

void require_shapes(const Matrix& a, const Matrix& d, const Matrix& c) {
    const Index n = a.rows();
    if (n < 1 || a.cols() != n || d.rows() != n || d.cols() != n || c.rows() != n ||
        c.cols() != n)
        throw DimensionError("Sylvester blocks must be square with equal size");
    if (!a.allFinite() || !d.allFinite() || !c.allFinite())
        throw PreconditionError("Sylvester blocks have non-finite entries");
}

double min_pair_sum(const ComplexVector& ev_d, const ComplexVector& ev_a) {
    double best = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < ev_d.size(); ++i)
        for (Index j = 0; j < ev_a.size(); ++j)
            best = std::min(best, std::abs(ev_d(i) + ev_a(j)));
    return best;
}

void check_separation(double min_sum, const Matrix& a, const Matrix& d) {
    const double threshold = 1e-8 * (a.norm() + d.norm());
    if (min_sum < threshold) {
        std::ostringstream os;
        os << "Sylvester equation ill-posed: min |lambda_D + lambda_A| = " << min_sum
           << " below " << threshold;
        throw IllPosedError(os.str(), min_sum);
    }
}

Matrix kron(const Matrix& m1, const Matrix& m2) {
    Matrix out(m1.rows() * m2.rows(), m1.cols() * m2.cols());
    for (Index i = 0; i < m1.rows(); ++i)
        for (Index j = 0; j < m1.cols(); ++j)
            out.block(i * m2.rows(), j * m2.cols(), m2.rows(), m2.cols()) = m1(i, j) * m2;
    return out;
}

Matrix solve_kronecker(const Matrix& a, const Matrix& d, const Matrix& c) {
    const Index n = a.rows();
    if (n > 20) throw PreconditionError("Kronecker path is an oracle, limited to n <= 20");
    check_separation(min_pair_sum(Eigen::EigenSolver<Matrix>(d, false).eigenvalues(),
                                  Eigen::EigenSolver<Matrix>(a, false).eigenvalues()),
                     a, d);
    const Index nn = n * n;
    Matrix big = kron(Matrix::Identity(n, n), d) + kron(a.transpose(), Matrix::Identity(n, n));
    Eigen::Map<const Vector> cvec(c.data(), nn);
    Vector xvec = Eigen::PartialPivLU<Matrix>(std::move(big)).solve(Vector(-cvec));
    return Eigen::Map<const Matrix>(xvec.data(), n, n);
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_m.
void gauss_legendre(int m, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(m, 0.0);
    weights.assign(m, 0.0);
    for (int i = 0; i < (m + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= m; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = m * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[m - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[m - 1 - i] = w;
    }
}

}  // namespace

SchurSylvesterSolver::SchurSylvesterSolver(const Matrix& a, const Matrix& d) {
    require_shapes(a, d, Matrix::Zero(a.rows(), a.cols()));
    Eigen::ComplexSchur<Matrix> sa(a, /*computeU=*/true);
    Eigen::ComplexSchur<Matrix> sd(d, /*computeU=*/true);
    if (sa.info() != Eigen::Success || sd.info() != Eigen::Success)
        throw Error("Schur decomposition did not converge");
    ta_ = sa.matrixT();
    ua_ = sa.matrixU();
    td_ = sd.matrixT();
    ud_ = sd.matrixU();
    min_eigensum_ = min_pair_sum(td_.diagonal(), ta_.diagonal());
    check_separation(min_eigensum_, a, d);
}

Matrix SchurSylvesterSolver::solve(const Matrix& c) const {
    const Index n = ta_.rows();
    if (c.rows() != n || c.cols() != n) throw DimensionError("right-hand side shape mismatch");

    // D X + X A = -C  =>  Td Y + Y Ta = F with Y = Ud^H X Ua, F = -Ud^H C Ua;
    // column k obeys (Td + Ta(k,k) I) y_k = f_k - sum_{j<k} Ta(j,k) y_j.
    const ComplexMatrix f = -(ud_.adjoint() * c * ua_);
    ComplexMatrix y(n, n);
    ComplexMatrix td_work = td_;
    for (Index k = 0; k < n; ++k) {
        ComplexVector rhs = f.col(k);
        if (k > 0) rhs.noalias() -= y.leftCols(k) * ta_.col(k).head(k);
        td_work.diagonal().array() += ta_(k, k);
        y.col(k) = td_work.triangularView<Eigen::Upper>().solve(rhs);
        td_work.diagonal().array() -= ta_(k, k);
    }
    return (ud_ * y * ua_.adjoint()).real();
}

Matrix solve_sylvester(const SylvesterProblem& p) {
    require_shapes(p.A, p.D, p.C);
    switch (p.method) {
        case Method::SchurBased:
            return SchurSylvesterSolver(p.A, p.D).solve(p.C);
        case Method::Kronecker:
            return solve_kronecker(p.A, p.D, p.C);
        case Method::Quadrature:
            return integral_solution(p.A, p.D, p.C);
    }
    throw Error("unknown Sylvester method");
}

Matrix integral_solution(const Matrix& a, const Matrix& d, const Matrix& c, double t_max,
                         int steps) {
    require_shapes(a, d, c);
    const auto ra = spectral::eigenvalues(a, 0.0);
    const auto rd = spectral::eigenvalues(d, 0.0);
    if (!(ra.spectral_abscissa < 0.0) || !(rd.spectral_abscissa < 0.0))
        throw PreconditionError("integral solution requires stable A and D");

    const double decay = ra.spectral_abscissa + rd.spectral_abscissa;
    if (t_max <= 0.0) t_max = std::log(1e-10) / decay;
    if (steps < 8) steps = 8;

    // log-spaced panels accumulate resolution near t = 0 where the integrand peaks
    const int panels = 8;
    const int per_panel = std::max(4, steps / panels);
    std::vector<double> nodes, weights;
    gauss_legendre(per_panel, nodes, weights);

    Matrix x = Matrix::Zero(a.rows(), a.cols());
    double lo = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double hi = t_max * std::ldexp(1.0, p + 1 - panels);  // t_max * 2^(p+1-panels)
        const double half = 0.5 * (hi - lo);
        const double mid = 0.5 * (hi + lo);
        for (int q = 0; q < per_panel; ++q) {
            const double t = mid + half * nodes[q];
            x.noalias() += (half * weights[q]) * (spectral::expm(d, t) * c * spectral::expm(a, t));
        }
        lo = hi;
    }
    return x;
}

bool sylvester_preserves_cone(const cones::ConeSpec& cone, const Matrix& a, const Matrix& d,
                              const Matrix& c) {
    require_shapes(a, d, c);
    if (a.rows() != cone.dim()) throw DimensionError("blocks do not match cone dimension");

    for (const auto& [m, name] : {std::pair{&a, "A"}, std::pair{&d, "D"}}) {
        if (!cones::cross_positive(cone, *m).cross_positive)
            throw PreconditionError(std::string("hypothesis failure: block ") + name +
                                    " is not cross-positive on K");
        if (!spectral::eigenvalues(*m).stable)
            throw PreconditionError(std::string("hypothesis failure: block ") + name +
                                    " is not stable");
    }
    if (!cones::matrix_nonneg(cone, c).in_cone())
        throw PreconditionError("hypothesis failure: C is not K-nonnegative");

    const Matrix x = solve_sylvester({a, d, c, Method::SchurBased});
    if (!cones::matrix_nonneg(cone, x).in_cone())
        throw NumericalConsistencyError(
            "Sylvester solution escaped the cone despite valid hypotheses");
    return true;
}

}  // namespace conric::sylvester
