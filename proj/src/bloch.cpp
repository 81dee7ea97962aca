#include "pdiv/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace pdiv {

double HermitianOp2::radius() const noexcept { return std::hypot(x, y, z); }

bool HermitianOp2::is_density(double tol) const noexcept {
    return std::abs(trace - 1.0) <= tol && radius() <= 1.0 + tol;
}

BlochRadius bloch_radius(const HermitianOp2& op) noexcept { return {op.radius()}; }

HermitianOp2 to_bloch(const Eigen::Matrix2cd& q) {
    const double scale = std::max(1.0, q.cwiseAbs().maxCoeff());
    const double defect = std::max({std::abs(q(0, 1) - std::conj(q(1, 0))),
                                    std::abs(q(0, 0).imag()), std::abs(q(1, 1).imag())});
    if (!(defect <= kHermiticityTol * scale)) {
        throw std::invalid_argument("to_bloch: matrix is not Hermitian");
    }
    // Average the two off-diagonal entries so that tiny asymmetries do not bias x or y.
    const std::complex<double> q12 = 0.5 * (q(0, 1) + std::conj(q(1, 0)));
    HermitianOp2 op;
    op.trace = q(0, 0).real() + q(1, 1).real();
    op.z = q(0, 0).real() - q(1, 1).real();
    op.x = 2.0 * q12.real();
    op.y = -2.0 * q12.imag();
    return op;
}

Eigen::Matrix2cd from_bloch(const HermitianOp2& op) {
    Eigen::Matrix2cd q;
    q(0, 0) = {0.5 * (op.trace + op.z), 0.0};
    q(0, 1) = {0.5 * op.x, -0.5 * op.y};
    q(1, 0) = {0.5 * op.x, 0.5 * op.y};
    q(1, 1) = {0.5 * (op.trace - op.z), 0.0};
    return q;
}

std::pair<double, double> eigenvalues(const HermitianOp2& op) noexcept {
    const double r = op.radius();
    return {0.5 * (op.trace + r), 0.5 * (op.trace - r)};
}

double trace_norm(const HermitianOp2& op) noexcept {
    const double r = op.radius();
    const double t = std::abs(op.trace);
    return r <= t ? t : r;
}

Eigen::Vector4cd vectorize(const HermitianOp2& op) {
    const Eigen::Matrix2cd q = from_bloch(op);
    return {q(0, 0), q(0, 1), q(1, 0), q(1, 1)};
}

HermitianOp2 devectorize(const Eigen::Vector4cd& v) {
    Eigen::Matrix2cd q;
    q << v(0), v(1), v(2), v(3);
    return to_bloch(q);
}

}  // namespace pdiv
