// bloch.hpp: 2x2 Hermitian operators in Bloch form, eigenvalues, trace norm.
//
// An operator is stored as q = 1/2 (trace*I + x*sx + y*sy + z*sz), so that
//   q11 = (trace + z)/2,  q12 = (x - i y)/2,  q21 = (x + i y)/2,  q22 = (trace - z)/2.
// The sign of y follows from q12 = (x - i y)/2, i.e. y = -2 Im(q12).

#pragma once

#include <Eigen/Dense>

#include <utility>

namespace pdiv {

struct HermitianOp2 {
    double trace{0.0};
    double x{0.0};
    double y{0.0};
    double z{0.0};

    double radius_squared() const noexcept { return x * x + y * y + z * z; }
    double radius() const noexcept;

    // trace == 1 and r <= 1 (within tol on both).
    bool is_density(double tol = 1e-12) const noexcept;
};

/// Radius of the Bloch vector, r = |(x, y, z)|.
struct BlochRadius {
    double r{0.0};
};

BlochRadius bloch_radius(const HermitianOp2& op) noexcept;

/// Relative tolerance on the Hermiticity defect accepted by to_bloch.
inline constexpr double kHermiticityTol = 1e-10;

/// Converts a 2x2 matrix into Bloch form. Throws std::invalid_argument when the
/// input deviates from Hermitian by more than kHermiticityTol * max(1, max|q_ij|).
HermitianOp2 to_bloch(const Eigen::Matrix2cd& q);

/// Exact inverse of to_bloch.
Eigen::Matrix2cd from_bloch(const HermitianOp2& op);

/// Eigenvalues (trace + r)/2 and (trace - r)/2, largest first.
std::pair<double, double> eigenvalues(const HermitianOp2& op) noexcept;

/// |phi+| + |phi-|: equals |trace| when r^2 <= trace^2, else r.
double trace_norm(const HermitianOp2& op) noexcept;

/// Column vector (q11, q12, q21, q22) used by the 4x4 map representation.
Eigen::Vector4cd vectorize(const HermitianOp2& op);

/// Inverse of vectorize; Hermiticity of the vector is validated like to_bloch.
HermitianOp2 devectorize(const Eigen::Vector4cd& v);

}  // namespace pdiv
