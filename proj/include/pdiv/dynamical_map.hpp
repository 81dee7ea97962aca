// dynamical_map.hpp: rate samples, accumulated rates and the qubit map Phi(t).
//
// The master equation has the three dissipators sigma_+, sigma_-, sigma_z/sqrt(2)
// with rates gamma_1 = gamma_12, gamma_2 = gamma_21, gamma_3 = Gamma - gamma_+/2,
// where gamma_+- = gamma_12 +- gamma_21. In Bloch coordinates:
//   dx/dt = -Gamma x + omega y
//   dy/dt = -omega x - Gamma y
//   dz/dt = -gamma_+ z + gamma_-

#pragma once

#include "pdiv/bloch.hpp"

#include <Eigen/Dense>

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace pdiv {

/// Instantaneous coefficients of the master equation at time t. Rates may be
/// negative. A divergent sample (e.g. a pole of the exact Jaynes-Cummings rates)
/// carries divergent = true and non-finite values in the affected fields.
struct RateSample {
    double t{0.0};
    double gamma_plus{0.0};
    double gamma_minus{0.0};
    double Gamma{0.0};
    double omega{0.0};
    bool divergent{false};

    double gamma_12() const noexcept { return 0.5 * (gamma_plus + gamma_minus); }
    double gamma_21() const noexcept { return 0.5 * (gamma_plus - gamma_minus); }
    /// Diagonal rates (gamma_1, gamma_2, gamma_3) of the sigma_+, sigma_-, sigma_z channels.
    std::array<double, 3> channel_rates() const noexcept;
    /// Builds a sample from the channel rates, inverting channel_rates().
    static RateSample from_channel_rates(double t, double gamma_1, double gamma_2, double gamma_3,
                                         double omega) noexcept;

    bool finite() const noexcept;
};

using RateFunction = std::function<RateSample(double)>;

/// Accumulated integrals of the rates on [0, t] plus the z-offset s(t), which solves
/// ds/dt = -gamma_+ s + gamma_-, s(0) = 0. These five numbers fully determine Phi(t).
struct IntegratedRates {
    double t{0.0};
    double gtilde_plus{0.0};
    double gtilde_minus{0.0};
    double Gtilde{0.0};
    double wtilde{0.0};
    double s{0.0};
    // Set when a non-finite or divergent rate sample was met; divergence_time is the
    // time of that sample and the accumulated fields are NaN.
    bool divergent{false};
    double divergence_time{0.0};
};

/// Integrates the rates on [0, t] with classical RK4 on a uniform mesh of
/// ceil(t/step) intervals. Throws std::invalid_argument for t < 0 or step <= 0.
IntegratedRates integrate_rates(const RateFunction& rates, double t, double step);

struct IntegrationEstimate {
    IntegratedRates value;  // result at step/2
    double error{0.0};      // max component difference between step and step/2
};

/// integrate_rates at step and step/2; the difference is the error estimate.
IntegrationEstimate integrate_rates_with_estimate(const RateFunction& rates, double t, double step);

/// Cumulative integration along a sorted grid (grid[0] >= 0); one entry per grid point.
/// Every entry after a divergence is marked divergent as well.
std::vector<IntegratedRates> integrate_rates_on_grid(const RateFunction& rates,
                                                     const std::vector<double>& grid, double step);

/// Phi(t) q in Bloch form: the transverse part rotates by wtilde and contracts by
/// exp(-Gtilde); z' = s * trace + exp(-gtilde_plus) z. The trace is unchanged.
HermitianOp2 apply_map(const IntegratedRates& ir, const HermitianOp2& q) noexcept;

/// Phi(t) as a 4x4 matrix acting on (q11, q12, q21, q22)^T.
Eigen::Matrix4cd map_matrix(const IntegratedRates& ir);

/// z-coordinate gamma_-/gamma_+ of the instantaneous fixed point; nullopt when gamma_+ == 0.
std::optional<double> instantaneous_fixed_point(const RateSample& rs) noexcept;

/// z(t) for a constant ratio gamma_-/gamma_+ = z_fp.
double z_constant_ratio(double z0, double z_fp, double gtilde_plus) noexcept;

/// Right-hand side of the Bloch equations at (x, y, z).
std::array<double, 3> bloch_rhs(const RateSample& rs, double x, double y, double z) noexcept;

}  // namespace pdiv
