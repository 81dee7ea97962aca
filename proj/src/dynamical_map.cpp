#include "pdiv/dynamical_map.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace pdiv {

std::array<double, 3> RateSample::channel_rates() const noexcept {
    return {gamma_12(), gamma_21(), Gamma - 0.5 * gamma_plus};
}

RateSample RateSample::from_channel_rates(double t, double gamma_1, double gamma_2, double gamma_3,
                                          double omega) noexcept {
    RateSample rs;
    rs.t = t;
    rs.gamma_plus = gamma_1 + gamma_2;
    rs.gamma_minus = gamma_1 - gamma_2;
    rs.Gamma = gamma_3 + 0.5 * rs.gamma_plus;
    rs.omega = omega;
    return rs;
}

bool RateSample::finite() const noexcept {
    return !divergent && std::isfinite(gamma_plus) && std::isfinite(gamma_minus) &&
           std::isfinite(Gamma) && std::isfinite(omega);
}

namespace {

// (gtilde_plus, gtilde_minus, Gtilde, wtilde, s)
using State = std::array<double, 5>;

State derivative(const RateSample& rs, double s) noexcept {
    return {rs.gamma_plus, rs.gamma_minus, rs.Gamma, rs.omega,
            -rs.gamma_plus * s + rs.gamma_minus};
}

IntegratedRates to_integrated(double t, const State& y) noexcept {
    IntegratedRates ir;
    ir.t = t;
    ir.gtilde_plus = y[0];
    ir.gtilde_minus = y[1];
    ir.Gtilde = y[2];
    ir.wtilde = y[3];
    ir.s = y[4];
    return ir;
}

IntegratedRates divergent_result(double t, double at) noexcept {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    IntegratedRates ir{t, nan, nan, nan, nan, nan, true, at};
    return ir;
}

struct Segment {
    State y;
    bool divergent{false};
    double divergence_time{0.0};
};

// Advances y from t0 to t1 with n uniform RK4 steps.
Segment rk4_segment(const RateFunction& rates, State y, double t0, double t1, std::size_t n) {
    if (n == 0 || t1 == t0) return {y};
    const double h = (t1 - t0) / static_cast<double>(n);
    RateSample left = rates(t0);
    if (!left.finite()) return {y, true, t0};
    for (std::size_t i = 0; i < n; ++i) {
        const double ta = t0 + static_cast<double>(i) * h;
        const double tb = (i + 1 == n) ? t1 : ta + h;
        const RateSample mid = rates(ta + 0.5 * h);
        if (!mid.finite()) return {y, true, ta + 0.5 * h};
        const RateSample right = rates(tb);
        if (!right.finite()) return {y, true, tb};

        const State k1 = derivative(left, y[4]);
        const State k2 = derivative(mid, y[4] + 0.5 * h * k1[4]);
        const State k3 = derivative(mid, y[4] + 0.5 * h * k2[4]);
        const State k4 = derivative(right, y[4] + h * k3[4]);
        for (std::size_t c = 0; c < y.size(); ++c) {
            y[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
        }
        left = right;
    }
    return {y};
}

std::size_t steps_for(double span, double step) {
    if (span <= 0.0) return 0;
    return static_cast<std::size_t>(std::max(1.0, std::ceil(span / step - 1e-9)));
}

void check_step(double step) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw std::invalid_argument("integrate_rates: step must be positive");
    }
}

}  // namespace

IntegratedRates integrate_rates(const RateFunction& rates, double t, double step) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("integrate_rates: t must be finite and non-negative");
    }
    check_step(step);
    const Segment seg = rk4_segment(rates, State{}, 0.0, t, steps_for(t, step));
    if (seg.divergent) return divergent_result(t, seg.divergence_time);
    return to_integrated(t, seg.y);
}

IntegrationEstimate integrate_rates_with_estimate(const RateFunction& rates, double t, double step) {
    const IntegratedRates coarse = integrate_rates(rates, t, step);
    const IntegratedRates fine = integrate_rates(rates, t, 0.5 * step);
    if (coarse.divergent || fine.divergent) {
        return {fine.divergent ? fine : coarse, std::numeric_limits<double>::infinity()};
    }
    const double err = std::max({std::abs(coarse.gtilde_plus - fine.gtilde_plus),
                                 std::abs(coarse.gtilde_minus - fine.gtilde_minus),
                                 std::abs(coarse.Gtilde - fine.Gtilde),
                                 std::abs(coarse.wtilde - fine.wtilde), std::abs(coarse.s - fine.s)});
    return {fine, err};
}

std::vector<IntegratedRates> integrate_rates_on_grid(const RateFunction& rates,
                                                     const std::vector<double>& grid, double step) {
    check_step(step);
    if (!std::is_sorted(grid.begin(), grid.end())) {
        throw std::invalid_argument("integrate_rates_on_grid: grid must be sorted");
    }
    if (!grid.empty() && !(grid.front() >= 0.0)) {
        throw std::invalid_argument("integrate_rates_on_grid: grid must start at t >= 0");
    }
    std::vector<IntegratedRates> out;
    out.reserve(grid.size());
    State y{};
    double t_prev = 0.0;
    bool diverged = false;
    double diverged_at = 0.0;
    for (const double t : grid) {
        if (!diverged) {
            const Segment seg = rk4_segment(rates, y, t_prev, t, steps_for(t - t_prev, step));
            if (seg.divergent) {
                diverged = true;
                diverged_at = seg.divergence_time;
            } else {
                y = seg.y;
            }
        }
        out.push_back(diverged ? divergent_result(t, diverged_at) : to_integrated(t, y));
        t_prev = t;
    }
    return out;
}

HermitianOp2 apply_map(const IntegratedRates& ir, const HermitianOp2& q) noexcept {
    const double contraction = std::exp(-ir.Gtilde);
    const double c = std::cos(ir.wtilde);
    const double sn = std::sin(ir.wtilde);
    HermitianOp2 out;
    out.trace = q.trace;
    out.x = contraction * (q.x * c + q.y * sn);
    out.y = contraction * (-q.x * sn + q.y * c);
    out.z = ir.s * q.trace + std::exp(-ir.gtilde_plus) * q.z;
    return out;
}

Eigen::Matrix4cd map_matrix(const IntegratedRates& ir) {
    using cd = std::complex<double>;
    const double e = std::exp(-ir.gtilde_plus);
    const double s = ir.s;
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = 0.5 * (1.0 + s + e);
    m(0, 3) = 0.5 * (1.0 + s - e);
    m(1, 1) = std::exp(cd{-ir.Gtilde, ir.wtilde});
    m(2, 2) = std::exp(cd{-ir.Gtilde, -ir.wtilde});
    m(3, 0) = 0.5 * (1.0 - s - e);
    m(3, 3) = 0.5 * (1.0 - s + e);
    return m;
}

std::optional<double> instantaneous_fixed_point(const RateSample& rs) noexcept {
    if (rs.gamma_plus == 0.0 || !rs.finite()) return std::nullopt;
    return rs.gamma_minus / rs.gamma_plus;
}

double z_constant_ratio(double z0, double z_fp, double gtilde_plus) noexcept {
    return z_fp - (z_fp - z0) * std::exp(-gtilde_plus);
}

std::array<double, 3> bloch_rhs(const RateSample& rs, double x, double y, double z) noexcept {
    return {-rs.Gamma * x + rs.omega * y, -rs.omega * x - rs.Gamma * y,
            -rs.gamma_plus * z + rs.gamma_minus};
}

}  // namespace pdiv
