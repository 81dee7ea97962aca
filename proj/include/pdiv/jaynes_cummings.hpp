// jaynes_cummings.hpp: exact master-equation rates of a qubit coupled to one
// thermal bosonic mode (Jaynes-Cummings coupling, no initial correlations).
//
// With Omega_n = sqrt(Delta^2 + 4 g^2 n), thermal weights p_n = e^{-n x}(1 - e^{-x}),
// x = beta_B omega_B, and A_n(t) = cos(Omega_n t/2) - i (Delta/Omega_n) sin(Omega_n t/2):
//   alpha(t) = sum_n p_n |A_n|^2,   beta(t) = sum_n p_n |A_{n+1}|^2,
//   gamma(t) = e^{-i omega_B t} sum_n p_n A_n A_{n+1}.
// The master-equation coefficients follow from these and their time derivatives:
//   gamma_1 = (alpha beta' - alpha' beta - beta') / (alpha + beta - 1)
//   gamma_2 = (alpha' beta - alpha beta' - alpha') / (alpha + beta - 1)
//   gamma_3 = -(gamma_1 + gamma_2 + 2 Re[gamma'/gamma]) / 2
//   omega   = -Im[gamma'/gamma]
//
// Series are truncated at the smallest N with e^{-N x}/(1 - e^{-x}) < series_tol and the
// retained weights are renormalized, so alpha(0) = beta(0) = gamma(0) = 1 exactly.

#pragma once

#include "pdiv/dynamical_map.hpp"
#include "pdiv/rate_models.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace pdiv::jc {

struct JCParams {
    double omega_A{1.0};
    double omega_B{0.6};
    // Detuning; independent of omega_A - omega_B on purpose (the weak-coupling preset
    // does not satisfy that relation).
    double Delta{0.4};
    double g{0.3};
    double beta_B{2.0};
    double series_tol{1e-12};

    /// Throws std::invalid_argument unless beta_B omega_B > 0, series_tol in (0, 1),
    /// and every field is finite.
    void validate() const;

    double x() const noexcept { return beta_B * omega_B; }

    /// omega_B/omega_A = 0.6, Delta/omega_A = 0.4, g/omega_A = 0.3, omega_A beta_B = 2.
    static JCParams cold_mode() noexcept;
    /// omega_B/omega_A = 0.6, Delta/omega_A = 0.4, g/omega_A = 0.03, omega_A beta_B = 0.3.
    static JCParams hot_mode() noexcept;
    /// omega_B/omega_A = 0.6, Delta/omega_A = 1e-4, g/omega_A = 1e-3, omega_A beta_B = 0.3.
    static JCParams weak_coupling() noexcept;
};

double omega_n(std::size_t n, const JCParams& p) noexcept;

/// p_n = e^{-n beta_B omega_B} (1 - e^{-beta_B omega_B}); throws std::invalid_argument
/// when beta_B omega_B <= 0.
double thermal_weight(std::size_t n, const JCParams& p);

/// Number of retained series terms N.
std::size_t truncation_index(const JCParams& p);

struct JCCoefficients {
    double t{0.0};
    double alpha{1.0};
    double beta{1.0};
    double alpha_dot{0.0};
    double beta_dot{0.0};
    std::complex<double> gamma_c{1.0, 0.0};
    std::complex<double> gamma_c_dot{0.0, 0.0};

    // Cancellation-free forms used to build the rates.
    double alpha_defect{0.0};  // 1 - alpha
    double beta_defect{0.0};   // 1 - beta
    std::complex<double> envelope{1.0, 0.0};      // e^{i omega_B t} gamma
    std::complex<double> envelope_dot{0.0, 0.0};  // d/dt of envelope
    std::size_t terms{0};

    /// alpha + beta - 1; the rates gamma_1, gamma_2 have a pole where it vanishes.
    double denominator() const noexcept { return 1.0 - alpha_defect - beta_defect; }
};

/// Series values and their analytic time derivatives. Throws std::invalid_argument for
/// t < 0 or invalid parameters.
JCCoefficients coefficients(double t, const JCParams& p);

/// Rates in all three parametrizations. When |alpha + beta - 1| < 1e-12 (alpha + beta)
/// the sample is flagged divergent and gamma_1, gamma_2, gamma_+, gamma_- are NaN;
/// Gamma and omega stay finite.
struct JCRates {
    RateSample sample;
    double gamma_1{0.0};
    double gamma_2{0.0};
    double gamma_3{0.0};
    double denominator{1.0};
};

JCRates jc_rate_detail(double t, const JCParams& p);

RateSample jc_rates(double t, const JCParams& p);

RateModel make_jc_model(const JCParams& p);

/// Relative threshold on alpha + beta - 1 below which a sample is divergent.
inline constexpr double kDivergenceThreshold = 1e-12;

struct ShortTimeFit {
    double exponent{0.0};
    double intercept{0.0};
    double residual{0.0};  // rms deviation of log|Gamma - gamma_+/2| from the fitted line
    bool resolved{false};
    std::size_t points{0};
};

/// Least-squares slope of log|Gamma - gamma_+/2| against log t over the window.
/// `resolved` is false if the window has fewer than two times, contains t <= 0, hits a
/// divergent sample, or the difference falls below 1e3 machine epsilons relative to
/// max(|Gamma|, |gamma_+|/2).
ShortTimeFit short_time_order(const JCParams& p, const std::vector<double>& t_window);

/// Log-spaced times in [t_lo, t_hi].
std::vector<double> log_window(double t_lo, double t_hi, std::size_t n);

/// Sign changes of alpha + beta - 1 on [t_begin, t_end], located by scanning
/// `scan_points` uniform samples and bisecting each bracket to machine precision.
/// Every returned time is a pole of gamma_+.
std::vector<double> locate_divergences(const JCParams& p, double t_begin, double t_end,
                                       std::size_t scan_points);

}  // namespace pdiv::jc
