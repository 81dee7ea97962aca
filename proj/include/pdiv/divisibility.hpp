// divisibility.hpp: rate-level tests for CP-divisibility, P-divisibility and
// absence of information backflow (BLP) of a qubit master equation.
//
// P-divisibility at time t has four equivalent characterizations:
//   1. d/dt ||Phi(t) q||_1 <= 0 for every Hermitian q               (trace_norm_derivative_margin)
//   2. dr/dt <= 0 for every state currently on the Bloch sphere     (radius_rate_max)
//   3. the Kossakowski form is >= 0 on every orthonormal basis      (kossakowski_min)
//   4. |gamma_-| <= gamma_+ and, when 2 Gamma <= gamma_+,
//      gamma_-^2 <= 4 Gamma (gamma_+ - Gamma)                         (p_margin_rates)
// All conditions are closed, so a margin of exactly zero satisfies them.

#pragma once

#include "pdiv/bloch.hpp"
#include "pdiv/dynamical_map.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace pdiv {

/// Default relative tolerance; the absolute band is kDefaultTol * max(1, |gamma_+|, |gamma_-|, |Gamma|).
inline constexpr double kDefaultTol = 1e-12;

/// min(gamma_+ - |gamma_-|, 2 Gamma - gamma_+); CP-divisible iff >= 0.
double cp_margin(const RateSample& rs) noexcept;

/// Components of the relaxation-rate P condition. Only signs are comparable
/// between them: `linear` has units of a rate, `quadratic` of a squared rate.
struct PMargins {
    double linear{0.0};     // gamma_+ - |gamma_-|
    double quadratic{0.0};  // 4 Gamma (gamma_+ - Gamma) - gamma_-^2, +inf when 2 Gamma > gamma_+
    double combined() const noexcept;
};

PMargins p_margins(const RateSample& rs) noexcept;

/// min of the two PMargins components; P-divisible iff >= 0.
double p_margin_rates(const RateSample& rs) noexcept;

/// Second P condition rewritten in rate units:
///   2 Gamma - gamma_+ + sqrt(max(0, gamma_+^2 - gamma_-^2)),  +inf when 2 Gamma > gamma_+.
/// Same sign as PMargins::quadratic whenever |gamma_-| <= gamma_+, and never smaller
/// than 2 Gamma - gamma_+, so CP implies P for any common tolerance band.
double p_second_margin_linear(const RateSample& rs) noexcept;

/// 2 Gamma - gamma_+ (1 - sqrt(1 - z_fp^2)) with z_fp = gamma_-/gamma_+; defined only
/// when gamma_+ > 0, |z_fp| <= 1 and 2 Gamma <= gamma_+.
std::optional<double> p_margin_fixed_point_form(const RateSample& rs) noexcept;

/// Real orthonormal basis (a, b), (c, d) reduced to the single parameter d^2 in [0, 1];
/// b^2 = 1 - d^2.
struct OrthonormalBasisParam {
    double d2{0.0};

    double b2() const noexcept { return 1.0 - d2; }
};

/// Kossakowski form on the reduced basis:
///   P(d^2) = -4 (Gamma - gamma_+) d^4 + 2 (2 Gamma - 2 gamma_+ + gamma_-) d^2 + gamma_+ - gamma_-.
/// Throws std::invalid_argument when d^2 is outside [0, 1].
double kossakowski_value(const RateSample& rs, OrthonormalBasisParam basis);

/// Exact minimum of P over d^2 in [0, 1]; P-divisible iff >= 0.
double kossakowski_min(const RateSample& rs) noexcept;

/// R(z) = z^2 (Gamma - gamma_+) + z gamma_- - Gamma, proportional to dr^2/dt for a
/// pure state with z-coordinate z.
double radius_rate(const RateSample& rs, double z) noexcept;

/// Exact maximum of R over z in [-1, 1]; P-divisible iff <= 0.
double radius_rate_max(const RateSample& rs) noexcept;

/// -[(Gamma - gamma_+) z^2 + gamma_- trace z - Gamma r^2]. The trace-norm condition
/// holds at q iff this is >= 0 or r^2 < trace^2 (where the norm is locally constant).
double trace_norm_derivative_margin(const RateSample& rs, const HermitianOp2& q) noexcept;

/// min(gamma_+, Gamma); no information backflow iff >= 0.
double blp_margin(const RateSample& rs) noexcept;

/// Positivity of Phi(t) itself from the accumulated rates:
///   gtilde_+ >= 0, Gtilde >= 0, and
///   s^2 <= (1 - e^{-gtilde_+})^2                              if gtilde_+ <= 2 Gtilde,
///   s^2 <= (1 - e^{-2 Gtilde}) (1 - e^{-2 (gtilde_+ - Gtilde)}) if gtilde_+ >= 2 Gtilde.
/// `tol` is an absolute slack on each inequality. Divergent inputs give false.
bool global_positivity(const IntegratedRates& ir, double tol = 0.0) noexcept;

struct DivisibilityVerdict {
    bool cp{false};
    bool p{false};
    bool blp{false};
    bool divergent{false};
    // Some margin lies inside the tolerance band around zero.
    bool on_boundary{false};
    double margin_cp{0.0};
    double margin_p1{0.0};  // gamma_+ - |gamma_-|
    double margin_p2{0.0};  // p_second_margin_linear (+inf when vacuous)
    double margin_blp{0.0};

    double margin_p() const noexcept;
};

/// Flags are margin >= -tol * max(1, |gamma_+|, |gamma_-|, |Gamma|). A divergent or
/// non-finite sample yields all flags false, divergent = true and NaN margins.
/// Throws std::invalid_argument for tol < 0.
DivisibilityVerdict verdict(const RateSample& rs, double tol = kDefaultTol);

struct TimelineEntry {
    RateSample rates;
    DivisibilityVerdict verdict;
};

/// One verdict per grid time. Throws std::invalid_argument if the grid is not sorted.
std::vector<TimelineEntry> classify_timeline(const RateFunction& rates,
                                             const std::vector<double>& grid,
                                             double tol = kDefaultTol);

enum class Region { CP, P_only, BLP_only, none };

std::string_view to_string(Region region) noexcept;

Region classify_region(const DivisibilityVerdict& v) noexcept;

}  // namespace pdiv
