#include "pdiv/divisibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pdiv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

double cp_margin(const RateSample& rs) noexcept {
    return std::min(rs.gamma_plus - std::abs(rs.gamma_minus), 2.0 * rs.Gamma - rs.gamma_plus);
}

double PMargins::combined() const noexcept { return std::min(linear, quadratic); }

PMargins p_margins(const RateSample& rs) noexcept {
    PMargins m;
    m.linear = rs.gamma_plus - std::abs(rs.gamma_minus);
    m.quadratic = (2.0 * rs.Gamma <= rs.gamma_plus)
                      ? 4.0 * rs.Gamma * (rs.gamma_plus - rs.Gamma) - rs.gamma_minus * rs.gamma_minus
                      : kInf;
    return m;
}

double p_margin_rates(const RateSample& rs) noexcept { return p_margins(rs).combined(); }

double p_second_margin_linear(const RateSample& rs) noexcept {
    if (2.0 * rs.Gamma > rs.gamma_plus) return kInf;
    // gamma_+ <= 0 leaves no room for the square root (and keeps Gamma >= -band under P).
    const double root =
        rs.gamma_plus > 0.0
            ? std::sqrt(std::max(
                  0.0, (rs.gamma_plus - rs.gamma_minus) * (rs.gamma_plus + rs.gamma_minus)))
            : 0.0;
    return 2.0 * rs.Gamma - rs.gamma_plus + root;
}

std::optional<double> p_margin_fixed_point_form(const RateSample& rs) noexcept {
    if (!(rs.gamma_plus > 0.0) || 2.0 * rs.Gamma > rs.gamma_plus) return std::nullopt;
    const double z_fp = rs.gamma_minus / rs.gamma_plus;
    if (std::abs(z_fp) > 1.0) return std::nullopt;
    return 2.0 * rs.Gamma - rs.gamma_plus * (1.0 - std::sqrt(1.0 - z_fp * z_fp));
}

double kossakowski_value(const RateSample& rs, OrthonormalBasisParam basis) {
    const double x = basis.d2;
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument("kossakowski_value: d^2 must lie in [0, 1]");
    }
    const double g = rs.Gamma, gp = rs.gamma_plus, gm = rs.gamma_minus;
    return -4.0 * (g - gp) * x * x + 2.0 * (2.0 * g - 2.0 * gp + gm) * x + gp - gm;
}

double kossakowski_min(const RateSample& rs) noexcept {
    const double g = rs.Gamma, gp = rs.gamma_plus, gm = rs.gamma_minus;
    const double at0 = gp - gm;  // P(0)
    const double at1 = gp + gm;  // P(1)
    const double endpoints = std::min(at0, at1);
    if (g >= gp) {
        // Affine (g == gp) or concave: the minimum sits on an endpoint.
        return endpoints;
    }
    const double vertex = 0.5 + gm / (4.0 * (g - gp));
    if (vertex >= 0.0 && vertex <= 1.0) {
        return g + gm * gm / (4.0 * (g - gp));
    }
    return endpoints;
}

double radius_rate(const RateSample& rs, double z) noexcept {
    return z * z * (rs.Gamma - rs.gamma_plus) + z * rs.gamma_minus - rs.Gamma;
}

double radius_rate_max(const RateSample& rs) noexcept {
    const double g = rs.Gamma, gp = rs.gamma_plus, gm = rs.gamma_minus;
    const double endpoints = std::max(-gp + gm, -gp - gm);  // R(1), R(-1)
    if (g >= gp) {
        // Affine or convex in z: the maximum sits on an endpoint.
        return endpoints;
    }
    const double z_m = -gm / (2.0 * (g - gp));
    if (z_m >= -1.0 && z_m <= 1.0) {
        return (-gm * gm + 4.0 * g * (gp - g)) / (4.0 * (g - gp));
    }
    return endpoints;
}

double trace_norm_derivative_margin(const RateSample& rs, const HermitianOp2& q) noexcept {
    const double z = q.z;
    return -((rs.Gamma - rs.gamma_plus) * z * z + rs.gamma_minus * q.trace * z -
             rs.Gamma * q.radius_squared());
}

double blp_margin(const RateSample& rs) noexcept { return std::min(rs.gamma_plus, rs.Gamma); }

bool global_positivity(const IntegratedRates& ir, double tol) noexcept {
    if (ir.divergent) return false;
    const double gp = ir.gtilde_plus, g = ir.Gtilde, s = ir.s;
    if (!std::isfinite(gp) || !std::isfinite(g) || !std::isfinite(s)) return false;
    if (gp < -tol || g < -tol) return false;
    const double s2 = s * s;
    if (gp <= 2.0 * g) {
        const double bound = -std::expm1(-gp);
        if (s2 > bound * bound + tol) return false;
    }
    if (gp >= 2.0 * g) {
        const double bound = std::expm1(-2.0 * g) * std::expm1(-2.0 * (gp - g));
        if (s2 > bound + tol) return false;
    }
    return true;
}

double DivisibilityVerdict::margin_p() const noexcept { return std::min(margin_p1, margin_p2); }

DivisibilityVerdict verdict(const RateSample& rs, double tol) {
    if (!(tol >= 0.0)) throw std::invalid_argument("verdict: tol must be non-negative");
    DivisibilityVerdict v;
    if (!rs.finite()) {
        v.divergent = true;
        v.margin_cp = v.margin_p1 = v.margin_p2 = v.margin_blp = kNaN;
        return v;
    }
    const double band =
        tol * std::max({1.0, std::abs(rs.gamma_plus), std::abs(rs.gamma_minus), std::abs(rs.Gamma)});
    v.margin_cp = cp_margin(rs);
    v.margin_p1 = rs.gamma_plus - std::abs(rs.gamma_minus);
    v.margin_p2 = p_second_margin_linear(rs);
    v.margin_blp = blp_margin(rs);

    v.cp = v.margin_cp >= -band;
    v.p = v.margin_p() >= -band;
    v.blp = v.margin_blp >= -band;
    v.on_boundary = std::abs(v.margin_cp) <= band || std::abs(v.margin_p()) <= band ||
                    std::abs(v.margin_blp) <= band;

    // margin_p2 >= 2 Gamma - gamma_+ and the P conditions force gamma_+, Gamma >= -band,
    // so the chain holds for any band.
    if ((v.cp && !v.p) || (v.p && !v.blp)) {
        throw std::logic_error("verdict: implication chain CP => P => BLP violated");
    }
    return v;
}

std::vector<TimelineEntry> classify_timeline(const RateFunction& rates,
                                             const std::vector<double>& grid, double tol) {
    if (!std::is_sorted(grid.begin(), grid.end())) {
        throw std::invalid_argument("classify_timeline: grid must be sorted ascending");
    }
    std::vector<TimelineEntry> out;
    out.reserve(grid.size());
    for (const double t : grid) {
        const RateSample rs = rates(t);
        out.push_back({rs, verdict(rs, tol)});
    }
    return out;
}

std::string_view to_string(Region region) noexcept {
    switch (region) {
        case Region::CP: return "CP";
        case Region::P_only: return "P_only";
        case Region::BLP_only: return "BLP_only";
        case Region::none: return "none";
    }
    return "none";
}

Region classify_region(const DivisibilityVerdict& v) noexcept {
    if (v.cp) return Region::CP;
    if (v.p) return Region::P_only;
    if (v.blp) return Region::BLP_only;
    return Region::none;
}

}  // namespace pdiv
