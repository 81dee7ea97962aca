#include "pdiv/jaynes_cummings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pdiv::jc {

void JCParams::validate() const {
    for (const double v : {omega_A, omega_B, Delta, g, beta_B, series_tol}) {
        if (!std::isfinite(v)) throw std::invalid_argument("JCParams: non-finite parameter");
    }
    if (!(x() > 0.0)) {
        throw std::invalid_argument("JCParams: beta_B * omega_B must be positive");
    }
    if (!(series_tol > 0.0 && series_tol < 1.0)) {
        throw std::invalid_argument("JCParams: series_tol must lie in (0, 1)");
    }
}

JCParams JCParams::cold_mode() noexcept { return {1.0, 0.6, 0.4, 0.3, 2.0, 1e-12}; }
JCParams JCParams::hot_mode() noexcept { return {1.0, 0.6, 0.4, 0.03, 0.3, 1e-12}; }
JCParams JCParams::weak_coupling() noexcept { return {1.0, 0.6, 1e-4, 1e-3, 0.3, 1e-12}; }

double omega_n(std::size_t n, const JCParams& p) noexcept {
    return std::sqrt(p.Delta * p.Delta + 4.0 * p.g * p.g * static_cast<double>(n));
}

double thermal_weight(std::size_t n, const JCParams& p) {
    const double x = p.x();
    if (!(x > 0.0)) throw std::invalid_argument("thermal_weight: beta_B * omega_B must be positive");
    return std::exp(-static_cast<double>(n) * x) * -std::expm1(-x);
}

std::size_t truncation_index(const JCParams& p) {
    p.validate();
    const double x = p.x();
    const double norm = -std::expm1(-x);
    // Smallest N with e^{-N x} / norm < tol.
    const double estimate = std::log(1.0 / (p.series_tol * norm)) / x;
    constexpr double kMaxTerms = 1e7;
    if (estimate > kMaxTerms) throw std::invalid_argument("truncation_index: series too long");
    auto n = static_cast<std::size_t>(std::max(0.0, std::floor(estimate)));
    while (n > 1 && std::exp(-static_cast<double>(n - 1) * x) / norm < p.series_tol) --n;
    while (!(std::exp(-static_cast<double>(n) * x) / norm < p.series_tol)) ++n;
    return std::max<std::size_t>(n, 1);
}

namespace {

// sin(h)/h, accurate through h = 0.
double sinc(double h) noexcept {
    if (std::abs(h) < 1e-4) {
        const double h2 = h * h;
        return 1.0 - h2 / 6.0 + h2 * h2 / 120.0;
    }
    return std::sin(h) / h;
}

// Per-index quantities of A_k(t) = c_k - i Delta sigma_k, with sigma_k = sin(Omega_k t/2)/Omega_k.
struct Mode {
    double c{1.0};         // cos(Omega_k t/2)
    double c_minus1{0.0};  // c - 1, computed without cancellation
    double sigma{0.0};
    double omega2{0.0};    // Omega_k^2
    double defect{0.0};    // 1 - |A_k|^2 = 4 g^2 k sigma^2
    double defect_rate{0.0};  // d|A_k|^2/dt = -4 g^2 k c sigma
};

Mode make_mode(std::size_t k, double t, const JCParams& p) noexcept {
    Mode m;
    const double coupling = 4.0 * p.g * p.g * static_cast<double>(k);
    m.omega2 = p.Delta * p.Delta + coupling;
    const double h = 0.5 * std::sqrt(m.omega2) * t;
    m.c = std::cos(h);
    const double half = std::sin(0.5 * h);
    m.c_minus1 = -2.0 * half * half;
    m.sigma = 0.5 * t * sinc(h);
    m.defect = coupling * m.sigma * m.sigma;
    m.defect_rate = -coupling * m.c * m.sigma;
    return m;
}

}  // namespace

JCCoefficients coefficients(double t, const JCParams& p) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("coefficients: t must be finite and non-negative");
    }
    const std::size_t n_terms = truncation_index(p);
    const double x = p.x();
    // Renormalized weights: sum over n < N of w_n is 1 in exact arithmetic.
    const double w0 = -std::expm1(-x) / -std::expm1(-static_cast<double>(n_terms) * x);
    const double d = p.Delta;

    JCCoefficients out;
    out.t = t;
    out.terms = n_terms;

    double alpha_defect = 0.0, beta_defect = 0.0, alpha_dot = 0.0, beta_dot = 0.0;
    double env_re_m1 = 0.0, env_im = 0.0, env_dot_re = 0.0, env_dot_im = 0.0;

    Mode lo = make_mode(0, t, p);
    for (std::size_t n = 0; n < n_terms; ++n) {
        const Mode hi = make_mode(n + 1, t, p);
        const double w = w0 * std::exp(-static_cast<double>(n) * x);

        alpha_defect += w * lo.defect;
        beta_defect += w * hi.defect;
        alpha_dot += w * lo.defect_rate;
        beta_dot += w * hi.defect_rate;

        // A_lo A_hi - 1, split so that nothing of order one cancels.
        const double prod_re_m1 = lo.c_minus1 + hi.c_minus1 + lo.c_minus1 * hi.c_minus1 -
                                  d * d * lo.sigma * hi.sigma;
        const double prod_im = -d * (lo.sigma * hi.c + lo.c * hi.sigma);
        env_re_m1 += w * prod_re_m1;
        env_im += w * prod_im;

        // dA_k/dt = -(Omega_k^2/2) sigma_k - i (Delta/2) c_k
        const double lo_dot_re = -0.5 * lo.omega2 * lo.sigma, lo_dot_im = -0.5 * d * lo.c;
        const double hi_dot_re = -0.5 * hi.omega2 * hi.sigma, hi_dot_im = -0.5 * d * hi.c;
        const double lo_re = lo.c, lo_im = -d * lo.sigma;
        const double hi_re = hi.c, hi_im = -d * hi.sigma;
        env_dot_re += w * (lo_dot_re * hi_re - lo_dot_im * hi_im + lo_re * hi_dot_re -
                           lo_im * hi_dot_im);
        env_dot_im += w * (lo_dot_re * hi_im + lo_dot_im * hi_re + lo_re * hi_dot_im +
                           lo_im * hi_dot_re);
        lo = hi;
    }

    out.alpha_defect = alpha_defect;
    out.beta_defect = beta_defect;
    out.alpha = 1.0 - alpha_defect;
    out.beta = 1.0 - beta_defect;
    out.alpha_dot = alpha_dot;
    out.beta_dot = beta_dot;
    out.envelope = {1.0 + env_re_m1, env_im};
    out.envelope_dot = {env_dot_re, env_dot_im};

    const std::complex<double> phase = std::polar(1.0, -p.omega_B * t);
    out.gamma_c = phase * out.envelope;
    out.gamma_c_dot = phase * (out.envelope_dot - std::complex<double>{0.0, p.omega_B} * out.envelope);
    return out;
}

JCRates jc_rate_detail(double t, const JCParams& p) {
    const JCCoefficients k = coefficients(t, p);
    JCRates r;
    r.denominator = k.denominator();

    // gamma'/gamma = -i omega_B + F'/F with F the envelope; the real part is taken from
    // Re(F' conj F) so that no rotation by omega_B t mixes in rounding error.
    const double f_re = k.envelope.real(), f_im = k.envelope.imag();
    const double fd_re = k.envelope_dot.real(), fd_im = k.envelope_dot.imag();
    const double f_norm2 = f_re * f_re + f_im * f_im;
    const double ratio_re = (fd_re * f_re + fd_im * f_im) / f_norm2;
    const double ratio_im = (fd_im * f_re - fd_re * f_im) / f_norm2 - p.omega_B;

    RateSample& rs = r.sample;
    rs.t = t;
    rs.Gamma = -ratio_re;
    rs.omega = -ratio_im;

    const double scale = k.alpha + k.beta;
    if (!(std::abs(r.denominator) >= kDivergenceThreshold * std::abs(scale)) ||
        !(f_norm2 > 0.0)) {
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        rs.divergent = true;
        rs.gamma_plus = rs.gamma_minus = nan;
        r.gamma_1 = r.gamma_2 = r.gamma_3 = nan;
        if (!(f_norm2 > 0.0)) rs.Gamma = rs.omega = nan;
        return r;
    }

    // gamma_+ = -(alpha' + beta')/S; gamma_- = [beta'(1 - 2(1-alpha)) - alpha'(1 - 2(1-beta))]/S.
    rs.gamma_plus = -(k.alpha_dot + k.beta_dot) / r.denominator;
    rs.gamma_minus = (k.beta_dot * (1.0 - 2.0 * k.alpha_defect) -
                      k.alpha_dot * (1.0 - 2.0 * k.beta_defect)) /
                     r.denominator;
    r.gamma_1 = 0.5 * (rs.gamma_plus + rs.gamma_minus);
    r.gamma_2 = 0.5 * (rs.gamma_plus - rs.gamma_minus);
    r.gamma_3 = rs.Gamma - 0.5 * rs.gamma_plus;
    return r;
}

RateSample jc_rates(double t, const JCParams& p) { return jc_rate_detail(t, p).sample; }

RateModel make_jc_model(const JCParams& p) {
    p.validate();
    return {"jc", [p](double t) { return jc_rates(t, p); }};
}

std::vector<double> log_window(double t_lo, double t_hi, std::size_t n) {
    if (!(t_lo > 0.0 && t_hi > t_lo) || n < 2) {
        throw std::invalid_argument("log_window: need 0 < t_lo < t_hi and n >= 2");
    }
    std::vector<double> out(n);
    const double a = std::log(t_lo), b = std::log(t_hi);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    out.front() = t_lo;
    out.back() = t_hi;
    return out;
}

ShortTimeFit short_time_order(const JCParams& p, const std::vector<double>& t_window) {
    ShortTimeFit fit;
    if (t_window.size() < 2) return fit;
    std::vector<double> lx, ly;
    lx.reserve(t_window.size());
    ly.reserve(t_window.size());
    constexpr double kResolution = 1e3 * std::numeric_limits<double>::epsilon();
    for (const double t : t_window) {
        if (!(t > 0.0)) return fit;
        const RateSample rs = jc_rates(t, p);
        if (!rs.finite()) return fit;
        const double diff = std::abs(rs.Gamma - 0.5 * rs.gamma_plus);
        const double scale = std::max(std::abs(rs.Gamma), 0.5 * std::abs(rs.gamma_plus));
        if (!(diff > kResolution * scale)) return fit;
        lx.push_back(std::log(t));
        ly.push_back(std::log(diff));
    }
    const double n = static_cast<double>(lx.size());
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (!(sxx > 0.0)) return fit;
    fit.exponent = sxy / sxx;
    fit.intercept = my - fit.exponent * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        const double e = ly[i] - (fit.intercept + fit.exponent * lx[i]);
        ss += e * e;
    }
    fit.residual = std::sqrt(ss / n);
    fit.points = lx.size();
    fit.resolved = true;
    return fit;
}

std::vector<double> locate_divergences(const JCParams& p, double t_begin, double t_end,
                                       std::size_t scan_points) {
    if (!(t_begin >= 0.0 && t_end > t_begin) || scan_points < 2) {
        throw std::invalid_argument("locate_divergences: need 0 <= t_begin < t_end, scan_points >= 2");
    }
    auto denom = [&p](double t) { return coefficients(t, p).denominator(); };
    std::vector<double> roots;
    double t_prev = t_begin;
    double f_prev = denom(t_prev);
    for (std::size_t i = 1; i < scan_points; ++i) {
        const double t = (i + 1 == scan_points)
                             ? t_end
                             : t_begin + (t_end - t_begin) * static_cast<double>(i) /
                                             static_cast<double>(scan_points - 1);
        const double f = denom(t);
        if (f == 0.0) {
            roots.push_back(t);
        } else if ((f_prev < 0.0) != (f < 0.0) && f_prev != 0.0) {
            double lo = t_prev, hi = t, f_lo = f_prev;
            for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                const double fm = denom(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((fm < 0.0) == (f_lo < 0.0)) {
                    lo = mid;
                    f_lo = fm;
                } else {
                    hi = mid;
                }
            }
            // Report whichever bracket end has the smaller |alpha + beta - 1|.
            roots.push_back(std::abs(denom(lo)) <= std::abs(denom(hi)) ? lo : hi);
        }
        t_prev = t;
        f_prev = f;
    }
    return roots;
}

}  // namespace pdiv::jc
