#include "pdiv/verification.hpp"

#include "pdiv/bloch.hpp"
#include "pdiv/divisibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace pdiv {

namespace {

bool chain_holds(const RateSample& rs) {
    try {
        for (const double tol : {0.0, kDefaultTol}) {
            const DivisibilityVerdict v = verdict(rs, tol);
            if ((v.cp && !v.p) || (v.p && !v.blp)) return false;
        }
    } catch (const std::logic_error&) {
        return false;
    }
    return true;
}

// splitmix64 finalizer, used to derive independent per-sample seeds.
std::uint64_t mix(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

HermitianOp2 pure_state(double z, double phi) noexcept {
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {1.0, rho * std::cos(phi), rho * std::sin(phi), z};
}

}  // namespace

std::vector<RateSample> draw_rate_samples(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-kSweepRange, kSweepRange);
    std::vector<RateSample> out(n);
    for (auto& rs : out) {
        rs.gamma_plus = u(rng);
        rs.gamma_minus = u(rng);
        rs.Gamma = u(rng);
    }
    return out;
}

EquivalenceReport evaluate_equivalence(std::span<const RateSample> samples,
                                       const EquivalenceOptions& opts) {
    EquivalenceReport rep;
    rep.samples = samples.size();
    for (const RateSample& rs : samples) {
        if (!chain_holds(rs)) ++rep.chain_violations;

        const double radius_max = radius_rate_max(rs);
        const double koss = kossakowski_min(rs);
        rep.worst_discrepancy = std::max(rep.worst_discrepancy, std::abs(koss + radius_max));

        const double linear = rs.gamma_plus - std::abs(rs.gamma_minus);
        const double values[] = {
            p_margin_rates(rs),
            std::min(linear, p_second_margin_linear(rs)),
            koss + opts.kossakowski_shift,
            -radius_max,
        };
        const bool boundary = std::any_of(std::begin(values), std::end(values),
                                          [&](double v) { return std::abs(v) < opts.band; });
        if (boundary) {
            ++rep.boundary;
            continue;
        }
        ++rep.compared;
        const bool positive = values[0] > 0.0;
        const bool agree = std::all_of(std::begin(values), std::end(values),
                                       [&](double v) { return (v > 0.0) == positive; });
        if (!agree) ++rep.disagreements;
    }
    return rep;
}

EquivalenceReport run_equivalence_sweep(std::size_t n, std::uint64_t seed,
                                        const EquivalenceOptions& opts) {
    const std::vector<RateSample> samples = draw_rate_samples(n, seed);
    return evaluate_equivalence(samples, opts);
}

double sampled_trace_norm_worst(const RateSample& rs, std::size_t n_ops, std::uint64_t seed) {
    if (n_ops == 0) throw std::invalid_argument("sampled_trace_norm_worst: need n_ops >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> z_dist(-1.0, 1.0);
    constexpr double two_pi = 2.0 * std::numbers::pi;

    double worst = std::numeric_limits<double>::infinity();
    std::vector<double> pure_z;
    pure_z.reserve(n_ops);
    for (std::size_t i = 0; i < n_ops; ++i) {
        const double z = z_dist(rng);  // uniform z gives uniform points on the sphere
        const double phi = two_pi * unit(rng);
        HermitianOp2 q = pure_state(z, phi);
        switch (i % 5) {
            case 0:
            case 1:
            case 2:
                pure_z.push_back(z);
                break;
            case 3: {  // traceless, any radius
                const double scale = 0.05 + 2.0 * unit(rng);
                q = {0.0, scale * q.x, scale * q.y, scale * q.z};
                break;
            }
            default: {  // trace one, outside the Bloch ball
                const double scale = 1.0 + 2.0 * unit(rng);
                q = {1.0, scale * q.x, scale * q.y, scale * q.z};
                break;
            }
        }
        worst = std::min(worst, trace_norm_derivative_margin(rs, q));
    }
    if (pure_z.empty()) return worst;

    // Refine the best pure-state sample between its sampled neighbours.
    std::sort(pure_z.begin(), pure_z.end());
    auto margin_at = [&rs](double z) { return trace_norm_derivative_margin(rs, pure_state(z, 0.0)); };
    std::size_t best = 0;
    for (std::size_t i = 1; i < pure_z.size(); ++i) {
        if (margin_at(pure_z[i]) < margin_at(pure_z[best])) best = i;
    }
    double a = best == 0 ? -1.0 : pure_z[best - 1];
    double b = best + 1 == pure_z.size() ? 1.0 : pure_z[best + 1];
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = margin_at(c), fd = margin_at(d);
    for (int it = 0; it < 80; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = margin_at(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = margin_at(d);
        }
    }
    worst = std::min({worst, fc, fd, margin_at(a), margin_at(b)});
    return worst;
}

TraceNormReport run_trace_norm_sweep(std::size_t n_rates, std::size_t n_ops, std::uint64_t seed,
                                     double band) {
    TraceNormReport rep;
    rep.rate_samples = n_rates;
    rep.operators_per_sample = n_ops;
    const std::vector<RateSample> samples = draw_rate_samples(n_rates, seed);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const RateSample& rs = samples[i];
        if (!chain_holds(rs)) ++rep.chain_violations;
        const double p = p_margin_rates(rs);
        if (std::abs(p) < band) {
            ++rep.boundary;
            continue;
        }
        ++rep.compared;
        const double worst = sampled_trace_norm_worst(rs, n_ops, mix(seed ^ mix(i)));
        const bool ok = p > 0.0 ? worst >= -1e-9 : worst < 0.0;
        if (!ok) ++rep.disagreements;
    }
    return rep;
}

}  // namespace pdiv
