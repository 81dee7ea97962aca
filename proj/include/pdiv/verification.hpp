// verification.hpp: Monte Carlo cross-checks between the equivalent P-divisibility
// criteria, and a sampled trace-norm oracle.

#pragma once

#include "pdiv/dynamical_map.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pdiv {

/// Half-width of the uniform cube the sweeps draw (gamma_+, gamma_-, Gamma) from.
inline constexpr double kSweepRange = 3.0;

struct EquivalenceOptions {
    double band{1e-9};  // samples with any criterion value inside (-band, band) are skipped
    // Added to the Kossakowski minimum before comparing; nonzero only for mutation self-tests.
    double kossakowski_shift{0.0};
};

struct EquivalenceReport {
    std::size_t samples{0};
    std::size_t boundary{0};
    std::size_t compared{0};
    std::size_t disagreements{0};
    std::size_t chain_violations{0};
    // max |kossakowski_min + radius_rate_max|: the two are equal up to sign exactly,
    // since P(d^2) = -R(1 - 2 d^2).
    double worst_discrepancy{0.0};
};

/// Draws `n` uniform rate triples from [-kSweepRange, kSweepRange]^3 with a seeded mt19937_64.
std::vector<RateSample> draw_rate_samples(std::size_t n, std::uint64_t seed);

/// Compares the signs of: the relaxation-rate margin (quadratic and linear-unit forms),
/// the Kossakowski minimum and minus the radius-rate maximum; also checks CP => P => BLP.
EquivalenceReport evaluate_equivalence(std::span<const RateSample> samples,
                                       const EquivalenceOptions& opts = {});

EquivalenceReport run_equivalence_sweep(std::size_t n, std::uint64_t seed,
                                        const EquivalenceOptions& opts = {});

struct TraceNormReport {
    std::size_t rate_samples{0};
    std::size_t boundary{0};
    std::size_t compared{0};
    std::size_t disagreements{0};
    std::size_t chain_violations{0};
    std::size_t operators_per_sample{0};
};

/// Worst (smallest) trace_norm_derivative_margin over `n_ops` random operators with
/// r^2 >= trace^2: pure states, traceless operators and trace-one operators outside the
/// Bloch ball. The best pure-state sample is then refined by golden-section search in z
/// between its sampled neighbours. Deterministic for fixed `seed`.
double sampled_trace_norm_worst(const RateSample& rs, std::size_t n_ops, std::uint64_t seed);

/// For each rate triple, compares the sign of sampled_trace_norm_worst with the
/// relaxation-rate verdict; triples with |p_margin_rates| < band are skipped.
TraceNormReport run_trace_norm_sweep(std::size_t n_rates, std::size_t n_ops, std::uint64_t seed,
                                     double band = 1e-6);

}  // namespace pdiv
