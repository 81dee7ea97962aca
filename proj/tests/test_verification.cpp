#include "pdiv/divisibility.hpp"
#include "pdiv/verification.hpp"

#include <doctest.h>

#include <cmath>

using namespace pdiv;

TEST_CASE("sweep samples are deterministic and in range") {
    const auto a = draw_rate_samples(1000, 42);
    const auto b = draw_rate_samples(1000, 42);
    const auto c = draw_rate_samples(1000, 43);
    bool differ = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].gamma_plus == b[i].gamma_plus);
        CHECK(std::abs(a[i].Gamma) <= kSweepRange);
        differ |= a[i].gamma_minus != c[i].gamma_minus;
    }
    CHECK(differ);
}

TEST_CASE("equivalence sweep") {
    const EquivalenceReport rep = run_equivalence_sweep(20000, 1);
    CHECK(rep.samples == 20000);
    CHECK(rep.compared + rep.boundary == rep.samples);
    CHECK(rep.disagreements == 0);
    CHECK(rep.chain_violations == 0);
    CHECK(rep.worst_discrepancy < 1e-13);
}

TEST_CASE("all-zero rates fall in the boundary band") {
    const RateSample zero;
    const EquivalenceReport rep = evaluate_equivalence(std::span<const RateSample>(&zero, 1));
    CHECK(rep.boundary == 1);
    CHECK(rep.compared == 0);
    CHECK(rep.disagreements == 0);
}

TEST_CASE("a perturbed criterion is caught") {
    EquivalenceOptions opts;
    opts.kossakowski_shift = 1e-3;
    CHECK(run_equivalence_sweep(100000, 1, opts).disagreements > 0);
}

TEST_CASE("sampled trace-norm oracle") {
    RateSample good;
    good.gamma_plus = 2.0;
    good.gamma_minus = 0.5;
    good.Gamma = 0.6;
    CHECK(p_margin_rates(good) > 0);
    CHECK(sampled_trace_norm_worst(good, 500, 1) >= 0.0);

    // Violation confined to a narrow band of z found by the refinement step.
    RateSample bad;
    bad.gamma_plus = 2.0;
    bad.gamma_minus = 1.9;
    bad.Gamma = 0.1;
    CHECK(sampled_trace_norm_worst(bad, 500, 1) < 0.0);
    CHECK(sampled_trace_norm_worst(bad, 500, 1) == sampled_trace_norm_worst(bad, 500, 1));
    CHECK_THROWS_AS(sampled_trace_norm_worst(bad, 0, 1), std::invalid_argument);

    const TraceNormReport rep = run_trace_norm_sweep(200, 300, 3);
    CHECK(rep.disagreements == 0);
    CHECK(rep.chain_violations == 0);
    CHECK(rep.compared + rep.boundary == rep.rate_samples);
}
