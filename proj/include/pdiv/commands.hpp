// commands.hpp: the work behind the `pdiv` subcommands, writing to any ostream.

#pragma once

#include "pdiv/divisibility.hpp"
#include "pdiv/jaynes_cummings.hpp"
#include "pdiv/rate_models.hpp"
#include "pdiv/verification.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdiv::cli {

/// Invalid model name or parameters; the CLI maps it to a nonzero exit status.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ModelConfig {
    std::string name{"eternal-nm"};  // eternal-nm | lossy-cavity | jc | tabulated
    jc::JCParams jc{jc::JCParams::cold_mode()};
    double gamma{1.0};    // lossy-cavity decay rate
    double s_shift{0.0};  // lossy-cavity frequency shift S
    std::string table_path;
};

/// Throws UsageError for unknown names, invalid JC parameters or unreadable tables.
RateModel build_model(const ModelConfig& cfg);

/// "1/omega_A" for jc, "dimensionless" otherwise.
std::string time_unit(const ModelConfig& cfg);

struct RunConfig {
    ModelConfig model;
    std::optional<double> t_max;  // default 10 for analytic models, table end for tabulated
    std::size_t n_points{2001};
    double tol{kDefaultTol};
    double integrator_step{1e-2};
    // Integrate the rates (at step and step/2) and report whether Phi(t) stays positive.
    bool check_positivity{true};
};

/// Uniform grid of n points on [t0, t1].
std::vector<double> uniform_grid(double t0, double t1, std::size_t n);

/// Writes the timeline CSV:
///   t,gamma_plus,gamma_minus,Gamma,omega,cp,p,blp,margin_cp,margin_p1,margin_p2,margin_blp,divergent
/// preceded by '#' comment lines (model, time unit, positivity of Phi(t) on the grid).
/// Throws UsageError for an invalid config.
void run_timeline(const RunConfig& cfg, std::ostream& out);

struct RegionConfig {
    double gamma_minus{0.0};
    double Gamma_lo{-0.5}, Gamma_hi{2.5};
    double gamma_plus_lo{-0.5}, gamma_plus_hi{2.5};
    std::size_t resolution{400};
    double tol{kDefaultTol};
};

struct RegionCell {
    double Gamma{0.0};
    double gamma_plus{0.0};
    Region region{Region::none};
    DivisibilityVerdict verdict;
};

/// Cells in row-major order: gamma_plus outer, Gamma inner. Throws UsageError when
/// resolution < 2 or a range is empty.
std::vector<RegionCell> region_map(const RegionConfig& cfg);

/// Writes `Gamma,gamma_plus,region` rows after a '#' comment with gamma_minus.
void run_region_map(const RegionConfig& cfg, std::ostream& out);

struct SweepConfig {
    std::size_t samples{100000};
    std::uint64_t seed{1};
    double kossakowski_shift{0.0};
    // When > 0, also runs the sampled trace-norm oracle on this many rate triples.
    std::size_t trace_norm_samples{0};
    std::size_t operators_per_sample{1000};
};

struct SweepOutcome {
    EquivalenceReport equivalence;
    std::optional<TraceNormReport> trace_norm;
    bool passed() const noexcept;
};

/// Runs the sweeps and writes a `key: value` report.
SweepOutcome run_equivalence_sweep(const SweepConfig& cfg, std::ostream& out);

}  // namespace pdiv::cli
