#include "pdiv/commands.hpp"

#include "pdiv/csv.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

namespace pdiv::cli {

RateModel build_model(const ModelConfig& cfg) {
    if (cfg.name == "eternal-nm") return make_eternal_nm();
    if (cfg.name == "lossy-cavity") {
        if (!std::isfinite(cfg.gamma) || !std::isfinite(cfg.s_shift)) {
            throw UsageError("lossy-cavity: --gamma and --s-shift must be finite");
        }
        const double g = cfg.gamma, s = cfg.s_shift;
        return make_lossy_cavity([g](double) { return g; }, [s](double) { return s; });
    }
    if (cfg.name == "jc") {
        try {
            return jc::make_jc_model(cfg.jc);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (cfg.name == "tabulated") {
        if (cfg.table_path.empty()) throw UsageError("tabulated: --table <path> is required");
        try {
            return make_tabulated(csv::read_rate_table(cfg.table_path));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    throw UsageError("unknown model '" + cfg.name + "'");
}

std::string time_unit(const ModelConfig& cfg) {
    return cfg.name == "jc" ? "1/omega_A" : "dimensionless";
}

std::vector<double> uniform_grid(double t0, double t1, std::size_t n) {
    if (n < 2 || !(t1 > t0)) throw UsageError("grid: need at least 2 points on a non-empty range");
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    grid.back() = t1;
    return grid;
}

namespace {

void validate(const RunConfig& cfg) {
    if (cfg.n_points < 2) throw UsageError("--points must be at least 2");
    if (cfg.t_max && !(*cfg.t_max > 0.0 && std::isfinite(*cfg.t_max))) {
        throw UsageError("--t-max must be positive");
    }
    if (!(cfg.tol >= 0.0)) throw UsageError("--tol must be non-negative");
    if (!(cfg.integrator_step > 0.0)) throw UsageError("--step must be positive");
}

// Summary of global_positivity along the grid, integrated at step and step/2.
std::string positivity_summary(const RateModel& model, const std::vector<double>& grid,
                               double step) {
    constexpr double kAgreement = 1e-6;
    try {
        const auto coarse = integrate_rates_on_grid(model.rates, grid, step);
        const auto fine = integrate_rates_on_grid(model.rates, grid, 0.5 * step);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const IntegratedRates& a = coarse[i];
            const IntegratedRates& b = fine[i];
            if (a.divergent || b.divergent) {
                return "undetermined (non-finite rates at t=" +
                       csv::format_double(b.divergent ? b.divergence_time : a.divergence_time) + ")";
            }
            const double err = std::max({std::abs(a.gtilde_plus - b.gtilde_plus),
                                         std::abs(a.Gtilde - b.Gtilde), std::abs(a.s - b.s)});
            if (!(err <= kAgreement)) {
                return "undetermined (step halving changes the integrals by " +
                       csv::format_double(err) + " at t=" + csv::format_double(grid[i]) + ")";
            }
            if (!global_positivity(b, kAgreement)) {
                return "no (first failure at t=" + csv::format_double(grid[i]) + ")";
            }
        }
    } catch (const std::exception& e) {
        return std::string("undetermined (") + e.what() + ")";
    }
    return "yes";
}

}  // namespace

void run_timeline(const RunConfig& cfg, std::ostream& out) {
    validate(cfg);
    const RateModel model = build_model(cfg.model);

    double t0 = 0.0;
    double t1 = cfg.t_max.value_or(10.0);
    std::vector<double> grid;
    std::string positivity = "not checked";
    if (cfg.model.name == "tabulated") {
        const RateTable table = csv::read_rate_table(cfg.model.table_path);
        t0 = table.t_min();
        t1 = cfg.t_max ? std::min(*cfg.t_max, table.t_max()) : table.t_max();
        if (!(t1 > t0)) throw UsageError("tabulated: table covers no time range below --t-max");
        grid = uniform_grid(t0, t1, cfg.n_points);
        if (cfg.check_positivity) {
            positivity = t0 > 0.0 ? "undetermined (table does not start at t=0)"
                                  : positivity_summary(model, grid, cfg.integrator_step);
        }
    } else {
        grid = uniform_grid(t0, t1, cfg.n_points);
        if (cfg.check_positivity) positivity = positivity_summary(model, grid, cfg.integrator_step);
    }

    const std::vector<TimelineEntry> rows = classify_timeline(model.rates, grid, cfg.tol);

    std::ostringstream buf;
    buf << "# model: " << model.name << '\n';
    buf << "# time unit: " << time_unit(cfg.model) << '\n';
    buf << "# phi positive on grid: " << positivity << '\n';
    buf << "t,gamma_plus,gamma_minus,Gamma,omega,cp,p,blp,margin_cp,margin_p1,margin_p2,"
           "margin_blp,divergent\n";
    for (const TimelineEntry& row : rows) {
        const RateSample& r = row.rates;
        const DivisibilityVerdict& v = row.verdict;
        buf << csv::format_double(r.t) << ',' << csv::format_double(r.gamma_plus) << ','
            << csv::format_double(r.gamma_minus) << ',' << csv::format_double(r.Gamma) << ','
            << csv::format_double(r.omega) << ',' << int{v.cp} << ',' << int{v.p} << ','
            << int{v.blp} << ',';
        if (v.divergent) {
            buf << ",,,,1\n";
        } else {
            buf << csv::format_double(v.margin_cp) << ',' << csv::format_double(v.margin_p1) << ','
                << csv::format_double(v.margin_p2) << ',' << csv::format_double(v.margin_blp)
                << ",0\n";
        }
    }
    out << buf.str();
}

std::vector<RegionCell> region_map(const RegionConfig& cfg) {
    if (cfg.resolution < 2) throw UsageError("--resolution must be at least 2");
    if (!(cfg.Gamma_hi > cfg.Gamma_lo) || !(cfg.gamma_plus_hi > cfg.gamma_plus_lo)) {
        throw UsageError("region: empty Gamma or gamma_plus range");
    }
    if (!std::isfinite(cfg.gamma_minus)) throw UsageError("--gamma-minus must be finite");
    const std::vector<double> gammas = uniform_grid(cfg.Gamma_lo, cfg.Gamma_hi, cfg.resolution);
    const std::vector<double> plus = uniform_grid(cfg.gamma_plus_lo, cfg.gamma_plus_hi, cfg.resolution);
    std::vector<RegionCell> cells;
    cells.reserve(gammas.size() * plus.size());
    for (const double gp : plus) {
        for (const double g : gammas) {
            RateSample rs;
            rs.gamma_plus = gp;
            rs.gamma_minus = cfg.gamma_minus;
            rs.Gamma = g;
            RegionCell cell;
            cell.Gamma = g;
            cell.gamma_plus = gp;
            cell.verdict = verdict(rs, cfg.tol);
            cell.region = classify_region(cell.verdict);
            cells.push_back(cell);
        }
    }
    return cells;
}

void run_region_map(const RegionConfig& cfg, std::ostream& out) {
    const std::vector<RegionCell> cells = region_map(cfg);
    std::ostringstream buf;
    buf << "# gamma_minus: " << csv::format_double(cfg.gamma_minus) << '\n';
    buf << "Gamma,gamma_plus,region\n";
    for (const RegionCell& c : cells) {
        buf << csv::format_double(c.Gamma) << ',' << csv::format_double(c.gamma_plus) << ','
            << to_string(c.region) << '\n';
    }
    out << buf.str();
}

bool SweepOutcome::passed() const noexcept {
    const bool eq = equivalence.disagreements == 0 && equivalence.chain_violations == 0;
    const bool tn = !trace_norm || (trace_norm->disagreements == 0 && trace_norm->chain_violations == 0);
    return eq && tn;
}

SweepOutcome run_equivalence_sweep(const SweepConfig& cfg, std::ostream& out) {
    if (cfg.samples < 1) throw UsageError("--samples must be at least 1");
    EquivalenceOptions opts;
    opts.kossakowski_shift = cfg.kossakowski_shift;
    SweepOutcome outcome;
    outcome.equivalence = pdiv::run_equivalence_sweep(cfg.samples, cfg.seed, opts);
    if (cfg.trace_norm_samples > 0) {
        if (cfg.operators_per_sample < 1) throw UsageError("--operators must be at least 1");
        outcome.trace_norm = pdiv::run_trace_norm_sweep(cfg.trace_norm_samples,
                                                        cfg.operators_per_sample, cfg.seed);
    }
    const EquivalenceReport& e = outcome.equivalence;
    out << "samples: " << e.samples << '\n'
        << "seed: " << cfg.seed << '\n'
        << "range: [" << -kSweepRange << ", " << kSweepRange << "]^3\n"
        << "boundary_band: " << csv::format_double(opts.band) << '\n'
        << "kossakowski_shift: " << csv::format_double(cfg.kossakowski_shift) << '\n'
        << "boundary_samples: " << e.boundary << '\n'
        << "compared: " << e.compared << '\n'
        << "disagreements: " << e.disagreements << '\n'
        << "chain_violations: " << e.chain_violations << '\n'
        << "worst_discrepancy: " << csv::format_double(e.worst_discrepancy) << '\n';
    if (outcome.trace_norm) {
        const TraceNormReport& t = *outcome.trace_norm;
        out << "trace_norm_rate_samples: " << t.rate_samples << '\n'
            << "trace_norm_operators_per_sample: " << t.operators_per_sample << '\n'
            << "trace_norm_boundary_samples: " << t.boundary << '\n'
            << "trace_norm_compared: " << t.compared << '\n'
            << "trace_norm_disagreements: " << t.disagreements << '\n'
            << "trace_norm_chain_violations: " << t.chain_violations << '\n';
    }
    out << "result: " << (outcome.passed() ? "PASS" : "FAIL") << '\n';
    return outcome;
}

}  // namespace pdiv::cli
