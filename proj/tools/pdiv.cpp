// pdiv: divisibility timelines, region maps and verification sweeps for qubit maps.

#include "pdiv/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

using namespace pdiv;

jc::JCParams preset(const std::string& name) {
    if (name == "cold") return jc::JCParams::cold_mode();
    if (name == "hot") return jc::JCParams::hot_mode();
    return jc::JCParams::weak_coupling();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classify qubit dynamical maps as CP-divisible, P-divisible or BLP-compliant"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value file whose keys mirror the long flag names");

    std::string model = "eternal-nm";
    std::string preset_name = "cold";
    std::optional<double> omega_b, delta, g, beta_b, series_tol;
    double gamma = 1.0, s_shift = 0.0;
    std::string table, out_path;
    std::optional<double> t_max;
    std::size_t points = 2001;
    double tol = kDefaultTol, step = 1e-2;
    bool no_positivity = false;

    cli::RegionConfig region;
    cli::SweepConfig sweep;

    app.add_option("--model", model, "Rate model")
        ->check(CLI::IsMember({"eternal-nm", "lossy-cavity", "jc", "tabulated"}));
    app.add_option("--preset", preset_name, "JC parameter set the model flags start from")
        ->check(CLI::IsMember({"cold", "hot", "weak"}));
    app.add_option("--omega-b", omega_b, "JC mode frequency (units of omega_A)");
    app.add_option("--delta", delta, "JC detuning (units of omega_A)");
    app.add_option("--g", g, "JC coupling (units of omega_A)");
    app.add_option("--beta-b", beta_b, "JC inverse bath temperature (units of 1/omega_A)");
    app.add_option("--series-tol", series_tol, "JC thermal series truncation tolerance");
    app.add_option("--gamma", gamma, "lossy-cavity decay rate");
    app.add_option("--s-shift", s_shift, "lossy-cavity frequency shift");
    app.add_option("--table", table, "rate CSV for the tabulated model");
    app.add_option("--t-max", t_max, "end of the time grid (default 10, or the table end)");
    app.add_option("--points", points, "grid points");
    app.add_option("--tol", tol, "relative verdict tolerance");
    app.add_option("--step", step, "RK4 step for the accumulated rates");
    app.add_flag("--no-positivity", no_positivity, "skip the positivity check of the full map");
    app.add_option("--gamma-minus", region.gamma_minus, "gamma_- for the region map");
    app.add_option("--Gamma-min", region.Gamma_lo, "lower Gamma bound of the region map");
    app.add_option("--Gamma-max", region.Gamma_hi, "upper Gamma bound of the region map");
    app.add_option("--gamma-plus-min", region.gamma_plus_lo, "lower gamma_+ bound of the region map");
    app.add_option("--gamma-plus-max", region.gamma_plus_hi, "upper gamma_+ bound of the region map");
    app.add_option("--resolution", region.resolution, "region map cells per axis");
    app.add_option("--samples", sweep.samples, "rate triples in the equivalence sweep");
    app.add_option("--seed", sweep.seed, "sweep seed");
    app.add_option("--perturb", sweep.kossakowski_shift,
                   "shift added to the Kossakowski minimum (mutation self-test)");
    app.add_option("--trace-norm-samples", sweep.trace_norm_samples,
                   "rate triples for the sampled trace-norm check (0 disables)");
    app.add_option("--operators", sweep.operators_per_sample, "operators per rate triple");
    app.add_option("--out", out_path, "output path (default stdout)");

    auto* timeline_cmd = app.add_subcommand("timeline", "rates and verdicts on a time grid (CSV)");
    auto* region_cmd = app.add_subcommand("region", "(Gamma, gamma_+) region map (CSV)");
    auto* sweep_cmd = app.add_subcommand("sweep", "cross-check the P-divisibility criteria");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "pdiv: cannot open '" << out_path << "' for writing\n";
            return 2;
        }
    }
    std::ostream& out = out_path.empty() ? std::cout : file;

    try {
        if (timeline_cmd->parsed()) {
            cli::RunConfig cfg;
            cfg.model.name = model;
            cfg.model.jc = preset(preset_name);
            if (omega_b) cfg.model.jc.omega_B = *omega_b;
            if (delta) cfg.model.jc.Delta = *delta;
            if (g) cfg.model.jc.g = *g;
            if (beta_b) cfg.model.jc.beta_B = *beta_b;
            if (series_tol) cfg.model.jc.series_tol = *series_tol;
            cfg.model.gamma = gamma;
            cfg.model.s_shift = s_shift;
            cfg.model.table_path = table;
            cfg.t_max = t_max;
            cfg.n_points = points;
            cfg.tol = tol;
            cfg.integrator_step = step;
            cfg.check_positivity = !no_positivity;
            cli::run_timeline(cfg, out);
        } else if (region_cmd->parsed()) {
            region.tol = tol;
            cli::run_region_map(region, out);
        } else if (sweep_cmd->parsed()) {
            cli::run_equivalence_sweep(sweep, out);
        }
    } catch (const cli::UsageError& e) {
        std::cerr << "pdiv: " << e.what() << '\n';
        return 2;
    }
    out.flush();
    return out ? 0 : 1;
}
