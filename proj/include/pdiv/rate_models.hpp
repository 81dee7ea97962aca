// rate_models.hpp: named time -> RateSample sources.

#pragma once

#include "pdiv/dynamical_map.hpp"

#include <functional>
#include <string>
#include <vector>

namespace pdiv {

/// A named, deterministic rate source.
struct RateModel {
    std::string name;
    RateFunction rates;

    RateSample operator()(double t) const { return rates(t); }
};

/// Pauli dephasing with gamma_x = gamma_y = 1, gamma_z = -tanh(t):
/// gamma_+ = 2, gamma_- = 0, Gamma = 1 - tanh(t), omega = 0.
RateSample eternal_nm(double t);

/// Qubit in a lossy cavity: gamma_+ = gamma_- = gamma(t), Gamma = gamma(t)/2, omega = S(t)/2.
RateSample lossy_cavity(const std::function<double(double)>& gamma_fn,
                        const std::function<double(double)>& shift_fn, double t);

RateModel make_eternal_nm();
RateModel make_lossy_cavity(std::function<double(double)> gamma_fn,
                            std::function<double(double)> shift_fn);
RateModel make_constant(const RateSample& rs);

/// Piecewise-linear interpolation of externally supplied samples.
class RateTable {
public:
    /// Throws std::invalid_argument when empty or not strictly increasing in t.
    explicit RateTable(std::vector<RateSample> samples);

    /// Linear interpolation per component; throws std::out_of_range outside [t_min, t_max].
    /// A divergent knot makes the adjacent intervals divergent.
    RateSample at(double t) const;

    double t_min() const noexcept { return samples_.front().t; }
    double t_max() const noexcept { return samples_.back().t; }
    const std::vector<RateSample>& samples() const noexcept { return samples_; }

private:
    std::vector<RateSample> samples_;
};

/// Free-function form of RateTable::at.
RateSample tabulated(const RateTable& table, double t);

RateModel make_tabulated(RateTable table);

}  // namespace pdiv
