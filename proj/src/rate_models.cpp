#include "pdiv/rate_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <utility>

namespace pdiv {

RateSample eternal_nm(double t) {
    RateSample rs;
    rs.t = t;
    rs.gamma_plus = 2.0;
    rs.gamma_minus = 0.0;
    rs.Gamma = 1.0 - std::tanh(t);
    rs.omega = 0.0;
    return rs;
}

RateSample lossy_cavity(const std::function<double(double)>& gamma_fn,
                        const std::function<double(double)>& shift_fn, double t) {
    const double g = gamma_fn(t);
    RateSample rs;
    rs.t = t;
    rs.gamma_plus = g;
    rs.gamma_minus = g;
    rs.Gamma = 0.5 * g;
    rs.omega = 0.5 * shift_fn(t);
    return rs;
}

RateModel make_eternal_nm() { return {"eternal-nm", [](double t) { return eternal_nm(t); }}; }

RateModel make_lossy_cavity(std::function<double(double)> gamma_fn,
                            std::function<double(double)> shift_fn) {
    return {"lossy-cavity", [g = std::move(gamma_fn), s = std::move(shift_fn)](double t) {
                return lossy_cavity(g, s, t);
            }};
}

RateModel make_constant(const RateSample& rs) {
    return {"constant", [rs](double t) {
                RateSample out = rs;
                out.t = t;
                return out;
            }};
}

RateTable::RateTable(std::vector<RateSample> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) throw std::invalid_argument("RateTable: no samples");
    for (std::size_t i = 1; i < samples_.size(); ++i) {
        if (!(samples_[i].t > samples_[i - 1].t)) {
            throw std::invalid_argument("RateTable: times must be strictly increasing");
        }
    }
}

RateSample RateTable::at(double t) const {
    if (!(t >= t_min() && t <= t_max())) {
        throw std::out_of_range("RateTable: t outside the tabulated range");
    }
    const auto upper = std::lower_bound(samples_.begin(), samples_.end(), t,
                                        [](const RateSample& s, double v) { return s.t < v; });
    if (upper->t == t) return *upper;
    const RateSample& a = *(upper - 1);
    const RateSample& b = *upper;
    if (a.divergent || b.divergent) {
        RateSample out;
        out.t = t;
        out.divergent = true;
        out.gamma_plus = out.gamma_minus = std::numeric_limits<double>::quiet_NaN();
        out.Gamma = std::lerp(a.Gamma, b.Gamma, (t - a.t) / (b.t - a.t));
        out.omega = std::lerp(a.omega, b.omega, (t - a.t) / (b.t - a.t));
        return out;
    }
    const double w = (t - a.t) / (b.t - a.t);
    RateSample out;
    out.t = t;
    out.gamma_plus = std::lerp(a.gamma_plus, b.gamma_plus, w);
    out.gamma_minus = std::lerp(a.gamma_minus, b.gamma_minus, w);
    out.Gamma = std::lerp(a.Gamma, b.Gamma, w);
    out.omega = std::lerp(a.omega, b.omega, w);
    return out;
}

RateSample tabulated(const RateTable& table, double t) { return table.at(t); }

RateModel make_tabulated(RateTable table) {
    auto shared = std::make_shared<const RateTable>(std::move(table));
    return {"tabulated", [shared](double t) { return shared->at(t); }};
}

}  // namespace pdiv
