// csv.hpp: number formatting and timeline-CSV ingestion.

#pragma once

#include "pdiv/rate_models.hpp"

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace pdiv::csv {

/// Shortest decimal that round-trips to the same double; "inf"/"-inf" for
/// infinities and an empty string for NaN.
std::string format_double(double v);

/// Splits one CSV line on commas (no quoting; the schemas here never need it).
std::vector<std::string_view> split(std::string_view line);

/// Reads rate samples from the timeline schema. Lines starting with '#' before the
/// header are skipped; required columns are t, gamma_plus, gamma_minus, Gamma, omega
/// (extra columns are ignored). Empty rate fields or divergent=1 mark a divergent
/// sample. Throws std::invalid_argument naming the missing column or offending line.
std::vector<RateSample> read_rate_samples(std::istream& in);

RateTable read_rate_table(const std::string& path);

}  // namespace pdiv::csv
