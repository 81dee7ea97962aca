#include "pdiv/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <stdexcept>

namespace pdiv::csv {

std::string format_double(double v) {
    if (std::isnan(v)) return {};
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";  // no "-0" in the output
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::optional<double> parse_double(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw std::invalid_argument("csv: cannot parse number '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

std::vector<RateSample> read_rate_samples(std::istream& in) {
    std::string line;
    std::vector<std::string_view> header;
    std::string header_line;
    while (std::getline(in, line)) {
        const std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        header_line = std::string(t);
        header = split(header_line);
        break;
    }
    if (header.empty()) throw std::invalid_argument("csv: missing header");

    auto column = [&header](std::string_view name) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (trim(header[i]) == name) return i;
        }
        return std::nullopt;
    };
    const std::array<std::string_view, 5> required{"t", "gamma_plus", "gamma_minus", "Gamma", "omega"};
    std::array<std::size_t, 5> idx{};
    for (std::size_t k = 0; k < required.size(); ++k) {
        const auto c = column(required[k]);
        if (!c) throw std::invalid_argument("csv: missing column '" + std::string(required[k]) + "'");
        idx[k] = *c;
    }
    const auto divergent_col = column("divergent");

    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<RateSample> out;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view t = trim(line);
        if (t.empty()) continue;
        const auto fields = split(t);
        if (fields.size() < header.size()) {
            throw std::invalid_argument("csv: too few fields on data line " + std::to_string(line_no));
        }
        const auto time = parse_double(fields[idx[0]]);
        if (!time) throw std::invalid_argument("csv: empty t on data line " + std::to_string(line_no));
        RateSample rs;
        rs.t = *time;
        const auto gp = parse_double(fields[idx[1]]);
        const auto gm = parse_double(fields[idx[2]]);
        const auto g = parse_double(fields[idx[3]]);
        const auto w = parse_double(fields[idx[4]]);
        rs.gamma_plus = gp.value_or(nan);
        rs.gamma_minus = gm.value_or(nan);
        rs.Gamma = g.value_or(nan);
        rs.omega = w.value_or(nan);
        rs.divergent = !gp || !gm || !g || !w;
        if (divergent_col && trim(fields[*divergent_col]) == "1") rs.divergent = true;
        out.push_back(rs);
    }
    return out;
}

RateTable read_rate_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("csv: cannot open '" + path + "'");
    return RateTable(read_rate_samples(in));
}

}  // namespace pdiv::csv
