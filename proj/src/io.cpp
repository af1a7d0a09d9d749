#include "nlbif/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>

#include "nlbif/error.hpp"

namespace nlbif::io {

void OutputSpec::validate() const {
    if (precision < 6 || precision > 17) throw InvalidParameter("precision must lie in [6, 17]");
}

std::string format_number(double value, int precision) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto res =
        std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general,
                      precision);
    return std::string(buf.data(), res.ptr);
}

double round_to_precision(double value, int precision) {
    if (!std::isfinite(value)) return value;
    const std::string text = format_number(value, precision);
    double out = value;
    std::from_chars(text.data(), text.data() + text.size(), out);
    return out;
}

namespace {

json num(double v, int precision) {
    if (!std::isfinite(v)) return nullptr;
    return round_to_precision(v, precision);
}

}  // namespace

json family_json(double b, double p, double q, int precision) {
    return {{"b", num(b, precision)}, {"p", num(p, precision)}, {"q", num(q, precision)}};
}

json to_json(const ProblemParams& params, int precision) {
    json j = family_json(params.b, params.p, params.q, precision);
    j["lambda"] = num(params.lambda, precision);
    return j;
}

json to_json(const GroundState& gs, int precision) {
    return {{"p", num(gs.p, precision)},         {"L_p", num(gs.L_p, precision)},
            {"M_p", num(gs.M_p, precision)},     {"xi", num(gs.xi, precision)},
            {"norm_p", num(gs.norm_p, precision)}};
}

json to_json(const SolutionProfile& profile, int precision) {
    json grid = json::array();
    json values = json::array();
    for (double x : profile.grid) grid.push_back(num(x, precision));
    for (double u : profile.values) values.push_back(num(u, precision));
    json j = {{"grid", std::move(grid)},
              {"values", std::move(values)},
              {"t", num(profile.scale_t, precision)},
              {"amplitude", num(profile.amplitude, precision)},
              {"source", profile.source}};
    j["params"] = profile.params ? to_json(*profile.params, precision) : json(nullptr);
    return j;
}

json to_json(const BranchPoint& point, int precision) {
    return {{"lambda", num(point.lambda, precision)},
            {"branch", point.branch},
            {"t", num(point.t, precision)},
            {"alpha", num(point.alpha, precision)}};
}

json to_json(const ThresholdResult& res, int precision) {
    return {{"lambda0", num(res.lambda0, precision)},
            {"t_at_fold", num(res.t_at_fold, precision)},
            {"alpha0", num(res.alpha0, precision)}};
}

json to_json(const RemainderSample& s, int precision) {
    json j = {{"lambda", num(s.lambda, precision)}, {"branch", s.branch}, {"skipped", s.skipped}};
    if (!s.skipped) {
        j["t_numeric"] = num(s.t_numeric, precision);
        j["t_predicted"] = num(s.t_predicted, precision);
        j["remainder"] = num(s.measured, precision);
        j["predicted_remainder"] = num(s.predicted, precision);
        j["ratio"] = num(s.ratio, precision);
    }
    return j;
}

json to_json(const ResidualReport& r, int precision) {
    return {{"max_abs", num(r.max_abs, precision)},
            {"scale", num(r.scale, precision)},
            {"grid_n", r.grid_n},
            {"normalized", num(r.normalized, precision)}};
}

void write_ground_csv(std::ostream& os, const GroundState& gs, int precision) {
    os << "p,L_p,M_p,xi,norm_p\n"
       << format_number(gs.p, precision) << ',' << format_number(gs.L_p, precision) << ','
       << format_number(gs.M_p, precision) << ',' << format_number(gs.xi, precision) << ','
       << format_number(gs.norm_p, precision) << '\n';
}

void write_points_csv(std::ostream& os, std::span<const BranchPoint> points, int precision) {
    os << "lambda,branch,t,alpha\n";
    for (const auto& pt : points) {
        os << format_number(pt.lambda, precision) << ',' << pt.branch << ','
           << format_number(pt.t, precision) << ',' << format_number(pt.alpha, precision) << '\n';
    }
}

void write_profile_csv(std::ostream& os, const SolutionProfile& profile, int precision) {
    os << "x,u\n";
    for (std::size_t i = 0; i < profile.grid.size(); ++i) {
        os << format_number(profile.grid[i], precision) << ','
           << format_number(profile.values[i], precision) << '\n';
    }
}

void write_threshold_csv(std::ostream& os, const ThresholdResult& res, int precision) {
    os << "lambda0,t_at_fold,alpha0\n"
       << format_number(res.lambda0, precision) << ',' << format_number(res.t_at_fold, precision)
       << ',' << format_number(res.alpha0, precision) << '\n';
}

void write_remainders_csv(std::ostream& os, std::span<const RemainderSample> samples,
                          int precision) {
    os << "lambda,t_numeric,t_predicted,remainder,ratio\n";
    for (const auto& s : samples) {
        os << format_number(s.lambda, precision) << ',' << format_number(s.t_numeric, precision)
           << ',' << format_number(s.t_predicted, precision) << ','
           << format_number(s.measured, precision) << ',' << format_number(s.ratio, precision)
           << '\n';
    }
}

}  // namespace nlbif::io
