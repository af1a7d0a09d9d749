#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "json.hpp"

#include "nlbif/asymptotics.hpp"
#include "nlbif/branch.hpp"
#include "nlbif/groundstate.hpp"
#include "nlbif/oracle.hpp"
#include "nlbif/params.hpp"
#include "nlbif/profile.hpp"

namespace nlbif::io {

enum class Format { Csv, Json };

struct OutputSpec {
    Format format = Format::Csv;
    std::string path;    ///< empty: standard output
    int precision = 17;  ///< significant digits, 6..17

    void validate() const;
};

/// Locale-independent shortest-of-`precision` significant digits ("nan"/"inf" for non-finite).
std::string format_number(double value, int precision);

/// The double nearest to `value` printed with `precision` significant digits; used so that
/// JSON output honours the requested precision.
double round_to_precision(double value, int precision);

using nlohmann::json;

json to_json(const ProblemParams& params, int precision);
json family_json(double b, double p, double q, int precision);
json to_json(const GroundState& gs, int precision);
json to_json(const SolutionProfile& profile, int precision);
json to_json(const BranchPoint& point, int precision);
json to_json(const ThresholdResult& res, int precision);
json to_json(const RemainderSample& sample, int precision);
json to_json(const ResidualReport& report, int precision);

void write_ground_csv(std::ostream& os, const GroundState& gs, int precision);
void write_points_csv(std::ostream& os, std::span<const BranchPoint> points, int precision);
void write_profile_csv(std::ostream& os, const SolutionProfile& profile, int precision);
void write_threshold_csv(std::ostream& os, const ThresholdResult& res, int precision);
void write_remainders_csv(std::ostream& os, std::span<const RemainderSample> samples,
                          int precision);

}  // namespace nlbif::io
