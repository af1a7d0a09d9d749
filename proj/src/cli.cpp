#include "nlbif/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "nlbif/asymptotics.hpp"
#include "nlbif/branch.hpp"
#include "nlbif/error.hpp"
#include "nlbif/groundstate.hpp"
#include "nlbif/io.hpp"
#include "nlbif/oracle.hpp"
#include "nlbif/profile.hpp"

namespace nlbif::cli {

namespace {

using io::json;

struct Options {
    double p = 0.0;
    double q = 1.0;
    double b = 0.0;
    std::optional<double> lambda;
    double lambda_min = 1e2;
    double lambda_max = 1e6;
    std::size_t num = 5;
    std::size_t grid_n = 1001;
    double tol = 1e-6;
    std::optional<std::string> format;
    std::string out;
    int precision = 17;
    std::string spacing = "log";
    std::optional<std::string> branch;
};

struct Emitter {
    io::OutputSpec spec;
    std::ostream& fallback;

    void emit(const std::function<void(std::ostream&)>& body) const {
        if (spec.path.empty()) {
            body(fallback);
            fallback.flush();
            return;
        }
        std::ofstream file(spec.path);
        if (!file) throw InvalidParameter("cannot open output file: " + spec.path);
        body(file);
    }

    void emit_json(const json& j) const {
        emit([&](std::ostream& os) { os << j.dump(2) << '\n'; });
    }

    [[nodiscard]] bool json_mode() const { return spec.format == io::Format::Json; }
};

ProblemParams params_of(const Options& o) {
    if (!o.lambda) throw InvalidParameter("--lambda is required");
    ProblemParams pr{o.b, o.p, o.q, *o.lambda};
    pr.validate();
    return pr;
}

// ---------------------------------------------------------------- subcommands

void cmd_ground(const Options& o, const Emitter& em) {
    const auto gs = build_ground_state(o.p);
    const int prec = em.spec.precision;
    if (em.json_mode()) {
        em.emit_json(io::to_json(gs, prec));
    } else {
        em.emit([&](std::ostream& os) { io::write_ground_csv(os, gs, prec); });
    }
}

void cmd_profile(const Options& o, const Emitter& em) {
    const int prec = em.spec.precision;
    SolutionProfile prof;
    std::string label;
    if (o.p == 1.0) {
        const auto pr = params_of(o);
        prof = solve_p1(pr.b, pr.q, pr.lambda, o.grid_n).profile;
        label = "unique";
    } else {
        validate_family(o.b, o.p, o.q);
        const auto gs = build_ground_state(o.p);
        if (!o.lambda) {
            prof = sample_profile(gs.norm_p, gs, o.grid_n);
            label = "ground-state";
        } else {
            const auto pr = params_of(o);
            const auto roots = solve_branches(pr, gs).labelled();
            if (roots.empty()) throw InvalidParameter("no solution exists at these parameters");
            auto it = roots.end() - 1;  // upper branch by default
            if (o.branch) {
                it = std::find_if(roots.begin(), roots.end(),
                                  [&](const auto& r) { return r.first == *o.branch; });
                if (it == roots.end()) {
                    throw InvalidParameter("branch '" + *o.branch + "' not present at this lambda");
                }
            }
            label = it->first;
            prof = sample_profile(it->second, gs, o.grid_n, pr);
        }
    }
    if (em.json_mode()) {
        json j = io::to_json(prof, prec);
        j["branch"] = label;
        em.emit_json(j);
    } else {
        em.emit([&](std::ostream& os) { io::write_profile_csv(os, prof, prec); });
    }
}

void emit_points(const Emitter& em, const json& params, std::span<const BranchPoint> points,
                 const std::function<void(json&)>& extra = {}) {
    const int prec = em.spec.precision;
    if (em.json_mode()) {
        json arr = json::array();
        for (const auto& pt : points) arr.push_back(io::to_json(pt, prec));
        json j = {{"params", params}, {"points", std::move(arr)}};
        if (extra) extra(j);
        em.emit_json(j);
    } else {
        em.emit([&](std::ostream& os) { io::write_points_csv(os, points, prec); });
    }
}

void cmd_branches(const Options& o, const Emitter& em) {
    const auto pr = params_of(o);
    const int prec = em.spec.precision;
    if (pr.p == 1.0) {
        const std::vector<double> grid{pr.lambda};
        const auto points = sweep_p1(pr.q, grid);
        emit_points(em, io::to_json(pr, prec), points, [](json& j) { j["kind"] = "unique"; });
        return;
    }
    const auto gs = build_ground_state(pr.p);
    const auto roots = solve_branches(pr, gs);
    std::vector<BranchPoint> points;
    for (const auto& [label, t] : roots.labelled()) {
        points.push_back({pr.lambda, t, t * gs.xi / gs.norm_p, label});
    }
    emit_points(em, io::to_json(pr, prec), points, [&](json& j) {
        j["kind"] = std::string(to_string(roots.kind));
        j["t0"] = roots.t0 ? json(io::round_to_precision(*roots.t0, prec)) : json(nullptr);
    });
}

void cmd_threshold(const Options& o, const Emitter& em) {
    validate_family(o.b, o.p, o.q);
    if (o.p == 1.0) throw NotApplicable("threshold: no fold when p = 1 (b must be 0)");
    const auto gs = build_ground_state(o.p);
    const auto res = threshold(o.b, o.p, o.q, gs);
    const int prec = em.spec.precision;
    if (em.json_mode()) {
        json j = io::to_json(res, prec);
        j["params"] = io::family_json(o.b, o.p, o.q, prec);
        j["method"] = o.q == 1.0 ? "closed-form" : "bisection";
        em.emit_json(j);
    } else {
        em.emit([&](std::ostream& os) { io::write_threshold_csv(os, res, prec); });
    }
}

std::vector<double> grid_of(const Options& o) {
    if (o.spacing != "log" && o.spacing != "linear") {
        throw InvalidParameter("--spacing must be log or linear");
    }
    return lambda_grid(o.lambda_min, o.lambda_max, o.num, o.spacing == "log");
}

void cmd_sweep(const Options& o, const Emitter& em) {
    validate_family(o.b, o.p, o.q);
    const auto grid = grid_of(o);
    const int prec = em.spec.precision;
    const json params = io::family_json(o.b, o.p, o.q, prec);
    if (o.p == 1.0) {
        emit_points(em, params, sweep_p1(o.q, grid));
        return;
    }
    const auto gs = build_ground_state(o.p);
    emit_points(em, params, sweep(o.b, o.p, o.q, grid, gs));
}

void cmd_asympt(const Options& o, const Emitter& em) {
    validate_family(o.b, o.p, o.q);
    if (o.p == 1.0) throw NotApplicable("asympt: requires p > 1");
    const std::string branch = o.branch.value_or("upper");
    if (branch != "upper" && branch != "lower") {
        throw InvalidParameter("asympt: --branch must be upper or lower");
    }
    const auto gs = build_ground_state(o.p);
    const auto grid = grid_of(o);
    const auto all = measure_remainders(o.b, o.p, o.q, grid, gs);
    std::vector<RemainderSample> rows;
    std::copy_if(all.begin(), all.end(), std::back_inserter(rows),
                 [&](const RemainderSample& s) { return s.branch == branch; });
    const int prec = em.spec.precision;
    if (em.json_mode()) {
        json arr = json::array();
        for (const auto& s : rows) arr.push_back(io::to_json(s, prec));
        em.emit_json({{"params", io::family_json(o.b, o.p, o.q, prec)},
                      {"branch", branch},
                      {"samples", std::move(arr)}});
    } else {
        em.emit([&](std::ostream& os) { io::write_remainders_csv(os, rows, prec); });
    }
}

void cmd_verify(const Options& o, const Emitter& em) {
    const auto pr = params_of(o);
    const int prec = em.spec.precision;
    json report = {{"params", io::to_json(pr, prec)}};
    if (o.grid_n < 5 || o.grid_n % 2 == 0) throw InvalidParameter("--grid-n must be odd and >= 5");

    if (pr.p == 1.0) {
        const auto sol = solve_p1(pr.b, pr.q, pr.lambda, o.grid_n);
        const auto rep = residual_check(sol.profile, pr);
        report["roots"] = json::array(
            {{{"branch", "unique"}, {"t", io::round_to_precision(sol.profile.scale_t, prec)}}});
        report["residuals"] = json::array({io::to_json(rep, prec)});
        report["agree"] = true;
        em.emit_json(report);
        return;
    }

    const auto gs = build_ground_state(pr.p);
    const auto roots = solve_branches(pr, gs).labelled();
    const auto oracle = solve_nonlocal_by_coefficient(pr, o.grid_n);

    std::vector<double> oracle_t;
    for (const auto& prof : oracle) oracle_t.push_back(prof.scale_t);
    std::sort(oracle_t.begin(), oracle_t.end());

    // A tangent root is a double root; the coefficient scan cannot resolve it.
    const bool tangent = roots.size() == 1 && roots.front().first == "fold";
    bool agree = tangent || roots.size() == oracle_t.size();
    double max_rel = 0.0;
    json rows = json::array();
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const auto& [label, t] = roots[i];
        json row = {{"branch", label}, {"t", io::round_to_precision(t, prec)}};
        if (i < oracle_t.size() && oracle_t.size() == roots.size()) {
            const double rel = std::abs(oracle_t[i] - t) / std::max(std::abs(t), 1e-300);
            max_rel = std::max(max_rel, rel);
            row["t_oracle"] = io::round_to_precision(oracle_t[i], prec);
            row["rel_diff"] = io::round_to_precision(rel, prec);
        }
        const auto prof = sample_profile(t, gs, o.grid_n, pr);
        row["residual"] = io::to_json(residual_check(prof, pr), prec);
        rows.push_back(std::move(row));
    }
    agree = agree && max_rel <= o.tol;
    report["roots"] = std::move(rows);
    report["oracle_root_count"] = oracle_t.size();
    report["max_rel_diff"] = io::round_to_precision(max_rel, prec);
    report["tol"] = o.tol;
    report["agree"] = agree;
    em.emit_json(report);
}

// ---------------------------------------------------------------- plumbing

void error_line(std::ostream& err, std::string_view kind, std::string_view message) {
    err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solutions and bifurcation diagrams for -(∫|u|^p + b)^q u'' = λ u^p", "nlbif"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_family = [&](CLI::App* sub, bool need_p = true) {
        auto* popt = sub->add_option("--p", o.p, "nonlinearity exponent p >= 1");
        if (need_p) popt->required();
        sub->add_option("--q", o.q, "nonlocal exponent q > 1 - 1/p")->capture_default_str();
        sub->add_option("--b", o.b, "nonlocal offset b >= 0")->capture_default_str();
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", o.out, "output file (default: standard output)");
        sub->add_option("--precision", o.precision, "significant digits, 6..17")
            ->capture_default_str();
    };
    auto add_sweep_range = [&](CLI::App* sub) {
        sub->add_option("--lambda-min", o.lambda_min)->capture_default_str();
        sub->add_option("--lambda-max", o.lambda_max)->capture_default_str();
        sub->add_option("--num", o.num, "number of lambda values")->capture_default_str();
        sub->add_option("--spacing", o.spacing, "log or linear")
            ->check(CLI::IsMember({"log", "linear"}))
            ->capture_default_str();
    };

    auto* ground = app.add_subcommand("ground", "ground-state constants L_p, M_p, xi, norm_p");
    ground->add_option("--p", o.p, "exponent p > 1")->required();
    add_output(ground);

    auto* profile = app.add_subcommand("profile", "sampled solution profile (x,u)");
    add_family(profile);
    profile->add_option("--lambda", o.lambda, "bifurcation parameter (omit for W_p itself)");
    profile->add_option("--branch", o.branch, "lower | upper | unique | fold");
    profile->add_option("--grid-n", o.grid_n, "odd grid size")->capture_default_str();
    add_output(profile);

    auto* branches = app.add_subcommand("branches", "all solutions at one lambda");
    add_family(branches);
    branches->add_option("--lambda", o.lambda)->required();
    add_output(branches);

    auto* thresh = app.add_subcommand("threshold", "fold point lambda0 (b > 0)");
    add_family(thresh);
    add_output(thresh);

    auto* sweep_cmd = app.add_subcommand("sweep", "bifurcation diagram over a lambda grid");
    add_family(sweep_cmd);
    add_sweep_range(sweep_cmd);
    add_output(sweep_cmd);

    auto* asympt = app.add_subcommand("asympt", "measured vs predicted large-lambda remainders");
    add_family(asympt);
    add_sweep_range(asympt);
    asympt->add_option("--branch", o.branch, "upper or lower")->capture_default_str();
    add_output(asympt);

    auto* verify = app.add_subcommand("verify", "independent shooting oracle and residuals");
    add_family(verify);
    verify->add_option("--lambda", o.lambda)->required();
    verify->add_option("--grid-n", o.grid_n, "odd grid size")->capture_default_str();
    verify->add_option("--tol", o.tol, "relative agreement tolerance")->capture_default_str();
    add_output(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        error_line(err, "usage", e.what());
        err << app.help();
        return kExitInvalid;
    }

    CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    const bool json_default = name == "ground" || name == "threshold" || name == "verify";
    Emitter em{{json_default ? io::Format::Json : io::Format::Csv, o.out, o.precision}, out};
    if (o.format) em.spec.format = *o.format == "json" ? io::Format::Json : io::Format::Csv;

    try {
        em.spec.validate();
        if (name == "verify" && em.spec.format == io::Format::Csv) {
            throw InvalidParameter("verify emits JSON only");
        }
        if (name == "ground") cmd_ground(o, em);
        else if (name == "profile") cmd_profile(o, em);
        else if (name == "branches") cmd_branches(o, em);
        else if (name == "threshold") cmd_threshold(o, em);
        else if (name == "sweep") cmd_sweep(o, em);
        else if (name == "asympt") cmd_asympt(o, em);
        else if (name == "verify") cmd_verify(o, em);
    } catch (const ConvergenceFailure& e) {
        error_line(err, "non-convergence", e.what());
        return kExitNonConvergence;
    } catch (const InvalidParameter& e) {
        error_line(err, "invalid-parameter", e.what());
        return kExitInvalid;
    } catch (const DomainError& e) {
        error_line(err, "domain", e.what());
        return kExitInvalid;
    } catch (const NotApplicable& e) {
        error_line(err, "not-applicable", e.what());
        return kExitInvalid;
    } catch (const UnsupportedCase& e) {
        error_line(err, "unsupported", e.what());
        return kExitInvalid;
    }
    return kExitOk;
}

}  // namespace nlbif::cli
