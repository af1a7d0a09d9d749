#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nlbif/asymptotics.hpp"
#include "nlbif/branch.hpp"
#include "nlbif/cli.hpp"
#include "nlbif/error.hpp"
#include "nlbif/groundstate.hpp"
#include "nlbif/oracle.hpp"
#include "nlbif/profile.hpp"

namespace py = pybind11;
using namespace nlbif;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact solutions and bifurcation diagrams of a 1D nonlocal elliptic problem";
    m.attr("__version__") = "0.1.0";

    static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidParameter>(m, "InvalidParameter", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<NotApplicable>(m, "NotApplicable", base.ptr());
    py::register_exception<UnsupportedCase>(m, "UnsupportedCase", base.ptr());
    py::register_exception<ConvergenceFailure>(m, "ConvergenceFailure", base.ptr());

    py::class_<ProblemParams>(m, "ProblemParams")
        .def(py::init([](double b, double p, double q, double lambda) {
                 return ProblemParams{b, p, q, lambda};
             }),
             py::arg("b"), py::arg("p"), py::arg("q"), py::arg("lam"))
        .def_readwrite("b", &ProblemParams::b)
        .def_readwrite("p", &ProblemParams::p)
        .def_readwrite("q", &ProblemParams::q)
        .def_readwrite("lam", &ProblemParams::lambda)
        .def("validate", &ProblemParams::validate)
        .def("__repr__", [](const ProblemParams& pr) { return "ProblemParams" + to_string(pr); });

    py::class_<GroundState>(m, "GroundState")
        .def_readonly("p", &GroundState::p)
        .def_readonly("L_p", &GroundState::L_p)
        .def_readonly("M_p", &GroundState::M_p)
        .def_readonly("xi", &GroundState::xi)
        .def_readonly("norm_p", &GroundState::norm_p);

    py::class_<SolutionProfile>(m, "SolutionProfile")
        .def_readonly("grid", &SolutionProfile::grid)
        .def_readonly("values", &SolutionProfile::values)
        .def_readonly("params", &SolutionProfile::params)
        .def_readonly("t", &SolutionProfile::scale_t)
        .def_readonly("amplitude", &SolutionProfile::amplitude)
        .def_readonly("source", &SolutionProfile::source);

    py::enum_<RootKind>(m, "RootKind")
        .value("NoSolution", RootKind::NoSolution)
        .value("Tangent", RootKind::Tangent)
        .value("Pair", RootKind::Pair)
        .value("Unique", RootKind::Unique);

    py::class_<BranchRoots>(m, "BranchRoots")
        .def_readonly("kind", &BranchRoots::kind)
        .def_readonly("t0", &BranchRoots::t0)
        .def_readonly("t_lower", &BranchRoots::t_lower)
        .def_readonly("t_upper", &BranchRoots::t_upper)
        .def("labelled", &BranchRoots::labelled);

    py::class_<ThresholdResult>(m, "ThresholdResult")
        .def_readonly("lambda0", &ThresholdResult::lambda0)
        .def_readonly("t_at_fold", &ThresholdResult::t_at_fold)
        .def_readonly("alpha0", &ThresholdResult::alpha0);

    py::class_<BranchPoint>(m, "BranchPoint")
        .def_readonly("lam", &BranchPoint::lambda)
        .def_readonly("t", &BranchPoint::t)
        .def_readonly("alpha", &BranchPoint::alpha)
        .def_readonly("branch", &BranchPoint::branch);

    py::class_<AsymptoticPrediction>(m, "AsymptoticPrediction")
        .def_readonly("leading", &AsymptoticPrediction::leading)
        .def_readonly("correction", &AsymptoticPrediction::correction)
        .def_readonly("leading_exponent", &AsymptoticPrediction::leading_exponent)
        .def_readonly("correction_exponent", &AsymptoticPrediction::correction_exponent)
        .def("predicted", &AsymptoticPrediction::predicted);

    py::class_<BranchAsymptotics>(m, "BranchAsymptotics")
        .def_readonly("upper", &BranchAsymptotics::upper)
        .def_readonly("lower", &BranchAsymptotics::lower)
        .def_readonly("m", &BranchAsymptotics::m)
        .def_readonly("k", &BranchAsymptotics::k);

    py::class_<CurvePair>(m, "CurvePair")
        .def_readonly("lambda_lower", &CurvePair::lambda_lower)
        .def_readonly("lambda_upper", &CurvePair::lambda_upper);

    py::class_<RemainderSample>(m, "RemainderSample")
        .def_readonly("lam", &RemainderSample::lambda)
        .def_readonly("branch", &RemainderSample::branch)
        .def_readonly("skipped", &RemainderSample::skipped)
        .def_readonly("t_numeric", &RemainderSample::t_numeric)
        .def_readonly("t_predicted", &RemainderSample::t_predicted)
        .def_readonly("measured", &RemainderSample::measured)
        .def_readonly("predicted", &RemainderSample::predicted)
        .def_readonly("ratio", &RemainderSample::ratio);

    py::class_<ResidualReport>(m, "ResidualReport")
        .def_readonly("max_abs", &ResidualReport::max_abs)
        .def_readonly("scale", &ResidualReport::scale)
        .def_readonly("grid_n", &ResidualReport::grid_n)
        .def_readonly("normalized", &ResidualReport::normalized);

    // ground state
    m.def("compute_Lp", &compute_Lp, py::arg("p"));
    m.def("compute_Lp_closed_form", &compute_Lp_closed_form, py::arg("p"));
    m.def("compute_Mp", &compute_Mp, py::arg("p"));
    m.def("compute_Mp_quadrature", &compute_Mp_quadrature, py::arg("p"));
    m.def("build_ground_state", &build_ground_state, py::arg("p"));

    // profile
    m.def("x_of_theta", &x_of_theta, py::arg("theta"), py::arg("gs"));
    m.def("eval_W", &eval_W, py::arg("x"), py::arg("gs"));
    m.def("eval_W_prime", &eval_W_prime, py::arg("x"), py::arg("gs"));
    m.def("sample_profile", &sample_profile, py::arg("t"), py::arg("gs"), py::arg("n"),
          py::arg("params") = std::nullopt);

    // branch
    m.def("g_eval", &g_eval, py::arg("t"), py::arg("params"), py::arg("gs"));
    m.def("find_t0", &find_t0, py::arg("params"), py::arg("gs"));
    m.def("solve_branches", &solve_branches, py::arg("params"), py::arg("gs"));
    m.def("threshold", &threshold, py::arg("b"), py::arg("p"), py::arg("q"), py::arg("gs"));
    m.def("threshold_bisection", &threshold_bisection, py::arg("b"), py::arg("p"), py::arg("q"),
          py::arg("gs"));
    m.def(
        "sweep",
        [](double b, double p, double q, const std::vector<double>& grid, const GroundState& gs) {
            return sweep(b, p, q, grid, gs);
        },
        py::arg("b"), py::arg("p"), py::arg("q"), py::arg("lambda_grid"), py::arg("gs"));
    m.def(
        "solve_p1",
        [](double b, double q, double lambda, std::size_t n) {
            auto sol = solve_p1(b, q, lambda, n);
            return py::make_tuple(sol.alpha, sol.profile);
        },
        py::arg("b"), py::arg("q"), py::arg("lam"), py::arg("n") = 1001);
    m.def("lambda_grid", &lambda_grid, py::arg("lo"), py::arg("hi"), py::arg("num"),
          py::arg("log_spacing") = true);

    // asymptotics
    m.def("thm11_lambda_of_alpha", &thm11_lambda_of_alpha, py::arg("alpha"), py::arg("p"),
          py::arg("q"), py::arg("gs"));
    m.def("thm11_p1_lambda_of_alpha", &thm11_p1_lambda_of_alpha, py::arg("alpha"), py::arg("q"));
    m.def("thm12_exact", &thm12_exact, py::arg("b"), py::arg("lam"), py::arg("gs"));
    m.def("thm13_curves", &thm13_curves, py::arg("alpha"), py::arg("b"), py::arg("p"),
          py::arg("gs"));
    m.def("thm14_coefficients", &thm14_coefficients, py::arg("b"), py::arg("p"), py::arg("q"),
          py::arg("lam"), py::arg("gs"));
    m.def(
        "measure_remainders",
        [](double b, double p, double q, const std::vector<double>& lambdas,
           const GroundState& gs) { return measure_remainders(b, p, q, lambdas, gs); },
        py::arg("b"), py::arg("p"), py::arg("q"), py::arg("lambdas"), py::arg("gs"));

    // oracle
    m.def("shoot_local", &shoot_local, py::arg("A"), py::arg("lam"), py::arg("p"), py::arg("n"));
    m.def("solve_nonlocal_by_coefficient", &solve_nonlocal_by_coefficient, py::arg("params"),
          py::arg("n"));
    m.def("residual_check", &residual_check, py::arg("profile"), py::arg("params"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI subcommand in-process; returns (exit_code, stdout, stderr).");
}
