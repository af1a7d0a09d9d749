#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <clocale>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nlbif/cli.hpp"
#include "nlbif/error.hpp"
#include "nlbif/groundstate.hpp"
#include "nlbif/io.hpp"

using namespace nlbif;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) v.push_back(l);
    return v;
}

}  // namespace

TEST_CASE("number formatting") {
    CHECK(io::format_number(0.1, 17) == "0.10000000000000001");
    CHECK(io::format_number(0.1, 12) == "0.1");
    CHECK(io::format_number(1e-300, 6) == "1e-300");
    CHECK(io::format_number(NAN, 6) == "nan");
    CHECK(io::format_number(-INFINITY, 6) == "-inf");
    CHECK(io::round_to_precision(1.23456789, 6) == 1.23457);
    for (double x : {M_PI, 1.0 / 3.0, 8.1341513952302869e10}) {
        CHECK(std::stod(io::format_number(x, 17)) == x);
    }
    CHECK_THROWS_AS((io::OutputSpec{io::Format::Csv, "", 5}.validate()), InvalidParameter);
    CHECK_THROWS_AS((io::OutputSpec{io::Format::Csv, "", 18}.validate()), InvalidParameter);
}

TEST_CASE("formatting ignores the C locale") {
    if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") || std::setlocale(LC_NUMERIC, "fr_FR.UTF-8")) {
        CHECK(io::format_number(1.5, 6) == "1.5");
        std::setlocale(LC_NUMERIC, "C");
    }
}

TEST_CASE("ground command") {
    const auto r = run({"ground", "--p", "2"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["xi"].get<double>() == doctest::Approx(11.7966879389695398428).epsilon(1e-14));
    CHECK(j["norm_p"].get<double>() == doctest::Approx(8.13415139523028628641).epsilon(1e-14));
    CHECK(j.contains("L_p"));
    CHECK(j.contains("M_p"));

    const auto csv = run({"ground", "--p", "3", "--format", "csv", "--precision", "6"});
    REQUIRE(csv.code == 0);
    const auto ls = lines(csv.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "p,L_p,M_p,xi,norm_p");
    CHECK(ls[1].rfind("3,1.31103,0.5,3.70815,", 0) == 0);

    CHECK(run({"ground", "--p", "1"}).code == cli::kExitInvalid);
}

TEST_CASE("branches command") {
    const auto r = run({"branches", "--p", "2", "--q", "1", "--b", "1", "--lambda", "20"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0] == "lambda,branch,t,alpha");
    CHECK(ls[1].rfind("20,lower,0.5142717161616", 0) == 0);
    CHECK(ls[2].rfind("20,upper,1.94449737089121", 0) == 0);

    const auto j = json::parse(run({"branches", "--p", "2", "--b", "1", "--lambda", "20",
                                    "--format", "json", "--precision", "8"})
                                   .out);
    CHECK(j["kind"] == "pair");
    CHECK(j["points"].size() == 2);
    CHECK(j["points"][0]["t"].get<double>() == 0.51427172);
    CHECK(j["t0"].get<double>() == 1.2293845);

    const auto none = json::parse(
        run({"branches", "--p", "2", "--b", "1", "--lambda", "10", "--format", "json"}).out);
    CHECK(none["kind"] == "no-solution");
    CHECK(none["points"].empty());

    const auto lin = run({"branches", "--p", "1", "--q", "2", "--lambda", "4"});
    REQUIRE(lin.code == 0);
    CHECK(lines(lin.out).at(1).rfind("4,unique,", 0) == 0);
}

TEST_CASE("threshold command") {
    const auto j = json::parse(run({"threshold", "--p", "2", "--b", "1"}).out);
    CHECK(j["lambda0"].get<double>() == doctest::Approx(16.2683027904605725728).epsilon(1e-14));
    CHECK(j["method"] == "closed-form");
    const auto k = json::parse(run({"threshold", "--p", "2", "--q", "2", "--b", "1"}).out);
    CHECK(k["lambda0"].get<double>() == doctest::Approx(25.0466906542153375).epsilon(1e-10));
    CHECK(k["method"] == "bisection");
    const auto zero = run({"threshold", "--p", "2", "--b", "0"});
    CHECK(zero.code == cli::kExitInvalid);
    CHECK(json::parse(lines(zero.err).at(0))["error"] == "not-applicable");
}

TEST_CASE("sweep command") {
    const auto r = run({"sweep", "--p", "2", "--q", "1", "--b", "1", "--lambda-min", "1",
                        "--lambda-max", "100", "--num", "3"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    // λ = 1, 10 below the fold; λ = 100 has two points
    REQUIRE(ls.size() == 3);
    CHECK(ls[1].rfind("100,lower,", 0) == 0);

    const auto lin = run({"sweep", "--p", "2", "--lambda-min", "1", "--lambda-max", "3", "--num",
                          "3", "--spacing", "linear", "--format", "json"});
    const auto j = json::parse(lin.out);
    REQUIRE(j["points"].size() == 3);
    CHECK(j["points"][1]["lambda"].get<double>() == 2.0);
    CHECK(j["params"]["p"].get<double>() == 2.0);
}

TEST_CASE("profile command") {
    const auto r = run({"profile", "--p", "2", "--b", "1", "--lambda", "20", "--grid-n", "5",
                        "--branch", "lower"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 6);
    CHECK(ls[0] == "x,u");
    CHECK(ls[1] == "0,0");
    CHECK(ls[5] == "1,0");

    const auto j = json::parse(run({"profile", "--p", "3", "--format", "json", "--grid-n", "11"}).out);
    CHECK(j["branch"] == "ground-state");
    CHECK(j["amplitude"].get<double>() ==
          doctest::Approx(3.70814935460274383687).epsilon(1e-13));
    CHECK(j["grid"].size() == 11);
    CHECK(j["values"].size() == 11);

    CHECK(run({"profile", "--p", "2", "--grid-n", "10"}).code == cli::kExitInvalid);
    CHECK(run({"profile", "--p", "2", "--b", "1", "--lambda", "20", "--branch", "unique"}).code ==
          cli::kExitInvalid);
}

TEST_CASE("asympt command") {
    const auto r = run({"asympt", "--p", "2", "--q", "1", "--b", "1", "--lambda-min", "1e2",
                        "--lambda-max", "1e6", "--num", "5"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 6);
    CHECK(ls[0] == "lambda,t_numeric,t_predicted,remainder,ratio");
    CHECK(ls[5].rfind("1000000,", 0) == 0);

    const auto j = json::parse(run({"asympt", "--p", "2", "--b", "1", "--lambda-min", "1",
                                    "--lambda-max", "1e4", "--num", "2", "--branch", "lower",
                                    "--format", "json"})
                                   .out);
    CHECK(j["branch"] == "lower");
    CHECK(j["samples"][0]["skipped"] == true);
    CHECK(j["samples"][1]["skipped"] == false);
}

TEST_CASE("verify command") {
    const auto r = run({"verify", "--p", "2", "--b", "1", "--lambda", "20", "--grid-n", "501"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["agree"] == true);
    CHECK(j["roots"].size() == 2);
    CHECK(j["oracle_root_count"] == 2);
    CHECK(run({"verify", "--p", "2", "--lambda", "1", "--format", "csv"}).code ==
          cli::kExitInvalid);
}

TEST_CASE("output file") {
    const auto path = std::filesystem::temp_directory_path() / "nlbif_cli_test.csv";
    const auto r = run({"ground", "--p", "2", "--format", "csv", "--out", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "p,L_p,M_p,xi,norm_p");
    std::filesystem::remove(path);
}

TEST_CASE("usage errors") {
    const auto none = run({});
    CHECK(none.code == cli::kExitInvalid);
    CHECK(json::parse(lines(none.err).at(0))["error"] == "usage");
    CHECK(run({"bogus"}).code == cli::kExitInvalid);
    CHECK(run({"branches", "--p", "2"}).code == cli::kExitInvalid);  // missing --lambda
    CHECK(run({"branches", "--p", "x", "--lambda", "1"}).code == cli::kExitInvalid);
    CHECK(run({"ground", "--p", "2", "--format", "xml"}).code == cli::kExitInvalid);
    CHECK(run({"ground", "--p", "2", "--precision", "40"}).code == cli::kExitInvalid);
    const auto q = run({"branches", "--p", "2", "--q", "0.4", "--lambda", "1"});
    CHECK(q.code == cli::kExitInvalid);
    CHECK(json::parse(lines(q.err).at(0))["error"] == "invalid-parameter");
    const auto p1 = run({"branches", "--p", "1", "--b", "1", "--lambda", "1"});
    CHECK(json::parse(lines(p1.err).at(0))["error"] == "unsupported");
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("threshold") != std::string::npos);
}
