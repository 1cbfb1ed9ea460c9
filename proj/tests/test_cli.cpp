#include "folia/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace folia;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string value_of(const std::string& report, const std::string& key) {
    std::istringstream in(report);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
    return "<missing>";
}

std::filesystem::path scratch(const std::string& name, const std::string& content) {
    const auto dir = std::filesystem::temp_directory_path() / "folia_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("nu and tower reference values") {
    Run r = run({"nu", "--family", "psi", "--n", "3", "--d", "2", "--k", "3", "--ell", "1", "--degrees", "1,1"});
    CHECK(r.code == kExitOk);
    CHECK(value_of(r.out, "nu") == "-10");
    r = run({"tower", "--n", "3", "--k", "7", "--deg", "1", "--chi", "2", "--ells", "2,1", "--at", "2"});
    CHECK(r.code == kExitOk);
    CHECK(value_of(r.out, "n_on_divisor") == "20");
    r = run({"mu", "--n", "3", "--d", "2", "--k", "3", "--ell", "1", "--degrees", "1,1", "--N", "12"});
    CHECK(value_of(r.out, "mu") == "32");
    CHECK(value_of(r.out, "n_e1") == "10");
    CHECK(value_of(r.out, "n_m1") == "30");
}

TEST_CASE("json output") {
    const Run r = run({"--json", "nu", "--family", "phi", "--n", "3", "--d", "2", "--k", "3", "--ell", "1",
                       "--degrees", "1,1"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["nu"] == -20);
    CHECK(j["family"] == "phi");
}

TEST_CASE("analyze and blowup round trip through files") {
    const auto field = scratch("ex.field",
                               "# dicritical cubic\nn=3\ndegree=3\nP1 = z1^2 + 2*z1*z2 + z1^3 + z2^3\n"
                               "P2 = z1*z2 + 2*z2^2 + z1^2*z2 - z2^3\nP3 = z1^2*z3 + z1^2 + 2*z1*z2 + z2^2*z3\n");
    Run r = run({"analyze", field.string()});
    REQUIRE(r.code == kExitOk);
    CHECK(value_of(r.out, "case") == "Dicritical");
    CHECK(value_of(r.out, "ell") == "2");
    CHECK(value_of(r.out, "m_prime") == "2");

    const auto out = field.parent_path() / "ex_chart1.field";
    r = run({"blowup", field.string(), "--chart", "1", "--out", out.string()});
    REQUIRE(r.code == kExitOk);
    CHECK(value_of(r.out, "ell") == "2");
    CHECK(value_of(r.out, "divisor_invariant") == "false");
    // The report itself is a valid field file.
    const auto again = scratch("report.field", r.out);
    CHECK(run({"oracle-milnor", again.string(), "--max-degree", "2"}).code != kExitParse);
    CHECK(std::filesystem::exists(out));
}

TEST_CASE("resolve and deform") {
    const auto field = scratch("ladder.field", "n=3\nP1 = z2^8\nP2 = z1*z3 + 2*z1\nP3 = z1\n");
    Run r = run({"resolve", field.string(), "--budget", "6"});
    REQUIRE(r.code == kExitOk);
    CHECK(value_of(r.out, "outcome") == "ElementaryReached");
    const auto cubic = scratch("cubic.field",
                               "n=3\ndegree=3\nP1 = z1^2 + 2*z1*z2 + z1^3 + z2^3\n"
                               "P2 = z1*z2 + 2*z2^2 + z1^2*z2 - z2^3\nP3 = z1^2*z3 + z1^2 + 2*z1*z2 + z2^2*z3\n");
    r = run({"deform", cubic.string(), "--seed", "5", "--at", "1/2"});
    REQUIRE(r.code == kExitOk);
    CHECK(value_of(r.out, "special") == "true");
    CHECK(value_of(r.out, "deformed_case") == "TypeI");
    CHECK(value_of(r.out, "target_orders") == "2,2,1");
}

TEST_CASE("milnor oracle") {
    const auto field = scratch("pts.field", "n=3\nP1 = z1^2\nP2 = z2^2\nP3 = z3^2\n");
    const Run r = run({"oracle-milnor", field.string(), "--max-degree", "8"});
    REQUIRE(r.code == kExitOk);
    CHECK(value_of(r.out, "mu") == "8");
}

TEST_CASE("bound and selftest") {
    Run r = run({"bound", "--n", "3", "--lambda0", "2", "--ell1", "2"});
    CHECK(value_of(r.out, "blowup_bound") == "8");
    r = run({"bound", "--n", "3", "--deg", "1", "--chi", "2", "--ell1", "1"});
    CHECK(value_of(r.out, "blowup_bound") == "3");
    r = run({"selftest"});
    CHECK(r.code == kExitOk);
    CHECK(value_of(r.out, "failures") == "0");
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == kExitParse);
    CHECK(run({"nu", "--n", "3"}).code == kExitParse);
    CHECK(run({"nu", "--family", "omega", "--n", "3", "--d", "2", "--k", "3", "--ell", "1", "--degrees", "1,1"}).code ==
          kExitParse);
    const auto bad = scratch("bad.field", "n=3\nP1 = z1 +\nP2 = z2\nP3 = z3\n");
    const Run pr = run({"analyze", bad.string()});
    CHECK(pr.code == kExitParse);
    CHECK(pr.err.find("line 2") != std::string::npos);
    const auto smooth = scratch("smooth.field", "n=3\nP1 = 1\nP2 = z2\nP3 = z3\n");
    CHECK(run({"analyze", smooth.string()}).code == kExitPrecondition);
    CHECK(run({"bound", "--n", "3", "--lambda0", "0", "--ell1", "1"}).code == kExitPrecondition);
    // (n+1) deg - chi inconsistent with the given lambda0
    CHECK(run({"tower", "--n", "3", "--k", "3", "--deg", "1", "--chi", "2", "--lambda0", "5", "--ells", "1"}).code ==
          kExitParse);
    // data that is not realised by a curve gives a fractional count
    CHECK(run({"tower", "--n", "3", "--k", "2", "--deg", "1", "--chi", "1", "--ells", "1,1,1", "--at", "3"}).code ==
          kExitInconsistent);
}

TEST_CASE("seed from the environment") {
    const auto field = scratch("norm.field", "n=3\nP1 = z1^2 + z2^2\nP2 = z1\nP3 = z1*z3 + z2\n");
    ::setenv("FOLIATION_SEED", "9", 1);
    const Run a = run({"analyze", field.string()});
    const Run b = run({"analyze", field.string(), "--seed", "9"});
    ::unsetenv("FOLIATION_SEED");
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    ::setenv("FOLIATION_SEED", "x", 1);
    CHECK(run({"analyze", field.string()}).code == kExitParse);
    ::unsetenv("FOLIATION_SEED");
}
