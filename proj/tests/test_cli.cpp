// Smoke tests for the binform executable: runs the real binary and checks
// exit codes and JSON output shape.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

using json = nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(BINFORM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("analyze x^3+y^3") {
    auto r = run("analyze 1 0 0 1");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["aut"]["label"] == "D1");
    CHECK(j["w_f"] == "1/2");
    CHECK(j["m"] == "1");
    double cf = std::stod(j["c_f"].get<std::string>());
    CHECK(cf == doctest::Approx(2.64996).epsilon(1e-4));
    CHECK(j["beta"]["exact"] == "1/2");
}

TEST_CASE("analyze x^4+16y^4") {
    auto r = run("analyze 1 0 0 0 16");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["aut"]["label"] == "D4");
    CHECK(j["w_f"] == "3/16");
    CHECK(j["m123"] == json::array({"1", "2", "2"}));
    CHECK(j["lattices"]["fixed"]["det"] == "2");
}

TEST_CASE("invalid input exits 2") {
    CHECK(run("analyze 1 0 0").code == 2);       // degree 2
    CHECK(run("analyze 1 2 1 0").code == 2);     // zero discriminant
    CHECK(run("analyze 1 two 0 1").code == 2);   // parse failure
    CHECK(run("analyze").code == 2);             // missing coefficients
}

TEST_CASE("aut certificate") {
    auto r = run("aut 1 0 0 8");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["label"] == "D1");
    CHECK(j["order"] == 2);
    CHECK(j["elements"].size() == 2);
}

TEST_CASE("area report") {
    auto r = run("area 1 0 0 0 1 --tol 1e-10");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    double a = std::stod(j["a_f"].get<std::string>());
    CHECK(a == doctest::Approx(3.70815).epsilon(1e-5));
    CHECK(j["method"] == "quadrature");
    CHECK(j["singular_angles"].empty());
}

TEST_CASE("count json and csv") {
    auto r = run("count 1 0 0 0 1 --z 17");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["n_f"] == 20);
    CHECK(j["r_f"] == 4);
    CHECK(j["n2"] == 0);
    CHECK(j["box"]["exact"] == true);
    auto csv = run("count 1 0 0 0 1 --z 17 --csv");
    REQUIRE(csv.code == 0);
    CHECK(csv.out.substr(0, 36) == "h,rep_count,orbit_count,essential\n1,");
}

TEST_CASE("ladder") {
    auto r = run("ladder 1 0 0 0 1 --zs 1000,10000");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["rows"].size() == 2);
    CHECK(j["prediction"]["w_f"] == "1/8");
    auto csv = run("ladder 1 0 0 0 1 --zs 1000,10000 --csv");
    CHECK(csv.out.substr(0, 20) == "z,r_f,ratio,residual");
}

TEST_CASE("verify") {
    auto r = run("verify 1 0 0 0 16 --z 10000");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["checks"]["lcm_relations"] == true);
    CHECK(j["checks"]["thue_audit"] == true);
}
