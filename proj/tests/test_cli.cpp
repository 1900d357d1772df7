#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// These tests drive the installed binary end to end.  The test harness
// exports TRIBELL_CLI with the freshly built executable's path.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

const char* cli_path() {
    const char* p = std::getenv("TRIBELL_CLI");
    REQUIRE_MESSAGE(p != nullptr, "TRIBELL_CLI must point at the tribell binary");
    return p;
}

RunResult run(const std::string& args) {
    const std::string cmd = std::string(cli_path()) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("seq emits the requested window") {
    RunResult r = run("seq --preset tribonacci --from 0 --to 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "[{\"n\":0,\"value\":\"0\"},{\"n\":1,\"value\":\"1\"},{\"n\":2,\"value\":\"1\"},"
          "{\"n\":3,\"value\":\"2\"},{\"n\":4,\"value\":\"4\"},{\"n\":5,\"value\":\"7\"},"
          "{\"n\":6,\"value\":\"13\"},{\"n\":7,\"value\":\"24\"}]\n");

    RunResult lucas = run("seq --preset tribonacci-lucas --from 0 --to 6 --format csv");
    CHECK(lucas.exit_code == 0);
    CHECK(lucas.out == "n,value\n0,3\n1,1\n2,3\n3,7\n4,11\n5,21\n6,39\n");

    RunResult custom = run("seq --coeffs 2,1,1 --init 0,1,1 --from=-2 --to 5 --format human");
    CHECK(custom.exit_code == 0);
    CHECK(custom.out.find("a(-2) = 2") != std::string::npos);
    CHECK(custom.out.find("a(-1) = -1") != std::string::npos);
    CHECK(custom.out.find("a(5) = 20") != std::string::npos);
}

TEST_CASE("seq rejects bad windows and bad specs") {
    CHECK(run("seq --preset tribonacci --from 5 --to 1").exit_code == 2);
    CHECK(run("seq --coeffs 1,1 --init 0,1,1 --from 0 --to 3").exit_code == 2);
    CHECK(run("seq --preset nope --from 0 --to 3").exit_code == 2);
    CHECK(run("seq --from 0 --to 3").exit_code == 2); // neither preset nor coeffs
    CHECK(run("seq --preset tribonacci --coeffs 1,1,1 --init 0,1,1 --from 0 --to 1").exit_code ==
          2);
}

TEST_CASE("det checks a determinant representation at one size") {
    RunResult r = run("det --rep t2n1 --uvw 1,1,1 --n 3");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 3);
    CHECK(j["det"] == "24");
    CHECK(j["expected"] == "24");
    CHECK(j["match"] == true);

    RunResult cor = run("det --rep cor-t2n1 --uvw 1,1,1 --n 2");
    CHECK(cor.exit_code == 0);
    CHECK(nlohmann::json::parse(cor.out)["det"] == "-3");

    RunResult bell = run("det --rep bell-lstep --l 2 --n 3");
    CHECK(bell.exit_code == 0);
    CHECK(nlohmann::json::parse(bell.out)["det"] == "3");

    CHECK(run("det --rep bell-lstep --l 1 --n 3").exit_code == 2);
    CHECK(run("det --rep t2n1 --n 3").exit_code == 2);     // --uvw required for this rep
    CHECK(run("det --rep unknown --n 3").exit_code == 2);  // not in the rep list
    CHECK(run("det --rep t2n1 --uvw 1,1 --n 3").exit_code == 2);
}

TEST_CASE("series operations") {
    RunResult gf = run("series --op gf --coeffs 1,1,1 --init 0,1,1 --order 6");
    CHECK(gf.exit_code == 0);
    CHECK(gf.out == "[\"0\",\"1\",\"1\",\"2\",\"4\",\"7\"]\n");

    RunResult recip = run("series --op recip --coeffs 1,2,7,24");
    CHECK(recip.exit_code == 0);
    CHECK(recip.out == "[\"1\",\"-2\",\"-3\",\"-4\"]\n");

    RunResult odd = run("series --op gf-odd --uvw 2,1,1 --order 4");
    CHECK(odd.exit_code == 0);
    CHECK(odd.out == "[\"1\",\"3\",\"20\",\"130\"]\n");

    RunResult cam = run("series --op cameron --coeffs 1,1,1,0 --format csv");
    CHECK(cam.exit_code == 0);
    CHECK(cam.out == "i,coeff\n0,1\n1,2\n2,4\n3,7\n");

    // All-ones recurrences of any order have a closed form too.
    RunResult fib = run("series --op gf --coeffs 1,1 --init 0,1 --order 6");
    CHECK(fib.exit_code == 0);
    CHECK(fib.out == "[\"0\",\"1\",\"1\",\"2\",\"3\",\"5\"]\n");

    CHECK(run("series --op recip --coeffs 0,1").exit_code == 2); // no constant term
    CHECK(run("series --op log --coeffs 0,1").exit_code == 2);   // needs f(0) = 1
    CHECK(run("series --op gf --coeffs 2,1 --init 0,1 --order 6").exit_code == 2);
    CHECK(run("series --op frobnicate --coeffs 1").exit_code == 2);
}

TEST_CASE("verify runs a config and honors flag overrides") {
    const std::string cfg_path = "/tmp/tribell_cli_cfg.json";
    {
        std::ofstream out(cfg_path);
        out << R"({"suites": ["q_det_3x3"], "grid": {"n": "2..10"}})";
    }
    RunResult r = run("verify --config " + cfg_path);
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["summary"]["main"]["q_det_3x3"]["verified"] == 9);
    CHECK(j["reports"].size() == 9);

    // Flag narrowing the range wins over the file.
    RunResult narrowed = run("verify --config " + cfg_path + " --n 2..4");
    CHECK(narrowed.exit_code == 0);
    CHECK(nlohmann::json::parse(narrowed.out)["reports"].size() == 3);

    // A counterexample on the gate flips the exit code.
    RunResult gate = run(
        "verify --suites theorem1 --variant as_stated_only --grid-uvw 2,1,1 --n 3..3 --k 1..1");
    CHECK(gate.exit_code == 1);
    j = nlohmann::json::parse(gate.out);
    CHECK(j["reports"][0]["status"] == "counterexample");
    CHECK(j["reports"][0]["lhs"] == "8");
    CHECK(j["reports"][0]["rhs"] == "7");

    // The same point under the default policy is informational only.
    RunResult soft = run("verify --suites theorem1 --grid-uvw 2,1,1 --n 3..3 --k 1..1");
    CHECK(soft.exit_code == 0);
    RunResult strict = run(
        "verify --suites theorem1 --grid-uvw 2,1,1 --n 3..3 --k 1..1 --strict-as-stated");
    CHECK(strict.exit_code == 1);

    CHECK(run("verify --config /tmp/does_not_exist_tribell.json").exit_code == 2);
    CHECK(run("verify --suites nope").exit_code == 2);
    CHECK(run("verify --n 9..2").exit_code == 2);
    CHECK(run("verify --grid-uvw 1,1,1 --grid-u 1,2").exit_code == 2);
}

TEST_CASE("verify writes the report to a file when asked") {
    const std::string out_path = "/tmp/tribell_cli_report.json";
    std::remove(out_path.c_str());
    RunResult r = run("verify --suites q_det_3x3 --n 2..10 --output " + out_path);
    CHECK(r.exit_code == 0);
    const std::string body = slurp(out_path);
    CHECK(nlohmann::json::parse(body)["reports"].size() == 9);

    // Repeat emission to the same destination is byte-identical (the
    // config echo includes the output path, so the path must match).
    CHECK(run("verify --suites q_det_3x3 --n 2..10 --output " + out_path).exit_code == 0);
    CHECK(slurp(out_path) == body);
    std::remove(out_path.c_str());
}

TEST_CASE("top-level interface") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("--version").out == "0.1.0\n");
    CHECK(run("").exit_code == 2);          // a subcommand is required
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("seq --bogus-flag 1 --from 0 --to 1 --preset tribonacci").exit_code == 2);
}
