#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string out_file = "cli_test_out.tmp";
    std::string cmd = std::string(TRICUBE_CLI_PATH) + " " + args + " > " + out_file +
                      " 2> cli_test_err.tmp";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(out_file.c_str());
    std::remove("cli_test_err.tmp");
    return {WEXITSTATUS(rc), ss.str()};
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run_cli("analyze 3 2 0 6 --json").exit_code == 0);
    CHECK(run_cli("analyze 3 2 zebra 6 --json").exit_code == 2);
    CHECK(run_cli("analyze 3 2").exit_code == 2);  // missing arguments
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("local 0 0 0 1 -p 9 --json").exit_code == 2);  // composite p
}

TEST_CASE("analyze JSON round-trips and is deterministic") {
    RunResult a = run_cli("analyze 3 2 0 6 --json");
    RunResult b = run_cli("analyze 3 2 0 6 --json");
    CHECK(a.out == b.out);
    nlohmann::json j = nlohmann::json::parse(a.out);
    CHECK(nlohmann::json::parse(j.dump()) == j);
    CHECK(j["verdict"] == "IntegralPointKnown");
    CHECK(j["version"] == "tricube 0.1.0");

    // sum-of-cubes routing with the mod-9 witness
    nlohmann::json c = nlohmann::json::parse(run_cli("analyze 0 0 0 4 --json").out);
    CHECK(c["verdict"] == "LocallyInsoluble");
    CHECK(c["result"]["witness"]["status"] == "Insoluble");
    nlohmann::json d = nlohmann::json::parse(run_cli("analyze 0 0 0 3 --json").out);
    CHECK(d["verdict"] == "NoObstruction");
    nlohmann::json e = nlohmann::json::parse(run_cli("analyze 0 0 2 29 --json").out);
    CHECK(e["verdict"] == "LocallyInsoluble");  // 29 - 6 = 23 = 5 mod 9
}

TEST_CASE("batch mode emits one JSON object per line in order") {
    RunResult r = run_cli("analyze 3 2 0 0 --n-range 1 4");
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    long expect = 1;
    while (std::getline(lines, line)) {
        nlohmann::json j = nlohmann::json::parse(line);
        CHECK(j["inputs"]["n"] == expect++);
        ++count;
    }
    CHECK(count == 4);
}

TEST_CASE("u50 and tetra subcommands") {
    nlohmann::json u = nlohmann::json::parse(run_cli("u50 --json").out);
    CHECK(u["verdict"] == "Reproduced");
    CHECK(u["result"]["singular_locus"].size() == 4);

    nlohmann::json t = nlohmann::json::parse(run_cli("tetra 2 --json").out);
    CHECK(t["verdict"] == "Reproduced");
    CHECK(t["result"]["branch"] == 2);
}

TEST_CASE("exceptional subcommand") {
    nlohmann::json e =
        nlohmann::json::parse(run_cli("exceptional -1 0 --bound 1000 --json").out);
    CHECK(e["result"]["delta1_square_n"] == nlohmann::json::array({0}));
    CHECK(e["result"]["delta2_square_n"].empty());
    CHECK(e["result"]["delta3_square_n"].empty());
    CHECK(e["result"]["f2_complete"] == false);
}

TEST_CASE("search subcommand finds the small tetrahedral point") {
    nlohmann::json s =
        nlohmann::json::parse(run_cli("search 3 2 0 6 --box 5 --json").out);
    bool found = false;
    for (const auto& p : s["result"]["points_found"])
        if (p == nlohmann::json::array({0, 0, 1})) found = true;
    CHECK(found);
    CHECK(s["verdict"] == "PointsFound");
}

TEST_CASE("local subcommand") {
    nlohmann::json j = nlohmann::json::parse(run_cli("local 3 2 0 12 -p 5 --json").out);
    CHECK(j["result"]["status"] == "ExplicitPoint");
    nlohmann::json a = nlohmann::json::parse(run_cli("local 3 2 0 12 --json").out);
    CHECK(a["verdict"] == "soluble");
}
