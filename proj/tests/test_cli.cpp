#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramasum/report.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(RAMASUM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("eval subcommand") {
    RunResult r = run("eval --num 0.5,0.5 --den 1.5 --z 1");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(std::abs(j["value"]["re"].get<double>() - 1.5707963267948966) < 1e-10);

    r = run("eval --num 0,0.5 --den 1.5");
    j = json::parse(r.out);
    CHECK(j["value"]["re"].get<double>() == 1.0);
    CHECK(j["termination"] == "TerminatedExactly");
    CHECK(j["terminated_at"] == 1);

    r = run("eval --num 1,0.5,0.5 --den 1.5,1.5");
    j = json::parse(r.out);
    CHECK(std::abs(j["value"]["re"].get<double>() - 1.2337005501361697) < 1e-10);
}

TEST_CASE("eval exit codes") {
    CHECK(run("eval --num 0.5 --den").exit_code == 2);
    CHECK(run("eval --num 0.5,2.0 --den 1.5").exit_code == 3);   // divergent
    CHECK(run("eval --num 0.5 --den -1").exit_code == 3);        // invalid spec
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("theorem subcommand") {
    RunResult r = run("theorem --a 0.5 --N 0 --x -1 --mode both");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(std::abs(j["closed"]["re"].get<double>() - 8.0 / 9.0) < 1e-12);
    CHECK(j["residual"].get<double>() <= 1e-12);

    r = run("theorem --a 0.5 --N 0 --x 1 --mode both");
    j = json::parse(r.out);
    CHECK(j["limit_path"] == true);
    CHECK(std::abs(j["closed"]["re"].get<double>() - 1.2337005501361697) < 1e-7);

    r = run("theorem --a 1 --N 1 --x 0 --mode both");
    j = json::parse(r.out);
    CHECK(std::abs(j["closed"]["re"].get<double>() - 1.0) < 1e-12);

    CHECK(run("theorem --a 0.5 --N 0 --x 3 --mode closed").exit_code == 3);
}

TEST_CASE("check subcommand: eq20 exact") {
    RunResult r = run("check --suite eq20 --grid k=0:30 --exact");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["aggregate"]["pass"] == true);
    CHECK(j["aggregate"]["max_residual"].get<double>() == 0.0);
    CHECK(j["aggregate"]["run"] == 31);
}

TEST_CASE("check subcommand: factor_x") {
    RunResult r = run("check --suite factor_x --grid x=-2:0.9:0.05");
    CHECK(r.exit_code == 0);
}

TEST_CASE("check exit codes") {
    CHECK(run("check --suite nosuch").exit_code == 2);
    CHECK(run("check --suite eq20 --grid k=bogus").exit_code == 2);
}

TEST_CASE("determinism and round trip") {
    const std::string args = "check --suite entry16 --seed 7 --grid n=20";
    const RunResult r1 = run(args);
    const RunResult r2 = run(args);
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);

    const ramasum::CheckReport rep = ramasum::CheckReport::from_json(r1.out);
    CHECK(rep.to_json() == r1.out.substr(0, rep.to_json().size()));
    CHECK(rep.points.size() == 20);
}

TEST_CASE("csv and json carry identical values") {
    const RunResult rj = run("check --suite eq20 --grid k=0:5 --exact");
    const RunResult rc = run("check --suite eq20 --grid k=0:5 --exact --format csv");
    const json j = json::parse(rj.out);
    // csv: header + 6 rows
    std::size_t rows = 0;
    std::string line;
    std::istringstream is(rc.out);
    std::vector<std::string> lines;
    while (std::getline(is, line)) lines.push_back(line);
    rows = lines.size() - 1;
    CHECK(rows == j["points"].size());
    for (std::size_t i = 0; i < rows; ++i) {
        const double lhs_json = j["points"][i]["lhs"]["re"].get<double>();
        // column 1 (after k) is lhs_re
        std::istringstream ls(lines[i + 1]);
        std::string cell;
        std::getline(ls, cell, ',');  // k
        std::getline(ls, cell, ',');  // lhs_re
        CHECK(std::stod(cell) == lhs_json);
    }
}

TEST_CASE("replay subcommand") {
    RunResult r = run("replay --a 0.5 --x 0.3 --N 2 --eps-decades 2:4");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    const double order = j["fitted_order"].get<double>();
    CHECK(order >= 0.8);
    CHECK(order <= 1.2);

    r = run("replay --a 0.5 --x 0 --N 0 --eps-decades 3:3");
    const json j2 = json::parse(r.out);
    CHECK(j2["residuals"][0].get<double>() <= 1e-2);

    CHECK(run("replay --a 0.5 --x 1.5 --N 0 --eps-decades 2:3").exit_code == 3);
}
