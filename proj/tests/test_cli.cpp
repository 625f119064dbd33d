// Drives the built CLI binary end to end: output payloads, exit codes and
// the byte-determinism contract.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SCHUBERT_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("params reports all formulas") {
    RunResult r = run_cli("params --l 2 --m 4 --alpha 2,4 --q 2");
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["n"]["cells"] == 19);
    CHECK(rep["n"]["nested_sums"] == 19);
    CHECK(rep["n"]["gv"] == 19);
    CHECK(rep["n"]["agree"] == true);
    CHECK(rep["k"]["determinant"] == 5);
    CHECK(rep["k"]["downset"] == 5);
    CHECK(rep["k"]["agree"] == true);
    CHECK(rep["d_lower_gv"] == 6);
    CHECK(rep["d_upper"] == 8);
    CHECK(rep["delta"] == 3);
}

TEST_CASE("params trivial code") {
    RunResult r = run_cli("params --l 2 --m 4 --alpha 1,2 --q 5");
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["n"]["cells"] == 1);
    CHECK(rep["k"]["determinant"] == 1);
}

TEST_CASE("params rejects non prime power q") {
    CHECK(run_cli("params --l 2 --m 4 --alpha 2,4 --q 6").exit_code == 2);
}

TEST_CASE("params rejects inconsistent l") {
    CHECK(run_cli("params --l 3 --m 4 --alpha 2,4 --q 2").exit_code == 2);
}

TEST_CASE("identities sweep passes") {
    RunResult r = run_cli("identities --l 3 --m 5 --q 2,3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("identities: OK") != std::string::npos);
}

TEST_CASE("identities single tuple") {
    RunResult r = run_cli("identities --alpha 1,3,4,7 --m 7 --q 2,3");
    CHECK(r.exit_code == 0);
}

TEST_CASE("identities rejects empty q list") {
    CHECK(run_cli("identities --l 2 --m 4 --q ,").exit_code == 2);
}

TEST_CASE("distance on the divisor of G(2,4)") {
    RunResult r = run_cli("distance --m 4 --alpha 2,4 --q 2 --r-max 2 --assert-conjecture");
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["n"] == 19);
    CHECK(rep["k"] == 5);
    CHECK(rep["d"] == json::array({8, 12}));
    CHECK(rep["conjecture_holds"] == true);
    CHECK(rep.find("elapsed_ms") == rep.end());
}

TEST_CASE("distance on the full grassmannian of G(2,4)") {
    RunResult r = run_cli("distance --m 4 --alpha 3,4 --q 2 --r-max 3");
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["d"] == json::array({16, 24, 28}));
}

TEST_CASE("weights includes the distribution") {
    RunResult r = run_cli("weights --m 4 --alpha 1,2 --q 2");
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["distribution"]["0"] == 1);
    CHECK(rep["distribution"]["1"] == 1);
}

TEST_CASE("distance refuses over budget") {
    // full G(3,6) at q=3: (3^20 - 1)/2 hyperplanes, far over the default cap
    RunResult r = run_cli("distance --m 6 --alpha 4,5,6 --q 3");
    CHECK(r.exit_code == 3);
}

TEST_CASE("distance output is byte identical across runs and worker counts") {
    RunResult a = run_cli("distance --m 4 --alpha 2,4 --q 3 --r-max 2 --workers 1");
    RunResult b = run_cli("distance --m 4 --alpha 2,4 --q 3 --r-max 2 --workers 4");
    RunResult c = run_cli("distance --m 4 --alpha 2,4 --q 3 --r-max 2 --workers 4");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
}

TEST_CASE("matrix file format and determinism") {
    const std::string path1 = "/tmp/schubert_cli_test_m1.txt";
    const std::string path2 = "/tmp/schubert_cli_test_m2.txt";
    CHECK(run_cli("matrix --m 4 --alpha 2,4 --q 2 --out " + path1 + " --workers 2").exit_code == 0);
    CHECK(run_cli("matrix --m 4 --alpha 2,4 --q 2 --out " + path2 + " --workers 7").exit_code == 0);
    std::string body1 = read_file(path1);
    CHECK(body1 == read_file(path2));
    std::istringstream is(body1);
    std::string header;
    std::getline(is, header);
    CHECK(header == "q=2 l=2 m=4 alpha=(2,4) n=19 k=5");
    int rows = 0;
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 5);
    std::remove(path1.c_str());
    std::remove(path2.c_str());
}

TEST_CASE("matrix single point code") {
    const std::string path = "/tmp/schubert_cli_test_m3.txt";
    CHECK(run_cli("matrix --m 4 --alpha 1,2 --q 3 --out " + path).exit_code == 0);
    std::istringstream is(read_file(path));
    std::string header, row;
    std::getline(is, header);
    std::getline(is, row);
    CHECK(header == "q=3 l=2 m=4 alpha=(1,2) n=1 k=1");
    CHECK(row == "1");
    std::remove(path.c_str());
}

TEST_CASE("matrix to unwritable path exits 4") {
    CHECK(run_cli("matrix --m 4 --alpha 2,4 --q 2 --out /nonexistent-dir/x.txt").exit_code == 4);
}

TEST_CASE("enumerate dumps points in lex coordinate order") {
    RunResult r = run_cli("enumerate --m 4 --alpha 2,4 --q 2");
    REQUIRE(r.exit_code == 0);
    std::istringstream is(r.out);
    std::string line;
    int lines = 0;
    std::string first;
    while (std::getline(is, line))
        if (!line.empty()) {
            if (lines == 0) first = line;
            ++lines;
        }
    CHECK(lines == 19);
    CHECK(first == "1,0,0,0,0,0");  // the minimal cell: span(e1, e2)
}

TEST_CASE("table emits the documented columns") {
    RunResult r = run_cli("table --l 2 --m 4 --q 2 --with-distance");
    REQUIRE(r.exit_code == 0);
    std::istringstream is(r.out);
    std::string header;
    std::getline(is, header);
    CHECK(header ==
          "q,ell,m,alpha,delta,n_cells,n_na2,n_gv,k_det,k_limit,k_ap,gv_lower,mdc_upper,"
          "d_measured,mdc_holds");
    // row for alpha=(2,4) at q=2
    std::string line;
    bool found = false;
    while (std::getline(is, line))
        if (line.find("\"(2,4)\"") != std::string::npos && line.rfind("2,2,4", 0) == 0) {
            found = true;
            CHECK(line == "2,2,4,\"(2,4)\",3,19,19,19,5,5,5,6,8,8,true");
        }
    CHECK(found);
}

TEST_CASE("missing subcommand is invalid input") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("params --q 2").exit_code == 2);  // no alpha/m
}

TEST_CASE("unsupported format and zero budgets are invalid input") {
    CHECK(run_cli("params --alpha 2,4 --m 4 --q 2 --format csv").exit_code == 2);
    CHECK(run_cli("distance --alpha 2,4 --m 4 --q 2 --budget-points 0").exit_code == 2);
}
