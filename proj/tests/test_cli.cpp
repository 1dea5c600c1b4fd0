#include "cli_harness.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using harness::run_cli;

TEST_CASE("compute h prints the schema and the right value") {
    const auto r = run_cli("compute --kind h --k 2 --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"schema\":\"harmonia/1\"") != std::string::npos);
    CHECK(r.output.find("\"kind\":\"h\"") != std::string::npos);
    CHECK(r.output.find("\"value\":1.25") != std::string::npos);
    CHECK(r.output.find("\"oracle\":1.25") != std::string::npos);
}

TEST_CASE("compute euler-sum and zeta-odd headline values") {
    const auto e = run_cli("compute --kind euler-sum --k 0 --r 1 --parity odd");
    CHECK(e.exit_code == 0);
    CHECK(e.output.find("\"value\":2.404113806") != std::string::npos);
    const auto z = run_cli("compute --kind zeta-odd --k 1 --rep tan");
    CHECK(z.exit_code == 0);
    CHECK(z.output.find("\"value\":1.202056903") != std::string::npos);
}

TEST_CASE("compute limits via n=inf") {
    const auto r = run_cli("compute --kind s --k 1 --m 4 --n inf");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"value\":0.78539816339") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("compute --kind nope").exit_code == 2);
    CHECK(run_cli("compute").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("table --kind h").exit_code == 2);                      // missing grid
    CHECK(run_cli("compute --kind c --k 1 --m 1 --n inf").exit_code == 2);  // divergent C^1_1
    CHECK(run_cli("table --kind h --grid \"k=2;n=1..3\" --out /nonexistent-dir/x.csv").exit_code ==
          2);
}

TEST_CASE("table emits a deterministic CSV grid") {
    const auto r = run_cli("table --kind h --grid \"k=1..4;n=1..10\" --format csv");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string line;
    int count = 0;
    bool header_ok = false;
    while (std::getline(lines, line)) {
        if (count == 0) header_ok = line == "k,n,value";
        ++count;
    }
    CHECK(header_ok);
    CHECK(count == 41);  // header + 40 rows
    const auto again = run_cli("table --kind h --grid \"k=1..4;n=1..10\" --format csv");
    CHECK(again.output == r.output);
}

TEST_CASE("table json mode and file output") {
    const std::string path = "/tmp/harmonia_test_table.json";
    std::remove(path.c_str());
    const auto r =
        run_cli("table --kind theorem2 --grid \"m=2,3,4;n=100\" --format json --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string body = ss.str();
    CHECK(body.find("\"m\":2") != std::string::npos);
    CHECK(body.find("\"m\":4") != std::string::npos);
    CHECK(body.find("\"value\":") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("repeated compute invocations are byte-identical") {
    const auto a = run_cli("compute --kind h --k 3 --n 7 --variant sin-2pi-k");
    const auto b = run_cli("compute --kind h --k 3 --n 7 --variant sin-2pi-k");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("verify exact suite passes quickly") {
    const auto r = run_cli("verify --suite exact");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all checks passed") != std::string::npos);
    CHECK(r.output.find(" NO") == std::string::npos);
}

TEST_CASE("corrupted tolerance scale fails the limits suite with exit 1") {
    const auto r = run_cli("verify --suite limits --tol-scale 1e-6");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find(" NO") != std::string::npos);
}

TEST_CASE("unknown suite exits 2") {
    CHECK(run_cli("verify --suite nonsense").exit_code == 2);
}

TEST_CASE("limits subcommand tabulates a trend") {
    const auto r = run_cli("limits --theorem 3 --k 1 --n-list 25,50,100 --check");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("error shrinking") != std::string::npos);
}

TEST_CASE("HARMONIA_MAX_PANELS caps the panel budget") {
    // a handful of panels cannot resolve the n = 40 oscillation; the reported
    // error estimate balloons while the full run stays tight
    const auto starved =
        run_cli("compute --kind h --k 2 --n 40", "HARMONIA_MAX_PANELS=4");
    const auto full = run_cli("compute --kind h --k 2 --n 40");
    CHECK(starved.exit_code == 0);
    CHECK(full.exit_code == 0);
    const auto err_of = [](const std::string& out) {
        const auto pos = out.find("\"err_estimate\":");
        return std::stod(out.substr(pos + 15));
    };
    CHECK(err_of(starved.output) > 1e3 * err_of(full.output));
    CHECK(full.output.find("\"discrepancy\":") != std::string::npos);
}
