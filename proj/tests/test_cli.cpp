#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <unistd.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(FQSUM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("compute prints certified truncated digits") {
    RunResult r = run("compute --q 2 --k 1 --degree-bound 60 --bits 256 --digits 10");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1.4676602238\n");
}

TEST_CASE("compute rejects non prime powers with a usage error") {
    RunResult r = run("compute --q 6 --k 1");
    CHECK(r.exit_code == 3);
}

TEST_CASE("compute reports insufficient certified width") {
    RunResult r = run("compute --q 2 --k 2 --degree-bound 8 --digits 30");
    CHECK(r.exit_code == 2);
}

TEST_CASE("table output is deterministic and carries the fixed header") {
    std::string args = "table --q 3,2 --kmin 1 --kmax 3 --degree-bound 30 --bits 128 --format csv";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("k,q,value,lo,hi,defect_lo,defect_hi\n", 0) == 0);
    // Rows come k-major, q ascending inside each k.
    auto k1q2 = a.out.find("\n1,2,");
    auto k1q3 = a.out.find("\n1,3,");
    auto k2q2 = a.out.find("\n2,2,");
    CHECK(k1q2 != std::string::npos);
    CHECK(k1q2 < k1q3);
    CHECK(k1q3 < k2q2);
}

TEST_CASE("parallel table matches serial table") {
    std::string base = "table --q 2,3,4 --kmin 1 --kmax 2 --degree-bound 24 --bits 128";
    RunResult serial = run(base + " --jobs 1");
    RunResult parallel = run(base + " --jobs 3");
    CHECK(serial.exit_code == 0);
    CHECK(parallel.exit_code == 0);
    CHECK(serial.out == parallel.out);
}

TEST_CASE("verify oracle exits zero on a small field") {
    RunResult r = run("verify oracle --q 2 --maxdeg 8");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("holds") != std::string::npos);
    CHECK(r.out.find("fails") == std::string::npos);
}

TEST_CASE("verify banks-martin surfaces undecided cells via exit code 2") {
    RunResult r = run("verify banks-martin --q 2 --kmax 3 --degree-bound 2");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("undecided") != std::string::npos);
}

TEST_CASE("verify reports failed claims via exit code 1") {
    // The per-q bound crosses e^gamma past q = 19, so widening the sweep
    // must produce certified failures, not undecideds.
    RunResult r = run("verify universal --qmax 23");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("fails  universal-q23") != std::string::npos);
}

TEST_CASE("cache subcommands") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("fqsum_cli_cache_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    std::string flag = " --cache-dir " + dir.string();

    RunResult build = run("cache build irreducible --q 2 --degree-bound 40" + flag);
    CHECK(build.exit_code == 0);
    CHECK(fs::exists(dir / "irreducible_q2_N40.json"));

    RunResult inspect = run("cache inspect" + flag);
    CHECK(inspect.exit_code == 0);
    CHECK(inspect.out.find("ok      irreducible_q2_N40.json") != std::string::npos);

    RunResult clear = run("cache clear all" + flag);
    CHECK(clear.exit_code == 0);
    CHECK(!fs::exists(dir / "irreducible_q2_N40.json"));
    fs::remove_all(dir);
}

TEST_CASE("compute json sidecar") {
    RunResult r = run("compute --q 2 --k 2 --degree-bound 30 --json -");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"lo\"") != std::string::npos);
    CHECK(r.out.find("\"defect_hi\"") != std::string::npos);
}
