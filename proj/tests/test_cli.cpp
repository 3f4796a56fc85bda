#include <catch2/catch.hpp>

#include <array>
#include <cstdio>
#include <string>

// End-to-end checks against the built binary.

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(FFDYN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace

TEST_CASE("decompose subcommand", "[cli]") {
    auto r = run_cli("decompose --q 3 --n 12 --op delta");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3(O_1*T_27)+8(O_3*T_27)+3(O_8*T_27)+818(O_24*T_27)\n");

    auto r2 = run_cli("decompose --q 2 --n 1 --op delta");
    CHECK(r2.exit_code == 0);
    CHECK(r2.out == "(O_1*T_2)\n");

    // identical config gives byte-identical output
    auto r3 = run_cli("decompose --q 3 --n 12 --op delta");
    CHECK(r3.out == r.out);
}

TEST_CASE("decompose with explicit polynomial and convention", "[cli]") {
    // delta written out as a column polynomial: y^{n-1} - 1
    auto row = run_cli("decompose --q 3 --n 12 --op y+2");
    auto col = run_cli("decompose --q 3 --n 12 --op y^11+2 --convention column");
    CHECK(row.exit_code == 0);
    CHECK(col.exit_code == 0);
    CHECK(row.out == col.out);
}

TEST_CASE("parse failures exit with code 2", "[cli]") {
    CHECK(run_cli("decompose --q 3 --n 12 --op 'y+y'").exit_code == 2);
    CHECK(run_cli("decompose --q 3 --n 12 --op 5*y").exit_code == 2);
    CHECK(run_cli("decompose --q 6 --n 5 --op delta").exit_code == 2);
    CHECK(run_cli("classify --q 3 --n 9 --op delta --seq arithlog").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("classify subcommand", "[cli]") {
    auto r = run_cli("classify --q 3 --n 7 --op delta --seq mult:2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verdict: almost_most") != std::string::npos);
    auto r2 = run_cli("classify --q 3 --n 5 --op delta --seq arithlog");
    CHECK(r2.out.find("verdict: most") != std::string::npos);
    auto r3 = run_cli("classify --q 2 --n 5 --op delta --seq arithlog");
    CHECK(r3.out.find("verdict: most") == std::string::npos);
    auto r4 = run_cli("classify --q 3 --n 5 --op delta --seq explicit:0,1,1,0,0");
    CHECK(r4.out == r2.out);
}

TEST_CASE("orders debug output", "[cli]") {
    auto r = run_cli("decompose --q 3 --n 12 --op delta --orders");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "orders (y+1): 1,3,3\n"
          "orders (y^2+1): 8,24,24\n"
          "3(O_1*T_27)+8(O_3*T_27)+3(O_8*T_27)+818(O_24*T_27)\n");
}

TEST_CASE("table subcommand emits rows in input order", "[cli]") {
    auto r = run_cli("table --q 2 --n-list 3,5,7 --jobs 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "3 2 (O_3*T_2)+(O_1*T_2)\n"
          "5 2 (O_15*T_2)+(O_1*T_2)\n"
          "7 10 9(O_7*T_2)+(O_1*T_2)\n");
}

TEST_CASE("table keeps emitting rows past a failed one", "[cli]") {
    auto r = run_cli("table --q 2 --n-list 0,3");
    CHECK(r.exit_code == 3);
    CHECK(r.out == "3 2 (O_3*T_2)+(O_1*T_2)\n");
}

TEST_CASE("json output and shorthand equivalence", "[cli]") {
    auto shifted = run_cli("decompose --q 2 --n 6 --op shift --json");
    auto spelled = run_cli("decompose --q 2 --n 6 --op y --json");
    CHECK(shifted.exit_code == 0);
    CHECK(shifted.out == spelled.out);
    CHECK(shifted.out.find("\"cycles\"") != std::string::npos);

    auto allones = run_cli("decompose --q 3 --n 7 --op allones");
    CHECK(allones.exit_code == 0);
    CHECK(allones.out == "3(O_1*T_729)\n");
}

TEST_CASE("verify remark4 reflects the idempotent degenerate pairs", "[cli]") {
    auto r = run_cli("verify remark4");
    CHECK(r.exit_code != 0);
    CHECK(r.out.find("remark4 q=3 n=7 FAILS") != std::string::npos);
}
