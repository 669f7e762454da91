#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "cstrig/parse.hpp"

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const char* bin = std::getenv("CSTRIG_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

}  // namespace

TEST_CASE("algebra info") {
    CliResult r = run_cli("--algebra E7 algebra info");
    CHECK(r.status == 0);
    CHECK(r.out.find("rank: 7") != std::string::npos);
    CHECK(r.out.find("positive roots: 63") != std::string::npos);
    CHECK(r.out.find("weyl order: 2903040") != std::string::npos);
    CHECK(r.out.find("133 912 8645 365750 27664 1539 56") != std::string::npos);
}

TEST_CASE("orbit sizes") {
    CliResult r = run_cli("--algebra E7 orbit 0,0,0,0,0,0,0");
    CHECK(r.status == 0);
    CHECK(r.out == "orbit size: 1\n");
    CliResult r7 = run_cli("--algebra E7 orbit 0,0,0,0,0,0,1");
    CHECK(r7.out == "orbit size: 56\n");
}

TEST_CASE("multiplicity row format") {
    CliResult r = run_cli("--algebra E7 mult 1,0,0,0,0,0,0");
    CHECK(r.status == 0);
    CHECK(r.out == "M(1000000):1  M(0000000):7\n");
}

TEST_CASE("conversions and eigenpolynomials") {
    CHECK(run_cli("--algebra E7 m2z 1,0,0,0,0,0,0").out == "z1 - 7\n");
    CHECK(run_cli("--algebra E7 char2z 0,0,0,0,0,0,1").out == "z7\n");
    CHECK(run_cli("--algebra E7 jacobi 0,0,0,0,0,0,1").out == "z7\n");

    CliResult p1 = run_cli("--algebra E7 jacobi 1,0,0,0,0,0,0");
    CHECK(p1.status == 0);
    CHECK(cstrig::parse_zk_expression(p1.out, 7) ==
          cstrig::parse_zk_expression("z1 + (7 (-1 + k))/((1 + 17 k))", 7));

    // specialization at the character point
    CHECK(run_cli("--algebra E7 jacobi 1,0,0,0,0,0,0 --kappa 1").out == "z1\n");
}

TEST_CASE("mathematica output re-parses") {
    CliResult r = run_cli("--algebra E7 --format mathematica jacobi 0,0,0,0,0,0,2");
    CHECK(r.status == 0);
    CHECK(r.out.find("*") != std::string::npos);
    CHECK(cstrig::parse_zk_expression(r.out, 7) ==
          cstrig::parse_zk_expression(
              "z7^2 + (-2 z6)/((1 + k)) + (-12 k z1)/((1 + k) (1 + 5 k))"
              " + (-2 (1 + 59 k^2))/((1 + k) (1 + 5 k) (1 + 9 k))",
              7));
}

TEST_CASE("generalized and classical series") {
    CliResult g = run_cli("--algebra E7 cg 0,0,0,0,0,0,1 0,0,0,0,0,0,1");
    CHECK(g.status == 0);
    CHECK(g.out.find("P(0000002): 1") != std::string::npos);
    CHECK(g.out.find("P(0000010): 2/(k + 1)") != std::string::npos);

    CliResult c = run_cli("--algebra E7 cg 0,0,0,0,0,0,1 0,0,0,0,0,0,1 --classical");
    CHECK(c.out.find("chi(0000002): 1") != std::string::npos);
    CHECK(c.out.find("chi(0000000): 1") != std::string::npos);

    CliResult at = run_cli("--algebra E7 cg 0,0,0,0,0,0,1 0,0,0,0,0,0,1 --kappa 1");
    CHECK(at.out.find("P(0000010): 1") != std::string::npos);
}

TEST_CASE("error category exit codes") {
    CHECK(run_cli("--algebra Q9 algebra info").status == 2);   // unsupported algebra
    CHECK(run_cli("--algebra E8 algebra info").status == 2);   // unsupported rank
    CHECK(run_cli("--algebra E7 mult 1,0").status == 2);       // malformed weight
    CHECK(run_cli("--algebra E7 mult 1,0,0,0,0,0,x").status == 2);
    CHECK(run_cli("--algebra E7 orbit 0,0,0,0,0,0,-1").status == 2);  // non-dominant
    CHECK(run_cli("--algebra E7 jacobi 0,0,0,0,0,0,2 --kappa -1").status == 3);  // pole
    CHECK(run_cli("--algebra E7 jacobi 0,0,0,0,0,0,2 --kappa -1/5").status == 3);
    CHECK(run_cli("--threads 0 --algebra A1 algebra info").status == 2);
    CHECK(run_cli("nonsense").status == 2);                    // usage
}

TEST_CASE("output determinism and cache transparency") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / ("cstrig-cli-cache-" + std::to_string(::getpid()));
    fs::remove_all(tmp);

    std::string args = "--algebra A3 jacobi 1,0,1";
    CliResult plain1 = run_cli(args);
    CliResult plain2 = run_cli(args);
    CHECK(plain1.status == 0);
    CHECK(plain1.out == plain2.out);

    std::string cached = "--algebra A3 --cache-dir " + tmp.string() + " jacobi 1,0,1";
    CliResult cold = run_cli(cached);
    CliResult warm = run_cli(cached);
    CHECK(cold.status == 0);
    CHECK(cold.out == plain1.out);
    CHECK(warm.out == plain1.out);
    CHECK(fs::exists(tmp));
    fs::remove_all(tmp);
}

TEST_CASE("operator table output") {
    CliResult r = run_cli("--algebra A1 operator");
    CHECK(r.status == 0);
    CHECK(r.out.find("a[1][1] = z1^2 - 4") != std::string::npos);
    CHECK(r.out.find("b[1] = (2 k + 1) z1") != std::string::npos);

    CHECK(run_cli("--algebra A1 operator --part b0").out == "b0[1] = z1\n");
    CHECK(run_cli("--algebra A1 operator --part b1").out == "b1[1] = 2 z1\n");

    CliResult b7 = run_cli("--algebra E7 operator --part b0");
    CHECK(b7.out.find("b0[7] = 3 z7") != std::string::npos);
}

TEST_CASE("json output is well formed") {
    CliResult r = run_cli("--algebra E7 --format json mult 1,0,0,0,0,0,0");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"multiplicities\"") != std::string::npos);
    CHECK(r.out.find("\"7\"") != std::string::npos);
}
