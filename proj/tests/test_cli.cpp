#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"
#include "zecklucas/core.hpp"

// End-to-end checks against the built binary (path injected by the build).

namespace {

struct RunResult {
    int status = -1;
    std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(ZLCALC_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

}  // namespace

TEST_CASE("codec commands") {
    CHECK(run("encode 50").output == "100000100\n");
    CHECK(run("encode 0").output == "0\n");
    CHECK(run("decode 10001000").output == "33\n");
    CHECK(run("decode 0").output == "0\n");
}

TEST_CASE("arithmetic commands print bits = decimal") {
    CHECK(run("add 33 19").output == "100001010 = 52\n");
    CHECK(run("add z:10001000 z:1000010").output == "100001010 = 52\n");
    CHECK(run("sub 42 32").output == "10100 = 10\n");
    CHECK(run("mul 17 10").output == "10100000000 = 170\n");
    CHECK(run("divmod 250 17").output == "100100 = 14\n100010 = 12\n");
    CHECK(run("add 33 19 --format bits").output == "100001010\n");
    CHECK(run("add 33 19 --format dec").output == "52\n");
}

TEST_CASE("the two sides of the default format agree") {
    for (const char* args : {"add 123456 98765", "mul 4181 2584", "sub 100000 99999"}) {
        const RunResult r = run(args);
        REQUIRE(r.status == 0);
        const auto sep = r.output.find(" = ");
        REQUIRE(sep != std::string::npos);
        const std::string bits = r.output.substr(0, sep);
        const std::string dec = r.output.substr(sep + 3, r.output.size() - sep - 4);
        CHECK(zeck::decode(zeck::parse_bits(bits)) == zeck::BigInt(dec));
    }
}

TEST_CASE("exit codes") {
    CHECK(run("add 1 2").status == 0);
    CHECK(run("nonsense").status == 1);
    CHECK(run("add 1").status == 1);
    CHECK(run("add 1 2 --format hex").status == 1);

    const RunResult neg = run("sub 32 42");
    CHECK(neg.status == 2);
    CHECK(neg.output.find("NegativeResult") != std::string::npos);

    CHECK(run("divmod 5 0").status == 2);
    CHECK(run("encode -9").status == 2);
    CHECK(run("decode 11").status == 2);    // not canonical
    CHECK(run("decode 102").status == 2);   // bad character
    CHECK(run("add z:12 1").status == 2);
}

TEST_CASE("identical invocations are byte-identical") {
    const std::string args = "audit --prop all --k 3:8 --n 3:7";
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.status == 0);
    CHECK(a.output == b.output);

    const RunResult c = run("selftest --max 60");
    const RunResult d = run("selftest --max 60");
    CHECK(c.status == 0);
    CHECK(c.output == d.output);
}

TEST_CASE("audit csv report and summary") {
    const RunResult r = run("audit --prop 1 --k 4:4 --n 3:3");
    CHECK(r.status == 0);
    CHECK(r.output.find("prop,branch,k,n,lhs,rhs,equal\n") != std::string::npos);
    CHECK(r.output.find("P1,EVEN_K,4,3,203,203,true\n") != std::string::npos);
    CHECK(r.output.find("P1: passed=1 failed=0 skipped=0\n") != std::string::npos);
}

TEST_CASE("audit json report to a file") {
    const std::string path = "/tmp/zlcalc_report.json";
    const RunResult r = run("audit --prop 5 --k 4:9 --n 3:5 --format json --out " + path);
    CHECK(r.status == 0);
    CHECK(r.output.find("P5: passed=12 failed=0 skipped=6\n") != std::string::npos);

    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string text;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) text.append(buf.data(), got);
    fclose(f);
    std::remove(path.c_str());

    const auto doc = nlohmann::json::parse(text);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 12);
    CHECK(doc[0].at("prop") == "P5");
    for (const auto& rec : doc) CHECK(rec.at("equal").get<bool>());
}

TEST_CASE("lucas-form diagnostic records the discrepancy without failing") {
    const RunResult r = run("audit --prop 5 --lucas-form --k 4:4 --n 3:3");
    CHECK(r.status == 0);  // the audit reports, it does not assert
    CHECK(r.output.find("P5,KMOD4_0,4,3,72,80,false\n") != std::string::npos);
    CHECK(r.output.find("P5: passed=0 failed=1 skipped=0\n") != std::string::npos);

    CHECK(run("audit --prop 1 --lucas-form --k 3:4 --n 3:4").status == 1);
}

TEST_CASE("selftest exit status reflects the sweep") {
    const RunResult r = run("selftest --max 40");
    CHECK(r.status == 0);
    CHECK(r.output.find("selftest: PASS") != std::string::npos);
}
