#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_data = "") {
    std::string cmd;
    if (stdin_data.empty()) {
        cmd = std::string(AUTLIN_CLI_PATH) + " " + args + " 2>/dev/null";
    } else {
        cmd = "printf '%b' \"" + stdin_data + "\" | " + std::string(AUTLIN_CLI_PATH) + " " +
              args + " 2>/dev/null";
    }
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), int(buf.size()), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("factor verb") {
    auto r = run("factor \"(y, x+y^2)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("recomposition ok") != std::string::npos);

    auto bad = run("factor \"(x, x*y)\"");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("NotAnAutomorphism") != std::string::npos);

    auto usage = run("factor");
    CHECK(usage.exit_code != 0);
}

TEST_CASE("compose and invert agree") {
    auto c = run("compose \"(x, y+x^2)\" \"(y, 2*x)\"");
    CHECK(c.exit_code == 0);
    CHECK(c.out.find("(y, y^2 + 2*x)") != std::string::npos);
    auto i = run("invert \"(y, 2*x)\"");
    CHECK(i.out.find("(1/2*y, x)") != std::string::npos);
}

TEST_CASE("rho verb emits a 7x7 with det 1") {
    auto r = run("rho --N 3 --word \"[(d0,t^2)]\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("det = 1") != std::string::npos);
    CHECK(r.out.find("dim 7") != std::string::npos);
}

TEST_CASE("verdict verb, json shape") {
    auto lin = run("--format json verdict --S \"SO(x^2+y^2)\"");
    CHECK(lin.exit_code == 0);
    CHECK(lin.out.find("\"LinearOverField\"") != std::string::npos);
    auto non = run("--format json verdict --S \"SO(x*y)\"");
    CHECK(non.out.find("\"NonlinearEvenOverRing\"") != std::string::npos);
    auto sl2 = run("--format json verdict --S SL2");
    CHECK(sl2.out.find("\"NonlinearEvenOverRing\"") != std::string::npos);
}

TEST_CASE("probe verbs") {
    CHECK(run("probe bs --p 7").out.find("holds") != std::string::npos);
    CHECK(run("probe sumprod --p 2 --r 2").out.find("holds") != std::string::npos);
    CHECK(run("probe gclass --p 3 --r 1").out.find("class 3") != std::string::npos);
    CHECK(run("probe emclass --p 2 --r 2").out.find("class 3") != std::string::npos);
    auto sep = run("probe separate --word \"t\" --primes 3");
    CHECK(sep.out.find("p = 3") != std::string::npos);
}

TEST_CASE("stdin batch") {
    auto r = run("word -", "(x, y + x^2)\\n(x + y^2, y)\\n");
    CHECK(r.exit_code == 0);
    // two word reports, one per line
    CHECK(r.out.find("(0;1)") != std::string::npos);
    CHECK(r.out.find("(1;0)") != std::string::npos);
}

TEST_CASE("seed determinism") {
    auto a = run("--seed 42 --format json classify --generators \"t, t+1\"");
    auto b = run("--seed 42 --format json classify --generators \"t, t+1\"");
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"Bad\"") != std::string::npos);
}

TEST_CASE("field flag") {
    auto f5 = run("--field Fp:5 factor \"(y, x+y^2)\"");
    CHECK(f5.exit_code == 0);
    CHECK(f5.out.find("recomposition ok") != std::string::npos);
    auto qt = run("--field Qt factor \"(x, y + t*x^2)\"");
    CHECK(qt.exit_code == 0);
}
