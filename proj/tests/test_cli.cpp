#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

// stdout only; stderr goes to /dev/null
Run run(const std::string& args) {
    Run r;
    const std::string cmd = std::string(ODDARC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), p)) r.out += buf.data();
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

int lines(const std::string& s) {
    int k = 0;
    for (char c : s) k += c == '\n';
    return k;
}

}  // namespace

TEST_CASE("mul reproduces the worked product") {
    const Run r = run("mul --n 2 --rule default --x \"[(())|()()|{}]\" --y \"[()()|(())|{1}]\"");
    CHECK(r.status == 0);
    CHECK(r.out == "-1*[(())|(())|{1,2}]\n");
    const Run o = run("mul --n 2 --x \"[(())|()()|{}]\" --y \"[()()|(())|{1}]\" --oracle");
    CHECK(o.status == 0);
    CHECK(o.out.find("oracle: agree") != std::string::npos);
    const Run e = run("mul --n 2 --even --x \"[(())|()()|{}]\" --y \"[()()|(())|{1}]\"");
    CHECK(e.out == "1*[(())|(())|{1,2}]\n");
}

TEST_CASE("bn lists the matchings") {
    const Run r = run("bn --n 3");
    CHECK(r.status == 0);
    CHECK(lines(r.out) == 5);
    CHECK(lines(run("bn --n 2").out) == 2);
}

TEST_CASE("centers, quotient and binomials") {
    CHECK(run("center --n 2 --flavor odd").out.rfind("graded_rank: 1,3,2", 0) == 0);
    CHECK(run("center --n 2 --flavor odd-ring").out.rfind("graded_rank: 1,0,2", 0) == 0);
    const Run s = run("springer --n 2 --ranks");
    CHECK(s.out.find("quotient_rank: 1,3,2") != std::string::npos);
    CHECK(run("springer --n 2 --check-iso").status == 0);
    CHECK(run("qbinom --m 4 --k 2").out == "q^4 + q^2 + 2 + q^-2 + q^-4\n");
}

TEST_CASE("associator commands") {
    const Run t = run("assoc --n 2 --phi0");
    CHECK(t.status == 0);
    CHECK(lines(t.out) == 16);
    CHECK(run("assoc --n 2 --cocycle").status == 0);
    CHECK(run("assoc --n 2 --compare ord").status == 0);
}

TEST_CASE("verify and exit codes") {
    const Run v = run("verify --n 2");
    CHECK(v.status == 0);
    CHECK(v.out.find("OK") != std::string::npos);
    CHECK(run("mul --n 2 --x \"[(())|()()|{9}]\" --y \"[()()|(())|{}]\"").status == 2);
    CHECK(run("bn --n 0").status == 2);
    CHECK(run("").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("verify --n 2 --suite nope").status == 2);
}
