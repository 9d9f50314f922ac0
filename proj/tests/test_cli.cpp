#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(WL2_BIN) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "wl2-cli-test";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("fixtures and growth") {
    std::string pent = scratch("pentagon.cox");
    REQUIRE(run("fixtures kgon 5 -o " + pent).code == 0);
    auto g = run("growth " + pent);
    CHECK(g.code == 0);
    CHECK(contains(g.out, "1/W = (1 - 3*t + t^2) / (1 + t)^2"));

    auto r = run("rho " + pent);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "rho = 0.38196601125"));
    CHECK(contains(r.out, " in ["));

    auto cube = run("fixtures cube-boundary 6");
    CHECK(cube.code == 0);
    int cells = 0;
    for (std::size_t i = 0; i < cube.out.size(); ++i)
        if (cube.out[i] == '\n') ++cells;
    CHECK(cells == 728 + 2);  // header and pl line
}

TEST_CASE("classify and euler") {
    std::string pent = scratch("pentagon.cox");
    run("fixtures kgon 5 -o " + pent);
    auto c = run("classify " + pent);
    CHECK(c.code == 0);
    auto j = run("--json euler --q 1/3 " + pent);
    CHECK(j.code == 0);
    CHECK(contains(j.out, "\"chi_q\""));
}

TEST_CASE("certificates through the command line") {
    std::string cert = scratch("kn.cert");
    auto k = run("cert kn --n 4 --m 3");
    CHECK(k.code == 0);
    CHECK(contains(k.out, "L²_q H₂(Σ)=0 for q≤1"));
    {
        std::ofstream(cert) << k.out;
    }
    auto v = run("cert --verify " + cert);
    CHECK(v.code == 0);

    auto js = run("--json cert kn --n 4 --m 3");
    CHECK(js.code == 0);
    std::string jcert = scratch("kn.json");
    {
        std::ofstream(jcert) << js.out;
    }
    CHECK(run("cert --verify " + jcert).code == 0);

    CHECK(run("cert kn --n 5 --m 3").code == 2);

    std::string pent = scratch("pentagon.cox");
    run("fixtures kgon 5 -o " + pent);
    CHECK(run("cert stars --q 1 --k 1 " + pent).code == 2);
}

TEST_CASE("usage and errors") {
    CHECK(run("no-such-command").code == 64);
    CHECK(run("growth /nonexistent/file.cox").code == 1);
    CHECK(run("--help").code == 0);
    CHECK(run("cert").code == 64);
}
