#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    Run r;
    std::string cmd = std::string(LIEAUT_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

} // namespace

TEST_CASE("exit codes") {
    CHECK(run("roots --type E6").status == 0);
    CHECK(run("frobnicate").status == 1);
    CHECK(run("roots --type E6 --bogus").status == 1);
    CHECK(run("roots --type X9").status == 1);
    CHECK(run("hilb --type A4 --node 9 --dim 1").status == 1);
    CHECK(run("adjoint --type C3 --case 1").status == 2);
    CHECK(run("jordan witness --group Z_3 --n 5").status == 2);
    CHECK(run("witness --type E6 --d 5").status == 2);
}

TEST_CASE("json reports") {
    Run r = run("--json springer --type F4");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "lieaut.report/1");
    CHECK(j["command"] == "springer");
    CHECK(j["degrees"] == nlohmann::json::array({2, 6, 8, 12}));

    Run e = run("--json jordan witness --group Z_3 --n 5");
    auto err = nlohmann::json::parse(e.out);
    CHECK(err.contains("error"));

    Run f = run("--json jordan feasible --group A5 --n 32");
    REQUIRE(f.status == 0);
    CHECK(nlohmann::json::parse(f.out)["feasible"] == true);
}

TEST_CASE("output is deterministic") {
    for (std::string args : {"--json stab --type G2", "--json jordan witness --group A5 --n 12",
                             "--json adjoint --type F4 --case 4 --seed 3", "hilb --type E6 --node 1 --dim 4"}) {
        CAPTURE(args);
        Run a = run(args), b = run(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("tables verify") {
    Run r = run("--json tables --verify");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "tables");
}
