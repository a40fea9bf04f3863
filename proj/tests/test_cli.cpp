#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(QH_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe))
        output += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::string fixture(const std::string& name) {
    return std::string(QH_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("grade reports the non-symmetric cycle") {
    RunResult r = run("grade " + fixture("oriented_3cycle.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "no arrow positive function; non-symmetric cycle [a,b,c]\n");
}

TEST_CASE("homology of the collapse loop") {
    RunResult r = run("homology " + fixture("hexagon_loop.json") + " --max-degree 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "H_0 = Z\nH_1 = 0\n");
}

TEST_CASE("group rendering contract") {
    RunResult r = run("limit " + fixture("ab_tower.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "limit group: Z/8\n");
}

TEST_CASE("json output is byte-identical across runs") {
    for (const char* cmd :
         {"homology", "at", "sigma", "analyze"}) {
        std::string args = std::string(cmd) + " " +
                           fixture("hexagon_antipodal_loop.json") + " --format json";
        RunResult a = run(args);
        RunResult b = run(args);
        CHECK(a.exit_code == 0);
        CHECK(a.output == b.output);
        CHECK(!a.output.empty());
    }
    RunResult a = run("check --property thm-4.25 --seed 7 --format json");
    RunResult b = run("check --property thm-4.25 --seed 7 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("exit code 2 on malformed and invalid inputs") {
    RunResult missing = run("homology /nonexistent.json");
    CHECK(missing.exit_code == 2);

    std::string bad = std::string(QH_FIXTURE_DIR) + "/.truncated.json";
    std::ofstream(bad) << "{\"kind\": \"quiver\", \"vertices\": [1, ";
    RunResult truncated = run("analyze " + bad);
    CHECK(truncated.exit_code == 2);
    std::remove(bad.c_str());

    std::string dangling = std::string(QH_FIXTURE_DIR) + "/.dangling.json";
    std::ofstream(dangling)
        << R"({"kind":"quiver","vertices":[1,2],"arrows":[{"id":"a","src":1,"tgt":9}]})";
    RunResult invalid = run("analyze " + dangling);
    CHECK(invalid.exit_code == 2);
    std::remove(dangling.c_str());
}

TEST_CASE("truncated input reports a byte offset") {
    std::string bad = std::string(QH_FIXTURE_DIR) + "/.offset.json";
    std::ofstream(bad) << "{\"kind\": ";
    std::string cmd = std::string(QH_CLI_PATH) + " analyze " + bad + " 2>&1";
    std::array<char, 4096> buf{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe))
        output += buf.data();
    pclose(pipe);
    std::remove(bad.c_str());
    CHECK(output.find("byte") != std::string::npos);
}

TEST_CASE("check runs a named property and signals failures by exit code") {
    RunResult ok = run("check --property thm-2.4-roundtrip --seed 11");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("pass") != std::string::npos);

    RunResult unknown = run("check --property not-a-property");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("relative and excision fixtures run through the front door") {
    RunResult rel = run("relative " + fixture("a2_circle_basepoints.json") + " --max-degree 2");
    CHECK(rel.exit_code == 0);
    CHECK(rel.output.find("H_1 rel = Z") != std::string::npos);
    CHECK(rel.output.find("H_0 rel = 0") != std::string::npos);

    RunResult exc = run("excision " + fixture("excision_hexagon.json"));
    CHECK(exc.exit_code == 0);
    CHECK(exc.output.find("cover condition: holds") != std::string::npos);
    CHECK(exc.output.find("H_0 = 0") != std::string::npos);
    CHECK(exc.output.find("H_1 = 0") != std::string::npos);
}

TEST_CASE("chain representations load and run") {
    RunResult r = run("limit " + fixture("doubling_loop_chain.json") + " --max-degree 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("H_0 = 0") != std::string::npos);
    CHECK(r.output.find("H_1 = 0") != std::string::npos);
}
