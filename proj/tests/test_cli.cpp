#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(KLRTAB_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

}  // namespace

TEST_CASE("crystal graph emits an eight-vertex dot file") {
    RunResult r = run_cli("crystal graph --n 2 --lambda 1,1 --format dot");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("digraph") != std::string::npos);
    int vertices = 0;
    for (size_t p = r.out.find("wt=("); p != std::string::npos; p = r.out.find("wt=(", p + 1))
        ++vertices;
    CHECK(vertices == 8);
}

TEST_CASE("crystal graph small cases") {
    RunResult chain = run_cli("crystal graph --n 1 --lambda 1 --format json");
    CHECK(chain.exit_code == 0);
    auto j = nlohmann::json::parse(chain.out);
    CHECK(j["vertices"].size() == 2);
    CHECK(j["edges"].size() == 1);

    RunResult trivial = run_cli("crystal graph --n 2 --lambda 0,0 --format json");
    CHECK(trivial.exit_code == 0);
    CHECK(nlohmann::json::parse(trivial.out)["vertices"].size() == 1);
}

TEST_CASE("crystal graph output is deterministic") {
    RunResult a = run_cli("crystal graph --n 2 --lambda 1,1 --format dot");
    RunResult b = run_cli("crystal graph --n 2 --lambda 1,1 --format dot");
    CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("crystal graph --n 2 --lambda 1,1,1").exit_code == 2);
    CHECK(run_cli("crystal graph --n 2").exit_code == 2);
    CHECK(run_cli("char --segments nonsense").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code != 0);
}

TEST_CASE("char prints the induced character") {
    RunResult r = run_cli("char --segments \"1,2;1,1\" --n 3");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["alpha"] == nlohmann::json({2, 1, 0}));
    bool saw112 = false, saw121 = false;
    for (const auto& t : j["terms"]) {
        if (t["word"] == nlohmann::json({1, 1, 2})) {
            saw112 = true;
            CHECK(t["coeff"]["0"] == 2);
        }
        if (t["word"] == nlohmann::json({1, 2, 1})) {
            saw121 = true;
            CHECK(t["coeff"]["0"] == 1);
        }
    }
    CHECK(saw112);
    CHECK(saw121);
}

TEST_CASE("graded char specializes to the ungraded one") {
    RunResult graded = run_cli("char --segments \"1,2;1,1\" --n 3 --graded");
    CHECK(graded.exit_code == 0);
    auto j = nlohmann::json::parse(graded.out);
    for (const auto& t : j["terms"]) {
        long long at_one = 0;
        for (const auto& [e, c] : t["coeff"].items()) at_one += c.get<long long>();
        if (t["word"] == nlohmann::json({1, 1, 2})) CHECK(at_one == 2);
        if (t["word"] == nlohmann::json({1, 2, 1})) CHECK(at_one == 1);
    }
}

TEST_CASE("verify subcommands pass on tiny inputs") {
    CHECK(run_cli("verify phi-lambda --n 2 --lambda 1,1").exit_code == 0);
    CHECK(run_cli("verify multiplicity --max-mu 3 --n 4").exit_code == 0);
    CHECK(run_cli("verify serre --n 2 --shapes \"1,1\"").exit_code == 0);
    CHECK(run_cli("verify binfinity --trials 50").exit_code == 0);
}

TEST_CASE("worked example subcommand prints the expected descent") {
    RunResult r = run_cli("verify example-1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("i_T = 2") != std::string::npos);
    CHECK(r.out.find("epsilon = 3") != std::string::npos);
    CHECK(r.out.find("1,1,2,2,4,6;2,2,4,5;3,5;5,6;6") != std::string::npos);
}
