#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mult/cli.hpp"
#include "mult/parser.hpp"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace mult;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

}  // namespace

TEST_CASE("documented one-liners") {
    CHECK(run_cli({"lct", "--vars", "x,y", "<x^2,y^3>"}).out == "5/6\n");
    CHECK(run_cli({"mi", "--coeff", "5/6", "--vars", "x,y", "<x^2,y^3>"}).out == "<x, y>\n");
    CHECK(run_cli({"jn", "--max", "4/3", "--vars", "x,y", "<x^2,y^3>"}).out ==
          "5/6, 7/6, 4/3\n");
    CHECK(run_cli({"lct", "--vars", "x,y", "<x^2,y^3>"}).code == 0);
    CHECK(run_cli({"lct", "--vars", "x", "<1>"}).out == "infinity\n");
    CHECK(run_cli({"jn", "--max", "1/2", "--vars", "x", "<x>"}).out == "none\n");
}

TEST_CASE("oracle flag cross-checks and reports") {
    const RunResult mi = run_cli({"mi", "--coeff", "5/6", "--vars", "x,y", "<x^2,y^3>",
                                  "--oracle"});
    CHECK(mi.code == 0);
    CHECK(mi.out == "<x, y>\noracle: ok\n");
    const RunResult jn = run_cli({"jn", "--max", "4/3", "--vars", "x,y", "<x^2,y^3>",
                                  "--oracle"});
    CHECK(jn.code == 0);
    CHECK(jn.out == "5/6, 7/6, 4/3\noracle: ok\n");
    const RunResult lct2 = run_cli({"lct", "--vars", "x,y", "<x^2,y^3>", "--oracle"});
    CHECK(lct2.code == 0);
    CHECK(lct2.out == "5/6\noracle: ok\n");
}

TEST_CASE("usage problems exit with code one") {
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"frobnicate"}).code == 1);
    CHECK(run_cli({"lct", "--vars", "x,y", "<z>"}).code == 1);       // unknown variable
    CHECK(run_cli({"lct", "--vars", "x,y", "<x^2"}).code == 1);      // unterminated
    CHECK(run_cli({"mi", "--coeff", "5/0", "--vars", "x", "<x>"}).code == 1);
    CHECK(run_cli({"verify", "nosuch", "--trials", "1"}).code == 1);
    CHECK(run_cli({"verify", "thm1"}).code == 1);                    // no instance, no trials
    CHECK(run_cli({"verify", "approx", "--trials", "1", "--seed", "0", "--oracle"}).code == 1);
}

TEST_CASE("json reports carry the same facts as the text output") {
    const RunResult plain = run_cli({"mi", "--coeff", "5/6", "--vars", "x,y", "<x^2,y^3>"});
    const RunResult rich =
        run_cli({"mi", "--coeff", "5/6", "--vars", "x,y", "<x^2,y^3>", "--json"});
    REQUIRE(rich.code == 0);
    const json j = json::parse(rich.out);
    CHECK(j["command"] == "mi");
    CHECK(j["inputs"]["vars"] == "x,y");
    CHECK(j["inputs"]["coeff"] == "5/6");
    CHECK(j["result"]["ideal"] == "<x, y>");
    CHECK(j.contains("timing_ms"));
    CHECK(plain.out == j["result"]["ideal"].get<std::string>() + "\n");
}

TEST_CASE("verify against an explicit instance") {
    const RunResult r = run_cli({"verify", "thm1", "--a", "<x,y>", "--b", "<x,y>", "--vars",
                                 "x,y", "--coeff", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict: Holds\n") == 0);
    CHECK(r.out.find("lhs: <x, y>") != std::string::npos);
    CHECK(r.out.find("rhs: <1>") != std::string::npos);

    const RunResult j = run_cli({"verify", "thm1", "--a", "<x,y>", "--b", "<x,y>", "--vars",
                                 "x,y", "--coeff", "2", "--json"});
    const json parsed = json::parse(j.out);
    CHECK(parsed["verdict"] == "Holds");
    CHECK(parsed["result"]["verdict"] == "Holds");
    CHECK(parsed.contains("timing_ms"));
}

TEST_CASE("verify random trials print one line per instance plus a summary") {
    const RunResult r = run_cli({"verify", "jumpshift", "--trials", "3", "--seed", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[0] ") != std::string::npos);
    CHECK(r.out.find("[2] ") != std::string::npos);
    CHECK(r.out.find("verify jumpshift: 3 instances") != std::string::npos);

    const RunResult j =
        run_cli({"verify", "jumpshift", "--trials", "3", "--seed", "0", "--json"});
    const json parsed = json::parse(j.out);
    CHECK(parsed["result"]["reports"].size() == 3);
    CHECK(parsed["seed"] == 0);
}

TEST_CASE("amult on a powers family and on a system file") {
    const RunResult powers = run_cli({"amult", "--powers", "<x^2,y^3>", "--pmax", "4",
                                      "--vars", "x,y", "--coeff", "5/6", "--qmax", "2"});
    CHECK(powers.code == 0);
    CHECK(powers.out == "<x, y>\nstabilized: yes\n");

    const RunResult missing = run_cli({"amult", "--vars", "x", "--coeff", "1"});
    CHECK(missing.code == 1);
}

TEST_CASE("amult reports unstabilized truncations with exit three") {
    const char* path = "amult_system_test.txt";
    {
        std::ofstream f(path);
        f << "arity = 1\n";
        f << "p_max = 2\n";
        f << "1 = <x^2>\n";
        f << "2 = <x^3>\n";
    }
    const RunResult r =
        run_cli({"amult", path, "--vars", "x", "--coeff", "1", "--qmax", "2"});
    std::remove(path);
    CHECK(r.code == 3);
    CHECK(r.out == "<x>\nstabilized: no\n");
}

TEST_CASE("corpus text round-trips through the parser") {
    const std::string text =
        "# comment line\n"
        "$ lct --vars x,y <x^2,y^3>\n"
        "5/6\n"
        "\n"
        "$ verify thm1 --a <x,y> --b <x,y> --vars x,y --coeff 2\n"
        "verdict: Holds\n"
        "line two\n"
        "!exit 0\n";
    const std::vector<cli::CorpusEntry> entries = cli::parse_corpus(text);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].command_line == "lct --vars x,y <x^2,y^3>");
    CHECK(entries[0].expected_output == "5/6\n");
    CHECK(entries[0].expected_exit == 0);
    CHECK(entries[1].argv.size() == 10);
    CHECK(entries[1].expected_output == "verdict: Holds\nline two\n");
}

TEST_CASE("embedded corpus replays without mismatches") {
    const cli::CorpusResult r = cli::replay_corpus();
    CHECK(r.mismatched == 0);
    INFO(r.diagnostics);
    CHECK(r.diagnostics.empty());
}

TEST_CASE("command line splitting honors double quotes") {
    const std::vector<std::string> parts = split_command_line("mi --vars x,y \"<x^2, y^3>\"");
    REQUIRE(parts.size() == 4);
    CHECK(parts[3] == "<x^2, y^3>");
}

TEST_CASE("worker thread count comes from the environment") {
    unsetenv("MULTCTL_THREADS");
    CHECK(cli::worker_threads() == 1);
    setenv("MULTCTL_THREADS", "3", 1);
    CHECK(cli::worker_threads() == 3);
    setenv("MULTCTL_THREADS", "bogus", 1);
    CHECK(cli::worker_threads() == 1);
    unsetenv("MULTCTL_THREADS");
}

TEST_CASE("campaign output is reproducible and parallelism neutral") {
    const std::vector<std::string> args{"campaign", "--trials", "2", "--seed", "11"};
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);

    setenv("MULTCTL_THREADS", "2", 1);
    const RunResult threaded = run_cli(args);
    unsetenv("MULTCTL_THREADS");
    CHECK(threaded.out == first.out);
    CHECK(threaded.code == first.code);
}
