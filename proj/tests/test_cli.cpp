#include <doctest.h>

#include "cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = seqlab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("generate")
{
    auto r = run({"generate", "--sequence", "fibonacci", "--length", "13"});
    CHECK(r.code == 0);
    CHECK(r.out == "abaababaabaab\n");
    CHECK(run({"generate", "--sequence", "colouring", "--delta", "3", "--length", "8"}).out ==
          "1 1' 3 2 3' 3 2' 1\n");
    auto empty = run({"generate", "--sequence", "fibonacci", "--length", "0"});
    CHECK(empty.code == 0);
    CHECK(empty.out == "\n");

    auto j = nlohmann::json::parse(run({"generate", "--delta", "2", "--length", "2", "--format", "json"}).out);
    CHECK(j["letters"][1]["index"] == 1);
    CHECK(j["letters"][1]["hat"] == true);

    CHECK(run({"generate", "--sequence", "colouring", "--delta", "10", "--length", "8"}).code == 2);
    CHECK(run({"generate", "--sequence", "nope", "--length", "8"}).code == 2);
    CHECK(run({"generate", "--length", "20000000"}).code == 2);
    CHECK(run({"generate"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("horizon guard override")
{
    setenv("SEQLAB_MAX_HORIZON", "5", 1);
    CHECK(seqlab::cli::max_horizon() == 5);
    CHECK(run({"generate", "--length", "6"}).code == 2);
    unsetenv("SEQLAB_MAX_HORIZON");
    CHECK(seqlab::cli::max_horizon() == 10'000'000);
}

TEST_CASE("analyze")
{
    auto r = run({"analyze", "returns", "--word", "aba", "--sequence", "fibonacci", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["returns"].size() == 2);
    CHECK(j["returns"][0]["text"] == "aba");
    CHECK(j["returns"][1]["text"] == "ab");

    auto b = run({"analyze", "balanced", "--delta", "2", "--horizon", "10000", "--max-window", "200"});
    CHECK(b.code == 0);
    CHECK(b.out == "balanced: true\n");
    auto unb = run({"analyze", "balanced", "--word", "aabb"});
    CHECK(unb.code == 1);
    CHECK(unb.out.find("length 2") != std::string::npos);

    auto p = run({"analyze", "power", "--word", "kabelka"});
    CHECK(p.code == 0);
    CHECK(p.out.find("root: kabel\n") != std::string::npos);
    CHECK(p.out.find("exponent: 7/5") != std::string::npos);

    CHECK(run({"analyze", "parikh", "--k", "5", "--l", "1"}).out == "false\n");
    CHECK(run({"analyze", "occurrences", "--word", "aba", "--horizon", "13"}).out == "0 3 5 8\n");
    CHECK(run({"analyze", "occurrences", "--word", "bb"}).code == 1);
    CHECK(run({"analyze", "returns", "--word", "bb"}).code == 1);
    CHECK(run({"analyze", "derived", "--word", "baa"}).code == 1);
    CHECK(run({"analyze", "returns"}).code == 2);
    CHECK(run({"analyze", "spectrum"}).code == 2);

    auto bis = run({"analyze", "bispecial", "--max-len", "3", "--horizon", "100"});
    CHECK(bis.out == "(empty)\na\naba\n");
}

TEST_CASE("bound")
{
    auto r = run({"bound", "--delta", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1 + 1/(8*tau^2)") != std::string::npos);
    CHECK(r.out.find("1.047746") != std::string::npos);
    CHECK(run({"bound", "--d", "6"}).out.find("1.250000") != std::string::npos);
    CHECK(run({"bound", "--delta", "1"}).out.find("2 + tau") != std::string::npos);
    CHECK(run({"bound", "--d", "8", "--check-theorem6"}).out.find("theorem6:") != std::string::npos);
    CHECK(run({"bound", "--d", "7"}).code == 2);
    CHECK(run({"bound", "--delta", "12"}).code == 2);

    auto j = nlohmann::json::parse(run({"bound", "--delta", "3", "--format", "json"}).out);
    CHECK(j["bound_exact"]["a_num"] == 5);
    CHECK(j["bound_exact"]["a_den"] == 4);
    CHECK(j["bound_exact"]["b_num"] == 0);
}

TEST_CASE("table")
{
    auto r = run({"table"});
    CHECK(r.code == 0);
    auto csv = run({"table", "--format", "csv"});
    std::size_t lines = 0;
    for (char c : csv.out)
        lines += c == '\n';
    CHECK(lines == 6);
    auto j = nlohmann::json::parse(run({"table", "--format", "json"}).out);
    REQUIRE(j.size() == 5);
    CHECK(j[0]["bound_exact"]["a_num"] == 2);
    CHECK(j[0]["bound_exact"]["b_num"] == 1);
    std::string markers;
    for (const auto& row : j)
        markers += row["marker"].get<std::string>();
    CHECK(markers == "==<=<");
    CHECK(run({"table", "--format", "xml"}).code == 2);
}

TEST_CASE("verify")
{
    CHECK(run({"verify", "--suite", "lemma3", "--max", "60"}).code == 0);
    CHECK(run({"verify", "--suite", "lemma4", "--n", "1..10"}).code == 0);
    auto fp = run({"verify", "--suite", "fib-properties", "--n", "200"});
    CHECK(fp.code == 0);
    CHECK(fp.out.find("FAIL") == std::string::npos);
    CHECK(run({"verify", "--suite", "unknown"}).code == 2);
    CHECK(run({"verify", "--suite", "lemma4", "--n", "5..2"}).code == 2);
    CHECK(run({"verify", "--suite", "lemma4", "--n", "x"}).code == 2);
}

TEST_CASE("deterministic output and file sink")
{
    std::vector<std::string> args{"verify", "--suite", "golden-sign", "--samples", "500", "--seed", "3"};
    CHECK(run(args).out == run(args).out);
    std::string path = "seqlab_cli_test_output.txt";
    CHECK(run({"generate", "--length", "5", "--output", path}).code == 0);
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "abaab");
    std::remove(path.c_str());
}
