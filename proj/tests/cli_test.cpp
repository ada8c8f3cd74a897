#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef SCORESEQ_CLI_PATH
#error "SCORESEQ_CLI_PATH must point at the scoreseq executable"
#endif

namespace {

namespace fs = std::filesystem;

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(SCORESEQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int raw = pclose(pipe);
    return {WEXITSTATUS(raw), out};
}

fs::path scratch() {
    const fs::path dir = fs::temp_directory_path() / "scoreseq_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string write(const std::string& name, const std::string& text) {
    const fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("cli check") {
    const auto ok = run("check " + write("ok.json", R"({"scores": ["1/2", "1", "3/2"]})"));
    CHECK(ok.status == 0);
    CHECK(has(ok.out, "\"condition_II\": true"));

    const auto bad = run("check " + write("bad.json", R"({"scores": [0, 0, 3]})"));
    CHECK(bad.status == 1);
    CHECK(has(bad.out, "\"first_violation\": 2"));

    const auto unsorted = write("unsorted.json", R"({"scores": [2, 0, 1]})");
    CHECK(run("check " + unsorted).status == 2);
    CHECK(run("check --sort " + unsorted).status == 0);
}

TEST_CASE("cli malformed input") {
    CHECK(run("check " + write("empty.json", R"({"scores": []})")).status == 2);
    CHECK(run("check " + write("junk.json", "not json")).status == 2);
    CHECK(run("check /nonexistent/file.json").status == 2);
    CHECK(run("frobnicate").status == 2);
}

TEST_CASE("cli realize then witness round trip") {
    const auto input = write("half.json", R"({"scores": ["1/2", "1", "3/2"]})");
    const auto out = scratch() / "half_t.json";
    REQUIRE(run("realize " + input + " --cap 6 -o " + out.string()).status == 0);
    const auto w = run("witness " + out.string());
    CHECK(w.status == 0);
    CHECK(has(w.out, "\"image\""));

    CHECK(run("realize " + input + " --method pipeline --cap 5").status == 3);
    const auto fallback = run("realize " + input + " --cap 5");
    CHECK(fallback.status == 0);
    CHECK(has(fallback.out, "\"method\": \"symmetrize\""));
}

TEST_CASE("cli realize keeps input labels with --sort") {
    const auto input = write("perm.json", R"({"scores": [2, 0, 1]})");
    const auto r = run("realize --sort " + input);
    CHECK(r.status == 0);
    CHECK(has(r.out, "\"scores\": [\n    \"2\",\n    \"0\",\n    \"1\"\n  ]"));
}

TEST_CASE("cli realize rejects infeasible sequences") {
    const auto input = write("nonsym.json", R"({"scores": ["0", "3/2", "3/2"]})");
    CHECK(run("realize " + input).status == 1);
    CHECK(run("realize " + input + " --method pipeline").status == 1);
    CHECK(run("realize " + input + " --method moon").status == 0);
}

TEST_CASE("cli approximate and plan") {
    const auto input = write("trans.json", R"({"scores": [0, 1, 2]})");
    const auto a = run("approximate " + input + " -m 10");
    CHECK(a.status == 0);
    CHECK(has(a.out, "\"1/11\""));
    CHECK(has(a.out, "\"21/11\""));
    CHECK(run("approximate " + input + " -m 0").status == 2);

    const auto p = run("plan " + write("halves.json", R"({"scores": ["1/2", "1/2"]})"));
    CHECK(p.status == 0);
    CHECK(has(p.out, "\"m\": 2"));
}

TEST_CASE("cli oracle") {
    const auto r = run("oracle --n 4");
    CHECK(r.status == 0);
    CHECK(has(r.out, "\"equal\": true"));
    CHECK(run("oracle --n 7").status == 3);
}

TEST_CASE("cli documented examples") {
    CHECK(run("check " + write("halves2.json", R"({"scores": ["1/2", "1/2"]})")).status == 0);
    CHECK(run("check " + write("not2.json", R"({"scores": ["1/2", "1/2", "2"]})")).status == 1);

    const auto pipe = run("realize " + write("halves3.json", R"({"scores": ["1/2", "1/2"]})") + " --method pipeline");
    CHECK(pipe.status == 0);
    CHECK(has(pipe.out, "\"weights\": [\n    [\n      \"0\",\n      \"1/2\"\n    ],\n    [\n      \"1/2\",\n      \"0\"\n    ]\n  ]"));

    const auto flat = run("approximate " + write("ones.json", R"({"scores": ["1", "1", "1"]})") + " -m 5");
    CHECK(flat.status == 0);
    CHECK(has(flat.out, "\"scores\": [\n      \"1\",\n      \"1\",\n      \"1\"\n    ]"));

    const auto cycle = run("witness " + write("cycle.json",
                                              R"({"weights": [["0","1","0"],["0","0","1"],["1","0","0"]]})"));
    CHECK(cycle.status == 0);
    CHECK(has(cycle.out, "\"image\": [\n    1,\n    3,\n    2\n  ]"));

    const auto none = run("witness " + write("dominator.json", R"({"weights": [
        ["0","1","0","0"], ["0","0","1","0"], ["1","0","0","0"], ["1","1","1","0"]]})"));
    CHECK(none.status == 1);
}
