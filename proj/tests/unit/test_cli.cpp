#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "symroot/srs.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(SYMROOT_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("symroot_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("type of A4") {
    const Run r = run("type --family A --rank 4");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out) == nlohmann::json::parse(R"({"type":[2,0]})"));
}

TEST_CASE("quotients of D4 from an edge list") {
    const auto path = write_temp("d4.edges", "n 4\ne 0 1\ne 0 2\ne 0 3\n");
    const Run r = run("quotients --graph " + path);
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    std::map<std::pair<int, int>, int> counts;
    for (const auto& c : j.at("classes")) ++counts[{c.at("type")[0].get<int>(), c.at("type")[1].get<int>()}];
    CHECK(counts == std::map<std::pair<int, int>, int>{{{1, 2}, 1}, {{1, 1}, 3}, {{1, 0}, 1}});
}

TEST_CASE("type of three isolated points") {
    const auto path = write_temp("empty3.edges", "n 3\n");
    const Run r = run("type --graph " + path);
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).at("type") == nlohmann::json::array({0, 3}));
}

TEST_CASE("minimal SRS JSON round trips through extend and iso") {
    const auto gpath = write_temp("a3.edges", "n 3\ne 0 1\ne 1 2\n");
    const Run m = run("minimal --graph " + gpath);
    REQUIRE(m.code == 0);
    const symroot::Srs s = symroot::srs_from_json(nlohmann::json::parse(m.out));
    CHECK(s.type() == symroot::SpaceType{1, 1});
    const auto spath = write_temp("a3.json", m.out);
    const Run e = run("extend --srs " + spath + " --indicator 001");
    REQUIRE(e.code == 0);
    const auto ej = nlohmann::json::parse(e.out);
    CHECK(ej.at("srs").at("type") == nlohmann::json::array({2, 0}));
    CHECK(ej.at("witness").at("case") == "new_hyperbolic");
    const Run iso = run("iso --srs " + spath + " --other " + spath);
    CHECK(iso.code == 0);
    CHECK(nlohmann::json::parse(iso.out).at("isomorphic") == true);
}

TEST_CASE("output is deterministic") {
    CHECK(run("ade --family E --rank 8").out == run("ade --family E --rank 8").out);
    CHECK(run("weyl --family A --rank 2").out == run("weyl --family A --rank 2").out);
}

TEST_CASE("weyl A2 order") {
    const Run r = run("weyl --family A --rank 2");
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).at("group_order") == 6);
}

TEST_CASE("text format") {
    const Run r = run("type --family E --rank 7 --format text");
    CHECK(r.code == 0);
    CHECK(r.out == "type  [3 1]\n");
}

TEST_CASE("exit codes") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("type --family Q --rank 2").code == 2);
    CHECK(run("type --family E --rank 9").code == 1);
    CHECK(run("type --graph /nonexistent/file").code != 0);
    const auto bad = write_temp("bad.edges", "n 2\ne 0 0\n");
    CHECK(run("type --graph " + bad).code == 1);
    CHECK(run("verify --suite nope").code != 0);
}

TEST_CASE("quick verification suite") {
    const Run r = run("verify --suite weyl --max-rank 4");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).at("passed") == true);
}
