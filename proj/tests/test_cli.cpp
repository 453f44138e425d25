// Runs the sigfix binary and checks exit codes and output.
#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(SIGFIX_CLI) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

fs::path scratch() {
    auto dir = fs::temp_directory_path() / ("sigfix_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

std::string write(const fs::path& dir, const std::string& name, const std::string& text) {
    auto p = dir / name;
    std::ofstream(p) << text;
    return p.string();
}

}  // namespace

TEST_CASE("analyze and generate") {
    auto dir = scratch();
    auto f5 = (dir / "f5.txt").string();
    CHECK(run("generate figure1 --n 5 -o " + f5).status == 0);
    auto r = run("analyze " + f5);
    CHECK(r.status == 0);
    CHECK(r.out.find("tau_plus = 1\n") != std::string::npos);
    CHECK(r.out.find("g_tilde_plus = inf\n") != std::string::npos);
    CHECK(r.out.find("fp_upper_bound = 1\n") != std::string::npos);

    auto s = run("--format structured analyze " + f5);
    CHECK(s.status == 0);
    auto j = nlohmann::json::parse(s.out);
    CHECK(j["format"] == "sigfix-analysis");
    CHECK(j["thm4"] == true);
    CHECK(run("--format structured analyze " + f5).out == s.out);
    fs::remove_all(dir);
}

TEST_CASE("exit codes") {
    auto dir = scratch();
    auto f5 = (dir / "f5.txt").string();
    run("generate figure1 --n 5 -o " + f5);
    CHECK(run("check --theorem thm3 " + f5).status == 0);
    CHECK(run("check --theorem thm5 " + f5).status == 1);
    CHECK(run("analyze " + (dir / "missing.txt").string()).status == 2);
    auto bad = write(dir, "bad.txt", "boolnet 1\n1 : 1 | 011\n");
    auto e = run("fixed-points " + bad);
    CHECK(e.status == 2);
    CHECK(e.out.find("line 2") != std::string::npos);
    CHECK(run("").status == 2);
    CHECK(run("check --theorem nosuch " + f5).status == 2);
    fs::remove_all(dir);
}

TEST_CASE("networks") {
    auto dir = scratch();
    auto net = write(dir, "swap.txt", "boolnet 2\n1 : 2 | 01\n2 : 1 | 01\n");
    auto graph = write(dir, "two.txt", "sdigraph 2\n1 2 +\n2 1 +\n");
    auto fp = run("fixed-points " + net);
    CHECK(fp.status == 0);
    CHECK(fp.out.find("00\n11\n") != std::string::npos);
    CHECK(run("attractors " + net).status == 0);
    auto c = run("check --theorem thm7 " + graph + " " + net);
    CHECK(c.status == 0);
    CHECK(c.out.find("holds") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("kernels and bounds") {
    auto dir = scratch();
    auto d = write(dir, "d.txt", "digraph 3\n1 2\n2 3\n3 1\n");
    auto k = run("--format structured kernels " + d);
    CHECK(k.status == 0);
    auto j = nlohmann::json::parse(k.out);
    CHECK(j["kernels"].empty());
    CHECK(j["richardson_condition"] == false);
    auto g = write(dir, "g.txt", "sdigraph 2\n1 2 +\n2 1 +\n");
    auto b = run("bounds " + g);
    CHECK(b.status == 0);
    CHECK(b.out.find("fp_upper_bound = 2") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("falsify output is reproducible") {
    auto dir = scratch();
    auto out1 = (dir / "a.json").string(), out2 = (dir / "b.json").string();
    CHECK(run("falsify --theorem thm2 --trials 200 --seed 9 --max-n 4 -o " + out1).status == 0);
    CHECK(run("falsify --theorem thm2 --trials 200 --seed 9 --max-n 4 --threads 3 -o " + out2).status == 0);
    std::ifstream a(out1), b(out2);
    std::string sa((std::istreambuf_iterator<char>(a)), {}), sb((std::istreambuf_iterator<char>(b)), {});
    CHECK(!sa.empty());
    CHECK(sa == sb);
    CHECK(nlohmann::json::parse(sa)["violations"] == 0);

    auto g1 = (dir / "r1.txt").string(), g2 = (dir / "r2.txt").string();
    run("generate random --n 6 --p 0.3 --q 0.5 --seed 5 -o " + g1);
    run("generate random --n 6 --p 0.3 --q 0.5 --seed 5 -o " + g2);
    std::ifstream r1(g1), r2(g2);
    std::string t1((std::istreambuf_iterator<char>(r1)), {}), t2((std::istreambuf_iterator<char>(r2)), {});
    CHECK(t1 == t2);
    CHECK(t1.rfind("sdigraph 6", 0) == 0);
    fs::remove_all(dir);
}
