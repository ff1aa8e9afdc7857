#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "cosetq/errors.hpp"
#include "doctest.h"

using namespace cosetq;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               fs::path("cosetq-test-" + std::to_string(::getpid()) + "-" +
                        std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

void write_simplex(const std::string& path) {
    std::ofstream f(path);
    f << "7 3\n1010101\n0110011\n0001111\n";
}

}  // namespace

TEST_CASE("cwgf command") {
    TempDir dir;
    write_simplex(dir.file("code.txt"));

    cli::CwgfArgs args;
    args.code_path = dir.file("code.txt");
    args.out = dir.file("dist.csv");
    args.q_out = dir.file("q.csv");

    std::stringstream log;
    CHECK(cli::cmd_cwgf(args, log) == 0);
    CHECK(log.str().find("length 7") != std::string::npos);
    CHECK(log.str().find("dimension 3") != std::string::npos);

    auto dist = slurp(args.out);
    CHECK(lines_of(dist).front() == "j,count");
    CHECK(dist.find("0,1") != std::string::npos);
    CHECK(dist.find("1,7") != std::string::npos);

    auto q = slurp(args.q_out);
    auto qlines = lines_of(q);
    CHECK(qlines.front() == "lambda,q_value");
    CHECK(qlines.size() == 21);  // header + default 20-point grid

    // reruns are byte-identical
    std::stringstream log2;
    CHECK(cli::cmd_cwgf(args, log2) == 0);
    CHECK(slurp(args.out) == dist);
    CHECK(slurp(args.q_out) == q);

    args.code_path = dir.file("missing.txt");
    CHECK_THROWS_AS(cli::cmd_cwgf(args, log), cosetq::error);
}

TEST_CASE("bounds command") {
    TempDir dir;
    cli::BoundsArgs args;
    args.curves = "gv,lp1";
    args.delta_min = 0.1;
    args.delta_max = 0.3;
    args.delta_step = 0.1;
    args.out = dir.file("bounds.csv");

    std::stringstream log;
    CHECK(cli::cmd_bounds(args, log) == 0);
    auto rows = lines_of(slurp(args.out));
    REQUIRE(rows.size() == 4);
    CHECK(rows.front() == "delta,gv,lp1");
    CHECK(rows[1].rfind("0.1,", 0) == 0);

    args.shortened = true;
    CHECK(cli::cmd_bounds(args, log) == 0);
    CHECK(lines_of(slurp(args.out)).front() == "delta,gv_shortened,lp1_shortened");

    cli::BoundsArgs bad = args;
    bad.delta_min = 0.7;
    CHECK_THROWS_AS(cli::cmd_bounds(bad, log), domain_error);
    bad = args;
    bad.delta_step = -0.05;
    CHECK_THROWS_AS(cli::cmd_bounds(bad, log), domain_error);
    bad = args;
    bad.curves = "gv,unheard_of";
    CHECK_THROWS_AS(cli::cmd_bounds(bad, log), catalog_error);
}

TEST_CASE("verify command") {
    TempDir dir;
    cli::VerifyArgs args;
    args.suite = "identities";
    args.out = dir.file("checks.csv");

    std::stringstream log;
    CHECK(cli::cmd_verify(args, log) == 0);
    CHECK(log.str().find("[PASS]") != std::string::npos);
    CHECK(log.str().find("[FAIL]") == std::string::npos);
    auto rows = lines_of(slurp(args.out));
    CHECK(rows.front() == "suite,check,pass,slack,detail");
    CHECK(rows.size() > 7);  // seven certificates plus closed-form checks

    args.suite = "no-such-suite";
    CHECK_THROWS_AS(cli::cmd_verify(args, log), domain_error);
}

TEST_CASE("search command") {
    TempDir dir;
    cli::SearchArgs args;
    args.n = 3;
    args.w = 3;
    args.out = dir.file("summary.csv");
    args.witness = dir.file("witness.txt");

    std::stringstream log;
    CHECK(cli::cmd_search(args, log) == 0);
    CHECK(log.str().find("verdict: confirmed") != std::string::npos);

    auto rows = lines_of(slurp(args.out));
    REQUIRE(rows.size() == 2);
    CHECK(rows.front() == "n,w,mode,codes_tested,max_ratio,exactly_one,verdict");
    CHECK(rows[1].find("confirmed") != std::string::npos);

    std::ifstream wit(args.witness);
    auto file = read_code_file(wit);
    CHECK(file.n == 3);
    CHECK(!file.comments.empty());

    args.mode = "is-this-a-mode";
    CHECK_THROWS_AS(cli::cmd_search(args, log), domain_error);
}

TEST_CASE("figure table command") {
    TempDir dir;
    cli::Figure1Args args;
    args.out = dir.file("fig.csv");
    args.points = 25;

    std::stringstream log;
    CHECK(cli::cmd_figure1(args, log) == 0);
    auto rows = lines_of(slurp(args.out));
    REQUIRE(rows.size() == 26);
    CHECK(rows.front() == "rho,ball_our_w3,ball_iceland_w3,delta,rate_our_w3,rate_iceland_w3");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::stringstream ss(rows[i]);
        std::string cell;
        std::vector<double> v;
        while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
        REQUIRE(v.size() == 6);
        CHECK(v[1] <= v[2] + 1e-9);  // ball exponent never worse
        CHECK(v[4] <= v[5] + 1e-9);  // rate bound never worse
    }

    args.points = 0;
    CHECK_THROWS_AS(cli::cmd_figure1(args, log), domain_error);
}

#ifdef COSETQ_BIN
TEST_CASE("process exit codes") {
    TempDir dir;
    std::string bin = COSETQ_BIN;
    auto run = [&](const std::string& argstr) {
        std::string cmd = bin + " " + argstr + " > /dev/null 2>&1";
        int status = std::system(cmd.c_str());
        REQUIRE(status != -1);
        return WEXITSTATUS(status);
    };

    write_simplex(dir.file("code.txt"));
    CHECK(run("cwgf --code " + dir.file("code.txt")) == 0);
    CHECK(run("verify --suite identities") == 0);
    CHECK(run("--definitely-not-a-flag") == 2);
    CHECK(run("bounds --delta-min 0.7") == 2);
    CHECK(run("cwgf --code " + dir.file("missing.txt")) == 3);
    CHECK(run("search --n 3 --w 3") == 0);
    CHECK(run("search --n 7 --w 3") == 2);
}
#endif
