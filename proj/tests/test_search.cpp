#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <sstream>

#include "cosetq/cwgf.hpp"
#include "cosetq/errors.hpp"
#include "cosetq/search.hpp"
#include "doctest.h"

using namespace cosetq;

TEST_CASE("span enumeration counts") {
    // all subspaces of F_2^n appear once when w = n: Galois numbers 16, 67
    auto count = [](int n, int w, bool covered) {
        return for_each_span(n, w, covered, 1'000'000, [](const LinearCode&) {});
    };
    CHECK(count(3, 3, false) == 16);
    CHECK(count(4, 4, false) == 67);

    // covering spans of F_2^2 with weight <= 2: <11>, <10,01>, <10,11>,
    // <01,11>, <11,10>... dedup leaves {<11>, <10,01>=<10,11>=F_2^2}
    CHECK(count(2, 2, true) == 2);

    // weight-1 spans never mix coordinates: covered means the full space
    CHECK(count(4, 1, true) == 1);
    CHECK(count(4, 1, false) == 16);  // one per subset of coordinates

    CHECK_THROWS_AS(count(12, 3, false), precondition_error);
    CHECK_THROWS_AS(count(3, 4, false), precondition_error);
    CHECK_THROWS_AS(count(0, 1, false), precondition_error);
    CHECK_THROWS_AS(for_each_span(6, 3, false, 10, [](const LinearCode&) {}),
                    resource_limit_error);
}

TEST_CASE("span enumeration is deterministic and well-formed") {
    std::vector<std::string> first, second;
    auto collect = [](std::vector<std::string>& into) {
        return [&into](const LinearCode& c) {
            std::string key;
            for (auto r : c.rows()) key += BitVector(c.length(), r).to_string() + "/";
            into.push_back(key);
        };
    };
    for_each_span(5, 3, true, 1'000'000, collect(first));
    for_each_span(5, 3, true, 1'000'000, collect(second));
    CHECK(first == second);
    CHECK(!first.empty());
    // no duplicates: canonical row sets are unique
    auto sorted = first;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("random covered spans cover") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + int(rng() % 8);
        int w = 2 + int(rng() % 3);
        auto code = random_covered_span(n, std::min(w, n), rng);
        CHECK(code.length() == n);
        CHECK(code.support_mask() == full_mask(n));
        CHECK(code.dimension() >= 1);
    }
}

TEST_CASE("exhaustive conjecture check, minimal case") {
    SearchConfig cfg;
    cfg.n = 3;
    cfg.w = 3;
    auto res = conjecture_check(cfg);
    CHECK(res.verdict == "confirmed");
    CHECK(res.max_is_exactly_one);
    CHECK(res.max_ratio == doctest::Approx(1.0));
    // <111> attains the bound: Q = 1 + 3 lambda... over 2 cosets each
    CHECK(res.witness.code.dimension() >= 1);
    CHECK(res.codes_tested >= 1);
}

TEST_CASE("exhaustive conjecture check, n = 6") {
    SearchConfig cfg;
    cfg.n = 6;
    cfg.w = 3;
    auto res = conjecture_check(cfg);
    CHECK(res.codes_tested == 1078);  // covering spans of weight <= 3 vectors
    CHECK(res.verdict == "confirmed");
    CHECK(res.max_is_exactly_one);
}

TEST_CASE("conjecture check validates its config") {
    SearchConfig cfg;
    cfg.n = 7;
    cfg.w = 3;  // 3 does not divide 7
    CHECK_THROWS_AS(conjecture_check(cfg), domain_error);
    cfg.n = 6;
    cfg.w = 0;
    CHECK_THROWS_AS(conjecture_check(cfg), domain_error);
}

TEST_CASE("random sampling is seed-deterministic") {
    SearchConfig cfg;
    cfg.n = 9;
    cfg.w = 3;
    cfg.mode = SearchMode::random_sample;
    cfg.sample_count = 40;
    cfg.seed = 123;
    auto a = conjecture_check(cfg);
    auto b = conjecture_check(cfg);
    CHECK(a.codes_tested == 40);
    CHECK(a.verdict == "confirmed");
    CHECK(a.max_ratio == b.max_ratio);
    CHECK(a.witness.code == b.witness.code);
    CHECK(a.witness.lambda == b.witness.lambda);

    cfg.seed = 124;
    auto c = conjecture_check(cfg);
    CHECK(c.codes_tested == 40);
    CHECK(c.verdict == "confirmed");
}

TEST_CASE("witness files round-trip as code files") {
    SearchConfig cfg;
    cfg.n = 3;
    cfg.w = 3;
    auto res = conjecture_check(cfg);
    std::stringstream out;
    write_witness_file(out, res.witness);
    CHECK(out.str().find("# ratio=") != std::string::npos);
    CHECK(out.str().find("lambda=") != std::string::npos);

    std::stringstream in(out.str());
    auto file = read_code_file(in);
    CHECK(file.n == 3);
    CHECK(file.span() == res.witness.code);
}
