#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cosetq/f2.hpp"
#include "cosetq/rational.hpp"

namespace cosetq {

// One verified statement. slack is the worst observed margin of the
// inequality being checked (value minus bound, so nonpositive is good);
// zero for pure identity checks.
struct Check {
    std::string name;
    bool pass = false;
    double slack = 0;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    bool ok() const;
};

struct SuiteOptions {
    int w = 3;
    int n = 0;                   // 0 = per-suite default
    std::uint64_t samples = 0;   // 0 = per-suite default
    std::uint64_t seed = 1;
    std::vector<Rational> lambda_grid;  // empty = default grid i/20
    int enum_limit = kDefaultEnumLimit;
    std::uint64_t max_spans = 50'000'000;
};

// identities: the seven polynomial certificates, and phi(w, 0, .) against
// the all-one-code generating function.
SuiteReport identities_suite(const SuiteOptions& opt = {});

// lemmas: closed form vs. brute force, monotonicity under code extension,
// direct sums as coefficient convolutions, and disjoint equal blocks as
// exact powers.
SuiteReport lemmas_suite(const SuiteOptions& opt = {});

// ball: the volume estimate |B(r)| <= lambda^-r Q(lambda) on random codes,
// every radius, every grid lambda.
SuiteReport ball_suite(const SuiteOptions& opt = {});

// localfactor: growth factors against their targets for every admissible
// (v, delta), and randomized one-step extension certificates.
SuiteReport localfactor_suite(const SuiteOptions& opt = {});

// theorem: the covering-span bound Q <= target^(n/w), exhaustively for all
// covered spans up to opt.n, with equality at disjoint blocks, plus random
// spot checks with full growth chains at lengths up to 16.
SuiteReport theorem_suite(const SuiteOptions& opt = {});

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

// -- randomized inputs (deterministic in the rng state) ---------------------

// Random code of length n with dimension at most k_max.
LinearCode random_code(int n, int k_max, std::mt19937_64& rng);

// Random weight-<=w generators drawn until their supports cover [n].
GeneratorSet random_covered_generators(int n, int w, std::mt19937_64& rng);

// n/w disjoint all-one blocks of width w; requires w | n.
GeneratorSet disjoint_block_generators(int n, int w);

}  // namespace cosetq
