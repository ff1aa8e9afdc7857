#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "cosetq/f2.hpp"
#include "cosetq/rational.hpp"

namespace cosetq {

enum class SearchMode { exhaustive, random_sample };

struct SearchLimits {
    std::uint64_t max_spans = 50'000'000;
    int enum_limit = kDefaultEnumLimit;
};

struct SearchConfig {
    int n = 6;
    int w = 3;
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t sample_count = 1000;
    std::uint64_t seed = 1;
    std::vector<Rational> lambda_grid;  // empty = default grid i/20, i = 1..20
    SearchLimits limits{};
};

// Enumerates every distinct subspace of F_2^n spanned by vectors of weight
// at most w, breadth-first by dimension with canonical deduplication, and
// calls fn on each (restricted to spans whose rows cover all n coordinates
// when covered_only is set). Deterministic order. Returns the number of
// spans fn saw. Requires n <= 11 so a span packs into a 128-bit key.
std::uint64_t for_each_span(int n, int w, bool covered_only, std::uint64_t max_spans,
                            const std::function<void(const LinearCode&)>& fn);

// Random span of weight <= w vectors that covers all n coordinates.
LinearCode random_covered_span(int n, int w, std::mt19937_64& rng);

struct SearchWitness {
    LinearCode code{1};
    Rational lambda;
    double ratio = 0;
};

struct SearchResult {
    std::uint64_t codes_tested = 0;
    double max_ratio = 0;
    bool max_is_exactly_one = false;
    SearchWitness witness;  // attains max_ratio; ties resolve to the first seen
    std::string verdict;    // "confirmed" or "refuted"
};

// Tests, over spans of weight <= w vectors covering all n coordinates,
// whether the coset-weight sum Q_C(lambda) ever exceeds the single-block
// bound phi(w, 0, lambda)^(n/w). Requires w | n so the bound is a rational
// power. All comparisons are exact; max_ratio is the exact maximum of
// Q / bound over every (code, lambda) pair, rounded to double at the end.
SearchResult conjecture_check(const SearchConfig& cfg);

// Code file with a trailing "# ratio=... lambda=..." comment.
void write_witness_file(std::ostream& out, const SearchWitness& witness);

}  // namespace cosetq
