#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cosetq/f2.hpp"

namespace cosetq::cli {

// Each command returns its process exit code: 0 success, 1 failed
// verification. Usage, domain, and resource errors are thrown as the
// exception types from errors.hpp and mapped to 2 / 3 by the entry point.

struct CwgfArgs {
    std::string code_path;
    std::string out;          // distribution CSV
    std::string q_out;        // Q(lambda) curve CSV
    std::string lambda_grid;  // "a:b:step", empty = default grid
    int limit = kDefaultEnumLimit;
};
int cmd_cwgf(const CwgfArgs& args, std::ostream& log);

struct BoundsArgs {
    int w = 3;
    std::string curves;  // comma-separated, empty = the full catalog
    double delta_min = 0.05;
    double delta_max = 0.5;
    double delta_step = 0.05;
    bool shortened = false;
    std::string out;  // empty = log stream
};
int cmd_bounds(const BoundsArgs& args, std::ostream& log);

struct VerifyArgs {
    std::string suite;  // empty = every suite
    int w = 3;
    int n = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 1;
    std::string lambda_grid;
    int limit = kDefaultEnumLimit;
    std::string out;  // per-check results CSV
};
int cmd_verify(const VerifyArgs& args, std::ostream& log);

struct SearchArgs {
    int w = 3;
    int n = 6;
    std::string mode = "exhaustive";  // or "random"
    std::uint64_t samples = 1000;
    std::uint64_t seed = 1;
    std::string lambda_grid;
    std::uint64_t max_spans = 50'000'000;
    int limit = kDefaultEnumLimit;
    std::string out;      // one-row summary CSV
    std::string witness;  // code file for the extremal span
};
int cmd_search(const SearchArgs& args, std::ostream& log);

struct Figure1Args {
    std::string out = "figure1.csv";
    int points = 200;
};
int cmd_figure1(const Figure1Args& args, std::ostream& log);

}  // namespace cosetq::cli
