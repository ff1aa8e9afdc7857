#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cosetq/f2.hpp"
#include "cosetq/polynomial.hpp"
#include "cosetq/rational.hpp"

namespace cosetq {

// Weight distribution of the cosets of a code: counts[j] is the number of
// cosets of F2^n / C whose minimum Hamming weight is j. The generating
// function Q_C(lambda) = sum_j counts[j] lambda^j.
struct CosetWeightDistribution {
    int n = 0;
    int k = 0;
    std::vector<BigInt> counts;  // size n + 1

    BigInt total() const;        // equals 2^(n-k)
    IntPolynomial polynomial() const;
};

// Exact distribution by enumerating all 2^n vectors, grouped per coset via
// the canonical representative. Work is 2^n regardless of k; memory is O(n).
// Throws resource_limit_error when n exceeds enum_limit.
CosetWeightDistribution coset_weight_distribution(const LinearCode& code,
                                                  int enum_limit = kDefaultEnumLimit);

// Same enumeration with plain machine counters; the fast path for searches.
std::vector<std::uint64_t> coset_weight_counts(const LinearCode& code,
                                               int enum_limit = kDefaultEnumLimit);

// Number of worker threads used by the enumeration: the COSETQ_THREADS
// environment variable when set, otherwise the hardware concurrency.
// Chunk results merge by addition, so the count never affects output.
int enumeration_threads();

// Q_C(lambda) for lambda in [0, 1]; exact in the rational overload.
Rational evaluate_q(const CosetWeightDistribution& dist, const Rational& lambda);
double evaluate_q(const CosetWeightDistribution& dist, double lambda);

// Number of cosets of weight <= r: a ball volume in the quotient space.
BigInt coset_ball_size(const CosetWeightDistribution& dist, int r);

// Checks the ball-volume estimate |B(r)| <= lambda^-r * Q(lambda), exactly.
// The distribution is the one of the code whose cosets form the ball's
// ambient quotient.
struct BallCheck {
    int r = 0;
    BigInt ball;
    double rhs = 0;  // lambda^-r Q(lambda), rounded
    bool ok = false;
};
BallCheck check_ball_vs_q(const CosetWeightDistribution& dist, int r, const Rational& lambda);

// Distribution of the length-n code spanned by the all-one vector, from the
// closed form Q(lambda) = (1/2) sum_t binom(n,t) lambda^min(t, n-t).
CosetWeightDistribution closed_form_all_one(int n);

// Distribution of a direct sum of codes on disjoint coordinate blocks:
// the coefficient convolution of the operands' distributions.
CosetWeightDistribution direct_sum_distribution(const CosetWeightDistribution& a,
                                                const CosetWeightDistribution& b);

// For nested codes (every basis vector of inner lies in outer), checks
// Q_outer(lambda) <= Q_inner(lambda) exactly at each grid point.
struct MonotonicityReport {
    bool nested = false;
    bool ok = false;
    std::vector<double> q_inner, q_outer;  // per grid point
};
MonotonicityReport check_monotonicity(const LinearCode& inner, const LinearCode& outer,
                                      const std::vector<Rational>& lambda_grid,
                                      int enum_limit = kDefaultEnumLimit);

// -- lambda grids ------------------------------------------------------------

// {0.05, 0.10, ..., 1.00}, exact.
std::vector<Rational> default_lambda_grid();

// Inclusive arithmetic progression a, a+step, ..., up to b; exact.
std::vector<Rational> make_lambda_grid(const Rational& a, const Rational& b, const Rational& step);

// "a:b:step" with decimal components, e.g. "0.05:1:0.05".
std::vector<Rational> parse_lambda_grid(const std::string& text);

// -- CSV ---------------------------------------------------------------------

void write_distribution_csv(std::ostream& out, const CosetWeightDistribution& dist);
void write_q_curve_csv(std::ostream& out, const CosetWeightDistribution& dist,
                       const std::vector<Rational>& lambda_grid);

// Doubles are rendered with 12 significant digits everywhere, so repeated
// runs produce byte-identical files.
std::string format_g12(double v);

}  // namespace cosetq
