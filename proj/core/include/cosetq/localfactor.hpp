#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cosetq/cwgf.hpp"
#include "cosetq/f2.hpp"
#include "cosetq/polynomial.hpp"
#include "cosetq/rational.hpp"

namespace cosetq {

// The one-step growth factor
//   phi(v, delta, lambda) = sum_{t=0}^{v} binom(v,t) lambda^min(t, delta+v-t)
//                           / (1 + lambda^delta)
// describing how Q grows when v new coordinates join the support and the
// attaching vector sits delta away in weight. phi(v, 0, .) coincides with
// the all-one-code generating function on v coordinates.
Rational phi(int v, int delta, const Rational& lambda);
double phi(int v, int delta, double lambda);

// Numerator polynomial sum_t binom(v,t) x^min(t, delta+v-t).
IntPolynomial phi_numerator(int v, int delta);

// Per-coordinate growth base ((1+lambda)^w / (1+lambda^w))^(1/w).
double phi_bound_general(int w, double lambda);

// Which right-hand side bounds the growth factors / the full product:
//   general: ((1+x)^w  / (1+x^w))^(e/w)
//   sharp3:  (1+3x)^(e/3)            (w = 3)
//   sharp4:  (1+4x+6x^2)^(e/4)       (w = 4)
enum class PhiTarget { general, sharp3, sharp4 };

PhiTarget target_for_weight(int w);
std::string target_name(PhiTarget t);

// Exact test value <= target(lambda)^(e/w), via integer powers of exact
// rationals; -1 / 0 / +1 three-way result.
int compare_to_target_pow(const Rational& value, PhiTarget target, int w, int e,
                          const Rational& lambda);

// target(lambda)^(e/w) in doubles, for reporting.
double target_pow(PhiTarget target, int w, int e, double lambda);

// Verifies phi(v, delta, lambda) <= target(lambda)^(v/w) exactly for every
// v >= 0, delta >= 0 with v + delta <= w, at each grid lambda.
struct PhiBoundReport {
    PhiTarget target;
    int w = 0;
    bool ok = false;
    double max_slack = 0;  // max of phi - target^(v/w); <= 0 when ok
    int worst_v = 0, worst_delta = 0;
    double worst_lambda = 0;
};
PhiBoundReport check_phi_bounds(PhiTarget target, int w, const std::vector<Rational>& lambda_grid);

// The seven exact polynomial certificates behind the sharp w = 3 and w = 4
// targets: each difference of products expands to a stated cofactor that is
// certified nonnegative (or strictly positive) on (0, 1]. Throws
// certificate_error on any mismatch.
struct CertificateCheck {
    std::string name;
    bool ok = false;
};
std::vector<CertificateCheck> verify_phi_certificates();

// One step of a growth chain: v_size new coordinates enter the support, and
// Q grows by at most max over delta <= w - v_size of phi(v_size, delta, .).
struct GrowthCertificate {
    int step = 0;
    int v_size = 0;
    std::vector<double> ratio;  // Q_after / Q_before per grid lambda
    std::vector<double> bound;  // the phi bound per grid lambda
    bool ok = false;            // exact comparison at every grid point
};

// Ratio certificate for extending a code by one vector. base lives on
// coordinates 1..base.length() of b's ambient space; the support of b must
// reach beyond them. The extended code is spanned by base and b on the
// union of base's coordinates and supp(b), and the certificate checks
//   Q_ext / Q_base <= max_{0 <= delta <= w - |V|} phi(|V|, delta, lambda)
// exactly at each grid lambda, where V = supp(b) minus base's coordinates.
GrowthCertificate extension_ratio(const LinearCode& base, const BitVector& b, int w,
                                  const std::vector<Rational>& lambda_grid,
                                  int enum_limit = kDefaultEnumLimit);

// Greedy support-cover order: repeatedly take the lowest-index generator
// whose support adds a new coordinate; fully covered generators are
// skipped. Requires the generator supports to cover all n coordinates.
struct GreedyStep {
    int gen_index = 0;          // 0-based index into gens.generators
    BitVector gen;
    std::vector<int> new_coords;  // 1-indexed coordinates added
};
std::vector<GreedyStep> greedy_cover_order(const GeneratorSet& gens);

// Certifies Q_C(lambda) <= target(lambda)^(n/w) for C spanned by weight-<=w
// generators covering all n coordinates, exactly at each grid lambda, with
// the target picked by w (sharp for 3 and 4). Optionally also emits the
// per-step growth-chain certificates along the greedy cover order.
struct GrowthBoundReport {
    int n = 0, w = 0;
    PhiTarget target = PhiTarget::general;
    bool ok = false;
    bool equality = false;  // exact equality at every grid lambda
    std::vector<double> q, bound, ratio;
    double max_ratio = 0;
    std::vector<GrowthCertificate> chain;
};
GrowthBoundReport certify_growth_bound(const GeneratorSet& gens,
                                       const std::vector<Rational>& lambda_grid,
                                       int enum_limit = kDefaultEnumLimit, bool with_chain = true);

// CSV rows "step,|V_i|,lambda,ratio,bound,pass" for a growth chain.
void write_certificate_csv(std::ostream& out, const std::vector<GrowthCertificate>& chain,
                           const std::vector<Rational>& lambda_grid);

}  // namespace cosetq
