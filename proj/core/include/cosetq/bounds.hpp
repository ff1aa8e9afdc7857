#pragma once

#include <iosfwd>
#include <string>
#include <type_traits>
#include <vector>

#include "cosetq/errors.hpp"

namespace cosetq {

// Binary entropy, domain [0, 1], H(0) = H(1) = 0.
double entropy(double x);

// Quaternary entropy x log4 3 - x log4 x - (1-x) log4 (1-x); H4(3/4) = 1.
double entropy4(double x);

struct DeltaRho {
    double delta = 0;
    double rho = 0;
};

// rho = 1/2 - sqrt(delta (1 - delta)), the ball radius exponent matched to
// relative distance delta. Domain (0, 1/2).
DeltaRho rho_of_delta(double delta);

// delta below which the w = 3 rate bounds plateau at 2/3 (rho >= 1/4).
inline constexpr double kPlateauDelta = 0.5 - 0.43301270189221932338;  // 1/2 - sqrt(3)/4

struct OptimizerSettings {
    int grid_points = 4096;
    int refine_passes = 3;
    double tol = 1e-9;
};

struct OptimizationResult {
    double argmin = 0;
    double value = 0;
    double slack = 0;  // width of the final refinement window
};

// Dense grid scan plus local refinement around the best grid point. The
// objective must be unimodal on [lo, hi] for the refinement to be exact;
// every objective in this module is.
template <typename F>
OptimizationResult minimize_on_interval(F&& f, double lo, double hi,
                                        const OptimizerSettings& s = {});

// A named rate-versus-distance upper bound. Curves that depend on the
// parity-check row weight read w; the fixed-weight curves ignore it.
//   gv           1 - H(delta)                       (lower bound, for reference)
//   lp1          H(1/2 - sqrt(delta(1-delta)))
//   lp2          second linear-programming bound (minimized over u)
//   bklm         1 - H(delta/2) / H((1-(1-delta)^w)/2)
//   bhl          lp2 run through the shortening transform
//   is_general   H(rho) - (log2 e / 8w^2) (rho^w/2)^(w+1)
//   is_w3        2/3 for delta <= kPlateauDelta, else min{2/3, rho + H(2 rho)/2}
//   is_w4        H(rho) + (rho/2) log2 F(rho)
//   new_general  H(rho) - (1/w) log2(1 + (rho/(1-rho))^w)
//   new_w3       2/3 for delta <= kPlateauDelta, else (2/3) H4(3 rho)
//   new_w4       H(rho) + (1/4) log2 F(rho)
// with F(rho) = (1-rho)^4 + 4 rho (1-rho)^3 + 6 rho^2 (1-rho)^2.
struct BoundCurve {
    std::string name;
    int w = 3;
    OptimizerSettings opt{};
};

const std::vector<std::string>& bound_catalog();

// Value of the curve at delta in (0, 1/2]; all values lie in [0, 1].
double evaluate_bound(const BoundCurve& curve, double delta);

// Shortening transform: min over t in [0, 1 - 2 delta] of
// (1 - t) base(delta / (1 - t)) + t - t/w.
OptimizationResult apply_shortening(const BoundCurve& base, int w, double delta);

// lp2's inner minimization, exposing the minimizing u.
OptimizationResult lp2_optimization(double delta, const OptimizerSettings& s = {});

// Exponent bounds for balls in the coset graph: minimize over lambda in
// [1e-6, 1] the per-coordinate exponent
//   log2(growth base) - rho log2 lambda.
// The w3 variant minimizes its full objective (1/3) log2(1+3 lambda) -
// rho log2 lambda, whose exact minimum is (2/3) H4(3 rho) for rho <= 1/4
// and 2/3 beyond. The general and w4 variants place lambda at the minimum
// of the dominant term log2(1+lambda) - rho log2 lambda (analytically
// rho/(1-rho)) and evaluate the full exponent there, which reproduces the
// closed forms H(rho) - (1/w) log2(1+(rho/(1-rho))^w) and
// H(rho) + (1/4) log2 F(rho).
enum class BallVariant { general, w3, w4 };
OptimizationResult ball_exponent_bound(int w, double rho, BallVariant variant);

// The competing ball exponent for w = 3: min{2/3, rho + H(2 rho)/2}.
double ball_exponent_is_w3(double rho);

// Pointwise comparison of the new curves against the is_* family, plus the
// ratio of the two general-bound correction terms.
struct ComparisonRow {
    double delta = 0;
    double new_general = 0, is_general = 0;
    double new_w3 = 0, is_w3 = 0;
    double new_w4 = 0, is_w4 = 0;
    double correction_ratio = 0;  // new correction / is correction, general bound
    bool ok = false;
};
struct ComparisonReport {
    int w = 0;
    bool ok = false;
    std::vector<ComparisonRow> rows;
};
ComparisonReport comparison_report(int w, const std::vector<double>& delta_grid);

// CSV table "delta,<curve>,..." at 12 significant digits. When shortened is
// set every curve is run through apply_shortening with the given w.
void write_bound_table_csv(std::ostream& out, const std::vector<BoundCurve>& curves,
                           const std::vector<double>& delta_grid, bool shortened, int w);

// -- implementation of the template -----------------------------------------

namespace detail {
OptimizationResult minimize_impl(double (*eval)(const void*, double), const void* ctx, double lo,
                                 double hi, const OptimizerSettings& s);
}

template <typename F>
OptimizationResult minimize_on_interval(F&& f, double lo, double hi, const OptimizerSettings& s) {
    auto thunk = [](const void* ctx, double x) -> double {
        return (*static_cast<const std::remove_reference_t<F>*>(ctx))(x);
    };
    return detail::minimize_impl(thunk, &f, lo, hi, s);
}

}  // namespace cosetq
