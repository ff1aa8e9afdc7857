#include "cosetq/localfactor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <ostream>

namespace cosetq {

namespace {

void check_phi_args(int v, int delta) {
    if (v < 0 || delta < 0) throw domain_error("phi arguments must be >= 0");
    if (v + delta > kMaxLength) throw domain_error("phi arguments too large");
}

}  // namespace

IntPolynomial phi_numerator(int v, int delta) {
    check_phi_args(v, delta);
    std::vector<BigInt> coeffs(static_cast<std::size_t>(v) + 1, BigInt(0));
    for (int t = 0; t <= v; ++t) {
        int e = std::min(t, delta + v - t);
        coeffs[static_cast<std::size_t>(e)] +=
            big_binomial(static_cast<unsigned long>(v), static_cast<unsigned long>(t));
    }
    return IntPolynomial(std::move(coeffs));
}

Rational phi(int v, int delta, const Rational& lambda) {
    check_phi_args(v, delta);
    if (lambda <= 0 || lambda > 1) throw domain_error("lambda must lie in (0, 1]");
    Rational num = phi_numerator(v, delta).eval(lambda);
    Rational den = Rational(1) + rat_pow(lambda, static_cast<unsigned long>(delta));
    return num / den;
}

double phi(int v, int delta, double lambda) {
    check_phi_args(v, delta);
    if (!(lambda > 0 && lambda <= 1)) throw domain_error("lambda must lie in (0, 1]");
    return phi_numerator(v, delta).eval(lambda) / (1.0 + std::pow(lambda, delta));
}

double phi_bound_general(int w, double lambda) {
    if (w < 1) throw domain_error("w must be >= 1");
    if (!(lambda > 0 && lambda <= 1)) throw domain_error("lambda must lie in (0, 1]");
    return std::pow(std::pow(1 + lambda, w) / (1 + std::pow(lambda, w)), 1.0 / w);
}

PhiTarget target_for_weight(int w) {
    if (w == 3) return PhiTarget::sharp3;
    if (w == 4) return PhiTarget::sharp4;
    return PhiTarget::general;
}

std::string target_name(PhiTarget t) {
    switch (t) {
        case PhiTarget::sharp3: return "(1+3x)";
        case PhiTarget::sharp4: return "(1+4x+6x^2)";
        default: return "(1+x)^w/(1+x^w)";
    }
}

int compare_to_target_pow(const Rational& value, PhiTarget target, int w, int e,
                          const Rational& lambda) {
    if (e < 0) throw domain_error("exponent must be >= 0");
    if (value < 0) throw domain_error("value must be >= 0");
    // value <= T^(e/w) iff value^w <= T^e; both sides positive.
    auto ue = static_cast<unsigned long>(e);
    switch (target) {
        case PhiTarget::sharp3: {
            Rational lhs = rat_pow(value, 3);
            Rational rhs = rat_pow(Rational(1) + 3 * lambda, ue);
            return cmp(lhs, rhs);
        }
        case PhiTarget::sharp4: {
            Rational base = Rational(1) + 4 * lambda + 6 * rat_pow(lambda, 2);
            return cmp(rat_pow(value, 4), rat_pow(base, ue));
        }
        default: {
            auto uw = static_cast<unsigned long>(w);
            Rational lhs = rat_pow(value, uw) * rat_pow(Rational(1) + rat_pow(lambda, uw), ue);
            Rational rhs = rat_pow(Rational(1) + lambda, uw * ue);
            return cmp(lhs, rhs);
        }
    }
}

double target_pow(PhiTarget target, int w, int e, double lambda) {
    double x = lambda;
    switch (target) {
        case PhiTarget::sharp3: return std::pow(1 + 3 * x, e / 3.0);
        case PhiTarget::sharp4: return std::pow(1 + 4 * x + 6 * x * x, e / 4.0);
        default: return std::pow(std::pow(1 + x, w) / (1 + std::pow(x, w)), e / double(w));
    }
}

PhiBoundReport check_phi_bounds(PhiTarget target, int w, const std::vector<Rational>& lambda_grid) {
    if (w < 1) throw domain_error("w must be >= 1");
    if (target == PhiTarget::sharp3 && w != 3) throw domain_error("sharp3 target requires w = 3");
    if (target == PhiTarget::sharp4 && w != 4) throw domain_error("sharp4 target requires w = 4");
    PhiBoundReport rep;
    rep.target = target;
    rep.w = w;
    rep.ok = true;
    rep.max_slack = -std::numeric_limits<double>::infinity();
    for (int v = 0; v <= w; ++v) {
        for (int delta = 0; v + delta <= w; ++delta) {
            for (const auto& lam : lambda_grid) {
                Rational p = phi(v, delta, lam);
                if (compare_to_target_pow(p, target, w, v, lam) > 0) rep.ok = false;
                double slack = to_double(p) - target_pow(target, w, v, to_double(lam));
                if (slack > rep.max_slack) {
                    rep.max_slack = slack;
                    rep.worst_v = v;
                    rep.worst_delta = delta;
                    rep.worst_lambda = to_double(lam);
                }
            }
        }
    }
    return rep;
}

namespace {

IntPolynomial one_plus_x_pow(unsigned e) { return IntPolynomial({1, 1}).pow(e); }

CertificateCheck expansion_certificate(const std::string& name, const IntPolynomial& lhs,
                                       const IntPolynomial& rhs) {
    // The certificate: lhs expands exactly to rhs, and rhs is nonnegative on
    // (0, 1] -- either coefficient-wise, or, after factoring out the leading
    // power of x (positive on (0, 1]), through the [0,1] lower bound on the
    // remaining cofactor.
    if (lhs != rhs)
        throw certificate_error(name + ": expansion mismatch, got " + lhs.to_string());
    if (!rhs.all_coeffs_nonnegative()) {
        std::size_t v = 0;
        while (v < rhs.coeffs().size() && rhs.coeff(v) == 0) ++v;
        IntPolynomial cofactor(
            std::vector<BigInt>(rhs.coeffs().begin() + static_cast<long>(v), rhs.coeffs().end()));
        if (cofactor.lower_bound_on_unit_interval() <= 0)
            throw certificate_error(name + ": cofactor not certified nonnegative on (0,1]");
    }
    return {name, true};
}

}  // namespace

std::vector<CertificateCheck> verify_phi_certificates() {
    std::vector<CertificateCheck> out;
    const IntPolynomial one_plus_3x({1, 3});
    const IntPolynomial big_b({1, 4, 6});  // 1 + 4x + 6x^2
    const IntPolynomial x({0, 1});

    // sharp w = 3 target: three certificates
    out.push_back(expansion_certificate(
        "(1+3x)(1+x^2)^3 - (1+x)^3 = x^3 (8+3x+9x^2+x^3+3x^4)",
        one_plus_3x * IntPolynomial({1, 0, 1}).pow(3) - one_plus_x_pow(3),
        x.pow(3) * IntPolynomial({8, 3, 9, 1, 3})));
    // (1+3x)^2 - (1+x)^3 = x (3 + 6x - x^2); the cofactor has a negative
    // coefficient, so positivity on (0,1] comes from the interval bound
    // 3 - 1 = 2 > 0 inside expansion_certificate.
    out.push_back(expansion_certificate("(1+3x)^2 - (1+x)^3 = x (3+6x-x^2)",
                                        one_plus_3x.pow(2) - one_plus_x_pow(3),
                                        x * IntPolynomial({3, 6, -1})));
    out.push_back(expansion_certificate("(1+x)^3 - (1+3x) = x^2 (3+x)",
                                        one_plus_x_pow(3) - one_plus_3x,
                                        x.pow(2) * IntPolynomial({3, 1})));

    // sharp w = 4 target: four certificates
    out.push_back(expansion_certificate(
        "B(x)(1+x^3)^4 - (1+x)^4 = x^4 (15+24x+6x^2+24x^3+36x^4+4x^5+16x^6+24x^7+x^8+4x^9+6x^10)",
        big_b * IntPolynomial({1, 0, 0, 1}).pow(4) - one_plus_x_pow(4),
        x.pow(4) * IntPolynomial({15, 24, 6, 24, 36, 4, 16, 24, 1, 4, 6})));
    out.push_back(expansion_certificate(
        "B(x)(1+x^2)^2 - (1+x)^4 = 2x^2+4x^3+12x^4+4x^5+6x^6",
        big_b * IntPolynomial({1, 0, 1}).pow(2) - one_plus_x_pow(4),
        IntPolynomial({0, 0, 2, 4, 12, 4, 6})));
    out.push_back(expansion_certificate("B(x)^3 - (1+3x)^4 = 12x^2+100x^3+315x^4+432x^5+216x^6",
                                        big_b.pow(3) - one_plus_3x.pow(4),
                                        IntPolynomial({0, 0, 12, 100, 315, 432, 216})));
    out.push_back(expansion_certificate("B(x) - (1+4x+3x^2) = 3x^2",
                                        big_b - IntPolynomial({1, 4, 3}),
                                        IntPolynomial({0, 0, 3})));
    return out;
}

namespace {

// Compacts the bits of x selected by mask into positions 0..popcount(mask)-1.
std::uint64_t compact_bits(std::uint64_t x, std::uint64_t mask) {
    std::uint64_t out = 0;
    int i = 0;
    for (std::uint64_t m = mask; m; m &= m - 1, ++i)
        if (x >> std::countr_zero(m) & 1) out |= 1ull << i;
    return out;
}

Rational phi_bound_max_delta(int v, int w, const Rational& lam) {
    Rational best = phi(v, 0, lam);
    for (int delta = 1; v + delta <= w; ++delta) best = std::max(best, phi(v, delta, lam));
    return best;
}

}  // namespace

GrowthCertificate extension_ratio(const LinearCode& base, const BitVector& b, int w,
                                  const std::vector<Rational>& lambda_grid, int enum_limit) {
    const int u = base.length();
    if (b.length() < u) throw dimension_mismatch("b shorter than the base code's length");
    if (w < 1) throw domain_error("w must be >= 1");
    if (b.weight() > w)
        throw precondition_error("attaching vector weight exceeds w");
    std::uint64_t umask = full_mask(u);
    std::uint64_t vmask = b.word() & ~umask;
    if (vmask == 0) throw precondition_error("supp(b) must reach beyond the base coordinates");

    const int vsz = std::popcount(vmask);
    const int m = u + vsz;

    // Extended code on base coordinates followed by the new ones.
    LinearCode ext(m);
    for (auto row : base.rows()) ext.insert_word(row);
    ext.insert_word((b.word() & umask) | (full_mask(vsz) << u));

    auto dist_base = coset_weight_distribution(base, enum_limit);
    auto dist_ext = coset_weight_distribution(ext, enum_limit);

    GrowthCertificate cert;
    cert.step = 0;
    cert.v_size = vsz;
    cert.ok = true;
    for (const auto& lam : lambda_grid) {
        Rational qb = evaluate_q(dist_base, lam);
        Rational qe = evaluate_q(dist_ext, lam);
        Rational bound = phi_bound_max_delta(vsz, w, lam);
        if (qe > bound * qb) cert.ok = false;
        cert.ratio.push_back(to_double(qe / qb));
        cert.bound.push_back(to_double(bound));
    }
    return cert;
}

std::vector<GreedyStep> greedy_cover_order(const GeneratorSet& gens) {
    if (!gens.covers_all())
        throw precondition_error("generator supports do not cover all coordinates");
    std::vector<GreedyStep> order;
    std::uint64_t covered = 0;
    const std::uint64_t all = full_mask(gens.n);
    while (covered != all) {
        bool advanced = false;
        for (std::size_t i = 0; i < gens.generators.size(); ++i) {
            std::uint64_t vmask = gens.generators[i].word() & ~covered;
            if (vmask == 0) continue;
            GreedyStep s;
            s.gen_index = static_cast<int>(i);
            s.gen = gens.generators[i];
            s.new_coords = BitVector(gens.n, vmask).support();
            order.push_back(std::move(s));
            covered |= gens.generators[i].word();
            advanced = true;
            break;
        }
        if (!advanced) throw precondition_error("cover stalled before reaching all coordinates");
    }
    return order;
}

GrowthBoundReport certify_growth_bound(const GeneratorSet& gens,
                                       const std::vector<Rational>& lambda_grid, int enum_limit,
                                       bool with_chain) {
    if (!gens.covers_all())
        throw precondition_error("generator supports do not cover all coordinates");
    const int n = gens.n;
    const int w = gens.max_weight;

    GrowthBoundReport rep;
    rep.n = n;
    rep.w = w;
    rep.target = target_for_weight(w);

    LinearCode code = gens.span();
    auto dist = coset_weight_distribution(code, enum_limit);

    rep.ok = true;
    rep.equality = true;
    rep.max_ratio = 0;
    for (const auto& lam : lambda_grid) {
        Rational q = evaluate_q(dist, lam);
        int c = compare_to_target_pow(q, rep.target, w, n, lam);
        if (c > 0) rep.ok = false;
        if (c != 0) rep.equality = false;
        double qd = to_double(q);
        double bd = target_pow(rep.target, w, n, to_double(lam));
        rep.q.push_back(qd);
        rep.bound.push_back(bd);
        rep.ratio.push_back(qd / bd);
        rep.max_ratio = std::max(rep.max_ratio, qd / bd);
    }

    if (with_chain) {
        auto order = greedy_cover_order(gens);
        std::uint64_t covered = 0;
        std::vector<std::uint64_t> taken;  // generator words in greedy order
        int step = 1;
        for (const auto& s : order) {
            std::uint64_t next = covered | s.gen.word();
            const int pn = std::popcount(covered);
            const int cn = std::popcount(next);

            GrowthCertificate cert;
            cert.step = step++;
            cert.v_size = cn - pn;

            LinearCode cur(cn);
            for (auto wrd : taken) cur.insert_word(compact_bits(wrd, next));
            cur.insert_word(compact_bits(s.gen.word(), next));
            auto dist_cur = coset_weight_distribution(cur, enum_limit);

            // Q of the previous restriction; the empty chain has Q = 1.
            CosetWeightDistribution dist_prev;
            if (pn > 0) {
                LinearCode prev(pn);
                for (auto wrd : taken) prev.insert_word(compact_bits(wrd, covered));
                dist_prev = coset_weight_distribution(prev, enum_limit);
            }

            cert.ok = true;
            for (const auto& lam : lambda_grid) {
                Rational qp = pn > 0 ? evaluate_q(dist_prev, lam) : Rational(1);
                Rational qc = evaluate_q(dist_cur, lam);
                Rational bound = phi_bound_max_delta(cert.v_size, w, lam);
                if (qc > bound * qp) cert.ok = false;
                cert.ratio.push_back(to_double(qc / qp));
                cert.bound.push_back(to_double(bound));
            }
            if (!cert.ok) rep.ok = false;
            rep.chain.push_back(std::move(cert));
            taken.push_back(s.gen.word());
            covered = next;
        }
    }
    return rep;
}

void write_certificate_csv(std::ostream& out, const std::vector<GrowthCertificate>& chain,
                           const std::vector<Rational>& lambda_grid) {
    out << "step,|V_i|,lambda,ratio,bound,pass\n";
    for (const auto& c : chain)
        for (std::size_t i = 0; i < lambda_grid.size(); ++i)
            out << c.step << ',' << c.v_size << ',' << format_g12(to_double(lambda_grid[i])) << ','
                << format_g12(c.ratio[i]) << ',' << format_g12(c.bound[i]) << ','
                << (c.ok ? 1 : 0) << '\n';
}

}  // namespace cosetq
