#include "cosetq/cwgf.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <thread>

namespace cosetq {

BigInt CosetWeightDistribution::total() const {
    BigInt t(0);
    for (const auto& c : counts) t += c;
    return t;
}

IntPolynomial CosetWeightDistribution::polynomial() const {
    return IntPolynomial(counts);
}

int enumeration_threads() {
    if (const char* env = std::getenv("COSETQ_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 1024) return static_cast<int>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace {

// Every vector splits uniquely as (free-coordinate residue) xor (codeword),
// so cosets are walked residue by residue and the minimum weight within a
// coset by a Gray walk over the 2^k codewords. Total work is 2^n popcounts.
void count_range(const std::vector<std::uint64_t>& rows, const std::vector<int>& free_coords,
                 std::uint64_t begin, std::uint64_t end, std::uint64_t* counts) {
    const int k = static_cast<int>(rows.size());
    const std::uint64_t inner = 1ull << k;

    auto deposit = [&](std::uint64_t residue) {
        std::uint64_t x = 0;
        for (std::size_t i = 0; i < free_coords.size(); ++i)
            if (residue >> i & 1) x |= 1ull << free_coords[i];
        return x;
    };

    // Residues are visited in Gray order so the base vector changes by one
    // coordinate flip per step.
    std::uint64_t x0 = deposit(begin ^ (begin >> 1));
    for (std::uint64_t t = begin; t < end; ++t) {
        std::uint64_t x = x0;
        int m = std::popcount(x);
        for (std::uint64_t s = 1; s < inner; ++s) {
            x ^= rows[static_cast<std::size_t>(std::countr_zero(s))];
            m = std::min(m, std::popcount(x));
        }
        ++counts[m];
        if (t + 1 < end)
            x0 ^= 1ull << free_coords[static_cast<std::size_t>(std::countr_zero(t + 1))];
    }
}

}  // namespace

std::vector<std::uint64_t> coset_weight_counts(const LinearCode& code, int enum_limit) {
    const int n = code.length();
    if (enum_limit < 1) throw domain_error("enumeration limit must be >= 1");
    if (n > std::min(enum_limit, 40))
        throw resource_limit_error("length " + std::to_string(n) + " exceeds enumeration limit " +
                                   std::to_string(std::min(enum_limit, 40)) + " (2^n vectors)");

    std::vector<int> free_coords;
    for (int j = 0; j < n; ++j)
        if (!(code.pivot_mask() >> j & 1)) free_coords.push_back(j);
    const int f = static_cast<int>(free_coords.size());
    const std::uint64_t residues = 1ull << f;

    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    int threads = enumeration_threads();
    if (threads <= 1 || residues < (1ull << 16) || static_cast<std::uint64_t>(threads) > residues) {
        count_range(code.rows(), free_coords, 0, residues, counts.data());
        return counts;
    }

    std::vector<std::vector<std::uint64_t>> partial(
        static_cast<std::size_t>(threads), std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
    std::vector<std::thread> pool;
    std::uint64_t chunk = residues / static_cast<std::uint64_t>(threads);
    for (int t = 0; t < threads; ++t) {
        std::uint64_t lo = chunk * static_cast<std::uint64_t>(t);
        std::uint64_t hi = (t + 1 == threads) ? residues : lo + chunk;
        pool.emplace_back(count_range, std::cref(code.rows()), std::cref(free_coords), lo, hi,
                          partial[static_cast<std::size_t>(t)].data());
    }
    for (auto& th : pool) th.join();
    for (const auto& p : partial)
        for (std::size_t j = 0; j < counts.size(); ++j) counts[j] += p[j];
    return counts;
}

CosetWeightDistribution coset_weight_distribution(const LinearCode& code, int enum_limit) {
    auto raw = coset_weight_counts(code, enum_limit);
    CosetWeightDistribution d;
    d.n = code.length();
    d.k = code.dimension();
    d.counts.reserve(raw.size());
    for (auto c : raw) d.counts.emplace_back(static_cast<unsigned long>(c));
    return d;
}

Rational evaluate_q(const CosetWeightDistribution& dist, const Rational& lambda) {
    if (lambda < 0 || lambda > 1) throw domain_error("lambda must lie in [0, 1]");
    Rational acc(0);
    for (auto it = dist.counts.rbegin(); it != dist.counts.rend(); ++it)
        acc = acc * lambda + Rational(*it);
    return acc;
}

double evaluate_q(const CosetWeightDistribution& dist, double lambda) {
    if (!(lambda >= 0 && lambda <= 1)) throw domain_error("lambda must lie in [0, 1]");
    double acc = 0;
    for (auto it = dist.counts.rbegin(); it != dist.counts.rend(); ++it)
        acc = acc * lambda + it->get_d();
    return acc;
}

BigInt coset_ball_size(const CosetWeightDistribution& dist, int r) {
    if (r < 0) throw domain_error("radius must be >= 0");
    BigInt b(0);
    for (int j = 0; j <= std::min(r, dist.n); ++j) b += dist.counts[static_cast<std::size_t>(j)];
    return b;
}

BallCheck check_ball_vs_q(const CosetWeightDistribution& dist, int r, const Rational& lambda) {
    if (lambda <= 0 || lambda > 1) throw domain_error("lambda must lie in (0, 1]");
    BallCheck c;
    c.r = r;
    c.ball = coset_ball_size(dist, r);
    Rational q = evaluate_q(dist, lambda);
    // |B(r)| <= lambda^-r Q(lambda), compared as |B| lambda^r <= Q.
    Rational lhs = Rational(c.ball) * rat_pow(lambda, static_cast<unsigned long>(r));
    c.ok = lhs <= q;
    Rational lr = rat_pow(lambda, static_cast<unsigned long>(r));
    c.rhs = to_double(q / lr);
    return c;
}

CosetWeightDistribution closed_form_all_one(int n) {
    if (n < 1 || n > kMaxLength) throw domain_error("length out of range");
    CosetWeightDistribution d;
    d.n = n;
    d.k = 1;
    d.counts.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (int j = 0; 2 * j < n; ++j)
        d.counts[static_cast<std::size_t>(j)] =
            big_binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j));
    if (n % 2 == 0)
        d.counts[static_cast<std::size_t>(n / 2)] =
            big_binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(n / 2)) / 2;
    return d;
}

CosetWeightDistribution direct_sum_distribution(const CosetWeightDistribution& a,
                                                const CosetWeightDistribution& b) {
    if (a.n + b.n > kMaxLength)
        throw resource_limit_error("direct sum longer than " + std::to_string(kMaxLength));
    CosetWeightDistribution d;
    d.n = a.n + b.n;
    d.k = a.k + b.k;
    d.counts.assign(static_cast<std::size_t>(d.n) + 1, BigInt(0));
    for (std::size_t i = 0; i < a.counts.size(); ++i) {
        if (a.counts[i] == 0) continue;
        for (std::size_t j = 0; j < b.counts.size(); ++j) d.counts[i + j] += a.counts[i] * b.counts[j];
    }
    return d;
}

MonotonicityReport check_monotonicity(const LinearCode& inner, const LinearCode& outer,
                                      const std::vector<Rational>& lambda_grid, int enum_limit) {
    if (inner.length() != outer.length()) throw dimension_mismatch("codes of different length");
    MonotonicityReport rep;
    rep.nested = true;
    for (const auto& v : inner.basis())
        if (!outer.contains(v)) rep.nested = false;
    if (!rep.nested) throw precondition_error("inner code is not contained in outer code");

    auto dist_inner = coset_weight_distribution(inner, enum_limit);
    auto dist_outer = coset_weight_distribution(outer, enum_limit);
    rep.ok = true;
    for (const auto& lam : lambda_grid) {
        Rational qi = evaluate_q(dist_inner, lam);
        Rational qo = evaluate_q(dist_outer, lam);
        rep.q_inner.push_back(to_double(qi));
        rep.q_outer.push_back(to_double(qo));
        if (qo > qi) rep.ok = false;
    }
    return rep;
}

std::vector<Rational> default_lambda_grid() {
    std::vector<Rational> g;
    for (int i = 1; i <= 20; ++i) {
        Rational q(i, 20);
        q.canonicalize();
        g.push_back(q);
    }
    return g;
}

std::vector<Rational> make_lambda_grid(const Rational& a, const Rational& b, const Rational& step) {
    if (step <= 0) throw domain_error("grid step must be > 0");
    if (a < 0 || b > 1 || a > b) throw domain_error("lambda grid must satisfy 0 <= a <= b <= 1");
    std::vector<Rational> g;
    for (Rational v = a; v <= b; v += step) g.push_back(v);
    return g;
}

std::vector<Rational> parse_lambda_grid(const std::string& text) {
    std::size_t p1 = text.find(':');
    std::size_t p2 = p1 == std::string::npos ? std::string::npos : text.find(':', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw domain_error("lambda grid must be \"a:b:step\"");
    Rational a = parse_decimal(text.substr(0, p1));
    Rational b = parse_decimal(text.substr(p1 + 1, p2 - p1 - 1));
    Rational step = parse_decimal(text.substr(p2 + 1));
    return make_lambda_grid(a, b, step);
}

std::string format_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_distribution_csv(std::ostream& out, const CosetWeightDistribution& dist) {
    out << "j,count\n";
    for (int j = 0; j <= dist.n; ++j)
        out << j << ',' << dist.counts[static_cast<std::size_t>(j)].get_str() << '\n';
}

void write_q_curve_csv(std::ostream& out, const CosetWeightDistribution& dist,
                       const std::vector<Rational>& lambda_grid) {
    out << "lambda,q_value\n";
    for (const auto& lam : lambda_grid)
        out << format_g12(to_double(lam)) << ',' << format_g12(to_double(evaluate_q(dist, lam)))
            << '\n';
}

}  // namespace cosetq
