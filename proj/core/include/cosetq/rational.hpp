#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "cosetq/errors.hpp"

namespace cosetq {

// Exact arbitrary-precision integers and rationals. Coset counts, polynomial
// coefficients and rational lambda evaluations all go through these types so
// that every certified comparison is exact.
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt big_binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt big_pow2(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline BigInt big_pow(const BigInt& b, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// b^e for rational b, integer e >= 0.
inline Rational rat_pow(const Rational& b, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), e);
    return r;  // canonical because b is canonical
}

// Parses a plain decimal literal ("1", "0.05", ".5") into an exact rational.
// Scientific notation and signs are rejected: grid bounds and steps are
// nonnegative decimals by contract.
inline Rational parse_decimal(std::string_view text) {
    if (text.empty()) throw domain_error("empty decimal literal");
    std::string digits;
    std::size_t frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (char c : text) {
        if (c == '.') {
            if (seen_dot) throw domain_error("two '.' in decimal literal");
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else {
            throw domain_error("invalid decimal literal \"" + std::string(text) + "\"");
        }
    }
    if (!seen_digit) throw domain_error("decimal literal has no digits");
    BigInt num(digits.empty() ? "0" : digits, 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_digits);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const BigInt& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace cosetq
