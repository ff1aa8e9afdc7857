#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cosetq/rational.hpp"

namespace cosetq {

// Dense univariate polynomial with exact integer coefficients, coefficient
// of x^i at index i. Normalized so the leading coefficient is nonzero (the
// zero polynomial has no coefficients).
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long> coeffs);
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial monomial(const BigInt& c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const BigInt& coeff(std::size_t i) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial pow(unsigned e) const;
    bool operator==(const IntPolynomial& o) const = default;

    Rational eval(const Rational& x) const;
    double eval(double x) const;

    bool all_coeffs_nonnegative() const;

    // A lower bound for the polynomial's value anywhere on [0, 1]:
    // nonnegative monomials are dropped at 0, negative ones taken at 1,
    // i.e. constant term plus the sum of negative coefficients.
    BigInt lower_bound_on_unit_interval() const;

    std::string to_string() const;  // e.g. "3 + 6x - x^2"

private:
    std::vector<BigInt> coeffs_;
    void normalize();
};

}  // namespace cosetq
