#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "tabkit/numbers.hpp"

namespace tabkit {

/// Polynomial in one variable with exact integer coefficients. Stored dense,
/// lowest degree first, with no trailing zero coefficient; the zero polynomial
/// has an empty coefficient vector and degree -1.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<BigInt> coeffs);

    static QPolynomial constant(const BigInt& c);
    static QPolynomial monomial(const BigInt& c, int degree);
    /// q^d - 1.
    static QPolynomial power_minus_one(int d);
    /// The d-th cyclotomic polynomial.
    static QPolynomial cyclotomic(int d);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coefficient(int e) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    QPolynomial operator+(const QPolynomial& o) const;
    QPolynomial operator-(const QPolynomial& o) const;
    QPolynomial operator*(const QPolynomial& o) const;
    bool operator==(const QPolynomial&) const = default;

    BigInt evaluate(const BigInt& t) const;
    /// Exact value at q = i as a Gaussian integer (real, imaginary).
    std::pair<BigInt, BigInt> evaluate_at_i() const;
    /// Floating approximation at q = exp(2*pi*i*exponent/order).
    std::complex<double> evaluate_at_unit_root(int order, int exponent) const;

    /// Remainder modulo q^order - 1 (exponents folded mod order).
    QPolynomial reduce_cyclic(int order) const;
    /// Remainder after division by a monic divisor.
    QPolynomial remainder_by(const QPolynomial& monic_divisor) const;
    /// Exact quotient; throws DivisionNotExact when the division leaves a
    /// remainder or requires non-integer coefficients.
    QPolynomial divide_exact(const QPolynomial& divisor) const;

    bool is_palindromic() const;
    std::string to_string(const std::string& var = "q") const;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

}  // namespace tabkit
