#include "tabkit/qpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tabkit/error.hpp"

namespace tabkit {

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void QPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial QPolynomial::constant(const BigInt& c) { return QPolynomial({c}); }

QPolynomial QPolynomial::monomial(const BigInt& c, int degree) {
    if (degree < 0) throw DomainError("monomial degree must be nonnegative");
    std::vector<BigInt> coeffs(static_cast<size_t>(degree) + 1, 0);
    coeffs.back() = c;
    return QPolynomial(std::move(coeffs));
}

QPolynomial QPolynomial::power_minus_one(int d) {
    if (d < 1) throw DomainError("exponent must be positive");
    std::vector<BigInt> coeffs(static_cast<size_t>(d) + 1, 0);
    coeffs[0] = -1;
    coeffs.back() = 1;
    return QPolynomial(std::move(coeffs));
}

QPolynomial QPolynomial::cyclotomic(int d) {
    if (d < 1) throw DomainError("cyclotomic index must be positive");
    // Phi_d = (q^d - 1) / prod of Phi_e over proper divisors e of d.
    std::vector<QPolynomial> phi(static_cast<size_t>(d) + 1);
    for (int e = 1; e <= d; ++e) {
        QPolynomial p = power_minus_one(e);
        for (int f = 1; f < e; ++f)
            if (e % f == 0) p = p.divide_exact(phi[static_cast<size_t>(f)]);
        phi[static_cast<size_t>(e)] = p;
    }
    return phi[static_cast<size_t>(d)];
}

BigInt QPolynomial::coefficient(int e) const {
    if (e < 0 || e >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(e)];
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
    if (is_zero() || o.is_zero()) return QPolynomial{};
    std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return QPolynomial(std::move(out));
}

BigInt QPolynomial::evaluate(const BigInt& t) const {
    BigInt out = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) out = out * t + coeffs_[i];
    return out;
}

std::pair<BigInt, BigInt> QPolynomial::evaluate_at_i() const {
    BigInt re = 0, im = 0;
    for (size_t e = 0; e < coeffs_.size(); ++e) {
        switch (e % 4) {
            case 0: re += coeffs_[e]; break;
            case 1: im += coeffs_[e]; break;
            case 2: re -= coeffs_[e]; break;
            default: im -= coeffs_[e]; break;
        }
    }
    return {re, im};
}

std::complex<double> QPolynomial::evaluate_at_unit_root(int order, int exponent) const {
    if (order < 1) throw DomainError("root order must be positive");
    std::complex<double> out = 0.0;
    for (size_t e = 0; e < coeffs_.size(); ++e) {
        const double angle = 2.0 * std::numbers::pi *
                             static_cast<double>((static_cast<long long>(e) * exponent) % order) /
                             static_cast<double>(order);
        out += coeffs_[e].convert_to<double>() * std::polar(1.0, angle);
    }
    return out;
}

QPolynomial QPolynomial::reduce_cyclic(int order) const {
    if (order < 1) throw DomainError("cyclic order must be positive");
    std::vector<BigInt> out(static_cast<size_t>(order), 0);
    for (size_t e = 0; e < coeffs_.size(); ++e) out[e % static_cast<size_t>(order)] += coeffs_[e];
    return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::remainder_by(const QPolynomial& monic_divisor) const {
    if (monic_divisor.is_zero() || monic_divisor.coeffs_.back() != 1)
        throw DomainError("divisor must be monic");
    std::vector<BigInt> rem = coeffs_;
    const int dd = monic_divisor.degree();
    while (static_cast<int>(rem.size()) - 1 >= dd) {
        const BigInt lead = rem.back();
        const size_t shift = rem.size() - 1 - static_cast<size_t>(dd);
        if (lead != 0)
            for (int j = 0; j <= dd; ++j)
                rem[shift + static_cast<size_t>(j)] -=
                    lead * monic_divisor.coeffs_[static_cast<size_t>(j)];
        rem.pop_back();
    }
    return QPolynomial(std::move(rem));
}

QPolynomial QPolynomial::divide_exact(const QPolynomial& divisor) const {
    if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
    if (is_zero()) return QPolynomial{};
    if (degree() < divisor.degree()) throw DivisionNotExact("quotient would not be a polynomial");
    std::vector<BigInt> rem = coeffs_;
    std::vector<BigInt> quot(static_cast<size_t>(degree() - divisor.degree()) + 1, 0);
    const BigInt& dlead = divisor.coeffs_.back();
    for (size_t qi = quot.size(); qi-- > 0;) {
        const BigInt lead = rem[qi + static_cast<size_t>(divisor.degree())];
        if (lead % dlead != 0) throw DivisionNotExact("coefficient division leaves a remainder");
        const BigInt c = lead / dlead;
        quot[qi] = c;
        if (c != 0)
            for (size_t j = 0; j < divisor.coeffs_.size(); ++j)
                rem[qi + j] -= c * divisor.coeffs_[j];
    }
    for (const BigInt& c : rem)
        if (c != 0) throw DivisionNotExact("division leaves a remainder");
    return QPolynomial(std::move(quot));
}

bool QPolynomial::is_palindromic() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != coeffs_[coeffs_.size() - 1 - i]) return false;
    return true;
}

std::string QPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t e = 0; e < coeffs_.size(); ++e) {
        const BigInt& c = coeffs_[e];
        if (c == 0) continue;
        const BigInt mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const bool show_coeff = (mag != 1) || e == 0;
        if (show_coeff) out += mag.str();
        if (e >= 1) {
            out += var;
            if (e >= 2) out += "^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace tabkit
