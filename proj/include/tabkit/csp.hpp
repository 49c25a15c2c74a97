#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tabkit/error.hpp"
#include "tabkit/qpoly.hpp"
#include "tabkit/tableau.hpp"

namespace tabkit {

/// Gaussian binomial coefficient [a, b]_q. Requires 0 <= b <= a.
QPolynomial q_binomial(int a, int b);

/// Exact value of [a, b]_q at q = w^exponent for w a primitive order-th root
/// of unity. Writing d for the multiplicative order of w^exponent, the value
/// is C(a/d, b/d) when d divides a and b, and 0 when d divides a only; when d
/// does not divide a the value is computed by exact cyclotomic reduction and
/// a DomainError is thrown if it is not an integer.
BigInt q_binomial_at_root(int a, int b, int order, int exponent);

/// Sieving polynomial [N-k-1, r]_q * [r, k]_q for the deficit-k family of the
/// hook with N cells and leg r. Requires 1 <= r + 1 <= N and
/// 0 <= k <= min(r, N-r-1).
QPolynomial hook_csp_polynomial(int n_cells, int leg, int deficit);

/// Exact value of a polynomial at a root of unity: the substituted residue
/// modulo q^order - 1, an integrality test via cyclotomic reduction, and a
/// floating approximation for display.
struct RootOfUnityValue {
    int order = 1;
    int exponent = 0;
    QPolynomial residue;               // poly(q^exponent) mod q^order - 1
    std::complex<double> approx;

    static RootOfUnityValue of(const QPolynomial& poly, int order, int exponent);

    /// Residue modulo the order-th cyclotomic polynomial; the value is an
    /// integer exactly when this is constant.
    QPolynomial reduced() const;
    std::optional<BigInt> as_integer() const;
    /// "84", or the reduced residue as a polynomial in w when not an integer.
    std::string display() const;
};

struct CspRow {
    int exponent = 0;
    std::optional<BigInt> exact;       // value of the polynomial, when integral
    std::string exact_display;
    std::complex<double> approx;
    BigInt fixed = 0;                  // family members fixed by that power
    bool match = false;
};

struct CspReport {
    std::string set_name;
    int order = 1;
    QPolynomial polynomial;
    std::vector<CspRow> rows;
    bool holds = false;
};

/// Report assembled from orbit periods. Verifies every period divides the
/// order, evaluates the polynomial at all order-th roots of unity, and checks
/// the congruence poly == sum over orbits of (1 + q^{L/p} + ... ) mod q^L - 1,
/// which is equivalent to the row-by-row fixed-point counts.
CspReport csp_from_periods(const std::vector<int>& periods, int order, const QPolynomial& poly,
                           const std::string& set_name);

/// Walks the orbits of `step` over `members` (throws ActionOrderMismatch if
/// the action leaves the family or some orbit period does not divide `order`)
/// and hands the periods to csp_from_periods.
template <typename Element, typename Step>
CspReport csp_verify(const std::vector<Element>& members, Step step, int order,
                     const QPolynomial& poly, const std::string& set_name) {
    if (order < 1) throw DomainError("csp_verify: order must be positive");
    std::map<Element, int> index;
    for (int i = 0; i < static_cast<int>(members.size()); ++i) index.emplace(members[i], i);
    std::vector<bool> visited(members.size(), false);
    std::vector<int> periods;
    for (size_t start = 0; start < members.size(); ++start) {
        if (visited[start]) continue;
        Element cur = members[start];
        int period = 0;
        do {
            auto it = index.find(cur);
            if (it == index.end())
                throw ActionOrderMismatch("csp_verify: action leaves the family");
            visited[static_cast<size_t>(it->second)] = true;
            cur = step(cur);
            ++period;
        } while (!(cur == members[start]));
        if (order % period != 0)
            throw ActionOrderMismatch("csp_verify: orbit period does not divide the order");
        periods.push_back(period);
    }
    return csp_from_periods(periods, order, poly, set_name);
}

/// Exact value at q = i as a Gaussian integer.
std::pair<BigInt, BigInt> gaussian_value_at_i(const QPolynomial& poly);

/// The natural q-analogue for the deficit-1 family of the 3x3 square:
/// (q^9-1)(q^8-1)(q^7-1)(q^6-1) / ((q^4-1)(q^3-1)^2(q-1)), together with the
/// data showing the sieving test fails for it.
struct Rect33Report {
    QPolynomial polynomial;
    BigInt at_one = 0;                         // 84
    long long order = 0;                       // promotion order, 8
    BigInt fixed_by_square = 0;                // members fixed by two steps, 4
    std::pair<BigInt, BigInt> at_omega_sq;     // value at w^2 = i, exactly 2 - 2i
    CspReport csp;                             // holds == false
};

Rect33Report rect33_report();

/// Number of deficit-k hooks T (N cells, leg r) that project onto the given
/// standard hook S and whose content is unchanged by `steps` promotions.
/// Requires S itself to be fixed by that many promotions (NotFixed).
BigInt fixed_content_fiber_count(const IncreasingTableau& s, int n_cells, int leg, int deficit,
                                 int steps);

}  // namespace tabkit
