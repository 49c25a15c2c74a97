#include "tabkit/csp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tabkit/promotion.hpp"

namespace tabkit {

QPolynomial q_binomial(int a, int b) {
    if (a < 0 || b < 0 || b > a) throw DomainError("q-binomial needs 0 <= b <= a");
    // Pascal recurrence [i, j] = [i-1, j] + q^{i-j} [i-1, j-1], rolled in place.
    std::vector<QPolynomial> row(static_cast<size_t>(b) + 1);
    row[0] = QPolynomial::constant(1);
    for (int i = 1; i <= a; ++i)
        for (int j = std::min(i, b); j >= 1; --j) {
            QPolynomial shifted = QPolynomial::monomial(1, i - j) * row[static_cast<size_t>(j) - 1];
            row[static_cast<size_t>(j)] =
                j == i ? std::move(shifted) : row[static_cast<size_t>(j)] + shifted;
        }
    return row[static_cast<size_t>(b)];
}

BigInt q_binomial_at_root(int a, int b, int order, int exponent) {
    if (order < 1) throw DomainError("root order must be positive");
    if (a < 0 || b < 0 || b > a) throw DomainError("q-binomial needs 0 <= b <= a");
    const int e = ((exponent % order) + order) % order;
    const int d = order / std::gcd(order, e);  // multiplicative order of w^exponent
    if (a % d == 0) return b % d == 0 ? binomial(a / d, b / d) : BigInt(0);
    const QPolynomial rem = q_binomial(a, b).remainder_by(QPolynomial::cyclotomic(d));
    if (rem.degree() > 0)
        throw DomainError("q-binomial value at this root of unity is not an integer");
    return rem.coefficient(0);
}

QPolynomial hook_csp_polynomial(int n_cells, int leg, int deficit) {
    if (n_cells < 1 || leg < 0 || leg > n_cells - 1)
        throw DomainError("hook parameters out of range");
    if (deficit < 0 || deficit > std::min(leg, n_cells - leg - 1))
        throw DomainError("deficit out of range for this hook");
    return q_binomial(n_cells - deficit - 1, leg) * q_binomial(leg, deficit);
}

RootOfUnityValue RootOfUnityValue::of(const QPolynomial& poly, int order, int exponent) {
    if (order < 1) throw DomainError("root order must be positive");
    RootOfUnityValue out;
    out.order = order;
    out.exponent = ((exponent % order) + order) % order;
    std::vector<BigInt> residue(static_cast<size_t>(order), 0);
    for (int e = 0; e <= poly.degree(); ++e)
        residue[static_cast<size_t>((static_cast<long long>(e) * out.exponent) % order)] +=
            poly.coefficient(e);
    out.residue = QPolynomial(std::move(residue));
    out.approx = poly.evaluate_at_unit_root(order, out.exponent);
    return out;
}

QPolynomial RootOfUnityValue::reduced() const {
    return residue.remainder_by(QPolynomial::cyclotomic(order));
}

std::optional<BigInt> RootOfUnityValue::as_integer() const {
    const QPolynomial rem = reduced();
    if (rem.degree() > 0) return std::nullopt;
    return rem.coefficient(0);
}

std::string RootOfUnityValue::display() const {
    if (auto v = as_integer()) return v->str();
    return reduced().to_string("w");
}

CspReport csp_from_periods(const std::vector<int>& periods, int order, const QPolynomial& poly,
                           const std::string& set_name) {
    if (order < 1) throw DomainError("order must be positive");
    for (int p : periods)
        if (p < 1 || order % p != 0)
            throw ActionOrderMismatch("orbit period does not divide the order");

    CspReport report;
    report.set_name = set_name;
    report.order = order;
    report.polynomial = poly;

    // Orbit generating function: an orbit of period p contributes
    // 1 + q^{L/p} + q^{2L/p} + ..., which evaluates at w^m to the number of
    // its members fixed by m steps.
    std::vector<BigInt> orbit_coeffs(static_cast<size_t>(order), 0);
    for (int p : periods)
        for (int j = 0; j < p; ++j)
            orbit_coeffs[static_cast<size_t>(j) * static_cast<size_t>(order / p)] += 1;
    const QPolynomial orbit_poly{std::vector<BigInt>(orbit_coeffs)};

    for (int m = 0; m < order; ++m) {
        CspRow row;
        row.exponent = m;
        const RootOfUnityValue value = RootOfUnityValue::of(poly, order, m);
        row.exact = value.as_integer();
        row.exact_display = value.display();
        row.approx = value.approx;
        for (int p : periods)
            if (m % p == 0) row.fixed += p;
        row.match = row.exact.has_value() && *row.exact == row.fixed;
        report.rows.push_back(std::move(row));
    }

    report.holds = poly.reduce_cyclic(order) == orbit_poly;
    return report;
}

std::pair<BigInt, BigInt> gaussian_value_at_i(const QPolynomial& poly) {
    return poly.evaluate_at_i();
}

Rect33Report rect33_report() {
    QPolynomial numerator = QPolynomial::constant(1);
    for (int d : {9, 8, 7, 6}) numerator = numerator * QPolynomial::power_minus_one(d);
    QPolynomial denominator = QPolynomial::power_minus_one(4) * QPolynomial::power_minus_one(3) *
                              QPolynomial::power_minus_one(3) * QPolynomial::power_minus_one(1);

    Rect33Report report;
    report.polynomial = numerator.divide_exact(denominator);
    report.at_one = report.polynomial.evaluate(1);

    const Partition square = Partition::rectangle(3, 3);
    report.order = promotion_order(square, 1);
    report.fixed_by_square = fixed_count(square, 1, 2);
    report.at_omega_sq = report.polynomial.evaluate_at_i();  // w^2 = i for w of order 8

    const std::vector<IncreasingTableau> family = enumerate_increasing(square, 1);
    report.csp = csp_verify(
        family, [](const IncreasingTableau& t) { return promote(t); },
        static_cast<int>(report.order), report.polynomial, "Inc_1(3,3,3)");
    return report;
}

BigInt fixed_content_fiber_count(const IncreasingTableau& s, int n_cells, int leg, int deficit,
                                 int steps) {
    if (deficit < 0 || leg < deficit || n_cells - leg - deficit < 1)
        throw DomainError("family parameters out of range");
    if (s.shape() != Partition::hook(n_cells - deficit, leg))
        throw ShapeMismatch("projection target must be the hook with " +
                            std::to_string(n_cells - deficit) + " cells and leg " +
                            std::to_string(leg));
    if (!s.is_standard()) throw NotStandard("projection target must be standard");
    if (steps < 0) throw DomainError("step count must be nonnegative");
    if (!(promote_steps(s, steps) == s))
        throw NotFixed("target tableau is not fixed by that many promotions");

    const std::set<int> pool_set = column_set(s);
    const std::vector<int> pool(pool_set.begin(), pool_set.end());

    BigInt count = 0;
    std::vector<int> pick;
    auto consider = [&]() {
        // Insert the chosen leg values into the first row; the result projects
        // back onto s and every deficit-k preimage of s arises exactly once.
        std::vector<int> first_row = s.rows()[0];
        first_row.insert(first_row.end(), pick.begin(), pick.end());
        std::sort(first_row.begin(), first_row.end());
        std::vector<std::vector<int>> rows{first_row};
        for (int i = 1; i < s.shape().rows(); ++i) rows.push_back({s.at(i, 0)});
        const IncreasingTableau candidate = IncreasingTableau::from_rows(std::move(rows));
        if (content(promote_steps(candidate, steps)) == content(candidate)) ++count;
    };
    auto choose = [&](auto&& self, size_t from) -> void {
        if (static_cast<int>(pick.size()) == deficit) {
            consider();
            return;
        }
        for (size_t i = from; i < pool.size(); ++i) {
            pick.push_back(pool[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    choose(choose, 0);
    return count;
}

}  // namespace tabkit
