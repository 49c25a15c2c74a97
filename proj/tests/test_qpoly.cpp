#include <cmath>
#include <utility>
#include <vector>

#include "doctest.h"
#include "tabkit/qpoly.hpp"

using namespace tabkit;

TEST_CASE("construction and normalization") {
    CHECK(QPolynomial({1, 2, 0}) == QPolynomial({1, 2}));
    CHECK(QPolynomial({1, 2, 0}).degree() == 1);
    CHECK(QPolynomial({0, 0}).is_zero());
    CHECK(QPolynomial({0, 0}).degree() == -1);
    CHECK(QPolynomial().is_zero());

    CHECK(QPolynomial::constant(5) == QPolynomial({5}));
    CHECK(QPolynomial::constant(0).is_zero());
    CHECK(QPolynomial::monomial(3, 2) == QPolynomial({0, 0, 3}));
    CHECK(QPolynomial::power_minus_one(2) == QPolynomial({-1, 0, 1}));

    const QPolynomial p({4, 0, 7});
    CHECK(p.coefficient(0) == 4);
    CHECK(p.coefficient(1) == 0);
    CHECK(p.coefficient(2) == 7);
    CHECK(p.coefficient(9) == 0);
}

TEST_CASE("arithmetic") {
    const QPolynomial q_plus_1({1, 1});
    const QPolynomial q_minus_1({-1, 1});
    CHECK(q_plus_1 * q_minus_1 == QPolynomial::power_minus_one(2));
    CHECK(q_plus_1 + q_minus_1 == QPolynomial({0, 2}));
    CHECK(q_plus_1 - q_plus_1 == QPolynomial());
    CHECK(q_plus_1 * QPolynomial() == QPolynomial());
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(QPolynomial::cyclotomic(1) == QPolynomial({-1, 1}));
    CHECK(QPolynomial::cyclotomic(2) == QPolynomial({1, 1}));
    CHECK(QPolynomial::cyclotomic(3) == QPolynomial({1, 1, 1}));
    CHECK(QPolynomial::cyclotomic(4) == QPolynomial({1, 0, 1}));
    CHECK(QPolynomial::cyclotomic(6) == QPolynomial({1, -1, 1}));
    CHECK(QPolynomial::cyclotomic(12) == QPolynomial({1, 0, -1, 0, 1}));

    // q^d - 1 factors into the cyclotomics of the divisors of d.
    for (int d = 1; d <= 12; ++d) {
        QPolynomial product = QPolynomial::constant(1);
        for (int e = 1; e <= d; ++e)
            if (d % e == 0) product = product * QPolynomial::cyclotomic(e);
        CHECK(product == QPolynomial::power_minus_one(d));
    }
}

TEST_CASE("evaluation") {
    const QPolynomial p({1, 2, 1});  // (1+q)^2
    CHECK(p.evaluate(3) == 16);
    CHECK(p.evaluate(-1) == 0);
    CHECK(QPolynomial().evaluate(7) == 0);

    CHECK(QPolynomial::monomial(1, 3).evaluate_at_i() == std::make_pair(BigInt(0), BigInt(-1)));
    CHECK(QPolynomial({1, 0, 1}).evaluate_at_i() == std::make_pair(BigInt(0), BigInt(0)));
    CHECK(QPolynomial({1, 1}).evaluate_at_i() == std::make_pair(BigInt(1), BigInt(1)));

    const auto approx = QPolynomial({1, 1}).evaluate_at_unit_root(4, 1);
    CHECK(std::abs(approx.real() - 1.0) < 1e-9);
    CHECK(std::abs(approx.imag() - 1.0) < 1e-9);
}

TEST_CASE("reduction and division") {
    // q^5 + q^3 + 1 with exponents folded mod 3.
    CHECK(QPolynomial({1, 0, 0, 1, 0, 1}).reduce_cyclic(3) == QPolynomial({2, 0, 1}));
    CHECK(QPolynomial({1, 1}).reduce_cyclic(4) == QPolynomial({1, 1}));

    CHECK(QPolynomial({1, 0, 1}).remainder_by(QPolynomial({1, 1})) == QPolynomial({2}));
    CHECK(QPolynomial({-1, 0, 1}).remainder_by(QPolynomial({1, 1})) == QPolynomial());
    CHECK_THROWS_AS(QPolynomial({1, 0, 1}).remainder_by(QPolynomial({1, 2})), DomainError);

    CHECK(QPolynomial::power_minus_one(2).divide_exact(QPolynomial({-1, 1})) ==
          QPolynomial({1, 1}));
    CHECK(QPolynomial::power_minus_one(6).divide_exact(QPolynomial::power_minus_one(3)) ==
          QPolynomial({1, 0, 0, 1}));
    CHECK_THROWS_AS(QPolynomial({1, 0, 1}).divide_exact(QPolynomial({1, 1})), DivisionNotExact);
    CHECK_THROWS_AS(QPolynomial({1, 1}).divide_exact(QPolynomial()), DomainError);
}

TEST_CASE("palindromicity and printing") {
    CHECK(QPolynomial({1, 3, 1}).is_palindromic());
    CHECK(QPolynomial({1, 0, 1}).is_palindromic());
    CHECK(!QPolynomial({1, 1, 2}).is_palindromic());

    CHECK(QPolynomial().to_string() == "0");
    CHECK(QPolynomial::constant(-4).to_string() == "-4");
    CHECK(QPolynomial({1, 2, 3, 0, -1}).to_string() == "1 + 2q + 3q^2 - q^4");
    CHECK(QPolynomial({1, 1}).to_string("w") == "1 + w");
    CHECK(QPolynomial({0, -2}).to_string() == "-2q");
}
