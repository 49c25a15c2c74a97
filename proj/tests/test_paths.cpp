#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "tabkit/partition.hpp"
#include "tabkit/paths.hpp"

using namespace tabkit;

TEST_CASE("chain path enumeration") {
    const auto paths = enumerate_chain_paths(2, 3);
    REQUIRE(paths.size() == 5);
    CHECK(std::is_sorted(paths.begin(), paths.end()));
    CHECK(paths.front().steps == std::vector<int>({1, 1, 1, 2, 2, 2}));
    CHECK(paths.back().steps == std::vector<int>({1, 2, 1, 2, 1, 2}));
    for (const auto& p : paths) CHECK_NOTHROW(validate_path(p));

    // Path counts agree with the standard filling counts of the rectangle.
    for (auto [m, n] : {std::pair{2, 2}, {2, 4}, {3, 2}, {3, 3}, {3, 4}, {4, 3}, {2, 6}})
        CHECK(hook_length_count(Partition::rectangle(m, n)) ==
              static_cast<long long>(enumerate_chain_paths(m, n).size()));
}

TEST_CASE("chain path validation") {
    CHECK_THROWS_AS(validate_path(LatticePath{2, 1, {2, 1}}), DomainError);
    CHECK_THROWS_AS(validate_path(LatticePath{2, 2, {1, 1, 1, 2}}), DomainError);
    CHECK_THROWS_AS(validate_path(LatticePath{2, 1, {1, 3}}), DomainError);
    CHECK_THROWS_AS(validate_path(LatticePath{2, 2, {1, 2}}), DomainError);
    CHECK_NOTHROW(validate_path(LatticePath{3, 2, {1, 2, 3, 1, 2, 3}}));
}

TEST_CASE("ascents of chain paths") {
    CHECK(ascents(LatticePath{2, 3, {1, 2, 1, 2, 1, 2}}) == std::set<int>({3, 5}));
    CHECK(ascents(LatticePath{3, 2, {1, 1, 2, 2, 3, 3}}).empty());
    CHECK(ascents(LatticePath{3, 2, {1, 2, 3, 1, 2, 3}}) == std::set<int>({4}));
}

TEST_CASE("ascent counts match the closed form") {
    for (auto [m, n] :
         {std::pair{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {3, 4}, {4, 2},
          {4, 3}, {5, 2}, {6, 2}}) {
        std::map<int, long long> by_ascents;
        for (const auto& p : enumerate_chain_paths(m, n))
            ++by_ascents[static_cast<int>(ascents(p).size())];
        const int top = (m - 1) * (n - 1);
        for (int ell = 0; ell <= top; ++ell) {
            CHECK(narayana_number(m, n, ell) == by_ascents[ell]);
            CHECK(narayana_number(m, n, ell) == narayana_number(m, n, top - ell));
        }
    }
}

TEST_CASE("ascent generating polynomials") {
    CHECK(narayana_polynomial(2, 3) == QPolynomial({1, 3, 1}));
    CHECK(narayana_polynomial(2, 4) == QPolynomial({1, 6, 6, 1}));
    CHECK(narayana_polynomial(4, 2) == QPolynomial({1, 6, 6, 1}));
    CHECK(narayana_polynomial(3, 3) == QPolynomial({1, 10, 20, 10, 1}));
    CHECK(narayana_polynomial(3, 3).evaluate(1) == 42);
    CHECK(narayana_polynomial(3, 3).evaluate(2) == 197);
    CHECK(narayana_polynomial(3, 3).is_palindromic());

    CHECK_THROWS_AS(narayana_number(1, 3, 0), DomainError);
    CHECK_THROWS_AS(narayana_number(2, 0, 0), DomainError);
    CHECK_THROWS_AS(narayana_number(2, 3, -1), DomainError);
    CHECK_THROWS_AS(narayana_number(2, 3, 3), DomainError);
}

TEST_CASE("0/1-vector path enumeration") {
    CHECK(enumerate_schroder(2, 2, true).size() == 3);
    CHECK(enumerate_schroder(2, 2, false).size() == 6);
    CHECK(enumerate_schroder(2, 3, true).size() == 11);
    CHECK(enumerate_schroder(2, 3, false).size() == 22);
    CHECK(enumerate_schroder(2, 4, true).size() == 45);
    CHECK(enumerate_schroder(3, 3, true).size() == 197);
    CHECK(enumerate_schroder(3, 3, false).size() == 788);

    // The small paths are exactly the small members of the full list.
    const auto all = enumerate_schroder(2, 3, false);
    std::vector<SchroderPath> small;
    for (const auto& p : all)
        if (is_small(p)) small.push_back(p);
    CHECK(small == enumerate_schroder(2, 3, true));

    // Degenerate dimensions.
    const auto column = enumerate_schroder(1, 3, true);
    REQUIRE(column.size() == 1);
    CHECK(column[0].steps == std::vector<unsigned>({1, 1, 1}));
    CHECK(enumerate_schroder(1, 3, false).size() == 1);
    REQUIRE(enumerate_schroder(2, 1, true).size() == 1);
    CHECK(enumerate_schroder(2, 1, false).size() == 2);
}

TEST_CASE("0/1-vector path predicates and positions") {
    const SchroderPath diagonal{2, 1, {3}};
    CHECK_NOTHROW(validate_path(diagonal));
    CHECK(!is_small(diagonal));
    CHECK(prefix_positions(diagonal) == std::vector<std::vector<int>>({{1, 1}}));

    const SchroderPath two_diag{2, 2, {3, 3}};
    CHECK(prefix_positions(two_diag) == std::vector<std::vector<int>>({{1, 1}, {2, 2}}));
    CHECK(!is_small(two_diag));

    CHECK(is_small(SchroderPath{2, 1, {1, 2}}));

    CHECK_THROWS_AS(validate_path(SchroderPath{2, 1, {0, 3}}), DomainError);
    CHECK_THROWS_AS(validate_path(SchroderPath{2, 1, {4}}), DomainError);
    CHECK_THROWS_AS(validate_path(SchroderPath{2, 1, {2, 1}}), DomainError);
    CHECK_THROWS_AS(validate_path(SchroderPath{2, 2, {3}}), DomainError);
}
