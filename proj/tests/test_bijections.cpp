#include <algorithm>
#include <bit>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "tabkit/bijections.hpp"
#include "tabkit/io.hpp"

using namespace tabkit;

TEST_CASE("standardization keeps the bottom-left occurrence") {
    // The repeated 2 appears at (0,1) and (1,0); the smaller column wins.
    const auto t = tableau_from_text("1,2;2,3");
    CHECK(standardize_step(t) == tableau_from_text("1,3;2,4"));
    CHECK_THROWS_AS(standardize_step(tableau_from_text("1,2;3,4")), AlreadyStandard);
}

TEST_CASE("standardization chain golden") {
    const auto t0 = tableau_from_text("1,3,4;2,4,5;4,5,6");
    const auto t1 = tableau_from_text("1,3,5;2,5,6;4,6,7");
    const auto t2 = tableau_from_text("1,3,6;2,5,7;4,7,8");
    const auto s = tableau_from_text("1,3,6;2,5,8;4,7,9");
    CHECK(standardize_step(t0) == t1);
    CHECK(standardize_step(t1) == t2);
    CHECK(standardize_step(t2) == s);
    CHECK(standardize(t0) == s);
    CHECK(standardize(s) == s);
}

TEST_CASE("fiber golden") {
    const auto s = tableau_from_text("1,3,6;2,5,8;4,7,9");
    const std::vector<IncreasingTableau> expected = {
        tableau_from_text("1,2,3;2,3,5;3,4,6"),
        tableau_from_text("1,2,4;2,3,5;3,5,6"),
        tableau_from_text("1,2,4;2,4,5;3,5,6"),
        tableau_from_text("1,3,4;2,4,5;4,5,6"),
    };
    CHECK(standardize_fiber(s, 3) == expected);
    CHECK(standardize_fiber(s, 0) == std::vector<IncreasingTableau>({s}));
    CHECK(standardize_fiber(s, 5).empty());
    CHECK_THROWS_AS(standardize_fiber(tableau_from_text("1,2;2,3"), 1), NotStandard);
    CHECK_THROWS_AS(standardize_fiber(s, -1), DomainError);
}

TEST_CASE("fibers partition every deficit level") {
    for (const Partition& shape :
         {Partition::rectangle(2, 3), Partition::rectangle(3, 3), Partition::hook(6, 2)}) {
        const auto standard = enumerate_increasing(shape, 0);
        for (int k = 0; k <= shape.max_deficit(); ++k) {
            std::set<IncreasingTableau> seen;
            long long choose_total = 0;
            for (const auto& s : standard) {
                const auto fiber = standardize_fiber(s, k);
                choose_total += binomial(ascent_set(s).size(), k).convert_to<long long>();
                CHECK(static_cast<long long>(fiber.size()) ==
                      binomial(ascent_set(s).size(), k));
                for (const auto& t : fiber) {
                    CHECK(t.deficit() == k);
                    CHECK(standardize(t) == s);
                    CHECK(seen.insert(t).second);
                }
            }
            const auto family = enumerate_increasing(shape, k);
            CHECK(static_cast<long long>(family.size()) == choose_total);
            CHECK(seen == std::set<IncreasingTableau>(family.begin(), family.end()));
        }
    }
}

TEST_CASE("chain paths correspond to standard tableaux") {
    const auto p = lattice_path_from_text("121212");
    CHECK(path_to_tableau(p) == tableau_from_text("1,3,5;2,4,6"));
    CHECK(tableau_to_path(path_to_tableau(p)) == p);

    for (auto [m, n] : {std::pair{2, 3}, {3, 2}, {2, 4}, {3, 3}}) {
        for (const auto& path : enumerate_chain_paths(m, n)) {
            const auto t = path_to_tableau(path);
            CHECK(t.is_standard());
            CHECK(t.shape() == Partition::rectangle(m, n));
            CHECK(tableau_to_path(t) == path);
            CHECK(ascent_set(t) == ascents(path));
        }
        for (const auto& t : enumerate_increasing(Partition::rectangle(m, n), 0))
            CHECK(path_to_tableau(tableau_to_path(t)) == t);
    }
}

TEST_CASE("0/1-vector path encoding golden") {
    const auto p = tableau_to_schroder(tableau_from_text("1,3,4,5;2,4,5,6"));
    CHECK(p.steps == std::vector<unsigned>({1, 2, 1, 3, 3, 2}));
    CHECK(schroder_to_tableau(p) == tableau_from_text("1,3,4,5;2,4,5,6"));

    // A value sitting in three rows merges into one step of weight three.
    const auto triple = tableau_from_text("1,2,3;2,3,4;3,4,5");
    CHECK(triple.deficit() == 4);
    const auto tp = tableau_to_schroder(triple);
    CHECK(tp.steps == std::vector<unsigned>({1, 3, 7, 6, 4}));
    CHECK(schroder_to_tableau(tp) == triple);
}

TEST_CASE("0/1-vector paths round trip every rectangle family") {
    for (auto [m, n] : {std::pair{1, 4}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}}) {
        const Partition shape = Partition::rectangle(m, n);
        long long family_total = 0;
        for (int k = 0; k <= shape.max_deficit(); ++k) {
            const auto family = enumerate_increasing(shape, k);
            family_total += static_cast<long long>(family.size());
            for (const auto& t : family) {
                const SchroderPath p = tableau_to_schroder(t);
                CHECK(is_small(p));
                CHECK(static_cast<int>(p.steps.size()) == m * n - k);
                int weight_excess = 0;
                for (unsigned mask : p.steps)
                    weight_excess += std::popcount(mask) - 1;
                CHECK(weight_excess == k);
                CHECK(schroder_to_tableau(p) == t);
            }
        }
        CHECK(family_total == static_cast<long long>(enumerate_schroder(m, n, true).size()));
    }
    CHECK_THROWS_AS(schroder_to_tableau(SchroderPath{2, 1, {3}}), NotSmall);
}

TEST_CASE("row-increasing validation") {
    CHECK_NOTHROW(validate_row_increasing({{1, 2}, {1, 3}}));
    CHECK_NOTHROW(validate_row_increasing({{1, 2, 3}}));
    CHECK_NOTHROW(validate_row_increasing({{1, 2}, {1, 2}, {2, 3}}));
    CHECK_THROWS_AS(validate_row_increasing({{1, 2}, {2, 1}}), NotIncreasing);
    CHECK_THROWS_AS(validate_row_increasing({{1, 3}, {1, 3}}), MissingValue);
    CHECK_THROWS_AS(validate_row_increasing({{2, 3}, {2, 3}}), MissingValue);
    CHECK_THROWS_AS(validate_row_increasing({{1, 2}, {1}}), ShapeMismatch);
    // Columns may repeat but may not decrease.
    CHECK_THROWS_AS(validate_row_increasing({{2, 3}, {1, 4}}), NotIncreasing);
}

TEST_CASE("row-increasing fillings round trip the unrestricted paths") {
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
        const auto paths = enumerate_schroder(m, n, false);
        std::set<RowIncreasingTableau> seen;
        for (const auto& p : paths) {
            const RowIncreasingTableau t = path_to_row_increasing(p);
            CHECK_NOTHROW(validate_row_increasing(t.rows));
            CHECK(row_increasing_to_path(t) == p);
            CHECK(seen.insert(t).second);
        }
    }
    CHECK(enumerate_schroder(2, 2, false).size() == 6);
}
