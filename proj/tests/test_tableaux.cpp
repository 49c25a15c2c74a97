#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "tabkit/partition.hpp"
#include "tabkit/tableau.hpp"

using namespace tabkit;

TEST_CASE("partition construction and queries") {
    const Partition p({3, 2, 1});
    CHECK(p.rows() == 3);
    CHECK(p.cells() == 6);
    CHECK(p.row_length(0) == 3);
    CHECK(p.column_length(0) == 3);
    CHECK(p.column_length(1) == 2);
    CHECK(p.column_length(2) == 1);
    CHECK(p.contains(2, 0));
    CHECK(!p.contains(1, 2));
    CHECK(!p.is_rectangle());
    CHECK(!p.is_hook());

    CHECK_THROWS_AS(Partition({2, 3}), ShapeMismatch);
    CHECK_THROWS_AS(Partition({3, 0}), ShapeMismatch);

    CHECK(Partition::rectangle(3, 3).parts() == std::vector<int>({3, 3, 3}));
    CHECK(Partition::rectangle(3, 3).is_rectangle());
    CHECK(Partition::hook(6, 2).parts() == std::vector<int>({4, 1, 1}));
    CHECK(Partition::hook(6, 2).is_hook());
    CHECK(Partition::hook(6, 2).hook_leg() == 2);
    CHECK_THROWS_AS(Partition::hook(3, 3), ShapeMismatch);

    // A single row is both a (degenerate) rectangle and a leg-0 hook.
    const Partition row = Partition::rectangle(1, 5);
    CHECK(row.is_rectangle());
    CHECK(row.is_hook());
    CHECK(row.hook_leg() == 0);
}

TEST_CASE("longest chain and deficit range") {
    CHECK(Partition::rectangle(2, 3).longest_chain() == 4);
    CHECK(Partition::rectangle(2, 3).max_deficit() == 2);
    CHECK(Partition::rectangle(3, 3).longest_chain() == 5);
    CHECK(Partition::rectangle(3, 3).max_deficit() == 4);
    CHECK(Partition({3, 2, 1}).longest_chain() == 3);
    // Hooks: the longest path runs along the arm or down the column, so the
    // deficit range matches min(leg, cells - leg - 1).
    for (int cells = 2; cells <= 9; ++cells)
        for (int leg = 0; leg <= cells - 1; ++leg) {
            const Partition h = Partition::hook(cells, leg);
            CHECK(h.longest_chain() == std::max(leg + 1, cells - leg));
            CHECK(h.max_deficit() == std::min(leg, cells - leg - 1));
        }
}

TEST_CASE("hook length formula matches enumeration") {
    CHECK(Partition::rectangle(3, 3).hook_length(0, 0) == 5);
    CHECK(Partition::rectangle(3, 3).hook_length(2, 2) == 1);
    CHECK(hook_length_count(Partition::rectangle(2, 3)) == 5);
    CHECK(hook_length_count(Partition::rectangle(3, 3)) == 42);
    CHECK(hook_length_count(Partition::hook(6, 2)) == 10);

    const std::vector<Partition> shapes = {
        Partition({3, 2}),     Partition({3, 3, 1}),          Partition({4, 2, 1}),
        Partition({2, 2, 2}),  Partition::rectangle(2, 4),    Partition::hook(7, 3),
        Partition({4, 3, 2, 1}),
    };
    for (const Partition& shape : shapes)
        CHECK(hook_length_count(shape) ==
              static_cast<long long>(enumerate_increasing(shape, 0).size()));
}

TEST_CASE("tableau validation accepts and rejects correctly") {
    CHECK_THROWS_AS(IncreasingTableau::from_rows({{1, 2}, {2, 1}}), NotIncreasing);
    CHECK_THROWS_AS(IncreasingTableau::from_rows({{1, 2}, {1, 3}}), NotIncreasing);
    CHECK_THROWS_AS(IncreasingTableau::from_rows({{0, 1}}), NotIncreasing);
    CHECK_THROWS_AS(IncreasingTableau::from_rows({{1, 2}, {3, 5}}), MissingValue);
    CHECK_THROWS_AS(IncreasingTableau::validate({{1, 2}, {3, 4}}, Partition({3, 1})),
                    ShapeMismatch);

    const auto t = IncreasingTableau::from_rows({{1, 3, 4}, {2, 4, 5}, {4, 5, 6}});
    CHECK(t.deficit() == 3);
    CHECK(t.max_entry() == 6);
    CHECK(t.cells() == 9);
    CHECK(!t.is_standard());
    CHECK(content(t) == Content({1, 1, 1, 3, 2, 1}));
    CHECK(t.reading_word() == std::vector<int>({1, 3, 4, 2, 4, 5, 4, 5, 6}));

    const auto syt = IncreasingTableau::from_rows({{1, 3}, {2, 4}});
    CHECK(syt.is_standard());
    CHECK(syt.reading_word() == std::vector<int>({1, 3, 2, 4}));
}

TEST_CASE("enumeration sizes and ordering") {
    const Partition two_three = Partition::rectangle(2, 3);
    CHECK(enumerate_increasing(two_three, 0).size() == 5);
    CHECK(enumerate_increasing(two_three, 1).size() == 5);
    CHECK(enumerate_increasing(two_three, 2).size() == 1);
    CHECK(enumerate_increasing(two_three, 3).empty());
    CHECK(enumerate_increasing(two_three, -1).empty());

    const auto family = enumerate_increasing(Partition::rectangle(2, 2), 0);
    REQUIRE(family.size() == 2);
    CHECK(family[0].rows() == std::vector<std::vector<int>>({{1, 2}, {3, 4}}));
    CHECK(family[1].rows() == std::vector<std::vector<int>>({{1, 3}, {2, 4}}));

    for (int k = 0; k <= 4; ++k) {
        const auto members = enumerate_increasing(Partition::rectangle(3, 3), k);
        CHECK(std::is_sorted(members.begin(), members.end()));
        CHECK(std::adjacent_find(members.begin(), members.end()) == members.end());
        for (const auto& m : members) {
            CHECK(m.deficit() == k);
            CHECK(m.shape() == Partition::rectangle(3, 3));
        }
    }
    CHECK(enumerate_increasing(Partition::rectangle(3, 3), 1).size() == 84);
}

TEST_CASE("hook family sizes follow the product of binomials") {
    for (int cells = 2; cells <= 9; ++cells)
        for (int leg = 0; leg <= cells - 1; ++leg)
            for (int k = 0; k <= std::min(leg, cells - leg - 1); ++k) {
                const auto family = enumerate_increasing(Partition::hook(cells, leg), k);
                CHECK(static_cast<long long>(family.size()) ==
                      binomial(cells - k - 1, leg) * binomial(leg, k));
            }
}

TEST_CASE("ascent sets") {
    CHECK(ascent_set(IncreasingTableau::from_rows({{1, 3, 5}, {2, 4, 6}})) ==
          std::set<int>({3, 5}));
    CHECK(ascent_set(IncreasingTableau::from_rows({{1, 2, 3, 4}})).empty());
    CHECK(ascent_set(IncreasingTableau::from_rows({{1}, {2}, {3}, {4}})).empty());
    CHECK(ascent_set(IncreasingTableau::from_rows({{1, 3, 6}, {2, 5, 8}, {4, 7, 9}})) ==
          std::set<int>({3, 5, 6, 8}));
    CHECK_THROWS_AS(ascent_set(IncreasingTableau::from_rows({{1, 2}, {2, 3}})), NotStandard);
}
