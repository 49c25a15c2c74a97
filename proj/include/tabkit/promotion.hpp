#pragma once

#include <set>
#include <vector>

#include "tabkit/tableau.hpp"

namespace tabkit {

/// Jeu-de-taquin promotion adapted to repeated entries. The entry 1 becomes a
/// dot; dots swap with their smallest filled right/below neighbor a (a dot
/// whose right and below neighbors both hold a receives one a and both a-cells
/// become dots); once no dot has a filled right/below neighbor, every other
/// entry drops by one and dots become the maximum entry. Preserves shape and
/// deficit. Works on any partition shape.
IncreasingTableau promote(const IncreasingTableau& t);

/// Same map, specialized to hook shapes where dots simply slide along the arm
/// and down the leg. Throws NotHook on other shapes.
IncreasingTableau promote_hook(const IncreasingTableau& t);

IncreasingTableau promote_steps(const IncreasingTableau& t, int steps);

/// Hook with deficit k -> standard hook with k fewer row cells: deletes the k
/// arm entries that also appear below the corner.
IncreasingTableau hook_projection(const IncreasingTableau& t);

/// Entries of the first column below the corner of a standard hook.
std::set<int> column_set(const IncreasingTableau& t);

/// Image of a column set under one promotion: each entry drops by one and 2
/// wraps to N.
std::set<int> rotate_column_set(const std::set<int>& values, int n_cells);

/// Content after one promotion of a tableau with content alpha:
/// (alpha_1, alpha_3, alpha_4, ..., alpha_M, alpha_2).
Content rotated_content(const Content& alpha);

/// Checks that promotion rotates the content of a hook tableau as above.
bool content_rotation_check(const IncreasingTableau& t);

struct PromotionOrbit {
    IncreasingTableau representative;          // lexicographically least member
    std::vector<IncreasingTableau> members;    // promotion order, starting there
    int period = 0;
};

/// Promotion orbits of the deficit-k family of a shape, ordered by
/// representative.
std::vector<PromotionOrbit> orbit_decomposition(const Partition& shape, int deficit);

/// Least positive power of promotion that fixes the whole family (lcm of the
/// orbit periods; 1 for an empty family).
long long promotion_order(const Partition& shape, int deficit);

/// Number of family members fixed by that many promotion steps.
BigInt fixed_count(const Partition& shape, int deficit, int steps);

}  // namespace tabkit
