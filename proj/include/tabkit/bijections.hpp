#pragma once

#include <vector>

#include "tabkit/paths.hpp"
#include "tabkit/tableau.hpp"

namespace tabkit {

/// One standardization step: let a be the smallest repeated entry; add one to
/// every entry >= a except the leftmost occurrence of a (the one in the
/// smallest column). Lowers the deficit by one. Throws AlreadyStandard on
/// standard input.
IncreasingTableau standardize_step(const IncreasingTableau& t);

/// Full standardization: standardize_step applied until the deficit is zero.
IncreasingTableau standardize(const IncreasingTableau& t);

/// All deficit-k tableaux that standardize to s, in lexicographic order.
/// One preimage per k-subset {u_1 < ... < u_k} of ascent_set(s): subtract one
/// from every entry >= u_k, then >= u_{k-1}, and so on down to u_1.
std::vector<IncreasingTableau> standardize_fiber(const IncreasingTableau& s, int k);

/// Standard rectangular tableau <-> chain-region lattice path: value i sits in
/// row r exactly when step i moves in coordinate r.
IncreasingTableau path_to_tableau(const LatticePath& p);
LatticePath tableau_to_path(const IncreasingTableau& t);

/// Increasing rectangular tableau <-> small path with 0/1-vector steps: step i
/// moves in coordinate j exactly when value i appears in row j. A tableau with
/// deficit k maps to a path with mn - k steps.
SchroderPath tableau_to_schroder(const IncreasingTableau& t);
/// Inverse; throws NotSmall when the path breaks the small-step restriction.
IncreasingTableau schroder_to_tableau(const SchroderPath& p);

/// Rectangular filling with strictly increasing rows, weakly increasing
/// columns, and entries forming an initial segment {1..L}. This is the family
/// matched by the unrestricted (large) 0/1-vector paths.
struct RowIncreasingTableau {
    int m = 0;
    int n = 0;
    std::vector<std::vector<int>> rows;

    friend auto operator<=>(const RowIncreasingTableau&, const RowIncreasingTableau&) = default;
};

RowIncreasingTableau validate_row_increasing(std::vector<std::vector<int>> rows);
SchroderPath row_increasing_to_path(const RowIncreasingTableau& t);
RowIncreasingTableau path_to_row_increasing(const SchroderPath& p);

}  // namespace tabkit
