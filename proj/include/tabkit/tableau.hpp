#pragma once

#include <compare>
#include <set>
#include <vector>

#include "tabkit/partition.hpp"

namespace tabkit {

/// Multiplicity vector of a filling: entry i-1 counts occurrences of i.
using Content = std::vector<int>;

/// A filling of a partition shape with positive integers that strictly
/// increase along rows and down columns, whose entries are exactly
/// {1, ..., N - k} for a shape with N cells. k is the deficit: the number of
/// entries that repeat. Deficit 0 is the standard case, where every value
/// appears exactly once.
class IncreasingTableau {
public:
    /// Checks rows against the given shape and all tableau conditions.
    static IncreasingTableau validate(std::vector<std::vector<int>> rows, const Partition& shape);
    /// Same, with the shape inferred from the row lengths.
    static IncreasingTableau from_rows(std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int at(int i, int j) const { return rows_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    int cells() const { return shape_.cells(); }
    int deficit() const { return deficit_; }
    int max_entry() const { return cells() - deficit_; }
    bool is_standard() const { return deficit_ == 0; }
    std::vector<int> reading_word() const;

    friend auto operator<=>(const IncreasingTableau&, const IncreasingTableau&) = default;

private:
    IncreasingTableau(Partition shape, std::vector<std::vector<int>> rows, int deficit);

    Partition shape_;
    std::vector<std::vector<int>> rows_;
    int deficit_ = 0;
};

/// All increasing tableaux of the given shape and deficit, in lexicographic
/// order of the row-major reading word. Deficits outside [0, max_deficit]
/// yield an empty list.
std::vector<IncreasingTableau> enumerate_increasing(const Partition& shape, int deficit);

Content content(const IncreasingTableau& t);

/// Positions i (2 <= i <= N) whose row lies strictly above the row of i-1.
/// Defined for standard tableaux only.
std::set<int> ascent_set(const IncreasingTableau& t);

}  // namespace tabkit
