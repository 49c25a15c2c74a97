#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tabkit/numbers.hpp"

namespace tabkit {

/// Integer partition with weakly decreasing positive parts, read as a Young
/// diagram in English convention. The empty partition is the empty shape.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition rectangle(int rows, int cols);
    /// Hook shape (cells - below_corner, 1^below_corner).
    static Partition hook(int cells, int below_corner);

    int rows() const { return static_cast<int>(parts_.size()); }
    int cells() const { return cells_; }
    int row_length(int i) const { return parts_.at(static_cast<size_t>(i)); }
    int column_length(int j) const;
    bool contains(int i, int j) const;
    const std::vector<int>& parts() const { return parts_; }

    bool is_rectangle() const;
    bool is_hook() const;
    /// Number of cells below the corner; hooks only.
    int hook_leg() const;

    /// Length of the longest right/down path through the diagram. Any filling
    /// with strictly increasing rows and columns needs at least this many
    /// distinct values.
    int longest_chain() const;
    int max_deficit() const { return cells_ - longest_chain(); }

    int hook_length(int i, int j) const;

    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int cells_ = 0;
};

/// Number of standard fillings, by the hook length formula.
BigInt hook_length_count(const Partition& shape);

}  // namespace tabkit
