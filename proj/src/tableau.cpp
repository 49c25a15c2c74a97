#include "tabkit/tableau.hpp"

#include <algorithm>

#include "tabkit/error.hpp"

namespace tabkit {

IncreasingTableau::IncreasingTableau(Partition shape, std::vector<std::vector<int>> rows,
                                     int deficit)
    : shape_(std::move(shape)), rows_(std::move(rows)), deficit_(deficit) {}

IncreasingTableau IncreasingTableau::validate(std::vector<std::vector<int>> rows,
                                              const Partition& shape) {
    if (static_cast<int>(rows.size()) != shape.rows())
        throw ShapeMismatch("expected " + std::to_string(shape.rows()) + " rows, got " +
                            std::to_string(rows.size()));
    for (int i = 0; i < shape.rows(); ++i)
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != shape.row_length(i))
            throw ShapeMismatch("row " + std::to_string(i + 1) + " has the wrong length");

    int max_seen = 0;
    for (int i = 0; i < shape.rows(); ++i) {
        for (int j = 0; j < shape.row_length(i); ++j) {
            int v = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (v < 1) throw NotIncreasing("entries must be positive integers");
            if (j > 0 && rows[static_cast<size_t>(i)][static_cast<size_t>(j) - 1] >= v)
                throw NotIncreasing("row " + std::to_string(i + 1) +
                                    " is not strictly increasing");
            if (i > 0 && shape.contains(i - 1, j) &&
                rows[static_cast<size_t>(i) - 1][static_cast<size_t>(j)] >= v)
                throw NotIncreasing("column " + std::to_string(j + 1) +
                                    " is not strictly increasing");
            max_seen = std::max(max_seen, v);
        }
    }

    std::vector<bool> seen(static_cast<size_t>(max_seen) + 1, false);
    for (const auto& row : rows)
        for (int v : row) seen[static_cast<size_t>(v)] = true;
    for (int v = 1; v <= max_seen; ++v)
        if (!seen[static_cast<size_t>(v)])
            throw MissingValue("entries skip the value " + std::to_string(v));

    return IncreasingTableau(shape, std::move(rows), shape.cells() - max_seen);
}

IncreasingTableau IncreasingTableau::from_rows(std::vector<std::vector<int>> rows) {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    Partition shape = parts.empty() ? Partition{} : Partition(std::move(parts));
    return validate(std::move(rows), shape);
}

std::vector<int> IncreasingTableau::reading_word() const {
    std::vector<int> word;
    word.reserve(static_cast<size_t>(cells()));
    for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
    return word;
}

std::vector<IncreasingTableau> enumerate_increasing(const Partition& shape, int deficit) {
    std::vector<IncreasingTableau> out;
    if (deficit < 0 || deficit > shape.max_deficit()) return out;

    const int n_cells = shape.cells();
    const int max_entry = n_cells - deficit;
    if (n_cells == 0) {
        out.push_back(IncreasingTableau::validate({}, shape));
        return out;
    }

    // Cells in reading order, with precomputed neighbors and the length of the
    // longest right/down path from each cell (an upper bound on how far below
    // max_entry its value can sit).
    struct Cell {
        int row, col;
        int left, up;  // flat indices, -1 when absent
        int tail;
    };
    std::vector<Cell> cells;
    std::vector<std::vector<int>> flat_index(static_cast<size_t>(shape.rows()));
    for (int i = 0; i < shape.rows(); ++i) {
        flat_index[static_cast<size_t>(i)].resize(static_cast<size_t>(shape.row_length(i)));
        for (int j = 0; j < shape.row_length(i); ++j) {
            Cell c{i, j, -1, -1, 1};
            if (j > 0) c.left = flat_index[static_cast<size_t>(i)][static_cast<size_t>(j) - 1];
            if (i > 0 && shape.contains(i - 1, j))
                c.up = flat_index[static_cast<size_t>(i) - 1][static_cast<size_t>(j)];
            flat_index[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                static_cast<int>(cells.size());
            cells.push_back(c);
        }
    }
    for (int t = n_cells - 1; t >= 0; --t) {
        Cell& c = cells[static_cast<size_t>(t)];
        int best = 0;
        if (shape.contains(c.row, c.col + 1))
            best = cells[static_cast<size_t>(
                             flat_index[static_cast<size_t>(c.row)][static_cast<size_t>(c.col) + 1])]
                       .tail;
        if (shape.contains(c.row + 1, c.col))
            best = std::max(
                best, cells[static_cast<size_t>(flat_index[static_cast<size_t>(c.row) + 1]
                                                          [static_cast<size_t>(c.col)])]
                          .tail);
        c.tail = 1 + best;
    }

    std::vector<int> values(static_cast<size_t>(n_cells), 0);
    std::vector<int> used(static_cast<size_t>(max_entry) + 1, 0);
    std::vector<std::vector<int>> scratch(static_cast<size_t>(shape.rows()));
    for (int i = 0; i < shape.rows(); ++i)
        scratch[static_cast<size_t>(i)].resize(static_cast<size_t>(shape.row_length(i)));
    int distinct = 0;

    auto emit = [&]() {
        for (int t = 0; t < n_cells; ++t)
            scratch[static_cast<size_t>(cells[static_cast<size_t>(t)].row)]
                   [static_cast<size_t>(cells[static_cast<size_t>(t)].col)] =
                       values[static_cast<size_t>(t)];
        out.push_back(IncreasingTableau::validate(scratch, shape));
    };

    auto recurse = [&](auto&& self, int t) -> void {
        if (t == n_cells) {
            if (distinct == max_entry) emit();
            return;
        }
        const Cell& c = cells[static_cast<size_t>(t)];
        int lo = 1;
        if (c.left >= 0) lo = std::max(lo, values[static_cast<size_t>(c.left)] + 1);
        if (c.up >= 0) lo = std::max(lo, values[static_cast<size_t>(c.up)] + 1);
        const int hi = max_entry - c.tail + 1;
        const int remaining = n_cells - t - 1;
        for (int v = lo; v <= hi; ++v) {
            const int new_distinct = distinct + (used[static_cast<size_t>(v)] == 0 ? 1 : 0);
            if (max_entry - new_distinct > remaining) continue;  // values can no longer all appear
            values[static_cast<size_t>(t)] = v;
            ++used[static_cast<size_t>(v)];
            distinct = new_distinct;
            self(self, t + 1);
            --used[static_cast<size_t>(v)];
            if (used[static_cast<size_t>(v)] == 0) --distinct;
        }
    };
    recurse(recurse, 0);
    return out;
}

Content content(const IncreasingTableau& t) {
    Content alpha(static_cast<size_t>(t.max_entry()), 0);
    for (const auto& row : t.rows())
        for (int v : row) ++alpha[static_cast<size_t>(v) - 1];
    return alpha;
}

std::set<int> ascent_set(const IncreasingTableau& t) {
    if (!t.is_standard()) throw NotStandard("ascent sets are defined for standard tableaux");
    std::vector<int> row_of(static_cast<size_t>(t.cells()) + 1, 0);
    for (int i = 0; i < t.shape().rows(); ++i)
        for (int j = 0; j < t.shape().row_length(i); ++j)
            row_of[static_cast<size_t>(t.at(i, j))] = i;
    std::set<int> out;
    for (int v = 2; v <= t.cells(); ++v)
        if (row_of[static_cast<size_t>(v)] < row_of[static_cast<size_t>(v) - 1]) out.insert(v);
    return out;
}

}  // namespace tabkit
