#include "tabkit/partition.hpp"

#include <algorithm>
#include <numeric>

#include "tabkit/error.hpp"

namespace tabkit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw ShapeMismatch("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ShapeMismatch("partition parts must be weakly decreasing");
    }
    cells_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::rectangle(int rows, int cols) {
    if (rows < 0 || cols < 0) throw ShapeMismatch("rectangle dimensions must be nonnegative");
    if (rows == 0 || cols == 0) return Partition{};
    return Partition(std::vector<int>(static_cast<size_t>(rows), cols));
}

Partition Partition::hook(int cells, int below_corner) {
    if (cells == 0 && below_corner == 0) return Partition{};
    if (below_corner < 0 || cells - below_corner < 1)
        throw ShapeMismatch("hook needs a first row of at least one cell");
    std::vector<int> parts;
    parts.push_back(cells - below_corner);
    for (int i = 0; i < below_corner; ++i) parts.push_back(1);
    return Partition(std::move(parts));
}

int Partition::column_length(int j) const {
    int len = 0;
    for (int part : parts_) {
        if (part > j) ++len;
        else break;
    }
    return len;
}

bool Partition::contains(int i, int j) const {
    return i >= 0 && i < rows() && j >= 0 && j < parts_[static_cast<size_t>(i)];
}

bool Partition::is_rectangle() const {
    return parts_.empty() || parts_.front() == parts_.back();
}

bool Partition::is_hook() const {
    return rows() <= 1 || parts_[1] == 1;
}

int Partition::hook_leg() const {
    if (!is_hook()) throw NotHook("shape " + to_string() + " is not a hook");
    return rows() == 0 ? 0 : rows() - 1;
}

int Partition::longest_chain() const {
    if (parts_.empty()) return 0;
    // L(i,j) = longest right/down path starting at (i,j), bottom-up.
    std::vector<std::vector<int>> len(parts_.size());
    for (int i = rows() - 1; i >= 0; --i) {
        len[static_cast<size_t>(i)].assign(static_cast<size_t>(parts_[static_cast<size_t>(i)]), 1);
        for (int j = parts_[static_cast<size_t>(i)] - 1; j >= 0; --j) {
            int best = 0;
            if (contains(i, j + 1)) best = len[static_cast<size_t>(i)][static_cast<size_t>(j) + 1];
            if (contains(i + 1, j))
                best = std::max(best, len[static_cast<size_t>(i) + 1][static_cast<size_t>(j)]);
            len[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1 + best;
        }
    }
    return len[0][0];
}

int Partition::hook_length(int i, int j) const {
    return (parts_[static_cast<size_t>(i)] - j - 1) + (column_length(j) - i - 1) + 1;
}

std::string Partition::to_string() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

BigInt hook_length_count(const Partition& shape) {
    BigInt numerator = factorial(shape.cells());
    BigInt denominator = 1;
    for (int i = 0; i < shape.rows(); ++i)
        for (int j = 0; j < shape.row_length(i); ++j) denominator *= shape.hook_length(i, j);
    return numerator / denominator;
}

}  // namespace tabkit
