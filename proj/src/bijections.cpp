#include "tabkit/bijections.hpp"

#include <algorithm>

#include "tabkit/error.hpp"

namespace tabkit {

namespace {

std::vector<std::vector<int>> bump_from(const std::vector<std::vector<int>>& rows, int threshold,
                                        int skip_row, int skip_col) {
    std::vector<std::vector<int>> out = rows;
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = 0; j < out[i].size(); ++j)
            if (out[i][j] >= threshold &&
                !(static_cast<int>(i) == skip_row && static_cast<int>(j) == skip_col))
                ++out[i][j];
    return out;
}

std::vector<std::vector<int>> drop_from(const std::vector<std::vector<int>>& rows, int threshold) {
    std::vector<std::vector<int>> out = rows;
    for (auto& row : out)
        for (int& v : row)
            if (v >= threshold) --v;
    return out;
}

}  // namespace

IncreasingTableau standardize_step(const IncreasingTableau& t) {
    if (t.is_standard()) throw AlreadyStandard("tableau has no repeated entries");
    const Content alpha = content(t);
    int a = 0;
    for (size_t v = 0; v < alpha.size(); ++v)
        if (alpha[v] >= 2) {
            a = static_cast<int>(v) + 1;
            break;
        }
    // Equal entries occupy distinct rows and columns, so the smallest column
    // index picks a unique occurrence (the bottom-left one).
    int keep_row = -1, keep_col = -1;
    for (int i = 0; i < t.shape().rows(); ++i)
        for (int j = 0; j < t.shape().row_length(i); ++j)
            if (t.at(i, j) == a && (keep_col == -1 || j < keep_col)) {
                keep_row = i;
                keep_col = j;
            }
    return IncreasingTableau::validate(bump_from(t.rows(), a, keep_row, keep_col), t.shape());
}

IncreasingTableau standardize(const IncreasingTableau& t) {
    IncreasingTableau cur = t;
    while (!cur.is_standard()) cur = standardize_step(cur);
    return cur;
}

std::vector<IncreasingTableau> standardize_fiber(const IncreasingTableau& s, int k) {
    if (!s.is_standard()) throw NotStandard("fibers are taken over standard tableaux");
    if (k < 0) throw DomainError("deficit must be nonnegative");
    std::vector<IncreasingTableau> out;
    if (k == 0) {
        out.push_back(s);
        return out;
    }
    const std::set<int> asc = ascent_set(s);
    const std::vector<int> pool(asc.begin(), asc.end());
    if (k > static_cast<int>(pool.size())) return out;

    std::vector<int> pick;
    auto choose = [&](auto&& self, size_t from) -> void {
        if (static_cast<int>(pick.size()) == k) {
            std::vector<std::vector<int>> rows = s.rows();
            for (size_t idx = pick.size(); idx-- > 0;) rows = drop_from(rows, pick[idx]);
            out.push_back(IncreasingTableau::validate(std::move(rows), s.shape()));
            return;
        }
        for (size_t i = from; i < pool.size(); ++i) {
            pick.push_back(pool[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    choose(choose, 0);
    std::sort(out.begin(), out.end());
    return out;
}

IncreasingTableau path_to_tableau(const LatticePath& p) {
    validate_path(p);
    std::vector<std::vector<int>> rows(static_cast<size_t>(p.m));
    for (size_t i = 0; i < p.steps.size(); ++i)
        rows[static_cast<size_t>(p.steps[i]) - 1].push_back(static_cast<int>(i) + 1);
    return IncreasingTableau::validate(std::move(rows), Partition::rectangle(p.m, p.n));
}

LatticePath tableau_to_path(const IncreasingTableau& t) {
    if (!t.is_standard()) throw NotStandard("only standard tableaux correspond to unit-step paths");
    if (!t.shape().is_rectangle()) throw ShapeMismatch("rectangular shape required");
    const int m = t.shape().rows();
    const int n = m == 0 ? 0 : t.shape().row_length(0);
    std::vector<int> steps(static_cast<size_t>(t.cells()), 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) steps[static_cast<size_t>(t.at(i, j)) - 1] = i + 1;
    return LatticePath{m, n, std::move(steps)};
}

SchroderPath tableau_to_schroder(const IncreasingTableau& t) {
    if (!t.shape().is_rectangle()) throw ShapeMismatch("rectangular shape required");
    const int m = t.shape().rows();
    const int n = m == 0 ? 0 : t.shape().row_length(0);
    std::vector<unsigned> steps(static_cast<size_t>(t.max_entry()), 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            steps[static_cast<size_t>(t.at(i, j)) - 1] |= 1u << i;
    return SchroderPath{m, n, std::move(steps)};
}

IncreasingTableau schroder_to_tableau(const SchroderPath& p) {
    validate_path(p);
    if (!is_small(p)) throw NotSmall("path takes a forbidden step from a diagonal position");
    std::vector<std::vector<int>> rows(static_cast<size_t>(p.m));
    for (size_t i = 0; i < p.steps.size(); ++i)
        for (int j = 0; j < p.m; ++j)
            if (p.steps[i] >> j & 1u) rows[static_cast<size_t>(j)].push_back(static_cast<int>(i) + 1);
    return IncreasingTableau::validate(std::move(rows), Partition::rectangle(p.m, p.n));
}

RowIncreasingTableau validate_row_increasing(std::vector<std::vector<int>> rows) {
    if (rows.empty()) throw ShapeMismatch("at least one row required");
    const int m = static_cast<int>(rows.size());
    const int n = static_cast<int>(rows[0].size());
    if (n < 1) throw ShapeMismatch("rows must be nonempty");
    int max_seen = 0;
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n)
            throw ShapeMismatch("rows must all have the same length");
        for (int j = 0; j < n; ++j) {
            const int v = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (v < 1) throw NotIncreasing("entries must be positive integers");
            if (j > 0 && rows[static_cast<size_t>(i)][static_cast<size_t>(j) - 1] >= v)
                throw NotIncreasing("rows must strictly increase");
            if (i > 0 && rows[static_cast<size_t>(i) - 1][static_cast<size_t>(j)] > v)
                throw NotIncreasing("columns must weakly increase");
            max_seen = std::max(max_seen, v);
        }
    }
    std::vector<bool> seen(static_cast<size_t>(max_seen) + 1, false);
    for (const auto& row : rows)
        for (int v : row) seen[static_cast<size_t>(v)] = true;
    for (int v = 1; v <= max_seen; ++v)
        if (!seen[static_cast<size_t>(v)])
            throw MissingValue("entries skip the value " + std::to_string(v));
    return RowIncreasingTableau{m, n, std::move(rows)};
}

SchroderPath row_increasing_to_path(const RowIncreasingTableau& t) {
    int max_entry = 0;
    for (const auto& row : t.rows)
        for (int v : row) max_entry = std::max(max_entry, v);
    std::vector<unsigned> steps(static_cast<size_t>(max_entry), 0);
    for (int i = 0; i < t.m; ++i)
        for (int v : t.rows[static_cast<size_t>(i)]) steps[static_cast<size_t>(v) - 1] |= 1u << i;
    return SchroderPath{t.m, t.n, std::move(steps)};
}

RowIncreasingTableau path_to_row_increasing(const SchroderPath& p) {
    validate_path(p);
    std::vector<std::vector<int>> rows(static_cast<size_t>(p.m));
    for (size_t i = 0; i < p.steps.size(); ++i)
        for (int j = 0; j < p.m; ++j)
            if (p.steps[i] >> j & 1u) rows[static_cast<size_t>(j)].push_back(static_cast<int>(i) + 1);
    return validate_row_increasing(std::move(rows));
}

}  // namespace tabkit
