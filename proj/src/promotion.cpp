#include "tabkit/promotion.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "tabkit/error.hpp"

namespace tabkit {

IncreasingTableau promote(const IncreasingTableau& t) {
    const Partition& shape = t.shape();
    const int max_entry = t.max_entry();
    if (t.cells() == 0) return t;

    // 0 marks a dot. The entry 1 sits only in the corner, so exactly one dot
    // starts the slide.
    std::vector<std::vector<int>> grid = t.rows();
    for (auto& row : grid)
        for (int& v : row)
            if (v == 1) v = 0;

    auto value_at = [&](int i, int j) -> int {
        return shape.contains(i, j) ? grid[static_cast<size_t>(i)][static_cast<size_t>(j)]
                                    : -1;  // outside
    };

    for (;;) {
        int a = std::numeric_limits<int>::max();
        for (int i = 0; i < shape.rows(); ++i)
            for (int j = 0; j < shape.row_length(i); ++j) {
                if (grid[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) continue;
                const int right = value_at(i, j + 1);
                const int below = value_at(i + 1, j);
                if (right > 0) a = std::min(a, right);
                if (below > 0) a = std::min(a, below);
            }
        if (a == std::numeric_limits<int>::max()) break;

        // Simultaneous swap of dots and a-cells: every dot with an a to its
        // right or below receives a, and every such a-cell becomes a dot. A
        // dot flanked by two a's consumes both; an a pulled by two dots fills
        // both. Decided entirely on the state before the swap.
        std::vector<std::pair<int, int>> fill, vacate;
        for (int i = 0; i < shape.rows(); ++i)
            for (int j = 0; j < shape.row_length(i); ++j) {
                const int v = grid[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (v == 0) {
                    if (value_at(i, j + 1) == a || value_at(i + 1, j) == a) fill.emplace_back(i, j);
                } else if (v == a) {
                    if (value_at(i, j - 1) == 0 || value_at(i - 1, j) == 0) vacate.emplace_back(i, j);
                }
            }
        for (auto [i, j] : fill) grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = a;
        for (auto [i, j] : vacate) grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
    }

    for (auto& row : grid)
        for (int& v : row) v = v == 0 ? max_entry : v - 1;
    return IncreasingTableau::validate(std::move(grid), shape);
}

IncreasingTableau promote_hook(const IncreasingTableau& t) {
    if (!t.shape().is_hook()) throw NotHook("shape " + t.shape().to_string() + " is not a hook");
    if (t.cells() == 0) return t;
    const int max_entry = t.max_entry();

    // arm = first row past the corner, leg = first column below it.
    std::vector<int> arm(t.rows()[0].begin() + 1, t.rows()[0].end());
    std::vector<int> leg;
    for (int i = 1; i < t.shape().rows(); ++i) leg.push_back(t.at(i, 0));

    constexpr int kNone = std::numeric_limits<int>::max();
    const int a = arm.empty() ? kNone : arm.front();
    const int b = leg.empty() ? kNone : leg.front();

    int corner = 0;  // 0 marks a dot, as in the general slide
    if (a <= b && a != kNone) {
        corner = a;
        arm.erase(arm.begin());
        arm.push_back(0);
    }
    if (b <= a && b != kNone) {
        corner = b;
        leg.erase(leg.begin());
        leg.push_back(0);
    }

    auto finish = [max_entry](int v) { return v == 0 ? max_entry : v - 1; };
    std::vector<std::vector<int>> rows;
    std::vector<int> first_row{finish(corner)};
    for (int v : arm) first_row.push_back(finish(v));
    rows.push_back(std::move(first_row));
    for (int v : leg) rows.push_back({finish(v)});
    return IncreasingTableau::validate(std::move(rows), t.shape());
}

IncreasingTableau promote_steps(const IncreasingTableau& t, int steps) {
    if (steps < 0) throw DomainError("step count must be nonnegative");
    IncreasingTableau cur = t;
    const bool hook = t.shape().is_hook();
    for (int i = 0; i < steps; ++i) cur = hook ? promote_hook(cur) : promote(cur);
    return cur;
}

IncreasingTableau hook_projection(const IncreasingTableau& t) {
    if (!t.shape().is_hook()) throw NotHook("shape " + t.shape().to_string() + " is not a hook");
    if (t.cells() == 0) return t;
    std::set<int> leg_values;
    for (int i = 1; i < t.shape().rows(); ++i) leg_values.insert(t.at(i, 0));

    std::vector<int> first_row;
    for (int v : t.rows()[0])
        if (!leg_values.count(v)) first_row.push_back(v);
    std::vector<std::vector<int>> rows{first_row};
    for (int i = 1; i < t.shape().rows(); ++i) rows.push_back({t.at(i, 0)});
    IncreasingTableau out = IncreasingTableau::from_rows(std::move(rows));
    if (!out.is_standard()) throw NotHook("projection left repeated entries; input was malformed");
    return out;
}

std::set<int> column_set(const IncreasingTableau& t) {
    if (!t.shape().is_hook()) throw NotHook("shape " + t.shape().to_string() + " is not a hook");
    if (!t.is_standard()) throw NotStandard("column sets are read off standard hooks");
    std::set<int> out;
    for (int i = 1; i < t.shape().rows(); ++i) out.insert(t.at(i, 0));
    return out;
}

std::set<int> rotate_column_set(const std::set<int>& values, int n_cells) {
    std::set<int> out;
    for (int v : values) out.insert(v == 2 ? n_cells : v - 1);
    return out;
}

Content rotated_content(const Content& alpha) {
    if (alpha.size() <= 1) return alpha;
    Content out(alpha.size());
    out[0] = alpha[0];
    for (size_t i = 1; i + 1 < alpha.size(); ++i) out[i] = alpha[i + 1];
    out[alpha.size() - 1] = alpha[1];
    return out;
}

bool content_rotation_check(const IncreasingTableau& t) {
    return content(promote_hook(t)) == rotated_content(content(t));
}

std::vector<PromotionOrbit> orbit_decomposition(const Partition& shape, int deficit) {
    const std::vector<IncreasingTableau> family = enumerate_increasing(shape, deficit);
    std::map<IncreasingTableau, int> index;
    for (int i = 0; i < static_cast<int>(family.size()); ++i) index.emplace(family[i], i);

    std::vector<PromotionOrbit> orbits;
    std::vector<bool> visited(family.size(), false);
    const bool hook = shape.is_hook();
    for (size_t start = 0; start < family.size(); ++start) {
        if (visited[start]) continue;
        PromotionOrbit orbit{family[start], {}, 0};
        IncreasingTableau cur = family[start];
        do {
            auto it = index.find(cur);
            if (it == index.end())
                throw ActionOrderMismatch("promotion left the enumerated family");
            visited[static_cast<size_t>(it->second)] = true;
            orbit.members.push_back(cur);
            cur = hook ? promote_hook(cur) : promote(cur);
        } while (!(cur == family[start]));
        orbit.period = static_cast<int>(orbit.members.size());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

long long promotion_order(const Partition& shape, int deficit) {
    long long order = 1;
    for (const PromotionOrbit& orbit : orbit_decomposition(shape, deficit))
        order = std::lcm(order, static_cast<long long>(orbit.period));
    return order;
}

BigInt fixed_count(const Partition& shape, int deficit, int steps) {
    if (steps < 0) throw DomainError("step count must be nonnegative");
    BigInt total = 0;
    for (const PromotionOrbit& orbit : orbit_decomposition(shape, deficit))
        if (steps % orbit.period == 0) total += orbit.period;
    return total;
}

}  // namespace tabkit
