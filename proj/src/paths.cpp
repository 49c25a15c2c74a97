#include "tabkit/paths.hpp"

#include <algorithm>

#include "tabkit/error.hpp"

namespace tabkit {

std::vector<LatticePath> enumerate_chain_paths(int m, int n) {
    if (m < 1 || n < 0) throw DomainError("need m >= 1 and n >= 0");
    std::vector<LatticePath> out;
    std::vector<int> position(static_cast<size_t>(m), 0);
    std::vector<int> word;
    word.reserve(static_cast<size_t>(m) * static_cast<size_t>(n));

    auto recurse = [&](auto&& self, int placed) -> void {
        if (placed == m * n) {
            out.push_back(LatticePath{m, n, word});
            return;
        }
        for (int j = 1; j <= m; ++j) {
            const int limit = j == 1 ? n : position[static_cast<size_t>(j) - 2];
            if (position[static_cast<size_t>(j) - 1] >= limit) continue;
            ++position[static_cast<size_t>(j) - 1];
            word.push_back(j);
            self(self, placed + 1);
            word.pop_back();
            --position[static_cast<size_t>(j) - 1];
        }
    };
    recurse(recurse, 0);
    return out;
}

void validate_path(const LatticePath& p) {
    if (p.m < 1 || p.n < 0) throw DomainError("need m >= 1 and n >= 0");
    if (static_cast<int>(p.steps.size()) != p.m * p.n)
        throw DomainError("a path to (n, ..., n) needs exactly m*n steps");
    std::vector<int> position(static_cast<size_t>(p.m), 0);
    for (int j : p.steps) {
        if (j < 1 || j > p.m) throw DomainError("step index out of range");
        ++position[static_cast<size_t>(j) - 1];
        const int limit = j == 1 ? p.n : position[static_cast<size_t>(j) - 2];
        if (position[static_cast<size_t>(j) - 1] > limit)
            throw DomainError("path leaves the chain region");
    }
}

std::set<int> ascents(const LatticePath& p) {
    std::set<int> out;
    for (size_t i = 1; i < p.steps.size(); ++i)
        if (p.steps[i] < p.steps[i - 1]) out.insert(static_cast<int>(i) + 1);
    return out;
}

BigInt narayana_number(int m, int n, int ell) {
    if (m < 2 || n < 1) throw DomainError("need m >= 2 and n >= 1");
    if (ell < 0 || ell > (m - 1) * (n - 1))
        throw DomainError("ascent count out of range [0, (m-1)(n-1)]");
    BigRat total = 0;
    for (int j = 0; j <= ell; ++j) {
        BigRat product = 1;
        for (int i = 0; i < m; ++i)
            product *= BigRat(binomial(n + i + j, n), binomial(n + i, n));
        const BigRat term = BigRat(binomial(static_cast<long long>(m) * n + 1, ell - j)) * product;
        total += (ell - j) % 2 == 0 ? term : -term;
    }
    if (boost::multiprecision::denominator(total) != 1)
        throw DomainError("alternating sum failed to produce an integer");
    return boost::multiprecision::numerator(total);
}

QPolynomial narayana_polynomial(int m, int n) {
    if (m < 2 || n < 1) throw DomainError("need m >= 2 and n >= 1");
    std::vector<BigInt> coeffs;
    for (int ell = 0; ell <= (m - 1) * (n - 1); ++ell) coeffs.push_back(narayana_number(m, n, ell));
    return QPolynomial(std::move(coeffs));
}

namespace {

// Steps that move coordinates j and j+1 together out of a position with
// x_j = x_{j+1} are the ones the small family forbids.
bool step_breaks_smallness(const std::vector<int>& position, unsigned mask, int m) {
    for (int j = 0; j + 1 < m; ++j)
        if ((mask >> j & 1u) && (mask >> (j + 1) & 1u) &&
            position[static_cast<size_t>(j)] == position[static_cast<size_t>(j) + 1])
            return true;
    return false;
}

bool step_stays_in_region(const std::vector<int>& position, unsigned mask, int m, int n) {
    int prev = n;
    for (int j = 0; j < m; ++j) {
        const int next = position[static_cast<size_t>(j)] + static_cast<int>(mask >> j & 1u);
        if (next > prev) return false;
        prev = next;
    }
    return true;
}

}  // namespace

std::vector<SchroderPath> enumerate_schroder(int m, int n, bool small) {
    if (m < 1 || n < 0) throw DomainError("need m >= 1 and n >= 0");
    std::vector<SchroderPath> out;
    std::vector<int> position(static_cast<size_t>(m), 0);
    std::vector<unsigned> word;
    int placed = 0;

    auto recurse = [&](auto&& self) -> void {
        if (placed == m * n) {
            out.push_back(SchroderPath{m, n, word});
            return;
        }
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            if (small && step_breaks_smallness(position, mask, m)) continue;
            if (!step_stays_in_region(position, mask, m, n)) continue;
            int moved = 0;
            for (int j = 0; j < m; ++j)
                if (mask >> j & 1u) {
                    ++position[static_cast<size_t>(j)];
                    ++moved;
                }
            placed += moved;
            word.push_back(mask);
            self(self);
            word.pop_back();
            placed -= moved;
            for (int j = 0; j < m; ++j)
                if (mask >> j & 1u) --position[static_cast<size_t>(j)];
        }
    };
    recurse(recurse);
    return out;
}

void validate_path(const SchroderPath& p) {
    if (p.m < 1 || p.n < 0) throw DomainError("need m >= 1 and n >= 0");
    std::vector<int> position(static_cast<size_t>(p.m), 0);
    for (unsigned mask : p.steps) {
        if (mask == 0 || mask >= (1u << p.m)) throw DomainError("step mask out of range");
        if (!step_stays_in_region(position, mask, p.m, p.n))
            throw DomainError("path leaves the chain region");
        for (int j = 0; j < p.m; ++j)
            if (mask >> j & 1u) ++position[static_cast<size_t>(j)];
    }
    for (int x : position)
        if (x != p.n) throw DomainError("path does not end at (n, ..., n)");
}

bool is_small(const SchroderPath& p) {
    std::vector<int> position(static_cast<size_t>(p.m), 0);
    for (unsigned mask : p.steps) {
        if (step_breaks_smallness(position, mask, p.m)) return false;
        for (int j = 0; j < p.m; ++j)
            if (mask >> j & 1u) ++position[static_cast<size_t>(j)];
    }
    return true;
}

std::vector<std::vector<int>> prefix_positions(const SchroderPath& p) {
    std::vector<std::vector<int>> out;
    std::vector<int> position(static_cast<size_t>(p.m), 0);
    for (unsigned mask : p.steps) {
        for (int j = 0; j < p.m; ++j)
            if (mask >> j & 1u) ++position[static_cast<size_t>(j)];
        out.push_back(position);
    }
    return out;
}

}  // namespace tabkit
