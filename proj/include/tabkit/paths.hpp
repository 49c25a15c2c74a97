#pragma once

#include <compare>
#include <set>
#include <vector>

#include "tabkit/qpoly.hpp"

namespace tabkit {

/// Lattice path from the origin to (n, ..., n) in Z^m using unit steps in
/// coordinate directions 1..m, staying inside the chain region
/// 0 <= x_m <= ... <= x_1. steps[i] is the coordinate index of step i+1.
struct LatticePath {
    int m = 0;
    int n = 0;
    std::vector<int> steps;

    friend auto operator<=>(const LatticePath&, const LatticePath&) = default;
};

/// All chain-region paths, ordered lexicographically by step-index word.
std::vector<LatticePath> enumerate_chain_paths(int m, int n);

/// Throws DomainError unless the path is well formed, stays in the region and
/// ends at (n, ..., n).
void validate_path(const LatticePath& p);

/// Positions i >= 2 where step i uses a strictly smaller coordinate index
/// than step i-1.
std::set<int> ascents(const LatticePath& p);

/// Number of chain-region paths with exactly `ell` ascents, by the exact
/// alternating closed form. Requires m >= 2, n >= 1, 0 <= ell <= (m-1)(n-1).
BigInt narayana_number(int m, int n, int ell);

/// Generating polynomial of ascent counts, degree (m-1)(n-1).
QPolynomial narayana_polynomial(int m, int n);

/// Path from the origin to (n, ..., n) whose steps are nonzero 0/1 vectors,
/// staying inside the chain region. steps[i] is a bitmask with bit j-1 set
/// when the step moves in coordinate j.
struct SchroderPath {
    int m = 0;
    int n = 0;
    std::vector<unsigned> steps;

    friend auto operator<=>(const SchroderPath&, const SchroderPath&) = default;
};

/// All such paths, small ones only when `small` is set, ordered
/// lexicographically by bitmask sequence. A path is small when no step moves
/// coordinates j and j+1 together from a position with x_j = x_{j+1}.
std::vector<SchroderPath> enumerate_schroder(int m, int n, bool small);

void validate_path(const SchroderPath& p);
bool is_small(const SchroderPath& p);

/// Position reached after each step.
std::vector<std::vector<int>> prefix_positions(const SchroderPath& p);

}  // namespace tabkit
