#pragma once

#include "skewperm/matrix.hpp"
#include "skewperm/poly.hpp"

namespace skewperm {

// Plain permutation-expansion permanent. Refuses order > 10; it exists
// as an oracle for the faster engines.
Rat permanent_naive(const Matrix& a);

// Inclusion-exclusion permanent with Gray-code subset iteration and
// incremental row sums, O(2^n * n) exact operations. Rational input is
// scaled to integers through the common denominator first. Runs a
// per(J_2) == 2 self-test once per process.
Rat permanent_ryser(const Matrix& a);

// Permanent of a skew-symmetric matrix, summing only permutations all of
// whose cycles have even length (the odd-cycle terms of a skew matrix
// cancel in +/- pairs). Identically 0 for odd order.
Rat permanent_skew_even(const SkewMatrix& a);

// Permanent as the sum over cycle covers of the weighted digraph whose
// arc (i, j) carries a[i][j]; diagonal entries act as loops.
Rat permanent_cycle_cover(const Matrix& a);

// per(xI - A) assembled from principal subpermanents: the coefficient of
// x^(n-k) is (-1)^k times the sum of the k x k principal subpermanents
// of A, subsets enumerated in colex order.
Poly perm_poly_direct(const Matrix& a);

}  // namespace skewperm
