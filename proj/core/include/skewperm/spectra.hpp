#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "skewperm/graph.hpp"
#include "skewperm/matrix.hpp"
#include "skewperm/poly.hpp"

namespace skewperm {

// Matching polynomial: sum over r of (-1)^r p(g, r) x^(n - 2r), with
// p(g, r) the number of r-edge matchings.
Poly matching_polynomial(const Graph& g);

// Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier
// recurrence, entirely in exact rational arithmetic.
Poly char_poly(const Matrix& a);

// Roots sorted by (real, imaginary), with multiplicity.
struct RootMultiset {
  std::vector<std::complex<double>> values;
};

// Thrown when the iterative refinement cannot meet the residual target.
class RootsError : public std::runtime_error {
 public:
  explicit RootsError(const std::string& what) : std::runtime_error(what) {}
};

// All complex roots with multiplicity. The polynomial is first split
// into squarefree factors by Yun's algorithm in exact rational
// arithmetic (so multiple roots are extracted exactly, with their
// multiplicity), then each factor's simple roots are refined by the
// Aberth-Ehrlich iteration in long double. Deterministic: fixed initial
// placement, fixed sweep order. On return every root z of a squarefree
// factor h satisfies |h(z)| <= tol * (1 + max |coeff of h|); otherwise
// RootsError is thrown. Requires a nonzero leading coefficient.
RootMultiset roots(const Poly& p, double tol = 1e-10);

// Whether the two multisets can be matched off within absolute distance
// tol (decided exactly via bipartite matching, so it is symmetric).
// Different sizes compare unequal.
bool multiset_equal(const RootMultiset& a, const RootMultiset& b, double tol);

// The multiset {i * z}: (re, im) -> (-im, re), re-sorted.
RootMultiset scale_spectrum_by_i(const RootMultiset& s);

// True iff every coefficient a_k with odd k vanishes, where the
// polynomial is written sum_k a_k x^(degree - k).
bool bipartite_by_odd_coeffs(const Poly& p);

// Coefficient-level test that the roots of skew_poly are i times the
// roots of adjacency_poly: a_k(skew) = i^k a_k(adjacency), i.e. equal
// for k = 0 mod 4, negated for k = 2 mod 4, both zero for odd k.
// Degrees must match.
bool check_i_relation(const Poly& adjacency_poly, const Poly& skew_poly);

}  // namespace skewperm
