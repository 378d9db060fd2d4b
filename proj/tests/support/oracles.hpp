#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "skewperm/graph.hpp"
#include "skewperm/matrix.hpp"

// Test-side reference implementations, deliberately written as direct
// transcriptions of the definitions (permutation expansions, subset
// enumerations) so they share no code path with the library.
namespace skewperm::testsupport {

// Permanent by the raw permutation expansion.
Rat oracle_permanent(const Matrix& a);

// Coefficients of per(xI - A), highest power first, by expanding the
// product of the linear entries over every permutation.
std::vector<Rat> oracle_perm_poly(const Matrix& a);

// Coefficients of det(xI - A) the same way, with permutation signs.
std::vector<Rat> oracle_char_poly(const Matrix& a);

// Every simple cycle as its canonical vertex sequence (smallest vertex
// first, then its smaller neighbor).
std::set<std::vector<int>> oracle_cycles(const Graph& g);

// Number of r-edge matchings by subset enumeration.
Int oracle_count_matchings(const Graph& g, int r);

// Number of matchings of any size by subset enumeration.
Int oracle_total_matchings(const Graph& g);

// Sachs subgraphs covering exactly `size` vertices, each given as its
// sorted edge-index set; a valid subgraph is an edge subset whose
// components are single edges or (optionally even) cycles.
std::set<std::vector<int>> oracle_sachs_edge_sets(const Graph& g, bool even_only, int size);

// Deterministic random inputs for property tests. Uses plain modulo on
// mt19937_64 output, so sequences are identical on every platform.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t raw() { return rng_(); }
  // Uniform-ish integer in [lo, hi], inclusive.
  int uniform(int lo, int hi);
  Graph random_graph(int n, int edge_percent);
  Matrix random_int_matrix(int n, int lo, int hi);
  Matrix random_skew_int_matrix(int n, int lo, int hi);
  Rat random_rational(int max_abs_num, int max_den, bool nonzero);

 private:
  std::mt19937_64 rng_;
};

}  // namespace skewperm::testsupport
