#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "skewperm/graph.hpp"
#include "skewperm/orientation.hpp"
#include "skewperm/poly.hpp"

namespace skewperm {

enum class CycleFilter { All, EvenOnly };

// A pack of vertex-disjoint single edges and cycles inside a host graph;
// the building block of every coefficient formula in this library.
struct SachsSubgraph {
  std::vector<Edge> single_edges;
  std::vector<Cycle> cycles;

  int single_edge_count() const { return static_cast<int>(single_edges.size()); }
  int cycle_count() const { return static_cast<int>(cycles.size()); }
  int covered_vertices() const;
};

// Walks every Sachs subgraph of g (the empty one included), each exactly
// once, in a fixed order: components are attached at their smallest
// vertex, smallest vertex first. With CycleFilter::EvenOnly the cycles
// are restricted to even length (single edges always qualify).
void for_each_sachs(const Graph& g, CycleFilter filter,
                    const std::function<void(const SachsSubgraph&)>& visit);

// The Sachs subgraphs covering exactly `size` vertices.
std::vector<SachsSubgraph> enumerate_sachs(const Graph& g, CycleFilter filter, int size);

enum class CycleParity { Evenly, Oddly };

// Parity of the number of arcs agreeing with the canonical traversal of
// an even cycle: Evenly for an even count, Oddly for odd. Well defined
// for even cycles only (reversing the traversal of an odd cycle would
// flip it); throws std::invalid_argument on odd length or when the
// cycle is not a cycle of the oriented graph.
CycleParity cycle_parity(const OrientedGraph& og, const Cycle& c);

// Permanental polynomial per(xI - A(g)) of the ordinary adjacency
// matrix: the x^(n-k) coefficient is (-1)^k * sum over Sachs subgraphs
// on k vertices of 2^(number of cycles).
Poly perm_poly_adjacency_sachs(const Graph& g);

// Permanental polynomial per(xI - A_s) of the skew adjacency matrix:
// the x^(n-k) coefficient is the sum over even-cycle Sachs subgraphs on
// k vertices of (-1)^(single edges + oddly oriented cycles) * 2^cycles.
// Coefficients of odd k vanish.
Poly perm_poly_skew_sachs(const OrientedGraph& og);

// As perm_poly_skew_sachs for the generalized (weighted) skew adjacency
// matrix: each term additionally carries the product of its cycle edge
// weights and squared single-edge weights.
Poly perm_poly_weighted_skew_sachs(const WeightedOrientedGraph& wog);

// Weighted analogue of perm_poly_adjacency_sachs for a symmetric
// weighted adjacency matrix with weights[e] on edge e.
Poly perm_poly_weighted_undirected_sachs(const Graph& g, const std::vector<Rat>& weights);

// Precomputed coefficient evaluator for sweeping many orientations of
// one graph: enumerates the even-cycle Sachs subgraphs once, storing per
// cycle an edge bitmask and a base parity, so evaluating one orientation
// costs a popcount per cycle instead of a fresh enumeration. Requires at
// most 64 edges.
class SkewSachsEvaluator {
 public:
  explicit SkewSachsEvaluator(const Graph& g);

  int vertex_count() const { return n_; }
  // Exact coefficients a_0..a_n of per(xI - A_s) for the orientation
  // with the given direction bits.
  std::vector<Int> coefficients(std::uint64_t bits) const;
  Poly poly(std::uint64_t bits) const;

 private:
  struct Term {
    int k = 0;             // covered vertices
    int base_sign = 0;     // single edges + base cycle parities, mod 2
    std::int64_t weight = 0;  // 2^(cycle count)
    // parallel arrays: cycle edge masks and nothing else (base parity is
    // folded into base_sign)
    std::uint32_t first_cycle = 0;
    std::uint32_t cycle_count = 0;
  };

  int n_ = 0;
  bool fits_int64_ = true;
  std::vector<Term> terms_;
  std::vector<std::uint64_t> cycle_masks_;  // shared pool indexed by Term
};

}  // namespace skewperm
