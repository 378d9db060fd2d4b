#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "skewperm/graph.hpp"
#include "skewperm/matrix.hpp"

namespace skewperm {

// An undirected graph plus one direction bit per edge, in edge-list
// order. Bit 0 on edge {u, v} (u < v) means the arc u -> v, bit 1 the
// reversed arc v -> u. The bit vector doubles as a compact orientation
// id: interpreting it as a little-endian integer gives the position of
// the orientation in the canonical sweep order.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  // direction.size() must equal g.edge_count(); entries must be 0 or 1.
  OrientedGraph(Graph g, std::vector<std::uint8_t> direction);
  // Orientation from the low edge_count() bits of `bits`; requires at
  // most 64 edges.
  static OrientedGraph from_bits(Graph g, std::uint64_t bits);

  const Graph& graph() const { return g_; }
  const std::vector<std::uint8_t>& direction() const { return dir_; }
  // The arc of edge index e as (tail, head).
  std::pair<int, int> arc(int e) const;
  bool has_arc(int from, int to) const;
  // Direction bits packed little-endian; requires at most 64 edges.
  std::uint64_t bits() const;

  friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;

 private:
  Graph g_;
  std::vector<std::uint8_t> dir_;
};

// Builds the orientation of g given exactly one (tail, head) pair per
// edge. Throws std::invalid_argument on arcs that are not edges of g, on
// edges oriented twice, and on edges never oriented.
OrientedGraph orient(const Graph& g, const std::vector<std::pair<int, int>>& arcs);

// Same orientation with one edge's arc reversed.
OrientedGraph reverse_edge(const OrientedGraph& og, int edge);

// An orientation whose arcs carry nonzero rational weights, in edge-list
// order. Construction canonicalizes: an arc with a negative weight is
// replaced by the reversed arc with the negated (positive) weight, which
// leaves the associated skew-symmetric matrix unchanged. Stored weights
// are therefore always positive.
class WeightedOrientedGraph {
 public:
  WeightedOrientedGraph() = default;
  // weights.size() must equal the edge count; zero weights are rejected.
  WeightedOrientedGraph(OrientedGraph og, std::vector<Rat> weights);

  const OrientedGraph& oriented() const { return og_; }
  const Graph& graph() const { return og_.graph(); }
  const std::vector<Rat>& weights() const { return w_; }

  friend bool operator==(const WeightedOrientedGraph&, const WeightedOrientedGraph&) = default;

 private:
  OrientedGraph og_;
  std::vector<Rat> w_;
};

// Skew adjacency matrix: entry (i, j) is 1 for an arc i -> j, -1 for the
// reversed arc, 0 for a non-edge.
SkewMatrix skew_adjacency(const OrientedGraph& og);

// Generalized skew adjacency matrix: entry (i, j) is w(e) for an arc
// i -> j of weight w(e), and -w(e) on the transposed position.
SkewMatrix generalized_skew_adjacency(const WeightedOrientedGraph& wog);

// Inverse of generalized_skew_adjacency: rows become vertices, each
// positive entry (i, j) the arc i -> j carrying that weight.
WeightedOrientedGraph from_skew_matrix(const SkewMatrix& a);

}  // namespace skewperm
