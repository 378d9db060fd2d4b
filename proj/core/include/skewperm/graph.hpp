#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "skewperm/arith.hpp"

namespace skewperm {

// Unordered edge {u, v}, normalized to u < v by the Graph constructor.
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Labeled simple undirected graph on vertices 0..n-1. The edge list is
// kept sorted and duplicate-free, so structurally equal graphs compare
// equal and every edge has a stable index (used by orientations).
class Graph {
 public:
  Graph() = default;
  // Throws std::invalid_argument on loops, duplicate edges or endpoints
  // outside [0, n).
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }
  // Position of {u, v} in edges(), or -1 when the edge is absent.
  int edge_index(int u, int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// Simple cycle of length >= 3 stored in canonical form: the smallest
// vertex first, followed by the smaller of its two cycle neighbors, so
// each cycle of the host graph has exactly one representation.
class Cycle {
 public:
  // Takes the vertices in traversal order (consecutive entries and the
  // wrap-around pair are the cycle edges). Throws std::invalid_argument
  // on repeats or length < 3.
  explicit Cycle(std::vector<int> vertices);

  int length() const { return static_cast<int>(verts_.size()); }
  const std::vector<int>& vertices() const { return verts_; }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  // Orders by (length, vertex sequence).
  friend bool operator<(const Cycle& a, const Cycle& b);

 private:
  std::vector<int> verts_;
};

// Every simple cycle of g, sorted by (length, canonical vertex sequence).
// Exponential in general; intended for small graphs.
std::vector<Cycle> enumerate_cycles(const Graph& g);

enum class BlockKind { Bridge, OddCycle, EvenCycle, Other };

// Maximal 2-connected subgraph (or bridge) from the block decomposition.
struct Block {
  std::vector<int> vertices;  // sorted
  std::vector<Edge> edges;    // sorted
  BlockKind kind = BlockKind::Bridge;
};

// Block decomposition via depth-first search low-links. Isolated vertices
// belong to no block. Runs in O(n + m).
std::vector<Block> blocks(const Graph& g);

// Sorted list of cut vertices (vertices lying in more than one block).
std::vector<int> cut_vertices(const Graph& g);

// True iff some block is neither a bridge nor an odd cycle. A block with
// an extra edge on top of a spanning cycle contains two cycles sharing a
// path, and of the three cycles through a shared path an even one always
// exists, so this is equivalent to "g contains a cycle of even length".
bool has_even_cycle(const Graph& g);

struct Bipartition {
  std::vector<int> x;  // sorted; contains the smallest vertex of each component
  std::vector<int> y;  // sorted
};

// Two-coloring if one exists (i.e. no odd cycle), nullopt otherwise.
// Deterministic: the smallest vertex of every component goes into x.
std::optional<Bipartition> bipartition(const Graph& g);

bool is_forest(const Graph& g);

// Number of matchings with exactly r edges; p(g, 0) = 1.
// Throws std::invalid_argument for r < 0.
Int count_matchings(const Graph& g, int r);

}  // namespace skewperm
