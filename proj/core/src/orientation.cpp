#include "skewperm/orientation.hpp"

#include <stdexcept>
#include <string>

namespace skewperm {

namespace {

std::string arc_text(int u, int v) {
  return std::to_string(u) + " -> " + std::to_string(v);
}

}  // namespace

OrientedGraph::OrientedGraph(Graph g, std::vector<std::uint8_t> direction)
    : g_(std::move(g)), dir_(std::move(direction)) {
  if (dir_.size() != static_cast<std::size_t>(g_.edge_count()))
    throw std::invalid_argument("orientation needs one direction bit per edge: expected " +
                                std::to_string(g_.edge_count()) + ", got " +
                                std::to_string(dir_.size()));
  for (std::uint8_t b : dir_)
    if (b > 1) throw std::invalid_argument("direction bits must be 0 or 1");
}

OrientedGraph OrientedGraph::from_bits(Graph g, std::uint64_t bits) {
  const int m = g.edge_count();
  if (m > 64) throw std::invalid_argument("bit-packed orientations support at most 64 edges");
  if (m < 64 && (bits >> m) != 0)
    throw std::invalid_argument("orientation bits exceed the edge count");
  std::vector<std::uint8_t> dir(m);
  for (int e = 0; e < m; ++e) dir[e] = static_cast<std::uint8_t>((bits >> e) & 1);
  return OrientedGraph(std::move(g), std::move(dir));
}

std::pair<int, int> OrientedGraph::arc(int e) const {
  const Edge& edge = g_.edges()[e];
  return dir_[e] == 0 ? std::pair{edge.u, edge.v} : std::pair{edge.v, edge.u};
}

bool OrientedGraph::has_arc(int from, int to) const {
  int e = g_.edge_index(from, to);
  if (e < 0) return false;
  return arc(e) == std::pair{from, to};
}

std::uint64_t OrientedGraph::bits() const {
  if (dir_.size() > 64)
    throw std::invalid_argument("bit-packed orientations support at most 64 edges");
  std::uint64_t bits = 0;
  for (std::size_t e = 0; e < dir_.size(); ++e)
    if (dir_[e]) bits |= std::uint64_t(1) << e;
  return bits;
}

OrientedGraph orient(const Graph& g, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::uint8_t> dir(g.edge_count());
  std::vector<char> oriented(g.edge_count(), 0);
  for (const auto& [from, to] : arcs) {
    int e = g.edge_index(from, to);
    if (e < 0)
      throw std::invalid_argument("arc " + arc_text(from, to) + " is not an edge of the graph");
    if (oriented[e])
      throw std::invalid_argument("edge {" + std::to_string(g.edges()[e].u) + ", " +
                                  std::to_string(g.edges()[e].v) + "} oriented twice");
    oriented[e] = 1;
    dir[e] = (from == g.edges()[e].u) ? 0 : 1;
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (!oriented[e])
      throw std::invalid_argument("edge {" + std::to_string(g.edges()[e].u) + ", " +
                                  std::to_string(g.edges()[e].v) + "} was never oriented");
  return OrientedGraph(g, std::move(dir));
}

OrientedGraph reverse_edge(const OrientedGraph& og, int edge) {
  if (edge < 0 || edge >= og.graph().edge_count())
    throw std::invalid_argument("edge index out of range");
  std::vector<std::uint8_t> dir = og.direction();
  dir[edge] ^= 1;
  return OrientedGraph(og.graph(), std::move(dir));
}

WeightedOrientedGraph::WeightedOrientedGraph(OrientedGraph og, std::vector<Rat> weights)
    : og_(std::move(og)), w_(std::move(weights)) {
  if (w_.size() != static_cast<std::size_t>(og_.graph().edge_count()))
    throw std::invalid_argument("weighted orientation needs one weight per edge: expected " +
                                std::to_string(og_.graph().edge_count()) + ", got " +
                                std::to_string(w_.size()));
  std::vector<std::uint8_t> dir = og_.direction();
  bool flipped = false;
  for (std::size_t e = 0; e < w_.size(); ++e) {
    if (w_[e] == 0) {
      const Edge& edge = og_.graph().edges()[e];
      throw std::invalid_argument("zero weight on edge {" + std::to_string(edge.u) + ", " +
                                  std::to_string(edge.v) + "}");
    }
    if (w_[e] < 0) {
      w_[e] = -w_[e];
      dir[e] ^= 1;
      flipped = true;
    }
  }
  if (flipped) og_ = OrientedGraph(og_.graph(), std::move(dir));
}

SkewMatrix skew_adjacency(const OrientedGraph& og) {
  Matrix a(og.graph().vertex_count());
  for (int e = 0; e < og.graph().edge_count(); ++e) {
    auto [from, to] = og.arc(e);
    a.at(from, to) = 1;
    a.at(to, from) = -1;
  }
  return SkewMatrix(std::move(a));
}

SkewMatrix generalized_skew_adjacency(const WeightedOrientedGraph& wog) {
  Matrix a(wog.graph().vertex_count());
  for (int e = 0; e < wog.graph().edge_count(); ++e) {
    auto [from, to] = wog.oriented().arc(e);
    a.at(from, to) = wog.weights()[e];
    a.at(to, from) = -wog.weights()[e];
  }
  return SkewMatrix(std::move(a));
}

WeightedOrientedGraph from_skew_matrix(const SkewMatrix& a) {
  const int n = a.order();
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a.at(i, j) != 0) edges.push_back({i, j});
  Graph g(n, std::move(edges));
  std::vector<std::uint8_t> dir(g.edge_count());
  std::vector<Rat> weights(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edges()[e];
    const Rat& w = a.at(edge.u, edge.v);
    dir[e] = w > 0 ? 0 : 1;
    weights[e] = w > 0 ? w : Rat(-w);
  }
  return WeightedOrientedGraph(OrientedGraph(std::move(g), std::move(dir)), std::move(weights));
}

}  // namespace skewperm
