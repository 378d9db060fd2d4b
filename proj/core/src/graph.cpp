#include "skewperm/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace skewperm {

namespace {

std::string edge_text(const Edge& e) {
  return "{" + std::to_string(e.u) + ", " + std::to_string(e.v) + "}";
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n)
      throw std::invalid_argument("edge " + edge_text(e) + " out of range for " +
                                  std::to_string(n) + " vertices");
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw std::invalid_argument("duplicate edge " + edge_text(*dup));
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || it->u != u || it->v != v) return -1;
  return static_cast<int>(it - edges_.begin());
}

Cycle::Cycle(std::vector<int> vertices) : verts_(std::move(vertices)) {
  if (verts_.size() < 3) throw std::invalid_argument("cycle length must be at least 3");
  std::vector<int> sorted = verts_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("repeated vertex in cycle");
  if (sorted.front() < 0) throw std::invalid_argument("negative vertex in cycle");
  auto min_pos = std::min_element(verts_.begin(), verts_.end());
  std::rotate(verts_.begin(), min_pos, verts_.end());
  if (verts_[1] > verts_.back()) std::reverse(verts_.begin() + 1, verts_.end());
}

bool operator<(const Cycle& a, const Cycle& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.verts_ < b.verts_;
}

namespace {

// Grows a path rooted at `root` through vertices > root; emits a cycle
// when the path closes back to the root. The direction filter
// path[1] < path.back() keeps one of the two traversals.
void extend_cycle_search(const Graph& g, int root, std::vector<int>& path,
                         std::vector<char>& on_path, std::vector<Cycle>& out) {
  const int v = path.back();
  for (int w : g.neighbors(v)) {
    if (w == root && path.size() >= 3 && path[1] < v) out.emplace_back(path);
    if (w <= root || on_path[w]) continue;
    on_path[w] = 1;
    path.push_back(w);
    extend_cycle_search(g, root, path, on_path, out);
    path.pop_back();
    on_path[w] = 0;
  }
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g) {
  std::vector<Cycle> out;
  const int n = g.vertex_count();
  std::vector<char> on_path(n, 0);
  std::vector<int> path;
  for (int root = 0; root < n; ++root) {
    path.assign(1, root);
    on_path[root] = 1;
    extend_cycle_search(g, root, path, on_path, out);
    on_path[root] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Block make_block(std::vector<Edge> edges) {
  Block b;
  b.edges = std::move(edges);
  std::sort(b.edges.begin(), b.edges.end());
  for (const Edge& e : b.edges) {
    b.vertices.push_back(e.u);
    b.vertices.push_back(e.v);
  }
  std::sort(b.vertices.begin(), b.vertices.end());
  b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
  if (b.edges.size() == 1)
    b.kind = BlockKind::Bridge;
  else if (b.edges.size() == b.vertices.size())
    b.kind = (b.vertices.size() % 2 != 0) ? BlockKind::OddCycle : BlockKind::EvenCycle;
  else
    b.kind = BlockKind::Other;
  return b;
}

}  // namespace

std::vector<Block> blocks(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Block> out;
  std::vector<int> disc(n, -1), low(n, 0), parent_edge(n, -1), next(n, 0);
  std::vector<int> edge_stack;  // edge indices awaiting their block
  std::vector<int> stack;
  int timer = 0;
  for (int s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    disc[s] = low[s] = timer++;
    stack.assign(1, s);
    while (!stack.empty()) {
      int v = stack.back();
      if (next[v] < g.degree(v)) {
        int w = g.neighbors(v)[next[v]++];
        int ei = g.edge_index(v, w);
        if (ei == parent_edge[v]) continue;
        if (disc[w] == -1) {
          edge_stack.push_back(ei);
          disc[w] = low[w] = timer++;
          parent_edge[w] = ei;
          stack.push_back(w);
        } else if (disc[w] < disc[v]) {
          // back edge; the disc comparison keeps exactly one copy
          edge_stack.push_back(ei);
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (stack.empty()) continue;
        int u = stack.back();
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          // everything above (and including) the tree edge u-v is one block
          std::vector<Edge> edges;
          while (true) {
            int ei = edge_stack.back();
            edge_stack.pop_back();
            edges.push_back(g.edges()[ei]);
            if (ei == parent_edge[v]) break;
          }
          out.push_back(make_block(std::move(edges)));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Block& a, const Block& b) { return a.edges < b.edges; });
  return out;
}

std::vector<int> cut_vertices(const Graph& g) {
  std::vector<int> membership(g.vertex_count(), 0);
  for (const Block& b : blocks(g))
    for (int v : b.vertices) ++membership[v];
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (membership[v] >= 2) out.push_back(v);
  return out;
}

bool has_even_cycle(const Graph& g) {
  for (const Block& b : blocks(g))
    if (b.kind == BlockKind::EvenCycle || b.kind == BlockKind::Other) return true;
  return false;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = color[v] ^ 1;
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  for (int v = 0; v < n; ++v) (color[v] == 0 ? b.x : b.y).push_back(v);
  return b;
}

bool is_forest(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<int> queue;
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int w : g.neighbors(queue[head]))
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
  }
  return g.edge_count() == n - components;
}

namespace {

Int count_matchings_from(const Graph& g, int v, int remaining, std::vector<char>& covered) {
  if (remaining == 0) return 1;
  const int n = g.vertex_count();
  while (v < n && covered[v]) ++v;
  if (n - v < 2 * remaining) return 0;
  // v stays unmatched
  Int total = count_matchings_from(g, v + 1, remaining, covered);
  covered[v] = 1;
  for (int w : g.neighbors(v)) {
    if (w < v || covered[w]) continue;
    covered[w] = 1;
    total += count_matchings_from(g, v + 1, remaining - 1, covered);
    covered[w] = 0;
  }
  covered[v] = 0;
  return total;
}

}  // namespace

Int count_matchings(const Graph& g, int r) {
  if (r < 0) throw std::invalid_argument("matching size must be non-negative");
  if (2 * r > g.vertex_count()) return 0;
  std::vector<char> covered(g.vertex_count(), 0);
  return count_matchings_from(g, 0, r, covered);
}

}  // namespace skewperm
