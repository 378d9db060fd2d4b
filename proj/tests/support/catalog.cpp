#include "catalog.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace skewperm::testsupport {

namespace {

// Edges in lexicographic order (0,1), (0,2), (1,2), (0,3), ... matching
// the column-by-column upper triangle, so bit e of a mask is edge e.
std::vector<std::pair<int, int>> pair_list(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  return pairs;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Graph graph_from_mask(int n, const std::vector<std::pair<int, int>>& pairs, std::uint32_t mask) {
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < pairs.size(); ++e)
    if ((mask >> e) & 1) edges.push_back({pairs[e].first, pairs[e].second});
  return Graph(n, std::move(edges));
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
  if (n < 0 || n > 7) throw std::invalid_argument("graph catalog supports 0 <= n <= 7");
  const auto pairs = pair_list(n);
  const int m = static_cast<int>(pairs.size());
  std::vector<int> pair_index(n * n, -1);
  for (int e = 0; e < m; ++e)
    pair_index[pairs[e].first * n + pairs[e].second] = e;
  // edge relabeling table per vertex permutation
  const auto perms = all_permutations(n);
  std::vector<std::vector<int>> edge_map(perms.size(), std::vector<int>(m));
  for (std::size_t p = 0; p < perms.size(); ++p)
    for (int e = 0; e < m; ++e) {
      int a = perms[p][pairs[e].first];
      int b = perms[p][pairs[e].second];
      if (a > b) std::swap(a, b);
      edge_map[p][e] = pair_index[a * n + b];
    }

  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask) {
    bool canonical = true;
    for (std::size_t p = 1; p < perms.size() && canonical; ++p) {
      std::uint32_t image = 0;
      for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1)
        image |= std::uint32_t(1) << edge_map[p][std::countr_zero(rest)];
      if (image < mask) canonical = false;
    }
    if (canonical) out.push_back(graph_from_mask(n, pairs, mask));
  }
  return out;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int w : g.neighbors(queue[head]))
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  return queue.size() == static_cast<std::size_t>(n);
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> connected_bipartite_graphs(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("bipartite catalog supports 1 <= n <= 7");
  if (n <= 6) {
    std::vector<Graph> out;
    for (Graph& g : connected_graphs(n))
      if (bipartition(g)) out.push_back(std::move(g));
    return out;
  }
  // n = 7: sweeping all 2^21 masks is slow, but a connected bipartite graph
  // determines its part sizes {a, b}, and with a != b (always true for odd n)
  // every isomorphism maps part to part. So enumerating a-by-b biadjacency
  // bitmasks canonical under S_a x S_b, split by split, hits each
  // isomorphism class exactly once.
  std::vector<Graph> out;
  for (int a = 1; 2 * a < n; ++a) {
    const int b = n - a;
    const int m = a * b;  // bit i*b + j <-> edge (i, a + j)
    const auto perms_a = all_permutations(a);
    const auto perms_b = all_permutations(b);
    std::vector<std::vector<int>> bit_map;  // one row per (p, q) pair
    for (const auto& p : perms_a)
      for (const auto& q : perms_b) {
        std::vector<int> row(m);
        for (int i = 0; i < a; ++i)
          for (int j = 0; j < b; ++j) row[i * b + j] = p[i] * b + q[j];
        bit_map.push_back(std::move(row));
      }
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask) {
      if (std::popcount(mask) < n - 1) continue;  // connected needs >= n-1 edges
      bool canonical = true;
      for (std::size_t t = 1; t < bit_map.size() && canonical; ++t) {
        std::uint32_t image = 0;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1)
          image |= std::uint32_t(1) << bit_map[t][std::countr_zero(rest)];
        if (image < mask) canonical = false;
      }
      if (!canonical) continue;
      std::vector<Edge> edges;
      for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        const int bit = std::countr_zero(rest);
        edges.push_back({bit / b, a + bit % b});
      }
      Graph g(n, std::move(edges));
      if (is_connected(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

namespace {

Graph tree_from_pruefer(int n, const std::vector<int>& code) {
  std::vector<int> degree(n, 1);
  for (int v : code) ++degree[v];
  std::vector<Edge> edges;
  // attach each code entry to the smallest current leaf
  std::vector<char> used(n, 0);
  for (int v : code) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (used[leaf] || degree[leaf] != 1) continue;
      edges.push_back({leaf, v});
      used[leaf] = 1;
      --degree[v];
      break;
    }
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (!used[v] && degree[v] == 1) rest.push_back(v);
  edges.push_back({rest[0], rest[1]});
  return Graph(n, std::move(edges));
}

// Canonical rooted encoding: "(" + sorted child encodings + ")".
std::string encode_rooted(const Graph& g, int v, int parent) {
  std::vector<std::string> children;
  for (int w : g.neighbors(v))
    if (w != parent) children.push_back(encode_rooted(g, w, v));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const std::string& c : children) out += c;
  out += ")";
  return out;
}

// Tree centers by repeated leaf stripping (one or two of them).
std::vector<int> tree_centers(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v)
    if (degree[v] <= 1) layer.push_back(v);
  int remaining = n;
  std::vector<char> removed(n, 0);
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = 1;
      --remaining;
      for (int w : g.neighbors(v))
        if (!removed[w] && --degree[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) centers.push_back(v);
  return centers;
}

std::string tree_certificate(const Graph& g) {
  std::string best;
  for (int c : tree_centers(g)) {
    std::string enc = encode_rooted(g, c, -1);
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return best;
}

}  // namespace

std::vector<Graph> trees(int n) {
  if (n < 1 || n > 9) throw std::invalid_argument("tree catalog supports 1 <= n <= 9");
  if (n == 1) return {Graph(1, {})};
  if (n == 2) return {Graph(2, {{0, 1}})};
  std::map<std::string, Graph> by_certificate;
  std::vector<int> code(n - 2, 0);
  while (true) {
    Graph t = tree_from_pruefer(n, code);
    by_certificate.emplace(tree_certificate(t), t);
    // odometer step over the n^(n-2) codes
    int pos = static_cast<int>(code.size()) - 1;
    while (pos >= 0 && code[pos] == n - 1) code[pos--] = 0;
    if (pos < 0) break;
    ++code[pos];
  }
  std::vector<Graph> out;
  for (auto& [cert, tree] : by_certificate) out.push_back(std::move(tree));
  return out;
}

}  // namespace skewperm::testsupport
