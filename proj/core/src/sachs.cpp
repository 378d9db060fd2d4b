#include "skewperm/sachs.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace skewperm {

int SachsSubgraph::covered_vertices() const {
  int total = 2 * single_edge_count();
  for (const Cycle& c : cycles) total += c.length();
  return total;
}

namespace {

// Depth-first generator of Sachs subgraphs. Vertices are decided in
// increasing order; the lowest undecided vertex is either left out,
// matched along an edge to an undecided neighbor, or made the root of a
// cycle through undecided vertices. Each subgraph is reached exactly
// once because every component is attached at its smallest vertex.
struct SachsWalker {
  const Graph& g;
  CycleFilter filter;
  const std::function<void(const SachsSubgraph&)>& visit;
  std::vector<char> covered;
  SachsSubgraph current;

  SachsWalker(const Graph& g, CycleFilter filter,
              const std::function<void(const SachsSubgraph&)>& visit)
      : g(g), filter(filter), visit(visit), covered(g.vertex_count(), 0) {}

  void decide(int v) {
    const int n = g.vertex_count();
    while (v < n && covered[v]) ++v;
    if (v == n) {
      visit(current);
      return;
    }
    decide(v + 1);  // v stays outside the subgraph
    covered[v] = 1;
    for (int w : g.neighbors(v)) {
      if (w < v || covered[w]) continue;
      covered[w] = 1;
      current.single_edges.push_back({v, w});
      decide(v + 1);
      current.single_edges.pop_back();
      covered[w] = 0;
    }
    std::vector<int> path{v};
    grow_cycle(v, path);
    covered[v] = 0;
  }

  // Extends a path of covered vertices rooted at `root`; closing back to
  // the root emits a cycle. The direction filter path[1] < path.back()
  // visits each cycle once.
  void grow_cycle(int root, std::vector<int>& path) {
    const int v = path.back();
    for (int w : g.neighbors(v)) {
      if (w == root && path.size() >= 3 && path[1] < v &&
          (filter == CycleFilter::All || path.size() % 2 == 0)) {
        current.cycles.emplace_back(path);
        decide(root + 1);
        current.cycles.pop_back();
      }
      if (w <= root || covered[w]) continue;
      covered[w] = 1;
      path.push_back(w);
      grow_cycle(root, path);
      path.pop_back();
      covered[w] = 0;
    }
  }
};

}  // namespace

void for_each_sachs(const Graph& g, CycleFilter filter,
                    const std::function<void(const SachsSubgraph&)>& visit) {
  SachsWalker walker(g, filter, visit);
  walker.decide(0);
}

std::vector<SachsSubgraph> enumerate_sachs(const Graph& g, CycleFilter filter, int size) {
  if (size < 0 || size > g.vertex_count())
    throw std::invalid_argument("Sachs subgraph size out of range");
  std::vector<SachsSubgraph> out;
  for_each_sachs(g, filter, [&](const SachsSubgraph& u) {
    if (u.covered_vertices() == size) out.push_back(u);
  });
  return out;
}

CycleParity cycle_parity(const OrientedGraph& og, const Cycle& c) {
  if (c.length() % 2 != 0)
    throw std::invalid_argument("orientation parity is only defined for even cycles");
  const auto& v = c.vertices();
  int agree = 0;
  for (int i = 0; i < c.length(); ++i) {
    const int a = v[i];
    const int b = v[(i + 1) % c.length()];
    if (og.graph().edge_index(a, b) < 0)
      throw std::invalid_argument("cycle edge {" + std::to_string(a) + ", " + std::to_string(b) +
                                  "} is not an edge of the graph");
    if (og.has_arc(a, b)) ++agree;
  }
  return agree % 2 == 0 ? CycleParity::Evenly : CycleParity::Oddly;
}

Poly perm_poly_adjacency_sachs(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Int> acc(n + 1, Int(0));
  for_each_sachs(g, CycleFilter::All, [&](const SachsSubgraph& u) {
    acc[u.covered_vertices()] += Int(1) << u.cycle_count();
  });
  std::vector<Rat> coeff(n + 1);
  for (int k = 0; k <= n; ++k) coeff[k] = (k % 2 != 0) ? Rat(-acc[k]) : Rat(acc[k]);
  return Poly(std::move(coeff));
}

Poly perm_poly_skew_sachs(const OrientedGraph& og) {
  const int n = og.graph().vertex_count();
  std::vector<Int> acc(n + 1, Int(0));
  for_each_sachs(og.graph(), CycleFilter::EvenOnly, [&](const SachsSubgraph& u) {
    int sign = u.single_edge_count();
    for (const Cycle& c : u.cycles)
      if (cycle_parity(og, c) == CycleParity::Oddly) ++sign;
    const Int weight = Int(1) << u.cycle_count();
    if (sign % 2 != 0)
      acc[u.covered_vertices()] -= weight;
    else
      acc[u.covered_vertices()] += weight;
  });
  std::vector<Rat> coeff(n + 1);
  for (int k = 0; k <= n; ++k) coeff[k] = Rat(acc[k]);
  return Poly(std::move(coeff));
}

Poly perm_poly_weighted_skew_sachs(const WeightedOrientedGraph& wog) {
  const Graph& g = wog.graph();
  const std::vector<Rat>& wt = wog.weights();
  const int n = g.vertex_count();
  std::vector<Rat> acc(n + 1, Rat(0));
  for_each_sachs(g, CycleFilter::EvenOnly, [&](const SachsSubgraph& u) {
    int sign = u.single_edge_count();
    Rat term(Int(1) << u.cycle_count());
    for (const Edge& e : u.single_edges) {
      const Rat& w = wt[g.edge_index(e.u, e.v)];
      term *= w * w;
    }
    for (const Cycle& c : u.cycles) {
      if (cycle_parity(wog.oriented(), c) == CycleParity::Oddly) ++sign;
      const auto& cv = c.vertices();
      for (int i = 0; i < c.length(); ++i)
        term *= wt[g.edge_index(cv[i], cv[(i + 1) % c.length()])];
    }
    if (sign % 2 != 0)
      acc[u.covered_vertices()] -= term;
    else
      acc[u.covered_vertices()] += term;
  });
  return Poly(std::vector<Rat>(acc.begin(), acc.end()));
}

Poly perm_poly_weighted_undirected_sachs(const Graph& g, const std::vector<Rat>& weights) {
  if (weights.size() != static_cast<std::size_t>(g.edge_count()))
    throw std::invalid_argument("need one weight per edge");
  const int n = g.vertex_count();
  std::vector<Rat> acc(n + 1, Rat(0));
  for_each_sachs(g, CycleFilter::All, [&](const SachsSubgraph& u) {
    Rat term(Int(1) << u.cycle_count());
    for (const Edge& e : u.single_edges) {
      const Rat& w = weights[g.edge_index(e.u, e.v)];
      term *= w * w;
    }
    for (const Cycle& c : u.cycles) {
      const auto& cv = c.vertices();
      for (int i = 0; i < c.length(); ++i)
        term *= weights[g.edge_index(cv[i], cv[(i + 1) % c.length()])];
    }
    acc[u.covered_vertices()] += term;
  });
  std::vector<Rat> coeff(n + 1);
  for (int k = 0; k <= n; ++k) coeff[k] = (k % 2 != 0) ? Rat(-acc[k]) : acc[k];
  return Poly(std::move(coeff));
}

SkewSachsEvaluator::SkewSachsEvaluator(const Graph& g) : n_(g.vertex_count()) {
  if (g.edge_count() > 64)
    throw std::invalid_argument("orientation sweeps support at most 64 edges");
  std::vector<Int> totals(n_ + 1, Int(0));
  for_each_sachs(g, CycleFilter::EvenOnly, [&](const SachsSubgraph& u) {
    Term t;
    t.k = u.covered_vertices();
    t.first_cycle = static_cast<std::uint32_t>(cycle_masks_.size());
    t.cycle_count = static_cast<std::uint32_t>(u.cycle_count());
    int base = u.single_edge_count();
    for (const Cycle& c : u.cycles) {
      std::uint64_t mask = 0;
      const auto& cv = c.vertices();
      for (int i = 0; i < c.length(); ++i) {
        const int a = cv[i];
        const int b = cv[(i + 1) % c.length()];
        mask |= std::uint64_t(1) << g.edge_index(a, b);
        // with all direction bits 0 the arc runs low -> high, agreeing
        // with the traversal exactly when it ascends
        if (a < b) ++base;
      }
      cycle_masks_.push_back(mask);
    }
    t.base_sign = base & 1;
    t.weight = std::int64_t(1) << u.cycle_count();
    totals[t.k] += Int(t.weight);
    terms_.push_back(t);
  });
  for (const Int& total : totals)
    if (total > (Int(1) << 62)) {
      fits_int64_ = false;
      break;
    }
}

std::vector<Int> SkewSachsEvaluator::coefficients(std::uint64_t bits) const {
  std::vector<Int> out(n_ + 1, Int(0));
  if (fits_int64_) {
    std::vector<std::int64_t> acc(n_ + 1, 0);
    for (const Term& t : terms_) {
      int sign = t.base_sign;
      for (std::uint32_t c = 0; c < t.cycle_count; ++c)
        sign ^= std::popcount(bits & cycle_masks_[t.first_cycle + c]) & 1;
      acc[t.k] += sign != 0 ? -t.weight : t.weight;
    }
    for (int k = 0; k <= n_; ++k) out[k] = acc[k];
  } else {
    for (const Term& t : terms_) {
      int sign = t.base_sign;
      for (std::uint32_t c = 0; c < t.cycle_count; ++c)
        sign ^= std::popcount(bits & cycle_masks_[t.first_cycle + c]) & 1;
      if (sign != 0)
        out[t.k] -= t.weight;
      else
        out[t.k] += t.weight;
    }
  }
  return out;
}

Poly SkewSachsEvaluator::poly(std::uint64_t bits) const {
  const std::vector<Int> ints = coefficients(bits);
  std::vector<Rat> coeff(ints.size());
  for (std::size_t k = 0; k < ints.size(); ++k) coeff[k] = Rat(ints[k]);
  return Poly(std::move(coeff));
}

}  // namespace skewperm
