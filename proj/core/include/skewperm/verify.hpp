#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skewperm/graph.hpp"
#include "skewperm/orientation.hpp"
#include "skewperm/poly.hpp"

namespace skewperm {

// Visits all 2^m orientations of g in increasing direction-bit order.
// Supports at most 62 edges (the full space must be countable).
void for_each_orientation(const Graph& g,
                          const std::function<void(const OrientedGraph&)>& visit);

// Materialized variant; refuses more than 20 edges (2^20 oriented
// copies is already ~1M graphs). Prefer for_each_orientation.
std::vector<OrientedGraph> all_orientations(const Graph& g);

// Orients every edge from its x-side endpoint to its y-side endpoint.
// Throws std::invalid_argument when the bipartition does not cover the
// graph or an edge fails to cross it.
OrientedGraph toward_y_orientation(const Graph& g, const Bipartition& parts);

enum class Verdict { Holds, Refuted, SampledHolds };

std::string verdict_string(Verdict v);

// Counterexample (or certificate) attached to a refuted report. Which
// fields are set depends on the property: a two-orientation witness
// fills bits/poly a and b; a graph-level reference (matching polynomial,
// adjacency permanental polynomial) appears as poly_b with bits_b null;
// the bipartite certificate is poly_a alone (its nonzero odd
// coefficient).
struct OrientationWitness {
  std::optional<std::uint64_t> bits_a;
  std::optional<std::uint64_t> bits_b;
  std::optional<Poly> poly_a;
  std::optional<Poly> poly_b;
};

// Outcome of one verification sweep. `examined` counts orientations in
// the canonical order: the full space (or sample count) when the sweep
// ran to the end, or the 1-based position of the witness when an
// exhaustive sweep refutes early. Reports are byte-stable across thread
// budgets. `seed` is set only when the space exceeded the budget and
// sampling kicked in.
struct OrientationReport {
  std::string graph6;
  std::string property;
  Verdict verdict = Verdict::Holds;
  std::uint64_t examined = 0;
  std::optional<OrientationWitness> witness;
  std::optional<std::uint64_t> seed;
};

inline constexpr std::uint64_t kDefaultOrientationBudget = std::uint64_t(1) << 20;

// Do all orientations share one permanental polynomial of the skew
// adjacency matrix? (True exactly for graphs with no even cycle.)
OrientationReport verify_all_orientations_same(
    const Graph& g, std::uint64_t budget = kDefaultOrientationBudget, std::uint64_t seed = 1);

// Does every orientation's polynomial equal the matching polynomial?
// (Again characterizes graphs with no even cycle.)
OrientationReport verify_matching_equality(
    const Graph& g, std::uint64_t budget = kDefaultOrientationBudget, std::uint64_t seed = 1);

// Bipartite test: a bipartite graph must admit an orientation whose
// polynomial passes check_i_relation against the adjacency permanental
// polynomial (the toward-y orientation is checked); a non-bipartite
// graph admits none, certified exactly by a nonzero odd coefficient and
// double-checked by a sweep.
OrientationReport verify_bipartite_i_relation(
    const Graph& g, std::uint64_t budget = kDefaultOrientationBudget, std::uint64_t seed = 1);

// Forest test: on a forest every orientation passes both the i-relation
// and root-multiset agreement with the adjacency spectrum (roots within
// tol); on anything else some orientation fails, and the sweep hunts
// for it.
OrientationReport verify_forest_relation(
    const Graph& g, std::uint64_t budget = kDefaultOrientationBudget, std::uint64_t seed = 1,
    double tol = 1e-8);

// Compact JSON with a fixed key order; byte-identical for identical
// reports regardless of thread budget.
std::string report_to_json(const OrientationReport& r);

}  // namespace skewperm
