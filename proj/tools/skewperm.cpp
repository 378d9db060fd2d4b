// Command-line front end: reads graphs, orientations or matrices, runs
// one computation, prints text or a single JSON document.
//
// Exit codes: 0 success, 2 input error, 3 verification refuted on this
// instance, 64 usage error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <skewperm/skewperm.hpp>

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitRefuted = 3;

struct Config {
  std::string input = "-";
  std::string format;  // empty = per-command default
  std::string output = "text";
  double tol = 1e-10;
  std::uint64_t budget = skewperm::kDefaultOrientationBudget;
  std::uint64_t seed = 1;
  int edge = 0;
};

bool json_mode(const Config& c) { return c.output == "json"; }

void emit_json(const ordered_json& doc) { std::cout << doc.dump() << "\n"; }

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw skewperm::ParseError("cannot open input file: " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

std::string resolve_format(const Config& c, const std::string& fallback) {
  return c.format.empty() ? fallback : c.format;
}

// Simple symmetric 0/1 matrix with a zero diagonal -> graph.
skewperm::Graph graph_from_adjacency(const skewperm::Matrix& a) {
  std::vector<skewperm::Edge> edges;
  for (int i = 0; i < a.order(); ++i) {
    if (a.at(i, i) != 0)
      throw skewperm::ParseError("adjacency matrix needs a zero diagonal");
    for (int j = i + 1; j < a.order(); ++j) {
      if (a.at(i, j) != a.at(j, i))
        throw skewperm::ParseError("adjacency matrix must be symmetric");
      if (a.at(i, j) == 1)
        edges.push_back({i, j});
      else if (a.at(i, j) != 0)
        throw skewperm::ParseError("adjacency matrix entries must be 0 or 1");
    }
  }
  return skewperm::Graph(a.order(), std::move(edges));
}

// Symmetric matrix with a zero diagonal -> graph plus edge weights.
std::pair<skewperm::Graph, std::vector<skewperm::Rat>> weighted_graph_from_matrix(
    const skewperm::Matrix& a) {
  std::vector<skewperm::Edge> edges;
  for (int i = 0; i < a.order(); ++i) {
    if (a.at(i, i) != 0)
      throw skewperm::ParseError("weighted adjacency matrix needs a zero diagonal");
    for (int j = i + 1; j < a.order(); ++j) {
      if (a.at(i, j) != a.at(j, i))
        throw skewperm::ParseError("weighted adjacency matrix must be symmetric");
      if (a.at(i, j) != 0) edges.push_back({i, j});
    }
  }
  skewperm::Graph g(a.order(), std::move(edges));
  std::vector<skewperm::Rat> weights;
  weights.reserve(g.edge_count());
  for (const skewperm::Edge& e : g.edges()) weights.push_back(a.at(e.u, e.v));
  return {std::move(g), std::move(weights)};
}

skewperm::Graph load_graph(const Config& c) {
  const std::string fmt = resolve_format(c, "graph6");
  const std::string text = read_input(c.input);
  if (fmt == "graph6") return skewperm::parse_graph6(text);
  if (fmt == "edgelist") return skewperm::parse_edge_list(text);
  if (fmt == "matrix") return graph_from_adjacency(skewperm::parse_matrix(text));
  throw skewperm::ParseError("this subcommand reads a graph; use --format graph6, edgelist or matrix");
}

skewperm::OrientedGraph load_orientation(const Config& c) {
  const std::string fmt = resolve_format(c, "orientation");
  const std::string text = read_input(c.input);
  if (fmt == "orientation") return skewperm::parse_orientation(text);
  if (fmt == "matrix") {
    skewperm::SkewMatrix s(skewperm::parse_matrix(text));
    skewperm::WeightedOrientedGraph wog = skewperm::from_skew_matrix(s);
    for (const skewperm::Rat& w : wog.weights())
      if (w != 1)
        throw skewperm::ParseError(
            "skew matrix entries must be 0 or +-1 here; use --weighted-skew for general weights");
    return wog.oriented();
  }
  throw skewperm::ParseError("this subcommand reads an orientation; use --format orientation or matrix");
}

skewperm::WeightedOrientedGraph load_weighted_orientation(const Config& c) {
  const std::string fmt = resolve_format(c, "orientation");
  const std::string text = read_input(c.input);
  if (fmt == "orientation") return skewperm::parse_weighted_orientation(text);
  if (fmt == "matrix")
    return skewperm::from_skew_matrix(skewperm::SkewMatrix(skewperm::parse_matrix(text)));
  throw skewperm::ParseError(
      "this subcommand reads a weighted orientation; use --format orientation or matrix");
}

skewperm::Matrix load_matrix(const Config& c) {
  const std::string fmt = resolve_format(c, "matrix");
  const std::string text = read_input(c.input);
  if (fmt == "matrix") return skewperm::parse_matrix(text);
  if (fmt == "graph6") return skewperm::adjacency_matrix(skewperm::parse_graph6(text));
  if (fmt == "edgelist") return skewperm::adjacency_matrix(skewperm::parse_edge_list(text));
  throw skewperm::ParseError("this subcommand reads a matrix; use --format matrix, graph6 or edgelist");
}

int print_poly(const Config& c, const skewperm::Poly& p) {
  if (json_mode(c)) {
    emit_json(ordered_json{{"degree", p.degree()},
                           {"coefficients", skewperm::coefficient_strings(p)},
                           {"pretty", p.pretty()}});
    return kExitOk;
  }
  std::cout << "degree: " << p.degree() << "\n";
  std::cout << "coefficients:";
  for (const std::string& s : skewperm::coefficient_strings(p)) std::cout << " " << s;
  std::cout << "\n";
  std::cout << "pretty: " << p.pretty() << "\n";
  return kExitOk;
}

int print_value(const Config& c, const skewperm::Rat& v) {
  if (json_mode(c)) {
    emit_json(ordered_json{{"value", skewperm::rat_string(v)}});
    return kExitOk;
  }
  std::cout << skewperm::rat_string(v) << "\n";
  return kExitOk;
}

std::string double_text(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int print_spectrum(const Config& c, const skewperm::RootMultiset& roots) {
  if (json_mode(c)) {
    ordered_json arr = ordered_json::array();
    for (const auto& z : roots.values)
      arr.push_back(ordered_json{{"re", z.real()}, {"im", z.imag()}});
    emit_json(ordered_json{{"roots", arr}});
    return kExitOk;
  }
  for (const auto& z : roots.values)
    std::cout << double_text(z.real()) << " " << double_text(z.imag()) << "\n";
  return kExitOk;
}

ordered_json arcs_json(const skewperm::OrientedGraph& og) {
  ordered_json arcs = ordered_json::array();
  for (int e = 0; e < og.graph().edge_count(); ++e) {
    const auto [from, to] = og.arc(e);
    arcs.push_back(ordered_json::array({from, to}));
  }
  return arcs;
}

int print_orientation(const Config& c, const skewperm::OrientedGraph& og) {
  if (json_mode(c)) {
    emit_json(ordered_json{{"n", og.graph().vertex_count()},
                           {"bits", og.bits()},
                           {"arcs", arcs_json(og)}});
    return kExitOk;
  }
  std::cout << skewperm::write_orientation(og);  // valid input for --format orientation
  return kExitOk;
}

int print_report(const Config& c, const skewperm::OrientationReport& r) {
  if (json_mode(c)) {
    std::cout << skewperm::report_to_json(r) << "\n";
  } else {
    std::cout << "graph6: " << r.graph6 << "\n";
    std::cout << "property: " << r.property << "\n";
    std::cout << "verdict: " << skewperm::verdict_string(r.verdict) << "\n";
    std::cout << "examined: " << r.examined << "\n";
    if (r.witness) {
      if (r.witness->bits_a) std::cout << "witness bits_a: " << *r.witness->bits_a << "\n";
      if (r.witness->bits_b) std::cout << "witness bits_b: " << *r.witness->bits_b << "\n";
      if (r.witness->poly_a) std::cout << "witness poly_a: " << r.witness->poly_a->pretty() << "\n";
      if (r.witness->poly_b) std::cout << "witness poly_b: " << r.witness->poly_b->pretty() << "\n";
    }
    if (r.seed) std::cout << "seed: " << *r.seed << "\n";
  }
  return r.verdict == skewperm::Verdict::Refuted ? kExitRefuted : kExitOk;
}

std::string block_kind_text(skewperm::BlockKind k) {
  switch (k) {
    case skewperm::BlockKind::Bridge: return "bridge";
    case skewperm::BlockKind::OddCycle: return "odd-cycle";
    case skewperm::BlockKind::EvenCycle: return "even-cycle";
    case skewperm::BlockKind::Other: return "other";
  }
  return "other";
}

int print_flag(const Config& c, const char* key, bool value) {
  if (json_mode(c)) {
    emit_json(ordered_json{{key, value}});
    return kExitOk;
  }
  std::cout << (value ? "true" : "false") << "\n";
  return kExitOk;
}

// Adds the options shared by every leaf subcommand.
void add_io_options(CLI::App* sub, Config& cfg) {
  sub->add_option("input", cfg.input, "input file, or - for stdin")->capture_default_str();
  sub->add_option("--format", cfg.format,
                  "input format: graph6, edgelist, orientation or matrix")
      ->check(CLI::IsMember({"graph6", "edgelist", "orientation", "matrix"}));
  sub->add_option("--output", cfg.output, "output form")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact permanental polynomials, permanents and orientation checks"};
  app.require_subcommand(1);
  Config cfg;
  std::function<int()> action;

  // ---- permpoly ----------------------------------------------------
  CLI::App* permpoly = app.add_subcommand(
      "permpoly", "permanental polynomial per(xI - A) of a graph, orientation or matrix");
  add_io_options(permpoly, cfg);
  std::vector<CLI::Option*> poly_modes = {
      permpoly->add_flag("--adjacency", "adjacency matrix of an undirected graph (default)"),
      permpoly->add_flag("--skew", "skew adjacency matrix of an orientation"),
      permpoly->add_flag("--weighted-skew", "generalized skew adjacency of a weighted orientation"),
      permpoly->add_flag("--weighted-undirected", "symmetric weighted adjacency"),
  };
  for (std::size_t i = 0; i < poly_modes.size(); ++i)
    for (std::size_t j = i + 1; j < poly_modes.size(); ++j)
      poly_modes[i]->excludes(poly_modes[j]);
  permpoly->callback([&] {
    action = [&, permpoly]() {
      if (permpoly->count("--skew"))
        return print_poly(cfg, skewperm::perm_poly_skew_sachs(load_orientation(cfg)));
      if (permpoly->count("--weighted-skew"))
        return print_poly(cfg, skewperm::perm_poly_weighted_skew_sachs(load_weighted_orientation(cfg)));
      if (permpoly->count("--weighted-undirected")) {
        const std::string fmt = resolve_format(cfg, "orientation");
        if (fmt == "matrix") {
          auto [g, ws] = weighted_graph_from_matrix(skewperm::parse_matrix(read_input(cfg.input)));
          return print_poly(cfg, skewperm::perm_poly_weighted_undirected_sachs(g, ws));
        }
        skewperm::WeightedOrientedGraph wog = load_weighted_orientation(cfg);
        return print_poly(cfg, skewperm::perm_poly_weighted_undirected_sachs(wog.graph(), wog.weights()));
      }
      return print_poly(cfg, skewperm::perm_poly_adjacency_sachs(load_graph(cfg)));
    };
  });

  // ---- matchpoly / charpoly ----------------------------------------
  CLI::App* matchpoly = app.add_subcommand("matchpoly", "matching polynomial of a graph");
  add_io_options(matchpoly, cfg);
  matchpoly->callback([&] {
    action = [&]() { return print_poly(cfg, skewperm::matching_polynomial(load_graph(cfg))); };
  });

  CLI::App* charpoly = app.add_subcommand(
      "charpoly", "characteristic polynomial det(xI - A) of a graph or matrix");
  add_io_options(charpoly, cfg);
  charpoly->callback([&] {
    action = [&]() {
      const std::string fmt = resolve_format(cfg, "graph6");
      if (fmt == "matrix")
        return print_poly(cfg, skewperm::char_poly(skewperm::parse_matrix(read_input(cfg.input))));
      return print_poly(cfg, skewperm::char_poly(skewperm::adjacency_matrix(load_graph(cfg))));
    };
  });

  // ---- permanent ----------------------------------------------------
  CLI::App* permanent = app.add_subcommand("permanent", "permanent of a square matrix");
  add_io_options(permanent, cfg);
  std::vector<CLI::Option*> per_modes = {
      permanent->add_flag("--ryser", "inclusion-exclusion with Gray-code subsets (default)"),
      permanent->add_flag("--naive", "permutation expansion, order <= 10"),
      permanent->add_flag("--skew-even", "even-cycle-permutation sum for skew matrices"),
      permanent->add_flag("--cycle-cover", "sum over directed cycle covers"),
  };
  for (std::size_t i = 0; i < per_modes.size(); ++i)
    for (std::size_t j = i + 1; j < per_modes.size(); ++j)
      per_modes[i]->excludes(per_modes[j]);
  permanent->callback([&] {
    action = [&, permanent]() {
      const skewperm::Matrix a = load_matrix(cfg);
      if (permanent->count("--naive")) return print_value(cfg, skewperm::permanent_naive(a));
      if (permanent->count("--skew-even"))
        return print_value(cfg, skewperm::permanent_skew_even(skewperm::SkewMatrix(a)));
      if (permanent->count("--cycle-cover"))
        return print_value(cfg, skewperm::permanent_cycle_cover(a));
      return print_value(cfg, skewperm::permanent_ryser(a));
    };
  });

  // ---- spectrum -----------------------------------------------------
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "roots of the permanental polynomial, sorted by (re, im)");
  add_io_options(spectrum, cfg);
  spectrum->add_option("--tol", cfg.tol, "root residual tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  spectrum->callback([&] {
    action = [&]() {
      const std::string fmt = resolve_format(cfg, "graph6");
      skewperm::Poly p;
      if (fmt == "orientation")
        p = skewperm::perm_poly_skew_sachs(load_orientation(cfg));
      else if (fmt == "matrix")
        p = skewperm::perm_poly_direct(skewperm::parse_matrix(read_input(cfg.input)));
      else
        p = skewperm::perm_poly_adjacency_sachs(load_graph(cfg));
      return print_spectrum(cfg, skewperm::roots(p, cfg.tol));
    };
  });

  // ---- classify -----------------------------------------------------
  CLI::App* classify = app.add_subcommand("classify", "structural facts about a graph");
  classify->require_subcommand(1);
  CLI::App* cls_even = classify->add_subcommand("even-cycle", "does the graph contain an even cycle?");
  CLI::App* cls_bip = classify->add_subcommand("bipartite", "two-coloring, if one exists");
  CLI::App* cls_forest = classify->add_subcommand("forest", "is the graph cycle-free?");
  CLI::App* cls_blocks = classify->add_subcommand("blocks", "block decomposition and cut vertices");
  for (CLI::App* sub : {cls_even, cls_bip, cls_forest, cls_blocks}) add_io_options(sub, cfg);
  cls_even->callback([&] {
    action = [&]() { return print_flag(cfg, "has_even_cycle", skewperm::has_even_cycle(load_graph(cfg))); };
  });
  cls_forest->callback([&] {
    action = [&]() { return print_flag(cfg, "forest", skewperm::is_forest(load_graph(cfg))); };
  });
  cls_bip->callback([&] {
    action = [&]() {
      auto bip = skewperm::bipartition(load_graph(cfg));
      if (json_mode(cfg)) {
        if (bip)
          emit_json(ordered_json{{"bipartite", true}, {"x", bip->x}, {"y", bip->y}});
        else
          emit_json(ordered_json{{"bipartite", false}});
        return kExitOk;
      }
      if (!bip) {
        std::cout << "bipartite: false\n";
        return kExitOk;
      }
      std::cout << "bipartite: true\nx:";
      for (int v : bip->x) std::cout << " " << v;
      std::cout << "\ny:";
      for (int v : bip->y) std::cout << " " << v;
      std::cout << "\n";
      return kExitOk;
    };
  });
  cls_blocks->callback([&] {
    action = [&]() {
      const skewperm::Graph g = load_graph(cfg);
      const auto bs = skewperm::blocks(g);
      const auto cuts = skewperm::cut_vertices(g);
      if (json_mode(cfg)) {
        ordered_json arr = ordered_json::array();
        for (const auto& b : bs) {
          ordered_json edges = ordered_json::array();
          for (const auto& e : b.edges) edges.push_back(ordered_json::array({e.u, e.v}));
          arr.push_back(ordered_json{
              {"kind", block_kind_text(b.kind)}, {"vertices", b.vertices}, {"edges", edges}});
        }
        emit_json(ordered_json{{"blocks", arr}, {"cut_vertices", cuts}});
        return kExitOk;
      }
      std::cout << "blocks: " << bs.size() << "\n";
      for (const auto& b : bs) {
        std::cout << "block: " << block_kind_text(b.kind) << " vertices:";
        for (int v : b.vertices) std::cout << " " << v;
        std::cout << " edges:";
        for (const auto& e : b.edges) std::cout << " " << e.u << "-" << e.v;
        std::cout << "\n";
      }
      std::cout << "cut vertices:";
      for (int v : cuts) std::cout << " " << v;
      std::cout << "\n";
      return kExitOk;
    };
  });

  // ---- verify ---------------------------------------------------------
  CLI::App* verify = app.add_subcommand(
      "verify", "orientation-sweep checks; exit 3 when the property is refuted");
  verify->require_subcommand(1);
  CLI::App* v_same = verify->add_subcommand(
      "same-poly", "all orientations share one permanental polynomial");
  CLI::App* v_match = verify->add_subcommand(
      "matching-eq", "every orientation's polynomial equals the matching polynomial");
  CLI::App* v_bip = verify->add_subcommand(
      "bipartite-i", "some orientation rotates the per-spectrum by i exactly when bipartite");
  CLI::App* v_forest = verify->add_subcommand(
      "forest", "every orientation satisfies the i-relation exactly when the graph is a forest");
  for (CLI::App* sub : {v_same, v_match, v_bip, v_forest}) {
    add_io_options(sub, cfg);
    sub->add_option("--budget", cfg.budget, "max orientations before sampling")
        ->check(CLI::Range(std::uint64_t(1), std::uint64_t(1) << 62))
        ->capture_default_str();
    sub->add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
  }
  v_forest->add_option("--tol", cfg.tol, "root-multiset matching tolerance")
      ->check(CLI::PositiveNumber)
      ->default_val(1e-8);
  v_same->callback([&] {
    action = [&]() {
      return print_report(cfg, skewperm::verify_all_orientations_same(load_graph(cfg), cfg.budget, cfg.seed));
    };
  });
  v_match->callback([&] {
    action = [&]() {
      return print_report(cfg, skewperm::verify_matching_equality(load_graph(cfg), cfg.budget, cfg.seed));
    };
  });
  v_bip->callback([&] {
    action = [&]() {
      return print_report(cfg, skewperm::verify_bipartite_i_relation(load_graph(cfg), cfg.budget, cfg.seed));
    };
  });
  v_forest->callback([&] {
    action = [&]() {
      return print_report(
          cfg, skewperm::verify_forest_relation(load_graph(cfg), cfg.budget, cfg.seed, cfg.tol));
    };
  });

  // ---- orient ---------------------------------------------------------
  CLI::App* orient_cmd = app.add_subcommand("orient", "construct or transform orientations");
  orient_cmd->require_subcommand(1);
  CLI::App* o_toward = orient_cmd->add_subcommand(
      "toward-y", "orient every edge of a bipartite graph from the x side to the y side");
  CLI::App* o_all = orient_cmd->add_subcommand("all", "list all 2^m orientations (m <= 20)");
  CLI::App* o_rev = orient_cmd->add_subcommand("reverse", "reverse one edge of an orientation");
  for (CLI::App* sub : {o_toward, o_all, o_rev}) add_io_options(sub, cfg);
  o_rev->add_option("--edge", cfg.edge, "edge index to reverse")->required();
  o_toward->callback([&] {
    action = [&]() {
      const skewperm::Graph g = load_graph(cfg);
      auto bip = skewperm::bipartition(g);
      if (!bip) throw skewperm::ParseError("graph is not bipartite; no toward-y orientation exists");
      return print_orientation(cfg, skewperm::toward_y_orientation(g, *bip));
    };
  });
  o_all->callback([&] {
    action = [&]() {
      const skewperm::Graph g = load_graph(cfg);
      const auto all = skewperm::all_orientations(g);
      if (json_mode(cfg)) {
        ordered_json arr = ordered_json::array();
        for (const auto& og : all)
          arr.push_back(ordered_json{{"bits", og.bits()}, {"arcs", arcs_json(og)}});
        emit_json(ordered_json{{"count", all.size()}, {"orientations", arr}});
        return kExitOk;
      }
      std::cout << "count: " << all.size() << "\n";
      for (const auto& og : all) {
        std::cout << og.bits() << ":";
        for (int e = 0; e < g.edge_count(); ++e) {
          const auto [from, to] = og.arc(e);
          std::cout << " " << from << "->" << to;
        }
        std::cout << "\n";
      }
      return kExitOk;
    };
  });
  o_rev->callback([&] {
    action = [&]() {
      cfg.format = resolve_format(cfg, "orientation");
      return print_orientation(cfg, skewperm::reverse_edge(load_orientation(cfg), cfg.edge));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : 64;
  }

  try {
    return action();
  } catch (const skewperm::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
