#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "domcolor/domcoloring.hpp"
#include "domcolor/enumerate.hpp"
#include "domcolor/graph.hpp"
#include "domcolor/invariants.hpp"
#include "domcolor/io.hpp"
#include "domcolor/isomorphism.hpp"
#include "domcolor/products.hpp"

#include "json.hpp"

namespace domcolor {

// ---------------------------------------------------------------------------
// Registry: every checkable statement has one stable id.
// ---------------------------------------------------------------------------

enum class TheoremId {
  CoronaDominated,          // chi_dom(G o H) = n(G) chi(H)
  CoronaDominator,          // chi_d(G o H) = n(G) + chi(H)
  EdgeCoronaDominator,      // chi_d(G <> H) = beta(G) + chi(H) + 1
  EdgeCoronaLowerNoPendant, // chi_dom(G <> H) >= alpha'(G) chi(H) + chi_dom(G)
  EdgeCoronaLowerPendant,   // chi_dom(G <> H) >= alpha'(G) chi(H) + #pendants(G)
  EdgeCoronaUpper,          // chi_dom(G <> H) <= chi_dom(G) + beta(G) chi(H)
  HierDominatorUpper,       // chi_d(GN ⊓...⊓ G1) <= chi_d(G1) prod n(Gi)
  HierDominatedFormula,     // chi_dom(H ⊓ G) two-factor case formula
  CycleDominated,           // chi_dom(C_k) case formula
  BridgeCycleIdent,         // BC(G,...,G) isomorphic to G ⊓ C_k
  TriangleFreeTotalDom,     // chi_dom = gamma_t on triangle-free graphs
  TreeDominatorRange,       // chi_d(T) - gamma(T) in {1,2} on nontrivial trees
  Konig,                    // alpha' = beta on bipartite graphs
};

inline const std::vector<TheoremId>& all_theorem_ids() {
  static const std::vector<TheoremId> ids = {
      TheoremId::CoronaDominated,          TheoremId::CoronaDominator,
      TheoremId::EdgeCoronaDominator,      TheoremId::EdgeCoronaLowerNoPendant,
      TheoremId::EdgeCoronaLowerPendant,   TheoremId::EdgeCoronaUpper,
      TheoremId::HierDominatorUpper,       TheoremId::HierDominatedFormula,
      TheoremId::CycleDominated,           TheoremId::BridgeCycleIdent,
      TheoremId::TriangleFreeTotalDom,     TheoremId::TreeDominatorRange,
      TheoremId::Konig,
  };
  return ids;
}

inline std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::CoronaDominated: return "corona-dominated";
    case TheoremId::CoronaDominator: return "corona-dominator";
    case TheoremId::EdgeCoronaDominator: return "edge-corona-dominator";
    case TheoremId::EdgeCoronaLowerNoPendant: return "edge-corona-lower-no-pendant";
    case TheoremId::EdgeCoronaLowerPendant: return "edge-corona-lower-pendant";
    case TheoremId::EdgeCoronaUpper: return "edge-corona-upper";
    case TheoremId::HierDominatorUpper: return "hier-dominator-upper";
    case TheoremId::HierDominatedFormula: return "hier-dominated-formula";
    case TheoremId::CycleDominated: return "cycle-dominated";
    case TheoremId::BridgeCycleIdent: return "bridge-cycle-ident";
    case TheoremId::TriangleFreeTotalDom: return "triangle-free-total-dom";
    case TheoremId::TreeDominatorRange: return "tree-dominator-range";
    case TheoremId::Konig: return "konig";
  }
  return "unknown";
}

inline TheoremId theorem_from_string(const std::string& name) {
  for (TheoremId id : all_theorem_ids())
    if (to_string(id) == name) return id;
  throw std::invalid_argument("unknown theorem id: " + name);
}

// ---------------------------------------------------------------------------
// Instances and results.
// ---------------------------------------------------------------------------

struct TheoremInstance {
  TheoremId id;
  std::vector<Graph> factors;
  int k = 0;  // cycle length where applicable
  int tag = 0;  // extra instance tag (seed index for random families)
};

enum class Verdict { Equality, StrictHolds, Violated, Skipped };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equality: return "EQUALITY";
    case Verdict::StrictHolds: return "STRICT_HOLDS";
    case Verdict::Violated: return "VIOLATED";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

struct CheckResult {
  TheoremId id{};
  std::string instance;
  long long lhs = -1;
  long long rhs = -1;
  Verdict verdict = Verdict::Skipped;
  std::string reason;  // populated for SKIPPED
  std::map<std::string, std::string> details;

  std::string verdict_string() const {
    if (verdict == Verdict::Skipped) return "SKIPPED(" + reason + ")";
    return to_string(verdict);
  }
};

namespace detail {

inline std::string describe_graph(const Graph& g) {
  std::string s = to_graph6(g);
  if (g.root()) s += "@" + std::to_string(*g.root());
  return s;
}

inline std::string coloring_to_string(const Coloring& c) {
  std::string s;
  for (std::size_t v = 0; v < c.colors.size(); ++v) {
    if (v) s += ' ';
    s += std::to_string(c.colors[v]);
  }
  return s;
}

inline std::string set_to_string(const std::vector<int>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(vs[i]);
  }
  return s;
}

// Named small factors for suite families: K3, P4, C5, S4 (star).
inline Graph named_graph(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad factor name: " + name);
  int n = std::stoi(name.substr(1));
  switch (name[0]) {
    case 'K': return complete_graph(n);
    case 'P': return path_graph(n);
    case 'C': return cycle_graph(n);
    case 'S': return star_graph(n);
    default: throw std::invalid_argument("bad factor name: " + name);
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Single-instance evaluation.
// ---------------------------------------------------------------------------

inline CheckResult evaluate(const TheoremInstance& inst, SearchLimits limits = {},
                            int product_order_cap = kMaxVertices) {
  CheckResult out;
  out.id = inst.id;

  auto skip = [&](const std::string& reason) {
    out.verdict = Verdict::Skipped;
    out.reason = reason;
    return out;
  };
  auto equality_verdict = [&]() {
    out.verdict = out.lhs == out.rhs ? Verdict::Equality : Verdict::Violated;
  };
  auto cap_check = [&](long long order) {
    if (order > std::min(product_order_cap, kMaxVertices)) {
      skip("product order " + std::to_string(order) + " exceeds cap");
      return false;
    }
    return true;
  };

  try {
    switch (inst.id) {
      case TheoremId::CoronaDominated: {
        const Graph& g = inst.factors[0];
        const Graph& h = inst.factors[1];
        out.instance = "G=" + detail::describe_graph(g) + ";H=" + detail::describe_graph(h);
        if (!cap_check(static_cast<long long>(g.order()) * (1 + h.order()))) return out;
        Graph product = corona(g, h);
        InvariantResult lhs = dominated_chromatic_number(product, limits);
        InvariantResult chi_h = chromatic_number(h, limits);
        out.lhs = lhs.value;
        out.rhs = static_cast<long long>(g.order()) * chi_h.value;
        out.details["lhs_coloring"] = detail::coloring_to_string(*lhs.coloring);
        equality_verdict();
        return out;
      }
      case TheoremId::CoronaDominator: {
        const Graph& g = inst.factors[0];
        const Graph& h = inst.factors[1];
        out.instance = "G=" + detail::describe_graph(g) + ";H=" + detail::describe_graph(h);
        if (!cap_check(static_cast<long long>(g.order()) * (1 + h.order()))) return out;
        Graph product = corona(g, h);
        InvariantResult lhs = dominator_chromatic_number(product, limits);
        InvariantResult chi_h = chromatic_number(h, limits);
        out.lhs = lhs.value;
        out.rhs = g.order() + chi_h.value;
        out.details["lhs_coloring"] = detail::coloring_to_string(*lhs.coloring);
        equality_verdict();
        return out;
      }
      case TheoremId::EdgeCoronaDominator: {
        const Graph& g = inst.factors[0];
        const Graph& h = inst.factors[1];
        out.instance = "G=" + detail::describe_graph(g) + ";H=" + detail::describe_graph(h);
        if (g.size() == 0)
          return skip("restricted domain: G must have at least one edge");
        if (has_isolated_vertex(g))
          return skip("restricted domain: G must have no isolated vertex");
        if (!cap_check(g.order() + static_cast<long long>(g.size()) * h.order())) return out;
        Graph product = edge_corona(g, h);
        InvariantResult lhs = dominator_chromatic_number(product, limits);
        InvariantResult beta = vertex_cover_number(g, limits);
        InvariantResult chi_h = chromatic_number(h, limits);
        out.lhs = lhs.value;
        out.rhs = beta.value + chi_h.value + 1;
        out.details["lhs_coloring"] = detail::coloring_to_string(*lhs.coloring);
        out.details["beta_witness"] = detail::set_to_string(*beta.vertex_set);
        equality_verdict();
        return out;
      }
      case TheoremId::EdgeCoronaLowerNoPendant:
      case TheoremId::EdgeCoronaLowerPendant:
      case TheoremId::EdgeCoronaUpper: {
        const Graph& g = inst.factors[0];
        const Graph& h = inst.factors[1];
        out.instance = "G=" + detail::describe_graph(g) + ";H=" + detail::describe_graph(h);
        StructuralPredicates pred = predicates(g);
        if (pred.has_isolated_vertex)
          return skip("chi_dom undefined: G has an isolated vertex");
        if (inst.id == TheoremId::EdgeCoronaLowerNoPendant && !pred.pendant_vertices.empty())
          return skip("hypothesis not met: G has pendant vertices");
        if (!cap_check(g.order() + static_cast<long long>(g.size()) * h.order())) return out;
        Graph product = edge_corona(g, h);
        InvariantResult lhs = dominated_chromatic_number(product, limits);
        InvariantResult chi_h = chromatic_number(h, limits);
        out.lhs = lhs.value;
        out.details["lhs_coloring"] = detail::coloring_to_string(*lhs.coloring);
        if (inst.id == TheoremId::EdgeCoronaLowerNoPendant) {
          InvariantResult alpha = matching_number(g, limits);
          InvariantResult chidom_g = dominated_chromatic_number(g, limits);
          out.rhs = static_cast<long long>(alpha.value) * chi_h.value + chidom_g.value;
          out.verdict = out.lhs == out.rhs    ? Verdict::Equality
                        : out.lhs > out.rhs   ? Verdict::StrictHolds
                                              : Verdict::Violated;
        } else if (inst.id == TheoremId::EdgeCoronaLowerPendant) {
          InvariantResult alpha = matching_number(g, limits);
          int pendants = static_cast<int>(pred.pendant_vertices.size());
          out.rhs = static_cast<long long>(alpha.value) * chi_h.value + pendants;
          out.details["pendants"] = std::to_string(pendants);
          out.verdict = out.lhs == out.rhs    ? Verdict::Equality
                        : out.lhs > out.rhs   ? Verdict::StrictHolds
                                              : Verdict::Violated;
        } else {
          InvariantResult beta = vertex_cover_number(g, limits);
          InvariantResult chidom_g = dominated_chromatic_number(g, limits);
          out.rhs = chidom_g.value + static_cast<long long>(beta.value) * chi_h.value;
          bool equality_required = pred.bipartite && pred.pendant_vertices.empty();
          out.details["equality_required"] = equality_required ? "yes" : "no";
          if (out.lhs > out.rhs)
            out.verdict = Verdict::Violated;
          else if (out.lhs == out.rhs)
            out.verdict = Verdict::Equality;
          else
            out.verdict = equality_required ? Verdict::Violated : Verdict::StrictHolds;
        }
        return out;
      }
      case TheoremId::HierDominatorUpper: {
        const std::vector<Graph>& factors = inst.factors;
        std::string desc = "factors=";
        long long order = 1;
        for (std::size_t i = 0; i < factors.size(); ++i) {
          if (i) desc += "+";
          desc += detail::describe_graph(factors[i]);
          order *= factors[i].order();
        }
        out.instance = desc;
        if (!cap_check(order)) return out;
        Graph product = hierarchical(factors);
        InvariantResult lhs = dominator_chromatic_number(product, limits);
        InvariantResult chi_d1 = dominator_chromatic_number(factors.back(), limits);
        long long rhs = chi_d1.value;
        for (std::size_t i = 0; i + 1 < factors.size(); ++i) rhs *= factors[i].order();
        out.lhs = lhs.value;
        out.rhs = rhs;
        out.details["lhs_coloring"] = detail::coloring_to_string(*lhs.coloring);
        out.verdict = out.lhs == out.rhs   ? Verdict::Equality
                      : out.lhs < out.rhs  ? Verdict::StrictHolds
                                           : Verdict::Violated;
        return out;
      }
      case TheoremId::HierDominatedFormula: {
        const Graph& h = inst.factors[0];  // rooted
        const Graph& g = inst.factors[1];
        out.instance = "H=" + detail::describe_graph(h) + ";G=" + detail::describe_graph(g);
        if (!h.root()) return skip("H must carry a root");
        if (has_isolated_vertex(h))
          return skip("chi_dom(H) undefined: H has an isolated vertex");
        Graph h_minus = delete_vertex(h, *h.root());
        if (h_minus.order() == 0 || has_isolated_vertex(h_minus))
          return skip("chi_dom(H-r) undefined: H-r has an isolated vertex");
        if (!cap_check(static_cast<long long>(h.order()) * g.order())) return out;
        Graph product = hierarchical({g, h});
        InvariantResult lhs = dominated_chromatic_number(product, limits);
        InvariantResult chidom_h = dominated_chromatic_number(h, limits);
        InvariantResult chidom_hm = dominated_chromatic_number(h_minus, limits);
        out.lhs = lhs.value;
        out.details["chi_dom_H"] = std::to_string(chidom_h.value);
        out.details["chi_dom_H_minus_r"] = std::to_string(chidom_hm.value);
        out.details["lhs_coloring"] = detail::coloring_to_string(*lhs.coloring);
        if (chidom_h.value == chidom_hm.value) {
          out.rhs = static_cast<long long>(g.order()) * chidom_h.value;
          out.details["case"] = "chi_dom(H)=chi_dom(H-r)";
          equality_verdict();
          return out;
        }
        // Case 2 references chi_dom(G), undefined when G has an isolated vertex.
        if (has_isolated_vertex(g))
          return skip("chi_dom(G) undefined in the case-2 formula: G has an isolated vertex");
        IndicatorResult ind = indicator_I(h, limits);
        InvariantResult chidom_g = dominated_chromatic_number(g, limits);
        out.rhs = static_cast<long long>(g.order()) * chidom_hm.value +
                  static_cast<long long>(ind.value) * chidom_g.value;
        out.details["case"] = "chi_dom(H)!=chi_dom(H-r)";
        out.details["indicator"] = std::to_string(ind.value);
        out.details["indicator_colorings_examined"] = std::to_string(ind.colorings_examined);
        equality_verdict();
        if (out.verdict == Verdict::Violated) {
          // Report the alternate indicator reading too: optimal colorings of
          // H-r, class fully adjacent (in H) to the root.
          int r = *h.root();
          VertexSet target = 0;
          for (int x = 0; x < h_minus.order(); ++x) {
            int orig = x + (x >= r ? 1 : 0);
            if (h.adjacent(r, orig)) target |= vertex_bit(x);
          }
          detail::NodeBudget budget(limits.max_nodes);
          detail::IndicatorScan alt =
              detail::indicator_scan(h_minus, chidom_hm.value, target, budget);
          long long rhs_alt = static_cast<long long>(g.order()) * chidom_hm.value +
                              static_cast<long long>(alt.value) * chidom_g.value;
          out.details["alternate_indicator"] = std::to_string(alt.value);
          out.details["alternate_rhs"] = std::to_string(rhs_alt);
          out.details["alternate_matches"] = out.lhs == rhs_alt ? "yes" : "no";
        }
        return out;
      }
      case TheoremId::CycleDominated: {
        int k = inst.k;
        out.instance = "k=" + std::to_string(k);
        if (k < 3) return skip("cycles require k >= 3");
        InvariantResult lhs = dominated_chromatic_number(cycle_graph(k), limits);
        out.lhs = lhs.value;
        out.rhs = (k % 4 == 0) ? k / 2 : k / 2 + 1;
        out.details["lhs_coloring"] = detail::coloring_to_string(*lhs.coloring);
        equality_verdict();
        return out;
      }
      case TheoremId::BridgeCycleIdent: {
        const Graph& g = inst.factors[0];
        int k = inst.k;
        out.instance = "G=" + detail::describe_graph(g) + ";k=" + std::to_string(k);
        if (!g.root()) return skip("G must carry a root");
        if (!cap_check(static_cast<long long>(g.order()) * k)) return out;
        std::vector<Graph> copies(static_cast<std::size_t>(k), g);
        Graph bc = bridge_cycle(copies);
        Graph hier = hierarchical({cycle_graph(k).with_root(0), g});
        bool iso = are_isomorphic(bc, hier);
        out.lhs = iso ? 1 : 0;
        out.rhs = 1;
        out.details["isomorphic"] = iso ? "yes" : "no";
        out.verdict = iso ? Verdict::Equality : Verdict::Violated;
        return out;
      }
      case TheoremId::TriangleFreeTotalDom: {
        const Graph& g = inst.factors[0];
        out.instance = "G=" + detail::describe_graph(g);
        StructuralPredicates pred = predicates(g);
        if (!pred.triangle_free) return skip("hypothesis not met: G has a triangle");
        if (pred.has_isolated_vertex)
          return skip("chi_dom and gamma_t undefined: G has an isolated vertex");
        InvariantResult lhs = dominated_chromatic_number(g, limits);
        InvariantResult rhs = total_domination_number(g, limits);
        out.lhs = lhs.value;
        out.rhs = rhs.value;
        out.details["lhs_coloring"] = detail::coloring_to_string(*lhs.coloring);
        out.details["gamma_t_witness"] = detail::set_to_string(*rhs.vertex_set);
        equality_verdict();
        return out;
      }
      case TheoremId::TreeDominatorRange: {
        const Graph& t = inst.factors[0];
        out.instance = "T=" + detail::describe_graph(t);
        if (t.order() < 2) return skip("hypothesis not met: tree must be nontrivial");
        InvariantResult lhs = dominator_chromatic_number(t, limits);
        InvariantResult rhs = domination_number(t, limits);
        out.lhs = lhs.value;
        out.rhs = rhs.value;
        long long diff = out.lhs - out.rhs;
        out.details["difference"] = std::to_string(diff);
        out.verdict = (diff == 1 || diff == 2) ? Verdict::StrictHolds : Verdict::Violated;
        return out;
      }
      case TheoremId::Konig: {
        const Graph& g = inst.factors[0];
        out.instance = "G=" + detail::describe_graph(g) +
                       ";seed_index=" + std::to_string(inst.tag);
        if (!is_bipartite(g)) return skip("hypothesis not met: G is not bipartite");
        InvariantResult lhs = matching_number(g, limits);
        InvariantResult rhs = vertex_cover_number(g, limits);
        out.lhs = lhs.value;
        out.rhs = rhs.value;
        equality_verdict();
        return out;
      }
    }
  } catch (const BudgetExceeded&) {
    return skip("search budget exceeded");
  }
  return skip("unhandled theorem id");
}

// ---------------------------------------------------------------------------
// Suite configuration and instance families.
// ---------------------------------------------------------------------------

struct SuiteConfig {
  std::vector<TheoremId> ids;  // empty = all
  int corona_g_max = 5;
  std::vector<std::string> h_names = {"K1", "K2", "P3", "C3", "P4", "K4"};
  int hier_factor_max = 3;
  int hier_levels_max = 3;
  int formula_h_max = 4;
  int formula_g_max = 3;
  int bridge_g_max = 4;
  int bridge_k_min = 3;
  int bridge_k_max = 6;
  int cycle_k_min = 3;
  int cycle_k_max = 10;
  int trianglefree_max = 9;
  int tree_max = 9;
  int konig_count = 100;
  int konig_max_n = 10;
  std::uint64_t seed = 1;
  int product_order_cap = 32;
  SearchLimits limits;
  int jobs = 1;  // 0 = hardware concurrency

  // One knob for CLI --max-n: rescale every family cap.
  void apply_max_n(int n) {
    corona_g_max = n;
    hier_factor_max = std::min(n, 3);
    formula_h_max = n;
    formula_g_max = std::min(n, 3);
    bridge_g_max = n;
    cycle_k_max = std::max(n, cycle_k_min);
    trianglefree_max = n;
    tree_max = n;
    konig_max_n = std::max(n, 2);
  }
};

// Deterministic seeded bipartite graph for the Koenig family.
inline Graph seeded_bipartite(std::uint64_t seed, int index, int max_n) {
  SplitMix64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index + 1));
  int n = 2 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_n - 1));
  int a = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n - 1));
  EdgeList edges;
  for (int u = 0; u < a; ++u)
    for (int v = a; v < n; ++v)
      if (rng.next_double() < 0.5) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline std::vector<TheoremInstance> instances_for(TheoremId id, const SuiteConfig& cfg) {
  std::vector<TheoremInstance> out;
  switch (id) {
    case TheoremId::CoronaDominated:
    case TheoremId::CoronaDominator:
    case TheoremId::EdgeCoronaDominator:
    case TheoremId::EdgeCoronaLowerNoPendant:
    case TheoremId::EdgeCoronaLowerPendant:
    case TheoremId::EdgeCoronaUpper: {
      std::vector<Graph> gs = all_connected_graphs(cfg.corona_g_max);
      for (const Graph& g : gs)
        for (const std::string& name : cfg.h_names)
          out.push_back({id, {g, detail::named_graph(name)}, 0, 0});
      return out;
    }
    case TheoremId::HierDominatorUpper: {
      std::vector<Graph> rooted;
      for (const Graph& g : all_connected_graphs(cfg.hier_factor_max))
        for (const Graph& r : rooted_variants(g)) rooted.push_back(r);
      for (int levels = 2; levels <= cfg.hier_levels_max; ++levels) {
        std::vector<std::size_t> pick(static_cast<std::size_t>(levels), 0);
        for (;;) {
          std::vector<Graph> factors;
          for (std::size_t p : pick) factors.push_back(rooted[p]);
          out.push_back({id, factors, 0, 0});
          int pos = levels - 1;
          while (pos >= 0) {
            if (++pick[static_cast<std::size_t>(pos)] < rooted.size()) break;
            pick[static_cast<std::size_t>(pos)] = 0;
            --pos;
          }
          if (pos < 0) break;
        }
      }
      return out;
    }
    case TheoremId::HierDominatedFormula: {
      std::vector<Graph> gs = all_graphs(cfg.formula_g_max);
      for (const Graph& h : all_graphs(cfg.formula_h_max))
        for (const Graph& hr : rooted_variants(h))
          for (const Graph& g : gs) out.push_back({id, {hr, g}, 0, 0});
      return out;
    }
    case TheoremId::CycleDominated: {
      for (int k = cfg.cycle_k_min; k <= cfg.cycle_k_max; ++k)
        out.push_back({id, {}, k, 0});
      return out;
    }
    case TheoremId::BridgeCycleIdent: {
      for (const Graph& g : all_connected_graphs(cfg.bridge_g_max))
        for (const Graph& gr : rooted_variants(g))
          for (int k = cfg.bridge_k_min; k <= cfg.bridge_k_max; ++k)
            out.push_back({id, {gr}, k, 0});
      return out;
    }
    case TheoremId::TriangleFreeTotalDom: {
      for (const Graph& g : all_triangle_free_graphs(cfg.trianglefree_max))
        if (!has_isolated_vertex(g)) out.push_back({id, {g}, 0, 0});
      return out;
    }
    case TheoremId::TreeDominatorRange: {
      for (const Graph& t : all_trees(cfg.tree_max))
        if (t.order() >= 2) out.push_back({id, {t}, 0, 0});
      return out;
    }
    case TheoremId::Konig: {
      for (int i = 0; i < cfg.konig_count; ++i)
        out.push_back({id, {seeded_bipartite(cfg.seed, i, cfg.konig_max_n)}, 0, i});
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suite runner. Instances are independent; results land in preassigned
// slots and get a canonical sort, so reports are byte-identical no matter
// how the worker pool schedules them.
// ---------------------------------------------------------------------------

struct SuiteReport {
  std::vector<TheoremId> ids;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  int product_order_cap = 0;
  std::vector<CheckResult> results;
  int equality = 0, strict_holds = 0, violated = 0, skipped = 0;

  std::string to_json() const {
    nlohmann::ordered_json j;
    j["config"]["theorems"] = nlohmann::ordered_json::array();
    for (TheoremId id : ids) j["config"]["theorems"].push_back(to_string(id));
    j["config"]["seed"] = seed;
    j["config"]["budget"] = budget;
    j["config"]["product_order_cap"] = product_order_cap;
    j["summary"]["total"] = results.size();
    j["summary"]["equality"] = equality;
    j["summary"]["strict_holds"] = strict_holds;
    j["summary"]["violated"] = violated;
    j["summary"]["skipped"] = skipped;
    j["results"] = nlohmann::ordered_json::array();
    for (const CheckResult& r : results) {
      nlohmann::ordered_json row;
      row["theorem"] = to_string(r.id);
      row["instance"] = r.instance;
      if (r.lhs >= 0) row["lhs"] = r.lhs;
      if (r.rhs >= 0) row["rhs"] = r.rhs;
      row["verdict"] = to_string(r.verdict);
      if (r.verdict == Verdict::Skipped) row["reason"] = r.reason;
      if (!r.details.empty()) {
        for (const auto& [k, v] : r.details) row["details"][k] = v;
      }
      j["results"].push_back(row);
    }
    return j.dump(2) + "\n";
  }

  std::string to_csv() const {
    std::string s = "theorem,instance,lhs,rhs,verdict\n";
    for (const CheckResult& r : results) {
      s += to_string(r.id);
      s += ',' + r.instance;
      s += ',' + (r.lhs >= 0 ? std::to_string(r.lhs) : std::string());
      s += ',' + (r.rhs >= 0 ? std::to_string(r.rhs) : std::string());
      s += ',' + r.verdict_string();
      s += '\n';
    }
    return s;
  }
};

inline SuiteReport run_suite(const SuiteConfig& cfg) {
  SuiteReport report;
  report.ids = cfg.ids.empty() ? all_theorem_ids() : cfg.ids;
  report.seed = cfg.seed;
  report.budget = cfg.limits.max_nodes;
  report.product_order_cap = cfg.product_order_cap;

  std::vector<TheoremInstance> instances;
  for (TheoremId id : report.ids) {
    std::vector<TheoremInstance> part = instances_for(id, cfg);
    instances.insert(instances.end(), part.begin(), part.end());
  }
  report.results.resize(instances.size());

  unsigned jobs = cfg.jobs > 0 ? static_cast<unsigned>(cfg.jobs)
                               : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, instances.empty() ? 1 : static_cast<unsigned>(instances.size()));
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= instances.size()) return;
      report.results[i] = evaluate(instances[i], cfg.limits, cfg.product_order_cap);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::sort(report.results.begin(), report.results.end(),
            [](const CheckResult& a, const CheckResult& b) {
              std::string sa = to_string(a.id), sb = to_string(b.id);
              if (sa != sb) return sa < sb;
              return a.instance < b.instance;
            });
  for (const CheckResult& r : report.results) {
    switch (r.verdict) {
      case Verdict::Equality: ++report.equality; break;
      case Verdict::StrictHolds: ++report.strict_holds; break;
      case Verdict::Violated: ++report.violated; break;
      case Verdict::Skipped: ++report.skipped; break;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Sharpness scan: for inequality-type statements, collect the instances
// that attain equality, smallest product first.
// ---------------------------------------------------------------------------

struct SharpnessFamily {
  std::string g_family = "connected";  // connected|cycles|paths|completes|stars
  std::string h_family = "completes";  // completes|paths|cycles|stars
  int g_max = 5;
  int h_max = 4;
};

namespace detail {

inline std::vector<Graph> family_graphs(const std::string& family, int max_n) {
  std::vector<Graph> out;
  if (family == "connected") return all_connected_graphs(max_n);
  if (family == "cycles") {
    for (int n = 3; n <= max_n; ++n) out.push_back(cycle_graph(n));
    return out;
  }
  if (family == "paths") {
    for (int n = 2; n <= max_n; ++n) out.push_back(path_graph(n));
    return out;
  }
  if (family == "completes") {
    for (int n = 1; n <= max_n; ++n) out.push_back(complete_graph(n));
    return out;
  }
  if (family == "stars") {
    for (int n = 2; n <= max_n; ++n) out.push_back(star_graph(n));
    return out;
  }
  throw std::invalid_argument("unknown graph family: " + family);
}

inline long long product_order_of(const TheoremInstance& inst) {
  switch (inst.id) {
    case TheoremId::EdgeCoronaLowerNoPendant:
    case TheoremId::EdgeCoronaLowerPendant:
    case TheoremId::EdgeCoronaUpper:
      return inst.factors[0].order() +
             static_cast<long long>(inst.factors[0].size()) * inst.factors[1].order();
    case TheoremId::HierDominatorUpper: {
      long long t = 1;
      for (const Graph& f : inst.factors) t *= f.order();
      return t;
    }
    default:
      return 0;
  }
}

}  // namespace detail

inline std::vector<CheckResult> find_sharpness(TheoremId id, const SharpnessFamily& family,
                                               SearchLimits limits = {},
                                               int product_order_cap = kMaxVertices) {
  bool inequality = id == TheoremId::EdgeCoronaLowerNoPendant ||
                    id == TheoremId::EdgeCoronaLowerPendant ||
                    id == TheoremId::EdgeCoronaUpper || id == TheoremId::HierDominatorUpper;
  if (!inequality)
    throw std::invalid_argument("sharpness scan applies to inequality-type theorems only");

  std::vector<TheoremInstance> instances;
  if (id == TheoremId::HierDominatorUpper) {
    // Head factor K_1 collapses the product onto G_1: every instance is sharp.
    for (const Graph& g : detail::family_graphs(family.g_family, family.g_max))
      for (const Graph& gr : rooted_variants(g))
        instances.push_back({id, {complete_graph(1), gr}, 0, 0});
  } else {
    for (const Graph& g : detail::family_graphs(family.g_family, family.g_max))
      for (const Graph& h : detail::family_graphs(family.h_family, family.h_max))
        instances.push_back({id, {g, h}, 0, 0});
  }

  std::vector<std::pair<long long, CheckResult>> hits;
  for (const TheoremInstance& inst : instances) {
    CheckResult r = evaluate(inst, limits, product_order_cap);
    if (r.verdict == Verdict::Equality)
      hits.emplace_back(detail::product_order_of(inst), r);
  }
  std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.instance < b.second.instance;
  });
  std::vector<CheckResult> out;
  for (auto& [order, r] : hits) out.push_back(std::move(r));
  return out;
}

}  // namespace domcolor
