#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "domcolor/coloring.hpp"
#include "domcolor/errors.hpp"
#include "domcolor/graph.hpp"
#include "domcolor/invariants.hpp"

namespace domcolor {

namespace detail {

// Exact search for a dominator coloring with exactly k classes. Vertices
// are assigned in DSATUR order; classes open in first-use order.
//
// Pruning. A vertex "needs domination" once its class has >= 2 members
// (classes only grow), or once it is uncolored while no class can be
// opened (it will have to join a nonempty class). Such a vertex is fine
// while some nonempty class lies inside its neighbourhood; otherwise it
// needs a future class built from uncolored neighbours, which takes one
// empty class slot, and vertices with disjoint neighbourhoods need
// distinct slots.
struct DominatorKSearch {
  const Graph& g;
  int k;
  NodeBudget& budget;
  std::vector<int> color;
  std::vector<VertexSet> cls;
  VertexSet uncolored_mask;
  int used = 0;
  int uncolored;

  DominatorKSearch(const Graph& graph, int colors, NodeBudget& b)
      : g(graph),
        k(colors),
        budget(b),
        color(static_cast<std::size_t>(graph.order()), -1),
        cls(static_cast<std::size_t>(colors), 0),
        uncolored_mask(all_vertices(graph.order())),
        uncolored(graph.order()) {}

  bool dead() const {
    int empty_classes = k - used;
    VertexSet demand_union = 0;
    int demands = 0;
    for (int u = 0; u < g.order(); ++u) {
      int cu = color[static_cast<std::size_t>(u)];
      VertexSet nb = g.adjacency(u);
      // Footprint of the class this vertex would need created for it:
      // a future dominated class inside N(u), or, while uncolored, possibly
      // its own singleton class {u}.
      VertexSet footprint;
      if (cu >= 0) {
        if (set_size(cls[static_cast<std::size_t>(cu)]) < 2) continue;
        footprint = nb;
      } else {
        footprint = nb | vertex_bit(u);
      }
      bool satisfied = false;
      for (int j = 0; j < k; ++j) {
        VertexSet cj = cls[static_cast<std::size_t>(j)];
        if (cj != 0 && (cj & ~nb) == 0) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;
      if (empty_classes == 0) return true;
      if (cu >= 0 && (uncolored_mask & nb) == 0) return true;
      if ((footprint & demand_union) == 0) {
        ++demands;
        demand_union |= footprint;
      }
    }
    return demands > empty_classes;
  }

  bool complete_valid() const {
    for (int u = 0; u < g.order(); ++u) {
      int cu = color[static_cast<std::size_t>(u)];
      if (set_size(cls[static_cast<std::size_t>(cu)]) == 1) continue;
      bool ok = false;
      for (int j = 0; j < k; ++j) {
        VertexSet cj = cls[static_cast<std::size_t>(j)];
        if (cj != 0 && (cj & ~g.adjacency(u)) == 0) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  bool solve() {
    if (uncolored == 0) return complete_valid();
    budget.tick();
    int v = dsatur_pick(g, color);
    VertexSet nb = g.adjacency(v);
    int limit = std::min(used + 1, k);
    for (int c = 0; c < limit; ++c) {
      if (cls[static_cast<std::size_t>(c)] & nb) continue;
      color[static_cast<std::size_t>(v)] = c;
      cls[static_cast<std::size_t>(c)] |= vertex_bit(v);
      uncolored_mask &= ~vertex_bit(v);
      int prev = used;
      if (c == used) ++used;
      --uncolored;
      if (!dead() && solve()) return true;
      ++uncolored;
      used = prev;
      uncolored_mask |= vertex_bit(v);
      cls[static_cast<std::size_t>(c)] &= ~vertex_bit(v);
      color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }
};

// Exact search for a dominated coloring with exactly k classes. Each class
// tracks its surviving dominator candidates, the intersection of the open
// neighbourhoods of its members; assignment into a class is allowed only
// while that intersection stays nonempty.
struct DominatedKSearch {
  const Graph& g;
  int k;
  NodeBudget& budget;
  bool natural_order;  // enumerate in vertex order 0..n-1 (canonical partitions)
  std::vector<int> color;
  std::vector<VertexSet> cls;
  std::vector<VertexSet> domcand;
  int used = 0;
  int uncolored;
  // Enumeration callback: return true to stop the search.
  std::function<bool(const std::vector<int>&, const std::vector<VertexSet>&)> on_solution;

  DominatedKSearch(const Graph& graph, int colors, NodeBudget& b, bool natural = false)
      : g(graph),
        k(colors),
        budget(b),
        natural_order(natural),
        color(static_cast<std::size_t>(graph.order()), -1),
        cls(static_cast<std::size_t>(colors), 0),
        domcand(static_cast<std::size_t>(colors), ~VertexSet{0}),
        uncolored(graph.order()) {}

  bool joinable_existing(int u) const {
    VertexSet nb = g.adjacency(u);
    for (int c = 0; c < used; ++c) {
      if (cls[static_cast<std::size_t>(c)] & nb) continue;
      if (domcand[static_cast<std::size_t>(c)] & nb) return true;
    }
    return false;
  }

  // An uncolored vertex with no compatible open class must open a fresh
  // one; vertices with disjoint closed neighbourhoods cannot share a fresh
  // class (its dominator would need to sit in both neighbourhoods).
  bool wipeout() const {
    int empty_classes = k - used;
    if (empty_classes > uncolored) return true;
    VertexSet demand_union = 0;
    int demands = 0;
    for (int u = 0; u < g.order(); ++u) {
      if (color[static_cast<std::size_t>(u)] >= 0) continue;
      if (joinable_existing(u)) continue;
      if (empty_classes == 0) return true;
      VertexSet footprint = g.closed_adjacency(u);
      if ((footprint & demand_union) == 0) {
        ++demands;
        demand_union |= footprint;
      }
    }
    return demands > empty_classes;
  }

  bool solve() {
    if (uncolored == 0) {
      if (used != k) return false;
      return on_solution(color, cls);
    }
    if (k - used > uncolored) return false;  // not enough vertices left to open all classes
    budget.tick();
    int v = natural_order ? g.order() - uncolored : dsatur_pick(g, color);
    VertexSet nb = g.adjacency(v);
    int limit = std::min(used + 1, k);
    for (int c = 0; c < limit; ++c) {
      if (cls[static_cast<std::size_t>(c)] & nb) continue;
      VertexSet nd = domcand[static_cast<std::size_t>(c)] & nb;
      if (nd == 0) continue;
      VertexSet prev_cand = domcand[static_cast<std::size_t>(c)];
      color[static_cast<std::size_t>(v)] = c;
      cls[static_cast<std::size_t>(c)] |= vertex_bit(v);
      domcand[static_cast<std::size_t>(c)] = nd;
      int prev = used;
      if (c == used) ++used;
      --uncolored;
      if (!wipeout() && solve()) return true;
      ++uncolored;
      used = prev;
      domcand[static_cast<std::size_t>(c)] = prev_cand;
      cls[static_cast<std::size_t>(c)] &= ~vertex_bit(v);
      color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }
};

// In any dominator coloring, every vertex u owns a class inside N[u]: its
// own singleton or a class it dominates. Vertices with pairwise disjoint
// closed neighbourhoods therefore own distinct classes, and no vertex
// outside the union of those neighbourhoods can sit in any of them, so
// chi_d >= |P| + chi(G - N[P]) for every such packing P. Greedy packing,
// scored at every prefix.
inline int dominator_packing_bound(const Graph& g, NodeBudget& budget) {
  int n = g.order();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
    return a < b;
  });
  VertexSet covered = 0;
  int packed = 0;
  int best = 0;
  for (int v : order) {
    if (g.closed_adjacency(v) & covered) continue;
    covered |= g.closed_adjacency(v);
    ++packed;
    Graph residual = induced_subgraph(g, all_vertices(n) & ~covered);
    int chi_rest = chromatic_number_impl(residual, budget).value;
    best = std::max(best, packed + chi_rest);
  }
  return best;
}

inline InvariantResult dominator_chromatic_impl(const Graph& g, NodeBudget& budget) {
  InvariantResult r;
  int n = g.order();
  if (n == 0) {
    r.coloring = Coloring{};
    return r;
  }
  // chi <= chi_d (proper) and gamma <= chi_d (one class representative each
  // gives a dominating set), so deepening can start at their maximum.
  InvariantResult chi = chromatic_number_impl(g, budget);
  InvariantResult gam = domination_number_impl(g, false, budget);
  int lb = std::max({chi.value, gam.value, dominator_packing_bound(g, budget)});
  for (int k = lb; k <= n; ++k) {
    DominatorKSearch search(g, k, budget);
    if (search.solve()) {
      r.value = k;
      r.coloring = make_coloring(search.color);
      r.nodes_explored = budget.used;
      return r;
    }
  }
  // All-singletons is always a dominator coloring; unreachable.
  throw Error("dominator coloring search failed to terminate");
}

// Two vertices can share a class of a dominated coloring only if they are
// non-adjacent and have a common neighbour (the class dominator is adjacent
// to both). A clique of the conflict graph therefore needs one class per
// vertex.
inline int dominated_conflict_bound(const Graph& g) {
  EdgeList conflicts;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) || (g.adjacency(u) & g.adjacency(v)) == 0)
        conflicts.emplace_back(u, v);
  Graph conflict = Graph::from_edges(g.order(), conflicts);
  return static_cast<int>(greedy_clique(conflict).size());
}

inline InvariantResult dominated_chromatic_impl(const Graph& g, NodeBudget& budget) {
  InvariantResult r;
  int n = g.order();
  if (n == 0) {
    r.coloring = Coloring{};
    return r;
  }
  if (has_isolated_vertex(g))
    throw UndefinedInvariant(
        "dominated coloring undefined on a graph with an isolated vertex");
  // chi <= chi_dom (proper); gamma_t <= chi_dom (one dominator per class
  // forms a total dominating set).
  InvariantResult chi = chromatic_number_impl(g, budget);
  InvariantResult gt = domination_number_impl(g, true, budget);
  int lb = std::max({chi.value, gt.value, dominated_conflict_bound(g)});
  for (int k = lb; k <= n; ++k) {
    DominatedKSearch search(g, k, budget);
    std::vector<int> found;
    search.on_solution = [&](const std::vector<int>& colors, const std::vector<VertexSet>&) {
      found = colors;
      return true;
    };
    if (search.solve()) {
      r.value = k;
      r.coloring = make_coloring(found);
      r.nodes_explored = budget.used;
      return r;
    }
  }
  throw Error("dominated coloring search failed to terminate");
}

// Enumerates all optimal dominated colorings of g (up to class relabelling;
// classes are ordered by smallest member) and reports the first one with a
// class fully contained in `target`. Shared by both indicator readings.
struct IndicatorScan {
  int value = 1;
  std::optional<Coloring> witness;
  std::uint64_t colorings_examined = 0;
};

inline IndicatorScan indicator_scan(const Graph& g, int optimum, VertexSet target,
                                    NodeBudget& budget) {
  IndicatorScan out;
  DominatedKSearch search(g, optimum, budget, /*natural=*/true);
  search.on_solution = [&](const std::vector<int>& colors,
                           const std::vector<VertexSet>& cls) {
    ++out.colorings_examined;
    for (const VertexSet& cl : cls) {
      if (cl != 0 && (cl & ~target) == 0) {
        out.value = 0;
        out.witness = make_coloring(colors);
        return true;  // stop: witness found
      }
    }
    return false;  // keep enumerating
  };
  search.solve();
  return out;
}

}  // namespace detail

/// chi_d(G): dominator chromatic number with witness coloring.
inline InvariantResult dominator_chromatic_number(const Graph& g, SearchLimits limits = {}) {
  detail::NodeBudget budget(limits.max_nodes);
  return detail::dominator_chromatic_impl(g, budget);
}

/// chi_dom(G): dominated chromatic number with witness coloring.
/// Errors on graphs with an isolated vertex.
inline InvariantResult dominated_chromatic_number(const Graph& g, SearchLimits limits = {}) {
  detail::NodeBudget budget(limits.max_nodes);
  return detail::dominated_chromatic_impl(g, budget);
}

/// Result of the optimal-coloring indicator I(r): 0 iff some optimal
/// dominated coloring has a class fully adjacent to the root.
struct IndicatorResult {
  int value = 1;
  std::optional<Coloring> witness;
  std::uint64_t colorings_examined = 0;
};

inline IndicatorResult indicator_I(const Graph& h, SearchLimits limits = {}) {
  if (!h.root()) throw std::invalid_argument("indicator requires a rooted graph");
  if (has_isolated_vertex(h))
    throw UndefinedInvariant("indicator undefined on a graph with an isolated vertex");
  detail::NodeBudget budget(limits.max_nodes);
  InvariantResult opt = detail::dominated_chromatic_impl(h, budget);
  detail::IndicatorScan scan =
      detail::indicator_scan(h, opt.value, h.adjacency(*h.root()), budget);
  return IndicatorResult{scan.value, scan.witness, scan.colorings_examined};
}

}  // namespace domcolor
