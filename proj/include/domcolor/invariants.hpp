#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "domcolor/coloring.hpp"
#include "domcolor/errors.hpp"
#include "domcolor/graph.hpp"

namespace domcolor {

struct SearchLimits {
  std::uint64_t max_nodes = 100'000'000ULL;
};

/// Exact invariant value plus an optional witness and the number of
/// branch nodes the search explored.
struct InvariantResult {
  int value = 0;
  std::optional<Coloring> coloring;
  std::optional<std::vector<int>> vertex_set;
  std::optional<EdgeList> edge_set;
  std::uint64_t nodes_explored = 0;
};

namespace detail {

struct NodeBudget {
  std::uint64_t used = 0;
  std::uint64_t limit;

  explicit NodeBudget(std::uint64_t l) : limit(l) {}

  void tick() {
    if (++used > limit) throw BudgetExceeded("search node budget exceeded");
  }
};

// Greedy clique, vertices tried in (degree desc, index asc) order.
// Used only as a chromatic lower bound and symmetry anchor.
inline std::vector<int> greedy_clique(const Graph& g) {
  int n = g.order();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  std::vector<int> clique;
  VertexSet common = all_vertices(n);
  for (int v : order) {
    if (common & vertex_bit(v)) {
      clique.push_back(v);
      common &= g.adjacency(v);
    }
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

// DSATUR vertex selection: among uncolored vertices pick the one with the
// most distinct neighbour colors; ties break to the lowest index.
inline int dsatur_pick(const Graph& g, const std::vector<int>& color) {
  int best = -1, best_sat = -1;
  for (int v = 0; v < g.order(); ++v) {
    if (color[static_cast<std::size_t>(v)] >= 0) continue;
    std::uint64_t seen = 0;
    for_each_vertex(g.adjacency(v), [&](int u) {
      int cu = color[static_cast<std::size_t>(u)];
      if (cu >= 0) seen |= std::uint64_t{1} << cu;
    });
    int sat = set_size(seen);
    if (sat > best_sat) {
      best_sat = sat;
      best = v;
    }
  }
  return best;
}

// Greedy DSATUR coloring; returns a valid proper coloring (upper bound).
inline std::vector<int> dsatur_greedy(const Graph& g) {
  int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> cls;
  for (int step = 0; step < n; ++step) {
    int v = dsatur_pick(g, color);
    int c = 0;
    while (c < static_cast<int>(cls.size()) &&
           (cls[static_cast<std::size_t>(c)] & g.adjacency(v)))
      ++c;
    if (c == static_cast<int>(cls.size())) cls.push_back(0);
    cls[static_cast<std::size_t>(c)] |= vertex_bit(v);
    color[static_cast<std::size_t>(v)] = c;
  }
  return color;
}

struct KColoringSearch {
  const Graph& g;
  int k;
  NodeBudget& budget;
  std::vector<int> color;
  std::vector<VertexSet> cls;
  int used = 0;
  int uncolored;

  KColoringSearch(const Graph& graph, int colors, NodeBudget& b)
      : g(graph),
        k(colors),
        budget(b),
        color(static_cast<std::size_t>(graph.order()), -1),
        cls(static_cast<std::size_t>(colors), 0),
        uncolored(graph.order()) {}

  void preassign(const std::vector<int>& clique) {
    for (std::size_t i = 0; i < clique.size(); ++i) {
      color[static_cast<std::size_t>(clique[i])] = static_cast<int>(i);
      cls[i] |= vertex_bit(clique[i]);
      --uncolored;
    }
    used = static_cast<int>(clique.size());
  }

  bool solve() {
    if (uncolored == 0) return true;
    budget.tick();
    int v = dsatur_pick(g, color);
    VertexSet nb = g.adjacency(v);
    int limit = std::min(used + 1, k);
    for (int c = 0; c < limit; ++c) {
      if (cls[static_cast<std::size_t>(c)] & nb) continue;
      color[static_cast<std::size_t>(v)] = c;
      cls[static_cast<std::size_t>(c)] |= vertex_bit(v);
      int prev = used;
      if (c == used) ++used;
      --uncolored;
      if (solve()) return true;
      ++uncolored;
      used = prev;
      cls[static_cast<std::size_t>(c)] &= ~vertex_bit(v);
      color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }
};

inline InvariantResult chromatic_number_impl(const Graph& g, NodeBudget& budget) {
  InvariantResult r;
  int n = g.order();
  if (n == 0) {
    r.coloring = Coloring{};
    return r;
  }
  if (g.size() == 0) {
    r.value = 1;
    r.coloring = make_coloring(std::vector<int>(static_cast<std::size_t>(n), 0));
    return r;
  }
  std::vector<int> clique = greedy_clique(g);
  std::vector<int> greedy = dsatur_greedy(g);
  int ub = *std::max_element(greedy.begin(), greedy.end()) + 1;
  for (int k = static_cast<int>(clique.size()); k < ub; ++k) {
    KColoringSearch search(g, k, budget);
    search.preassign(clique);
    if (search.solve()) {
      r.value = k;
      r.coloring = make_coloring(search.color);
      r.nodes_explored = budget.used;
      return r;
    }
  }
  r.value = ub;
  r.coloring = make_coloring(greedy);
  r.nodes_explored = budget.used;
  return r;
}

// ---- maximum matching: include/exclude the highest-index uncovered edge ----

struct MatchingSearch {
  const Graph& g;
  EdgeList edges;
  NodeBudget& budget;
  int best = 0;
  EdgeList best_matching;
  EdgeList current;

  MatchingSearch(const Graph& graph, NodeBudget& b)
      : g(graph), edges(graph.edges()), budget(b) {}

  void seed_greedy() {
    VertexSet covered = 0;
    for (const auto& [u, v] : edges) {
      if (covered & (vertex_bit(u) | vertex_bit(v))) continue;
      covered |= vertex_bit(u) | vertex_bit(v);
      best_matching.emplace_back(u, v);
    }
    best = static_cast<int>(best_matching.size());
  }

  void search(int edge_limit, VertexSet covered, int size) {
    budget.tick();
    int pick = -1;
    for (int i = edge_limit - 1; i >= 0; --i) {
      const auto& [u, v] = edges[static_cast<std::size_t>(i)];
      if (!(covered & (vertex_bit(u) | vertex_bit(v)))) {
        pick = i;
        break;
      }
    }
    if (pick < 0) {
      if (size > best) {
        best = size;
        best_matching = current;
      }
      return;
    }
    int free_vertices = g.order() - set_size(covered);
    if (size + std::min(pick + 1, free_vertices / 2) <= best) return;
    const auto& [u, v] = edges[static_cast<std::size_t>(pick)];
    current.emplace_back(u, v);
    search(pick, covered | vertex_bit(u) | vertex_bit(v), size + 1);
    current.pop_back();
    search(pick, covered, size);
  }
};

inline InvariantResult matching_number_impl(const Graph& g, NodeBudget& budget) {
  InvariantResult r;
  MatchingSearch search(g, budget);
  search.seed_greedy();
  search.search(static_cast<int>(search.edges.size()), 0, 0);
  std::sort(search.best_matching.begin(), search.best_matching.end());
  r.value = search.best;
  r.edge_set = search.best_matching;
  r.nodes_explored = budget.used;
  return r;
}

// ---- minimum vertex cover -------------------------------------------------

struct VertexCoverSearch {
  const Graph& g;
  EdgeList edges;
  NodeBudget& budget;
  int best;
  VertexSet best_cover = 0;

  VertexCoverSearch(const Graph& graph, NodeBudget& b)
      : g(graph), edges(graph.edges()), budget(b), best(graph.order() + 1) {}

  void seed_greedy() {
    VertexSet cover = 0;
    EdgeList remaining = edges;
    while (!remaining.empty()) {
      std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
      for (const auto& [u, v] : remaining) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
      }
      int pick = 0;
      for (int v = 1; v < g.order(); ++v)
        if (deg[static_cast<std::size_t>(v)] > deg[static_cast<std::size_t>(pick)]) pick = v;
      cover |= vertex_bit(pick);
      EdgeList next;
      for (const auto& e : remaining)
        if (e.first != pick && e.second != pick) next.push_back(e);
      remaining.swap(next);
    }
    best = set_size(cover);
    best_cover = cover;
  }

  // Disjoint uncovered edges; each needs its own cover vertex.
  int matching_lower_bound(VertexSet cover) const {
    VertexSet used = 0;
    int count = 0;
    for (const auto& [u, v] : edges) {
      if ((cover | used) & (vertex_bit(u) | vertex_bit(v))) continue;
      used |= vertex_bit(u) | vertex_bit(v);
      ++count;
    }
    return count;
  }

  void search(VertexSet cover, int size) {
    budget.tick();
    if (size + matching_lower_bound(cover) >= best) return;
    const Edge* uncovered = nullptr;
    for (const auto& e : edges) {
      if (!(cover & (vertex_bit(e.first) | vertex_bit(e.second)))) {
        uncovered = &e;
        break;
      }
    }
    if (!uncovered) {
      best = size;
      best_cover = cover;
      return;
    }
    search(cover | vertex_bit(uncovered->first), size + 1);
    search(cover | vertex_bit(uncovered->second), size + 1);
  }
};

inline InvariantResult vertex_cover_number_impl(const Graph& g, NodeBudget& budget) {
  InvariantResult r;
  VertexCoverSearch search(g, budget);
  search.seed_greedy();
  search.search(0, 0);
  r.value = search.best;
  r.vertex_set = set_to_vector(search.best_cover);
  r.nodes_explored = budget.used;
  return r;
}

// ---- domination and total domination --------------------------------------

// Branches over which neighbour dominates the lowest undominated vertex,
// excluding already-tried candidates on later branches.
struct DominationSearch {
  const Graph& g;
  bool total;  // total: open neighbourhoods, set members need neighbours too
  NodeBudget& budget;
  int best;
  VertexSet best_set = 0;
  VertexSet full;

  DominationSearch(const Graph& graph, bool total_variant, NodeBudget& b)
      : g(graph),
        total(total_variant),
        budget(b),
        best(graph.order() + 1),
        full(all_vertices(graph.order())) {}

  VertexSet coverage(int u) const {
    return total ? g.adjacency(u) : g.closed_adjacency(u);
  }

  void seed_greedy() {
    VertexSet chosen = 0, dominated = 0;
    while (dominated != full) {
      int pick = -1, gain = -1;
      for (int u = 0; u < g.order(); ++u) {
        int cover = set_size(coverage(u) & ~dominated);
        if (cover > gain) {
          gain = cover;
          pick = u;
        }
      }
      chosen |= vertex_bit(pick);
      dominated |= coverage(pick);
    }
    best = set_size(chosen);
    best_set = chosen;
  }

  void search(VertexSet chosen, VertexSet dominated, VertexSet forbidden, int size) {
    budget.tick();
    if (dominated == full) {
      if (size < best) {
        best = size;
        best_set = chosen;
      }
      return;
    }
    int undominated = set_size(full & ~dominated);
    int max_gain = 0;
    for (int u = 0; u < g.order(); ++u) {
      if (forbidden & vertex_bit(u)) continue;
      max_gain = std::max(max_gain, set_size(coverage(u) & ~dominated));
    }
    if (max_gain == 0) return;
    if (size + (undominated + max_gain - 1) / max_gain >= best) return;
    int v = first_vertex(full & ~dominated);
    VertexSet candidates = (total ? g.adjacency(v) : g.closed_adjacency(v)) & ~forbidden;
    VertexSet tried = 0;
    for_each_vertex(candidates, [&](int u) {
      search(chosen | vertex_bit(u), dominated | coverage(u), forbidden | tried, size + 1);
      tried |= vertex_bit(u);
    });
  }
};

inline InvariantResult domination_number_impl(const Graph& g, bool total, NodeBudget& budget) {
  InvariantResult r;
  if (g.order() == 0) {
    r.vertex_set = std::vector<int>{};
    return r;
  }
  DominationSearch search(g, total, budget);
  search.seed_greedy();
  search.search(0, 0, 0, 0);
  r.value = search.best;
  r.vertex_set = set_to_vector(search.best_set);
  r.nodes_explored = budget.used;
  return r;
}

}  // namespace detail

/// chi(G): iterative deepening on k with DSATUR-ordered backtracking,
/// greedy-clique preassignment as the symmetry anchor.
inline InvariantResult chromatic_number(const Graph& g, SearchLimits limits = {}) {
  detail::NodeBudget budget(limits.max_nodes);
  return detail::chromatic_number_impl(g, budget);
}

/// alpha'(G): maximum matching size, witness included.
inline InvariantResult matching_number(const Graph& g, SearchLimits limits = {}) {
  detail::NodeBudget budget(limits.max_nodes);
  return detail::matching_number_impl(g, budget);
}

/// beta(G): minimum vertex cover size, witness included.
inline InvariantResult vertex_cover_number(const Graph& g, SearchLimits limits = {}) {
  detail::NodeBudget budget(limits.max_nodes);
  return detail::vertex_cover_number_impl(g, budget);
}

/// gamma(G): minimum dominating set size, witness included.
inline InvariantResult domination_number(const Graph& g, SearchLimits limits = {}) {
  detail::NodeBudget budget(limits.max_nodes);
  return detail::domination_number_impl(g, false, budget);
}

/// gamma_t(G): minimum total dominating set; undefined (error) when the
/// graph has an isolated vertex.
inline InvariantResult total_domination_number(const Graph& g, SearchLimits limits = {}) {
  if (has_isolated_vertex(g))
    throw UndefinedInvariant(
        "total domination undefined on a graph with an isolated vertex");
  detail::NodeBudget budget(limits.max_nodes);
  return detail::domination_number_impl(g, true, budget);
}

}  // namespace domcolor
