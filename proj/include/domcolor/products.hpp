#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "domcolor/graph.hpp"

namespace domcolor {

// ---------------------------------------------------------------------------
// Vertex layouts. Every product uses a fixed, documented labelling so that
// witnesses reproduce across runs and implementations.
// ---------------------------------------------------------------------------

// corona G o H: vertices 0..n(G)-1 are G, copy H_i sits in the block
// starting at n(G) + i*n(H), fully joined to G-vertex i.
struct CoronaLabeling {
  int g_order = 0;
  int h_order = 0;

  int copies() const { return g_order; }
  int copy_offset(int i) const { return g_order + i * h_order; }
  int total() const { return g_order * (1 + h_order); }
};

// edge corona G <> H: vertices 0..n(G)-1 are G, copy H_e for the j-th edge
// of the lexicographic EdgeList sits at n(G) + j*n(H), joined to both
// endpoints of that edge.
struct EdgeCoronaLabeling {
  int g_order = 0;
  int h_order = 0;
  EdgeList g_edges;

  int copies() const { return static_cast<int>(g_edges.size()); }
  int copy_offset(int j) const { return g_order + j * h_order; }
  Edge copy_edge(int j) const { return g_edges[static_cast<std::size_t>(j)]; }
  int total() const { return g_order + copies() * h_order; }
};

// hierarchical product: vertex = tuple (x_N,...,x_1), x_1 fastest-varying.
struct HierarchicalLabeling {
  std::vector<int> orders;   // [n(G_N), ..., n(G_1)]
  std::vector<int> strides;  // same order; strides.back() == 1

  int total() const {
    int t = 1;
    for (int n : orders) t *= n;
    return t;
  }

  int index(const std::vector<int>& tuple) const {
    int idx = 0;
    for (std::size_t i = 0; i < orders.size(); ++i)
      idx += tuple[i] * strides[i];
    return idx;
  }

  std::vector<int> tuple(int index) const {
    std::vector<int> t(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
      t[i] = index / strides[i];
      index %= strides[i];
    }
    return t;
  }
};

// bridge-cycle: factor i occupies one block; the factor roots are joined
// in a cycle r_1 - r_2 - ... - r_k - r_1.
struct BridgeCycleLabeling {
  std::vector<int> offsets;
  std::vector<int> roots;  // root index of each factor inside the product
};

namespace detail {

inline void check_product_order(long long total) {
  if (total > kMaxVertices)
    throw std::invalid_argument("product exceeds 64 vertices");
}

}  // namespace detail

inline CoronaLabeling corona_labeling(const Graph& g, const Graph& h) {
  return CoronaLabeling{g.order(), h.order()};
}

inline Graph corona(const Graph& g, const Graph& h) {
  if (g.order() < 1 || h.order() < 1)
    throw std::invalid_argument("corona requires nonempty factors");
  CoronaLabeling lab = corona_labeling(g, h);
  detail::check_product_order(lab.total());
  EdgeList edges = g.edges();
  EdgeList h_edges = h.edges();
  for (int i = 0; i < lab.copies(); ++i) {
    int off = lab.copy_offset(i);
    for (const auto& [u, v] : h_edges) edges.emplace_back(off + u, off + v);
    for (int u = 0; u < h.order(); ++u) edges.emplace_back(i, off + u);
  }
  return Graph::from_edges(lab.total(), edges);
}

inline EdgeCoronaLabeling edge_corona_labeling(const Graph& g, const Graph& h) {
  return EdgeCoronaLabeling{g.order(), h.order(), g.edges()};
}

inline Graph edge_corona(const Graph& g, const Graph& h) {
  if (g.order() < 1 || h.order() < 1)
    throw std::invalid_argument("edge corona requires nonempty factors");
  EdgeCoronaLabeling lab = edge_corona_labeling(g, h);
  detail::check_product_order(lab.total());
  EdgeList edges = g.edges();
  EdgeList h_edges = h.edges();
  for (int j = 0; j < lab.copies(); ++j) {
    int off = lab.copy_offset(j);
    auto [a, b] = lab.copy_edge(j);
    for (const auto& [u, v] : h_edges) edges.emplace_back(off + u, off + v);
    for (int u = 0; u < h.order(); ++u) {
      edges.emplace_back(a, off + u);
      edges.emplace_back(b, off + u);
    }
  }
  return Graph::from_edges(lab.total(), edges);
}

inline HierarchicalLabeling hierarchical_labeling(const std::vector<Graph>& factors) {
  HierarchicalLabeling lab;
  for (const Graph& f : factors) lab.orders.push_back(f.order());
  lab.strides.assign(lab.orders.size(), 1);
  for (int i = static_cast<int>(lab.orders.size()) - 2; i >= 0; --i)
    lab.strides[static_cast<std::size_t>(i)] =
        lab.strides[static_cast<std::size_t>(i + 1)] *
        lab.orders[static_cast<std::size_t>(i + 1)];
  return lab;
}

/// Hierarchical product of factors listed [G_N, ..., G_2, G_1]; G_1 is the
/// fastest-varying coordinate and the product does not commute. An edge may
/// change coordinate i only while every lower coordinate sits at its
/// factor's root, so every factor except the first listed (G_N) must carry
/// a root. The result is rooted at the tuple of roots when G_N has one too.
inline Graph hierarchical(const std::vector<Graph>& factors) {
  std::size_t count = factors.size();
  if (count < 2) throw std::invalid_argument("hierarchical product requires N >= 2");
  for (std::size_t i = 1; i < count; ++i) {
    if (!factors[i].root())
      throw std::invalid_argument(
          "hierarchical product: factor " + std::to_string(i) +
          " (counting from the slowest) requires a root");
    if (factors[i].order() < 1)
      throw std::invalid_argument("hierarchical product requires nonempty factors");
  }
  if (factors[0].order() < 1)
    throw std::invalid_argument("hierarchical product requires nonempty factors");
  HierarchicalLabeling lab = hierarchical_labeling(factors);
  long long total = 1;
  for (int n : lab.orders) total *= n;
  detail::check_product_order(total);

  EdgeList edges;
  int n = static_cast<int>(total);
  for (int idx = 0; idx < n; ++idx) {
    std::vector<int> t = lab.tuple(idx);
    // Level i (position i in the list) may move only when all coordinates
    // below it (positions i+1..N-1) sit at their roots.
    bool below_at_root = true;
    for (int level = static_cast<int>(count) - 1; level >= 0; --level) {
      const Graph& f = factors[static_cast<std::size_t>(level)];
      if (below_at_root) {
        int x = t[static_cast<std::size_t>(level)];
        VertexSet higher = f.adjacency(x) & ~all_vertices(x + 1);
        for_each_vertex(higher, [&](int y) {
          edges.emplace_back(idx, idx + (y - x) * lab.strides[static_cast<std::size_t>(level)]);
        });
      }
      if (level > 0 &&
          t[static_cast<std::size_t>(level)] != *factors[static_cast<std::size_t>(level)].root())
        below_at_root = false;
      if (!below_at_root) break;
    }
  }
  std::optional<int> root;
  if (factors[0].root()) {
    std::vector<int> roots;
    for (const Graph& f : factors) roots.push_back(*f.root());
    root = lab.index(roots);
  }
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n, edges, root);
}

inline BridgeCycleLabeling bridge_cycle_labeling(const std::vector<Graph>& factors) {
  BridgeCycleLabeling lab;
  int off = 0;
  for (const Graph& f : factors) {
    lab.offsets.push_back(off);
    lab.roots.push_back(off + *f.root());
    off += f.order();
  }
  return lab;
}

/// Disjoint union of rooted factors G_1..G_k plus the k cycle edges
/// r_1-r_2, ..., r_{k-1}-r_k, r_k-r_1.
inline Graph bridge_cycle(const std::vector<Graph>& factors) {
  if (factors.size() < 3)
    throw std::invalid_argument("bridge-cycle requires at least 3 factors");
  long long total = 0;
  for (const Graph& f : factors) {
    if (!f.root())
      throw std::invalid_argument("bridge-cycle requires every factor to carry a root");
    total += f.order();
  }
  detail::check_product_order(total);
  BridgeCycleLabeling lab = bridge_cycle_labeling(factors);
  EdgeList edges;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    int off = lab.offsets[i];
    for (const auto& [u, v] : factors[i].edges()) edges.emplace_back(off + u, off + v);
  }
  int k = static_cast<int>(factors.size());
  for (int i = 0; i < k; ++i) {
    int a = lab.roots[static_cast<std::size_t>(i)];
    int b = lab.roots[static_cast<std::size_t>((i + 1) % k)];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(static_cast<int>(total), edges);
}

}  // namespace domcolor
