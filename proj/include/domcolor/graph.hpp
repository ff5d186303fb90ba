#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domcolor/errors.hpp"

namespace domcolor {

inline constexpr int kMaxVertices = 64;

// Vertex subsets are 64-bit masks, bit v = vertex v.
using VertexSet = std::uint64_t;

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

inline constexpr VertexSet all_vertices(int n) {
  return n == 0 ? VertexSet{0} : (~VertexSet{0} >> (kMaxVertices - n));
}

inline int set_size(VertexSet s) { return __builtin_popcountll(s); }

// Smallest vertex in a nonempty set.
inline int first_vertex(VertexSet s) { return __builtin_ctzll(s); }

template <typename F>
inline void for_each_vertex(VertexSet s, F&& f) {
  while (s) {
    int v = first_vertex(s);
    s &= s - 1;
    f(v);
  }
}

inline std::vector<int> set_to_vector(VertexSet s) {
  std::vector<int> out;
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

// Edges are normalized pairs u < v; an EdgeList is sorted lexicographically
// and deduplicated. Product constructions rely on this canonical order.
using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;

/// Immutable simple undirected graph on vertices 0..n-1, n <= 64.
/// Adjacency is one 64-bit neighbour mask per vertex; the optional root
/// marks the distinguished vertex used by rooted constructions.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from endpoint pairs (any order). Rejects self-loops,
  // duplicate edges and out-of-range endpoints.
  static Graph from_edges(int n, const EdgeList& edges,
                          std::optional<int> root = std::nullopt) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("vertex count must be between 0 and 64");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges) g.add_edge_checked(u, v);
    if (root) {
      if (*root < 0 || *root >= n)
        throw std::invalid_argument("root index out of range");
      g.root_ = root;
    }
    return g;
  }

  int order() const { return n_; }
  int size() const { return m_; }

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
  VertexSet adjacency(int v) const { return adj_[v]; }
  VertexSet closed_adjacency(int v) const { return adj_[v] | vertex_bit(v); }
  int degree(int v) const { return set_size(adj_[v]); }

  std::optional<int> root() const { return root_; }

  Graph with_root(int r) const {
    if (r < 0 || r >= n_) throw std::invalid_argument("root index out of range");
    Graph g = *this;
    g.root_ = r;
    return g;
  }

  Graph without_root() const {
    Graph g = *this;
    g.root_.reset();
    return g;
  }

  EdgeList edges() const {
    EdgeList out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
      VertexSet higher = adj_[u] & ~(all_vertices(u + 1));
      for_each_vertex(higher, [&](int v) { out.emplace_back(u, v); });
    }
    return out;
  }

  bool operator==(const Graph& other) const = default;

 private:
  void add_edge_checked(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop not allowed");
    if (adjacent(u, v)) throw std::invalid_argument("duplicate edge");
    adj_[u] |= vertex_bit(v);
    adj_[v] |= vertex_bit(u);
    ++m_;
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
  std::optional<int> root_;
};

// ---------------------------------------------------------------------------
// PRNG. splitmix64: the one documented generator used for every random
// family, so other implementations can reproduce families bit for bit.
// next(): state += 0x9e3779b97f4a7c15; z = state;
//         z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9;
//         z = (z ^ (z >> 27)) * 0x94d049bb133111eb;
//         return z ^ (z >> 31);
// next_double(): (next() >> 11) * 2^-53, uniform in [0,1).
// ---------------------------------------------------------------------------
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// ---------------------------------------------------------------------------
// Deterministic generators. Path/cycle label vertices in natural order,
// the star center is vertex 0.
// ---------------------------------------------------------------------------

inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path requires n >= 1");
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph::from_edges(n, e);
}

inline Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph requires n >= 1");
  EdgeList e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

inline Graph star_graph(int n) {
  if (n < 1) throw std::invalid_argument("star requires n >= 1");
  EdgeList e;
  for (int v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph::from_edges(n, e);
}

// G(n,p): pairs (u,v), u < v, visited in lexicographic order; each pair
// draws one next_double() and the edge is present iff the draw is < p.
inline Graph gnp_random_graph(int n, double p, std::uint64_t seed) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("gnp requires 1 <= n <= 64");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp requires p in [0,1]");
  SplitMix64 rng(seed);
  EdgeList e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_double() < p) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

// Uniform random labelled tree via a Pruefer sequence of n-2 draws
// (next() % n each), decoded smallest-leaf-first.
inline Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("tree requires 1 <= n <= 64");
  if (n == 1) return Graph::from_edges(1, {});
  if (n == 2) return Graph::from_edges(2, {{0, 1}});
  SplitMix64 rng(seed);
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  for (auto& s : seq) s = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int s : seq) ++deg[s];
  EdgeList e;
  for (int s : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (deg[leaf] == 1) {
        e.emplace_back(std::min(leaf, s), std::max(leaf, s));
        --deg[leaf];
        --deg[s];
        break;
      }
    }
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) (a < 0 ? a : b) = v;
  e.emplace_back(a, b);
  std::sort(e.begin(), e.end());
  return Graph::from_edges(n, e);
}

struct GenerateParams {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

inline Graph generate(const std::string& kind, const GenerateParams& params) {
  if (kind == "path") return path_graph(params.n);
  if (kind == "cycle") return cycle_graph(params.n);
  if (kind == "complete") return complete_graph(params.n);
  if (kind == "star") return star_graph(params.n);
  if (kind == "random_gnp" || kind == "random-gnp")
    return gnp_random_graph(params.n, params.p, params.seed);
  if (kind == "random_tree" || kind == "random-tree")
    return random_tree(params.n, params.seed);
  throw std::invalid_argument("unknown generator kind: " + kind);
}

// ---------------------------------------------------------------------------
// Structural predicates used as theorem preconditions.
// ---------------------------------------------------------------------------

struct StructuralPredicates {
  bool connected = true;
  bool bipartite = true;
  bool triangle_free = true;
  bool has_isolated_vertex = false;
  std::vector<int> pendant_vertices;  // degree-1 vertices, ascending
};

inline bool is_connected(const Graph& g) {
  int n = g.order();
  if (n <= 1) return true;
  VertexSet reached = vertex_bit(0);
  for (;;) {
    VertexSet grow = reached;
    for_each_vertex(reached, [&](int v) { grow |= g.adjacency(v); });
    if (grow == reached) break;
    reached = grow;
  }
  return reached == all_vertices(n);
}

inline bool is_bipartite(const Graph& g) {
  int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> queue{s};
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      VertexSet nb = g.adjacency(u);
      bool ok = true;
      for_each_vertex(nb, [&](int v) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

inline bool is_triangle_free(const Graph& g) {
  for (const auto& [u, v] : g.edges())
    if (g.adjacency(u) & g.adjacency(v)) return false;
  return true;
}

inline StructuralPredicates predicates(const Graph& g) {
  StructuralPredicates out;
  out.connected = is_connected(g);
  out.bipartite = is_bipartite(g);
  out.triangle_free = is_triangle_free(g);
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    if (d == 0) out.has_isolated_vertex = true;
    if (d == 1) out.pendant_vertices.push_back(v);
  }
  return out;
}

inline bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

// Induced subgraph on the given vertex set, relabelled 0.. preserving
// relative order. The root survives when kept, and is cleared otherwise.
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= all_vertices(g.order());
  std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for_each_vertex(keep, [&](int v) { relabel[static_cast<std::size_t>(v)] = next++; });
  EdgeList e;
  for (const auto& [a, b] : g.edges()) {
    int ra = relabel[static_cast<std::size_t>(a)];
    int rb = relabel[static_cast<std::size_t>(b)];
    if (ra >= 0 && rb >= 0) e.emplace_back(ra, rb);
  }
  std::optional<int> root;
  if (g.root() && relabel[static_cast<std::size_t>(*g.root())] >= 0)
    root = relabel[static_cast<std::size_t>(*g.root())];
  return Graph::from_edges(next, e, root);
}

// Induced subgraph on V minus v, relabelled 0..n-2 preserving relative
// order. The root survives relabelling and is cleared when root == v.
inline Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
  EdgeList e;
  for (const auto& [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    e.emplace_back(a - (a > v ? 1 : 0), b - (b > v ? 1 : 0));
  }
  std::optional<int> root;
  if (g.root() && *g.root() != v) root = *g.root() - (*g.root() > v ? 1 : 0);
  return Graph::from_edges(g.order() - 1, e, root);
}

}  // namespace domcolor
