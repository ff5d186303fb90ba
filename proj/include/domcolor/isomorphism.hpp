#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "domcolor/graph.hpp"

namespace domcolor {

namespace detail {

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Two rounds of degree refinement per vertex; order-invariant combination.
inline std::vector<std::uint64_t> refinement_labels(const Graph& g) {
  int n = g.order();
  std::vector<std::uint64_t> label(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) label[static_cast<std::size_t>(v)] = static_cast<std::uint64_t>(g.degree(v));
  for (int round = 0; round < 2; ++round) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<std::uint64_t> nb;
      for_each_vertex(g.adjacency(v), [&](int u) { nb.push_back(label[static_cast<std::size_t>(u)]); });
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = hash_combine(0x2545f4914f6cdd1dULL, label[static_cast<std::size_t>(v)]);
      for (std::uint64_t x : nb) h = hash_combine(h, x);
      next[static_cast<std::size_t>(v)] = h;
    }
    label.swap(next);
  }
  return label;
}

}  // namespace detail

// Isomorphism-invariant 64-bit fingerprint (collision-tolerant: used only
// to pre-bucket candidates before the exact check).
inline std::uint64_t iso_fingerprint(const Graph& g) {
  std::vector<std::uint64_t> labels = detail::refinement_labels(g);
  std::sort(labels.begin(), labels.end());
  std::uint64_t h = detail::hash_combine(static_cast<std::uint64_t>(g.order()),
                                         static_cast<std::uint64_t>(g.size()));
  for (std::uint64_t x : labels) h = detail::hash_combine(h, x);
  return h;
}

// Fingerprint that additionally pins the root (distance profile from it).
inline std::uint64_t rooted_iso_fingerprint(const Graph& g) {
  std::uint64_t h = iso_fingerprint(g);
  if (!g.root()) return h;
  int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<int> queue{*g.root()};
  dist[static_cast<std::size_t>(*g.root())] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int u = queue[i];
    for_each_vertex(g.adjacency(u), [&](int v) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    });
  }
  std::sort(dist.begin(), dist.end());
  for (int d : dist) h = detail::hash_combine(h, static_cast<std::uint64_t>(d + 2));
  return detail::hash_combine(h, static_cast<std::uint64_t>(g.degree(*g.root())));
}

namespace detail {

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  const std::vector<std::uint64_t>& la;
  const std::vector<std::uint64_t>& lb;
  std::vector<int> order;    // a-vertices in assignment order
  std::vector<int> map_ab;   // a -> b or -1
  VertexSet used_b = 0;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    int v = order[depth];
    for (int w = 0; w < b.order(); ++w) {
      if (used_b & vertex_bit(w)) continue;
      if (la[static_cast<std::size_t>(v)] != lb[static_cast<std::size_t>(w)]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        int p = order[i];
        if (a.adjacent(v, p) != b.adjacent(w, map_ab[static_cast<std::size_t>(p)])) ok = false;
      }
      if (!ok) continue;
      map_ab[static_cast<std::size_t>(v)] = w;
      used_b |= vertex_bit(w);
      if (extend(depth + 1)) return true;
      used_b &= ~vertex_bit(w);
      map_ab[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }
};

}  // namespace detail

/// Exact isomorphism test by backtracking over refinement-compatible
/// assignments. With respect_roots, the roots must map to each other.
inline bool are_isomorphic(const Graph& a, const Graph& b, bool respect_roots = false) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (respect_roots && a.root().has_value() != b.root().has_value()) return false;
  int n = a.order();
  if (n == 0) return true;

  std::vector<std::uint64_t> la = detail::refinement_labels(a);
  std::vector<std::uint64_t> lb = detail::refinement_labels(b);
  {
    std::vector<std::uint64_t> sa = la, sb = lb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  if (respect_roots && a.root() &&
      la[static_cast<std::size_t>(*a.root())] != lb[static_cast<std::size_t>(*b.root())])
    return false;

  // Assign rare labels first, then connect outward from assigned vertices.
  std::vector<int> by_rarity(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) by_rarity[static_cast<std::size_t>(v)] = v;
  std::vector<int> freq(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (la[static_cast<std::size_t>(v)] == la[static_cast<std::size_t>(u)])
        ++freq[static_cast<std::size_t>(v)];
  std::sort(by_rarity.begin(), by_rarity.end(), [&](int x, int y) {
    if (freq[static_cast<std::size_t>(x)] != freq[static_cast<std::size_t>(y)])
      return freq[static_cast<std::size_t>(x)] < freq[static_cast<std::size_t>(y)];
    if (a.degree(x) != a.degree(y)) return a.degree(x) > a.degree(y);
    return x < y;
  });

  std::vector<int> order;
  VertexSet placed = 0;
  if (respect_roots && a.root()) {
    order.push_back(*a.root());
    placed |= vertex_bit(*a.root());
  }
  // Prefer vertices adjacent to the already-ordered prefix.
  while (static_cast<int>(order.size()) < n) {
    int pick = -1;
    for (int v : by_rarity) {
      if (placed & vertex_bit(v)) continue;
      bool touches = order.empty();
      for (int u : order)
        if (a.adjacent(v, u)) {
          touches = true;
          break;
        }
      if (touches) {
        pick = v;
        break;
      }
    }
    if (pick < 0) {
      for (int v : by_rarity)
        if (!(placed & vertex_bit(v))) {
          pick = v;
          break;
        }
    }
    order.push_back(pick);
    placed |= vertex_bit(pick);
  }

  detail::IsoSearch search{a, b, la, lb, order,
                           std::vector<int>(static_cast<std::size_t>(n), -1), 0};
  if (respect_roots && a.root()) {
    int ra = *a.root(), rb = *b.root();
    search.map_ab[static_cast<std::size_t>(ra)] = rb;
    search.used_b |= vertex_bit(rb);
    return search.extend(1);
  }
  return search.extend(0);
}

}  // namespace domcolor
