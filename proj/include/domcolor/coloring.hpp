#pragma once

#include <vector>

#include "domcolor/graph.hpp"

namespace domcolor {

/// A vertex coloring with colors 0..k-1, every color used at least once.
/// classes() derives the partition C(i) = { v : colors[v] = i }.
struct Coloring {
  std::vector<int> colors;
  int k = 0;

  std::vector<VertexSet> classes() const {
    std::vector<VertexSet> cls(static_cast<std::size_t>(k), 0);
    for (std::size_t v = 0; v < colors.size(); ++v)
      cls[static_cast<std::size_t>(colors[v])] |= vertex_bit(static_cast<int>(v));
    return cls;
  }
};

// Validates that colors form a contiguous range 0..k-1 with every index used.
inline Coloring make_coloring(std::vector<int> colors) {
  int k = 0;
  for (int c : colors) {
    if (c < 0) throw std::invalid_argument("negative color index");
    k = std::max(k, c + 1);
  }
  std::vector<char> used(static_cast<std::size_t>(k), 0);
  for (int c : colors) used[static_cast<std::size_t>(c)] = 1;
  for (char u : used)
    if (!u) throw std::invalid_argument("color indices must use 0..k-1 without gaps");
  return Coloring{std::move(colors), k};
}

namespace detail {

inline void require_total(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.order())
    throw std::invalid_argument("coloring size does not match graph order");
}

}  // namespace detail

inline bool is_proper(const Graph& g, const Coloring& c) {
  detail::require_total(g, c);
  for (const auto& [u, v] : g.edges())
    if (c.colors[static_cast<std::size_t>(u)] == c.colors[static_cast<std::size_t>(v)])
      return false;
  return true;
}

// Proper, and every vertex either forms a singleton class or is adjacent
// to every vertex of some (nonempty) class.
inline bool is_dominator_coloring(const Graph& g, const Coloring& c) {
  detail::require_total(g, c);
  if (!is_proper(g, c)) return false;
  auto cls = c.classes();
  for (int v = 0; v < g.order(); ++v) {
    if (set_size(cls[static_cast<std::size_t>(c.colors[static_cast<std::size_t>(v)])]) == 1)
      continue;
    bool dominates = false;
    for (const VertexSet& cl : cls) {
      if (cl != 0 && (cl & ~g.adjacency(v)) == 0) {
        dominates = true;
        break;
      }
    }
    if (!dominates) return false;
  }
  return true;
}

// Proper, and every class has a vertex adjacent to all of its members.
// Adjacency is strict: a vertex never dominates via itself.
inline bool is_dominated_coloring(const Graph& g, const Coloring& c) {
  detail::require_total(g, c);
  if (!is_proper(g, c)) return false;
  for (const VertexSet& cl : c.classes()) {
    bool dominated = false;
    for (int u = 0; u < g.order() && !dominated; ++u)
      if ((cl & ~g.adjacency(u)) == 0) dominated = true;
    if (!dominated) return false;
  }
  return true;
}

}  // namespace domcolor
