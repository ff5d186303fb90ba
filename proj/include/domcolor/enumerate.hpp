#pragma once

#include <unordered_map>
#include <vector>

#include "domcolor/graph.hpp"
#include "domcolor/isomorphism.hpp"

namespace domcolor {

namespace detail {

// Collects one representative per isomorphism class. Candidates are
// pre-bucketed by fingerprint, then confirmed with the exact test, so
// insertion order (and thus the output order) is deterministic.
class IsoClassSet {
 public:
  explicit IsoClassSet(bool respect_roots = false) : respect_roots_(respect_roots) {}

  bool insert(const Graph& g) {
    std::uint64_t fp = respect_roots_ ? rooted_iso_fingerprint(g) : iso_fingerprint(g);
    auto& bucket = buckets_[fp];
    for (int idx : bucket)
      if (are_isomorphic(items_[static_cast<std::size_t>(idx)], g, respect_roots_))
        return false;
    bucket.push_back(static_cast<int>(items_.size()));
    items_.push_back(g);
    return true;
  }

  const std::vector<Graph>& items() const { return items_; }

 private:
  bool respect_roots_;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets_;
  std::vector<Graph> items_;
};

// Extends parents by one vertex whose neighbourhood runs over the given
// subset masks; every n-vertex member of a vertex-deletion-closed family
// arises this way from an (n-1)-vertex member.
template <typename SubsetFilter>
inline std::vector<Graph> augment(const std::vector<Graph>& parents, SubsetFilter&& keep) {
  IsoClassSet out;
  for (const Graph& parent : parents) {
    int n = parent.order();
    VertexSet limit = all_vertices(n);
    for (VertexSet nb = 0;; ++nb) {
      nb &= limit;
      if (keep(parent, nb)) {
        EdgeList edges = parent.edges();
        for_each_vertex(nb, [&](int u) { edges.emplace_back(u, n); });
        out.insert(Graph::from_edges(n + 1, edges));
      }
      if (nb == limit) break;
    }
  }
  return out.items();
}

}  // namespace detail

/// All graphs with 1 <= n <= max_n, one representative per isomorphism class.
inline std::vector<Graph> all_graphs(int max_n) {
  std::vector<Graph> out, level{Graph::from_edges(1, {})};
  for (int n = 1; n <= max_n && !level.empty(); ++n) {
    out.insert(out.end(), level.begin(), level.end());
    if (n < max_n)
      level = detail::augment(level, [](const Graph&, VertexSet) { return true; });
  }
  return out;
}

/// All connected graphs with 1 <= n <= max_n, up to isomorphism. Every
/// connected graph has a non-cut vertex, so attaching a vertex with a
/// nonempty neighbourhood to smaller connected graphs reaches them all.
inline std::vector<Graph> all_connected_graphs(int max_n) {
  std::vector<Graph> out, level{Graph::from_edges(1, {})};
  for (int n = 1; n <= max_n && !level.empty(); ++n) {
    out.insert(out.end(), level.begin(), level.end());
    if (n < max_n)
      level = detail::augment(level, [](const Graph&, VertexSet nb) { return nb != 0; });
  }
  return out;
}

/// All trees with 1 <= n <= max_n, up to isomorphism (leaf augmentation).
inline std::vector<Graph> all_trees(int max_n) {
  std::vector<Graph> out, level{Graph::from_edges(1, {})};
  for (int n = 1; n <= max_n && !level.empty(); ++n) {
    out.insert(out.end(), level.begin(), level.end());
    if (n < max_n)
      level = detail::augment(level,
                              [](const Graph&, VertexSet nb) { return set_size(nb) == 1; });
  }
  return out;
}

/// All triangle-free graphs with 1 <= n <= max_n, up to isomorphism
/// (isolated vertices allowed; filter afterwards if needed). The new
/// vertex's neighbourhood must be an independent set of the parent.
inline std::vector<Graph> all_triangle_free_graphs(int max_n) {
  auto independent = [](const Graph& g, VertexSet nb) {
    bool ok = true;
    for_each_vertex(nb, [&](int u) {
      if (g.adjacency(u) & nb) ok = false;
    });
    return ok;
  };
  std::vector<Graph> out, level{Graph::from_edges(1, {})};
  for (int n = 1; n <= max_n && !level.empty(); ++n) {
    out.insert(out.end(), level.begin(), level.end());
    if (n < max_n) level = detail::augment(level, independent);
  }
  return out;
}

/// One representative per root orbit: the same graph rooted at vertices
/// that are not equivalent under a root-preserving isomorphism.
inline std::vector<Graph> rooted_variants(const Graph& g) {
  detail::IsoClassSet set(/*respect_roots=*/true);
  std::vector<Graph> out;
  for (int r = 0; r < g.order(); ++r) {
    Graph rooted = g.with_root(r);
    if (set.insert(rooted)) out.push_back(rooted);
  }
  return out;
}

}  // namespace domcolor
