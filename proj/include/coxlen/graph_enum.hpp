#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "coxlen/budget.hpp"
#include "coxlen/coxeter_matrix.hpp"
#include "coxlen/errors.hpp"
#include "coxlen/orientations.hpp"

namespace coxlen {

/// A simple graph on vertices 0..n-1, for the exhaustive desk-scale checks.
struct SmallGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges; // u < v, sorted

  CoxeterMatrix as_right_angled_system() const {
    return CoxeterMatrix::right_angled(n, edges);
  }
};

namespace detail {

inline std::vector<std::pair<int, int>> vertex_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      pairs.emplace_back(i, j);
  return pairs;
}

inline bool mask_connected(int n, const std::vector<std::pair<int, int>>& pairs,
                           std::uint32_t mask) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (mask >> k & 1u) {
      adj[static_cast<std::size_t>(pairs[k].first)] |= 1u << pairs[k].second;
      adj[static_cast<std::size_t>(pairs[k].second)] |= 1u << pairs[k].first;
    }
  std::uint32_t seen = 1, frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v)
      if (frontier >> v & 1u)
        next |= adj[static_cast<std::size_t>(v)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << n) - 1u;
}

} // namespace detail

/// All connected simple graphs on exactly n vertices, one representative per
/// isomorphism class: a labeled graph is kept iff its edge bitmask is
/// minimal over all vertex permutations. Transpositions are tried first so
/// non-canonical masks are rejected quickly.
inline std::vector<SmallGraph> connected_graphs_up_to_iso(int n, const Deadline& deadline = {}) {
  if (n < 1 || n > 7)
    throw BudgetExceeded("graph enumeration is capped at 7 vertices");
  auto pairs = detail::vertex_pairs(n);
  const int np = static_cast<int>(pairs.size());
  std::map<std::pair<int, int>, int> pair_index;
  for (int k = 0; k < np; ++k)
    pair_index[pairs[static_cast<std::size_t>(k)]] = k;

  // Precompute, per permutation, where each edge slot goes.
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> remaps;
  std::vector<int> transposition_count;
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<int> remap(static_cast<std::size_t>(np));
    for (int k = 0; k < np; ++k) {
      int a = perm[static_cast<std::size_t>(pairs[static_cast<std::size_t>(k)].first)];
      int b = perm[static_cast<std::size_t>(pairs[static_cast<std::size_t>(k)].second)];
      if (a > b)
        std::swap(a, b);
      remap[static_cast<std::size_t>(k)] = pair_index.at({a, b});
    }
    int moved = 0;
    for (int v = 0; v < n; ++v)
      if (perm[static_cast<std::size_t>(v)] != v)
        ++moved;
    remaps.push_back(std::move(remap));
    transposition_count.push_back(moved);
  }
  std::vector<std::size_t> order(remaps.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return transposition_count[a] < transposition_count[b];
  });

  std::vector<SmallGraph> out;
  for (std::uint32_t mask = 0; mask < (1u << np); ++mask) {
    deadline.check("graph enumeration");
    if (!detail::mask_connected(n, pairs, mask))
      continue;
    bool canonical = true;
    for (std::size_t oi : order) {
      const auto& remap = remaps[oi];
      std::uint32_t image = 0;
      for (int k = 0; k < np; ++k)
        if (mask >> k & 1u)
          image |= 1u << remap[static_cast<std::size_t>(k)];
      if (image < mask) {
        canonical = false;
        break;
      }
    }
    if (!canonical)
      continue;
    SmallGraph g;
    g.n = n;
    for (int k = 0; k < np; ++k)
      if (mask >> k & 1u)
        g.edges.push_back(pairs[static_cast<std::size_t>(k)]);
    out.push_back(std::move(g));
  }
  return out;
}

/// All acyclic orientations of a graph, generated as the orientations
/// induced by the n! vertex orders and deduplicated.
inline std::set<AcyclicOrientation> all_acyclic_orientations(const CoxeterGraph& g) {
  std::set<AcyclicOrientation> out;
  std::vector<int> order(static_cast<std::size_t>(g.n));
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<int> pos(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i)
      pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    AcyclicOrientation o;
    o.direction.reserve(g.edges.size());
    for (auto [u, v] : g.edges)
      o.direction.push_back(
          pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(v)] ? 0 : 1);
    out.insert(std::move(o));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

/// Partition of the acyclic orientations into flip classes; returns a class
/// id per orientation.
inline std::map<AcyclicOrientation, int>
flip_class_partition(const CoxeterGraph& g, const std::set<AcyclicOrientation>& orientations,
                     const Deadline& deadline = {}) {
  std::map<AcyclicOrientation, int> cls;
  int next_id = 0;
  for (const auto& o : orientations) {
    if (cls.count(o))
      continue;
    FlipClass fc = flip_class(g, o, deadline);
    for (const auto& member : fc.members)
      cls[member] = next_id;
    ++next_id;
  }
  return cls;
}

struct GraphCheckRecord {
  SmallGraph graph;
  bool bipartite = false;
  bool tree = false;
  std::size_t acyclic_orientations = 0;
  int flip_classes = 0;
  bool exists_self_inverse_class = false; // some orientation flip-equivalent to its reversal
  bool all_self_inverse = false;          // every orientation flip-equivalent to its reversal
  bool ok = false;                        // exists <=> bipartite and all <=> tree
};

struct GraphCheckReport {
  int n_max = 0;
  std::vector<GraphCheckRecord> records;
  int graphs_checked = 0;
  bool passed = false;
};

/// For every connected simple graph on <= n_max vertices, read as a
/// right-angled Coxeter graph: checks that some Coxeter element is
/// conjugate to its inverse iff the graph is bipartite, and that all are
/// iff the graph is a tree, with conjugacy decided through flip classes.
inline GraphCheckReport exhaustive_graph_check(int n_max, const Deadline& deadline = {}) {
  if (n_max < 1 || n_max > 7)
    throw BudgetExceeded("exhaustive_graph_check is capped at 7 vertices");
  GraphCheckReport report;
  report.n_max = n_max;
  report.passed = true;
  for (int n = 1; n <= n_max; ++n)
    for (SmallGraph& sg : connected_graphs_up_to_iso(n, deadline)) {
      CoxeterGraph g = CoxeterGraph::of(sg.as_right_angled_system());
      auto orientations = all_acyclic_orientations(g);
      auto cls = flip_class_partition(g, orientations, deadline);
      int classes = 0;
      for (auto& [o, id] : cls)
        classes = std::max(classes, id + 1);
      bool exists = false, all = true;
      for (const auto& o : orientations) {
        bool self = cls.at(o) == cls.at(reverse(o));
        exists = exists || self;
        all = all && self;
      }
      GraphCheckRecord rec;
      rec.bipartite = is_bipartite(g).bipartite();
      rec.tree = is_tree(g);
      rec.acyclic_orientations = orientations.size();
      rec.flip_classes = classes;
      rec.exists_self_inverse_class = exists;
      rec.all_self_inverse = all;
      rec.ok = (exists == rec.bipartite) && (all == rec.tree);
      rec.graph = std::move(sg);
      report.passed = report.passed && rec.ok;
      ++report.graphs_checked;
      report.records.push_back(std::move(rec));
    }
  return report;
}

} // namespace coxlen
