#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "coxlen/errors.hpp"

namespace coxlen {

using Gen = std::uint8_t;
using Word = std::vector<Gen>;

/// Label value encoding m_ij = infinity, matching the JSON convention.
inline constexpr unsigned kInfinity = 0;

/// Largest supported rank. Keeps generator indices in one byte and edge
/// vectors comfortably small; far above anything this library is used for.
inline constexpr int kMaxRank = 64;

/// Symmetric matrix of Coxeter labels m_ij, the single source of truth for a
/// Coxeter system. Diagonal entries are 1; off-diagonal entries are 0
/// (infinity) or >= 2. Immutable after construction.
class CoxeterMatrix {
public:
  CoxeterMatrix(std::vector<std::vector<long long>> entries, std::vector<std::string> names) {
    const std::size_t n = names.size();
    if (n == 0)
      throw ValidationError("a Coxeter system needs at least one generator");
    if (n > static_cast<std::size_t>(kMaxRank))
      throw ValidationError("rank exceeds the supported maximum of 64");
    if (entries.size() != n)
      throw ValidationError("matrix size does not match the number of generators");
    for (std::size_t i = 0; i < n; ++i) {
      if (names[i].empty())
        throw ValidationError("generator names must be nonempty");
      if (names[i].find_first_of(" \t\n\r") != std::string::npos)
        throw ValidationError("generator names must not contain whitespace");
      for (std::size_t j = i + 1; j < n; ++j)
        if (names[i] == names[j])
          throw ValidationError("duplicate generator name: " + names[i]);
    }
    rank_ = static_cast<int>(n);
    labels_.assign(n * n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (entries[i].size() != n)
        throw ValidationError("matrix is not square");
      for (std::size_t j = 0; j < n; ++j) {
        long long v = entries[i][j];
        if (i == j) {
          if (v != 1)
            throw ValidationError("diagonal entries must be 1");
        } else {
          if (v != entries[j][i])
            throw ValidationError("matrix must be symmetric");
          if (v < 0 || v == 1 || v > 1'000'000)
            throw ValidationError("off-diagonal labels must be 0 (infinity) or an integer >= 2");
        }
        labels_[i * n + j] = static_cast<unsigned>(v);
      }
    }
    names_ = std::move(names);
  }

  int rank() const { return rank_; }

  /// Label m_ij with 0 meaning infinity.
  unsigned label(int i, int j) const { return labels_[static_cast<std::size_t>(i) * rank_ + j]; }

  bool finite_label(int i, int j) const { return label(i, j) != kInfinity; }
  bool commutes(int i, int j) const { return label(i, j) == 2; }

  /// Coxeter-graph edge: the generators do not commute.
  bool is_edge(int i, int j) const { return i != j && label(i, j) != 2; }

  /// All off-diagonal labels in {2, infinity}.
  bool is_right_angled() const {
    for (int i = 0; i < rank_; ++i)
      for (int j = i + 1; j < rank_; ++j)
        if (label(i, j) != 2 && label(i, j) != kInfinity)
          return false;
    return true;
  }

  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }

  int index_of(const std::string& name) const {
    for (int i = 0; i < rank_; ++i)
      if (names_[static_cast<std::size_t>(i)] == name)
        return i;
    return -1;
  }

  /// Submatrix spanned by the given vertices, which become generators
  /// 0..k-1 of the restriction in the given order.
  CoxeterMatrix restrict(const std::vector<int>& vertices) const {
    std::vector<std::vector<long long>> sub(vertices.size(), std::vector<long long>(vertices.size()));
    std::vector<std::string> sub_names;
    sub_names.reserve(vertices.size());
    for (std::size_t a = 0; a < vertices.size(); ++a) {
      sub_names.push_back(name(vertices[a]));
      for (std::size_t b = 0; b < vertices.size(); ++b)
        sub[a][b] = label(vertices[a], vertices[b]);
    }
    return CoxeterMatrix(std::move(sub), std::move(sub_names));
  }

  bool operator==(const CoxeterMatrix& o) const {
    return rank_ == o.rank_ && labels_ == o.labels_ && names_ == o.names_;
  }

  // Convenience builders, used heavily by tests and the verification suites.

  /// Path diagram: generator names g1..gn, edge i-(i+1) labeled labels[i].
  static CoxeterMatrix path(const std::vector<long long>& labels) {
    const int n = static_cast<int>(labels.size()) + 1;
    return from_edges(n, make_path_edges(labels));
  }

  /// All pairwise labels infinite (universal Coxeter group).
  static CoxeterMatrix universal(int n) {
    std::vector<std::tuple<int, int, long long>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        edges.emplace_back(i, j, kInfinity);
    return from_edges(n, edges);
  }

  /// Right-angled system whose Coxeter graph is the given edge list.
  static CoxeterMatrix right_angled(int n, const std::vector<std::pair<int, int>>& graph_edges) {
    std::vector<std::tuple<int, int, long long>> edges;
    for (auto [u, v] : graph_edges)
      edges.emplace_back(u, v, kInfinity);
    return from_edges(n, edges);
  }

  /// Rank-2 system with m_st = m (0 for the infinite dihedral group).
  static CoxeterMatrix dihedral(long long m) { return from_edges(2, {{0, 1, m}}); }

  /// n generators, default label 2, with the listed labeled edges.
  static CoxeterMatrix from_edges(int n, const std::vector<std::tuple<int, int, long long>>& edges) {
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 2));
    for (int i = 0; i < n; ++i)
      m[i][i] = 1;
    for (auto& [u, v, lab] : edges) {
      m[u][v] = lab;
      m[v][u] = lab;
    }
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i)
      names.push_back("s" + std::to_string(i + 1));
    return CoxeterMatrix(std::move(m), std::move(names));
  }

private:
  static std::vector<std::tuple<int, int, long long>>
  make_path_edges(const std::vector<long long>& labels) {
    std::vector<std::tuple<int, int, long long>> edges;
    for (std::size_t i = 0; i < labels.size(); ++i)
      edges.emplace_back(static_cast<int>(i), static_cast<int>(i) + 1, labels[i]);
    return edges;
  }

  int rank_ = 0;
  std::vector<unsigned> labels_;
  std::vector<std::string> names_;
};

/// Replace every label other than 1 and 2 by infinity. Fixed point on
/// right-angled input; the Coxeter graph's edge set is unchanged.
inline CoxeterMatrix right_angled_cover(const CoxeterMatrix& m) {
  const int n = m.rank();
  std::vector<std::vector<long long>> entries(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      unsigned lab = m.label(i, j);
      entries[i][j] = (lab == 1 || lab == 2) ? lab : static_cast<long long>(kInfinity);
    }
  return CoxeterMatrix(std::move(entries), m.names());
}

/// The Coxeter graph: vertices are generators, edges the non-commuting pairs.
/// Edges are stored with u < v in sorted order; that order is the fixed edge
/// ordering used by orientation machinery everywhere.
struct CoxeterGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<unsigned> labels; // parallel to edges, 0 = infinity
  std::vector<std::vector<int>> adjacency;

  static CoxeterGraph of(const CoxeterMatrix& m) {
    CoxeterGraph g;
    g.n = m.rank();
    g.adjacency.assign(g.n, {});
    for (int i = 0; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j)
        if (m.is_edge(i, j)) {
          g.edges.emplace_back(i, j);
          g.labels.push_back(m.label(i, j));
          g.adjacency[i].push_back(j);
          g.adjacency[j].push_back(i);
        }
    return g;
  }

  int edge_index(int u, int v) const {
    if (u > v)
      std::swap(u, v);
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (edges[k] == std::make_pair(u, v))
        return static_cast<int>(k);
    return -1;
  }

  int degree(int v) const { return static_cast<int>(adjacency[v].size()); }

  bool connected() const {
    if (n == 0)
      return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adjacency[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
    }
    return count == n;
  }

  /// Connected and every vertex has degree 2 (so a single cycle on >= 3 vertices).
  bool is_single_cycle() const {
    if (n < 3 || !connected())
      return false;
    for (int v = 0; v < n; ++v)
      if (degree(v) != 2)
        return false;
    return true;
  }
};

/// Connected components as sorted vertex lists, ordered by least vertex.
inline std::vector<std::vector<int>> connected_components(const CoxeterGraph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.n, 0);
  for (int root = 0; root < g.n; ++root) {
    if (seen[root])
      continue;
    std::vector<int> comp{root};
    seen[root] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.adjacency[v])
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

struct Bipartition {
  std::vector<int> left, right;
};

/// Result of the 2-coloring test. Either a bipartition (components colored
/// independently, BFS from the least vertex, which lands in `left`) or an
/// odd cycle certifying that none exists.
struct BipartitenessResult {
  std::optional<Bipartition> parts;
  std::vector<int> odd_cycle; // closed walk v0..vk with v0 adjacent to vk, odd length

  bool bipartite() const { return parts.has_value(); }
};

inline BipartitenessResult is_bipartite(const CoxeterGraph& g) {
  std::vector<int> color(g.n, -1);
  std::vector<int> parent(g.n, -1);
  for (int root = 0; root < g.n; ++root) {
    if (color[root] != -1)
      continue;
    color[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.adjacency[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          parent[w] = v;
          q.push(w);
        } else if (color[w] == color[v]) {
          // Odd cycle: paths from v and w to their lowest common ancestor.
          std::vector<int> pv{v}, pw{w};
          auto depth = [&](int x) {
            int d = 0;
            for (int y = x; parent[y] != -1; y = parent[y])
              ++d;
            return d;
          };
          int a = v, b = w, da = depth(v), db = depth(w);
          while (da > db) {
            a = parent[a];
            pv.push_back(a);
            --da;
          }
          while (db > da) {
            b = parent[b];
            pw.push_back(b);
            --db;
          }
          while (a != b) {
            a = parent[a];
            pv.push_back(a);
            b = parent[b];
            pw.push_back(b);
          }
          // pv ends at the LCA; pw's copy of it is dropped.
          pw.pop_back();
          std::vector<int> cycle(pv.rbegin(), pv.rend());
          cycle.insert(cycle.end(), pw.begin(), pw.end());
          BipartitenessResult res;
          res.odd_cycle = std::move(cycle);
          return res;
        }
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < g.n; ++v)
    (color[v] == 0 ? parts.left : parts.right).push_back(v);
  BipartitenessResult res;
  res.parts = std::move(parts);
  return res;
}

/// True iff the connected graph g is a tree. Throws on disconnected input.
inline bool is_tree(const CoxeterGraph& g) {
  if (!g.connected())
    throw DisconnectedInput("is_tree requires a connected graph");
  return g.edges.size() == static_cast<std::size_t>(g.n) - 1;
}

} // namespace coxlen
