#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "csfkit/integer.hpp"

namespace csfkit {

/// Simple undirected graph on at most 32 vertices, adjacency as bitmasks.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph complete(int n);
  static Graph edgeless(int n) { return Graph(n); }
  /// Builds from 0-based edge pairs.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return n_; }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
  std::uint32_t neighbours(int v) const { return adj_[v]; }
  int edge_count() const;
  /// 0-based pairs (u < v), sorted.
  std::vector<std::pair<int, int>> edges() const;
  /// No two vertices of the mask are adjacent.
  bool is_stable(std::uint32_t mask) const;

  bool operator==(const Graph&) const = default;

  /// "n=3;1-2,2-3" with 1-based vertices.
  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<std::uint32_t> adj_;
};

/// A unit interval order in successor form. Element i (0-based) precedes j
/// exactly when j >= next(i); next is weakly increasing with next(i) > i.
class Uio {
 public:
  /// Takes the external 1-based successor sequence, e.g. {3,4,4}.
  explicit Uio(const std::vector<int>& successors);

  int size() const { return static_cast<int>(next_.size()); }
  /// 1-based successor sequence as printed in "s:" form.
  std::vector<int> successors() const;
  /// Least 0-based index strictly above i (size() when none).
  int next(int i) const { return next_[static_cast<std::size_t>(i)]; }

  bool precedes(int i, int j) const { return j >= next_[static_cast<std::size_t>(i)]; }
  bool succeeds(int i, int j) const { return precedes(j, i); }
  bool incomparable(int i, int j) const { return !precedes(i, j) && !precedes(j, i); }

  bool operator==(const Uio&) const = default;

  /// "s:3,4,4"
  std::string to_string() const;

 private:
  std::vector<int> next_;
};

/// Sorts the representatives; i precedes j iff rep_j >= rep_i + 1.
Uio from_intervals(std::vector<Rational> reps);

/// Accepts "s:3,4,4" or "u:0,1/2,1".
Uio parse_uio(const std::string& text);

/// Every UIO on n elements once, in colexicographically decreasing order of
/// the successor sequence (n = 3: s:4,4,4  s:3,4,4  s:2,4,4  s:3,3,4  s:2,3,4).
std::vector<Uio> enumerate_uios(int n);
void for_each_uio(int n, const std::function<void(const Uio&)>& visit);

/// Strict order on {0..n-1} given as a predicate less(i, j).
using StrictOrder = std::function<bool(int, int)>;

/// True iff the order has no a-chain and disjoint b-chain whose elements are
/// pairwise incomparable across the two chains.
bool is_ab_free(int n, const StrictOrder& less, int a, int b);
bool is_ab_free(const Uio& u, int a, int b);

Graph incomparability_graph(const Uio& u);

/// G^alpha: vertex v becomes a clique of alpha[v] copies; copies of u and v
/// are adjacent iff u, v are. Copies of vertex 0 come first.
Graph clique_expand(const Graph& g, const std::vector<int>& alpha);

/// j -> number of acyclic orientations with exactly j sinks.
std::map<int, Integer> acyclic_sink_counts(const Graph& g);

}  // namespace csfkit
