#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's algorithms beyond plain data accessors.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "csfkit/integer.hpp"
#include "csfkit/partitions.hpp"
#include "csfkit/polyring.hpp"
#include "csfkit/symfunc.hpp"
#include "csfkit/uio.hpp"

namespace oracle {

using csfkit::Integer;
using csfkit::Partition;

// Number of partitions of n with parts at most k.
inline Integer partition_count(int n, int k) {
  static std::map<std::pair<int, int>, Integer> memo;
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  auto key = std::make_pair(n, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Integer r = partition_count(n - k, k) + partition_count(n, k - 1);
  memo[key] = r;
  return r;
}

inline int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 ? -1 : 1;
}

inline csfkit::VPoly leibniz(const csfkit::Matrix<csfkit::VPoly>& m, int vars) {
  const int n = m.rows();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  csfkit::VPoly total(vars);
  do {
    csfkit::VPoly term = csfkit::VPoly::constant(vars, permutation_sign(perm));
    for (int i = 0; i < n; ++i) term = term * m(i, perm[static_cast<std::size_t>(i)]);
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Number of semistandard tableaux of shape lambda and content mu.
inline Integer kostka(const Partition& lambda, const Partition& mu) {
  std::vector<std::vector<int>> t;
  for (int r : lambda.parts()) t.emplace_back(static_cast<std::size_t>(r), 0);
  std::vector<int> remaining(mu.parts().begin(), mu.parts().end());
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < t.size(); ++r)
    for (std::size_t c = 0; c < t[r].size(); ++c) cells.emplace_back(r, c);
  Integer count = 0;
  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[idx];
    for (int v = 1; v <= static_cast<int>(remaining.size()); ++v) {
      if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
      if (c > 0 && t[r][c - 1] > v) continue;
      if (r > 0 && t[r - 1][c] >= v) continue;
      t[r][c] = v;
      --remaining[static_cast<std::size_t>(v - 1)];
      fill(idx + 1);
      ++remaining[static_cast<std::size_t>(v - 1)];
    }
  };
  fill(0);
  return count;
}

// ---- numeric evaluation of symmetric functions --------------------------------

inline Integer power(const Integer& x, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// Coefficients of prod (1 + x_j t).
inline std::vector<Integer> elementary_values(const std::vector<Integer>& x) {
  std::vector<Integer> e{1};
  for (const Integer& xj : x) {
    e.push_back(0);
    for (std::size_t i = e.size() - 1; i > 0; --i) e[i] += e[i - 1] * xj;
  }
  return e;
}

inline Integer e_value(const Partition& lambda, const std::vector<Integer>& x) {
  const auto e = elementary_values(x);
  Integer r = 1;
  for (int part : lambda.parts()) r *= static_cast<std::size_t>(part) < e.size() ? e[part] : Integer(0);
  return r;
}

inline Integer p_value(const Partition& lambda, const std::vector<Integer>& x) {
  Integer r = 1;
  for (int part : lambda.parts()) {
    Integer s = 0;
    for (const Integer& xj : x) s += power(xj, part);
    r *= s;
  }
  return r;
}

// Sum over distinct rearrangements of lambda padded with zeros.
inline Integer m_value(const Partition& lambda, const std::vector<Integer>& x) {
  if (lambda.length() > static_cast<int>(x.size())) return 0;
  std::vector<int> exps(x.size(), 0);
  for (std::size_t i = 0; i < static_cast<std::size_t>(lambda.length()); ++i) exps[i] = lambda.parts()[i];
  std::sort(exps.begin(), exps.end());
  Integer total = 0;
  do {
    Integer term = 1;
    for (std::size_t i = 0; i < x.size(); ++i) term *= power(x[i], exps[i]);
    total += term;
  } while (std::next_permutation(exps.begin(), exps.end()));
  return total;
}

inline Integer s_value(const Partition& lambda, const std::vector<Integer>& x) {
  Integer total = 0;
  for (const Partition& mu : csfkit::partitions_of(lambda.weight())) total += kostka(lambda, mu) * m_value(mu, x);
  return total;
}

inline Integer evaluate(const csfkit::SymF& f, const std::vector<Integer>& x) {
  Integer total = 0;
  for (const auto& [lambda, c] : f.coeffs()) {
    switch (f.basis()) {
      case csfkit::Basis::e: total += c * e_value(lambda, x); break;
      case csfkit::Basis::p: total += c * p_value(lambda, x); break;
      case csfkit::Basis::m: total += c * m_value(lambda, x); break;
      case csfkit::Basis::s: total += c * s_value(lambda, x); break;
    }
  }
  return total;
}

inline std::vector<Integer> random_point(std::mt19937& rng, int vars) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<Integer> x;
  for (int i = 0; i < vars; ++i) x.emplace_back(d(rng));
  return x;
}

// ---- posets and graphs ----------------------------------------------------------

// Strict order on 0..n-1 as a relation matrix.
using Relation = std::vector<std::vector<bool>>;

inline bool is_strict_order(const Relation& r) {
  const std::size_t n = r.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (r[a][a]) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (r[a][b] && r[b][a]) return false;
      for (std::size_t c = 0; c < n; ++c)
        if (r[a][b] && r[b][c] && !r[a][c]) return false;
    }
  }
  return true;
}

inline bool comparable(const Relation& r, int a, int b) { return r[a][b] || r[b][a]; }

// Brute force: disjoint chains of lengths a and b with every cross pair incomparable.
inline bool contains_a_plus_b(const Relation& r, int a, int b) {
  const int n = static_cast<int>(r.size());
  std::vector<std::vector<int>> chains_a, chains_b;
  std::function<void(std::vector<int>&, int, std::vector<std::vector<int>>&)> grow =
      [&](std::vector<int>& cur, int len, std::vector<std::vector<int>>& out) {
        if (static_cast<int>(cur.size()) == len) {
          out.push_back(cur);
          return;
        }
        for (int v = 0; v < n; ++v) {
          if (!cur.empty() && !r[cur.back()][v]) continue;
          cur.push_back(v);
          grow(cur, len, out);
          cur.pop_back();
        }
      };
  std::vector<int> cur;
  grow(cur, a, chains_a);
  grow(cur, b, chains_b);
  for (const auto& ca : chains_a)
    for (const auto& cb : chains_b) {
      bool ok = true;
      for (int x : ca)
        for (int y : cb) ok = ok && x != y && !comparable(r, x, y);
      if (ok) return true;
    }
  return false;
}

// Unlabelled (2+2)- and (3+1)-free posets on n points: every labelled strict
// order is generated, filtered, and reduced to a canonical relation mask.
inline int count_free_posets(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::set<std::uint64_t> classes;
  std::size_t states = 1;
  for (std::size_t p = 0; p < pairs.size(); ++p) states *= 3;
  for (std::size_t code = 0; code < states; ++code) {
    Relation r(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    std::size_t c = code;
    for (const auto& [i, j] : pairs) {
      if (c % 3 == 1) r[i][j] = true;
      if (c % 3 == 2) r[j][i] = true;
      c /= 3;
    }
    if (!is_strict_order(r)) continue;
    if (contains_a_plus_b(r, 2, 2) || contains_a_plus_b(r, 3, 1)) continue;
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& q : perms) {
      std::uint64_t mask = 0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (r[a][b]) mask |= std::uint64_t{1} << (q[a] * n + q[b]);
      best = std::min(best, mask);
    }
    classes.insert(best);
  }
  return static_cast<int>(classes.size());
}

struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

inline SimpleGraph simple(const csfkit::Graph& g) { return {g.size(), g.edges()}; }

// Chromatic polynomial at k by deletion-contraction.
inline Integer chromatic_polynomial(const SimpleGraph& g, long k) {
  if (g.edges.empty()) return power(Integer(k), g.n);
  const auto [a, b] = g.edges.back();
  SimpleGraph deleted = g;
  deleted.edges.pop_back();
  SimpleGraph contracted{g.n - 1, {}};
  auto relabel = [&](int v) {
    if (v == b) v = a;
    return v > b ? v - 1 : v;
  };
  std::set<std::pair<int, int>> seen;
  for (const auto& [x, y] : deleted.edges) {
    int p = relabel(x), q = relabel(y);
    if (p == q) continue;
    if (p > q) std::swap(p, q);
    if (seen.insert({p, q}).second) contracted.edges.emplace_back(p, q);
  }
  return chromatic_polynomial(deleted, k) - chromatic_polynomial(contracted, k);
}

// Proper colourings with k colours, by enumeration.
inline Integer proper_colourings(const csfkit::Graph& g, int k) {
  const int n = g.size();
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  Integer count = 0;
  for (;;) {
    bool proper = true;
    for (const auto& [a, b] : g.edges()) proper = proper && c[a] != c[b];
    if (proper) ++count;
    int i = 0;
    while (i < n && c[i] == k - 1) c[i++] = 0;
    if (i == n) break;
    ++c[i];
  }
  return count;
}

// Acyclic orientations grouped by sink count, over all 2^|E| orientations.
inline std::map<int, Integer> sink_counts_bruteforce(const csfkit::Graph& g) {
  const auto edges = g.edges();
  const int n = g.size();
  std::map<int, Integer> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    std::vector<int> outdeg(static_cast<std::size_t>(n), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [a, b] = edges[e];
      if ((mask >> e) & 1u) std::swap(a, b);
      adj[a].push_back(b);
      ++outdeg[a];
    }
    // Kahn's algorithm on reversed sense: acyclic iff all vertices get removed.
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
      for (int w : adj[v]) ++indeg[w];
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
      if (indeg[v] == 0) stack.push_back(v);
    int removed = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++removed;
      for (int w : adj[v])
        if (--indeg[w] == 0) stack.push_back(w);
    }
    if (removed != n) continue;
    int sinks = 0;
    for (int v = 0; v < n; ++v) sinks += outdeg[v] == 0;
    ++out[sinks];
  }
  return out;
}

// Stable sets of size i, as a vertex polynomial.
inline csfkit::VPoly stable_set_sum(const csfkit::Graph& g, int i) {
  csfkit::VPoly out(g.size());
  for (std::uint32_t mask = 0; mask < (1u << g.size()); ++mask) {
    if (std::popcount(mask) != i) continue;
    bool stable = true;
    for (const auto& [a, b] : g.edges()) stable = stable && !(((mask >> a) & 1u) && ((mask >> b) & 1u));
    if (!stable) continue;
    std::vector<int> exps(static_cast<std::size_t>(g.size()), 0);
    for (int v = 0; v < g.size(); ++v) exps[v] = (mask >> v) & 1u;
    out.add_term(csfkit::VertexMonomial(exps), 1);
  }
  return out;
}

// ---- correct sequences ------------------------------------------------------------

// The two defining conditions, read literally.
inline bool correct_by_definition(const csfkit::Uio& u, const std::vector<int>& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (u.succeeds(w[i], w[i + 1])) return false;
  for (std::size_t j = 1; j < w.size(); ++j) {
    bool found = false;
    for (std::size_t i = 0; i < j; ++i) found = found || !u.precedes(w[i], w[j]);
    if (!found) return false;
  }
  return !w.empty();
}

inline bool prefix_connected_bfs(const csfkit::Uio& u, const std::vector<int>& w) {
  for (std::size_t len = 1; len <= w.size(); ++len) {
    std::vector<int> vs(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len));
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<bool> seen(vs.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < vs.size(); ++b)
        if (!seen[b] && u.incomparable(vs[a], vs[b])) {
          seen[b] = true;
          stack.push_back(b);
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
  }
  return true;
}

inline std::vector<std::vector<int>> all_words(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(static_cast<std::size_t>(k), 0);
  for (;;) {
    out.push_back(w);
    int i = k - 1;
    while (i >= 0 && w[i] == n - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

inline csfkit::VPoly word_sum(int n, const std::vector<std::vector<int>>& words) {
  csfkit::VPoly out(n);
  for (const auto& w : words) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (int x : w) ++exps[x];
    out.add_term(csfkit::VertexMonomial(exps), 1);
  }
  return out;
}

}  // namespace oracle
