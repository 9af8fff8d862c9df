#include "csfkit/chromatic.hpp"

#include <bit>
#include <numeric>

#include "csfkit/limits.hpp"

namespace csfkit {

SymF csf(const Graph& g) {
  const int n = g.size();
  require_degree(n, "csf");
  SymF out(Basis::m, n);
  std::vector<int> sizes;
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  // Each block is grown from the lowest unassigned vertex, so every set
  // partition is produced once.
  auto rec = [&](auto&& self, std::uint32_t left) -> void {
    if (left == 0) {
      Partition lambda(sizes);
      Integer weight = 1;
      for (int r : lambda.multiplicities()) weight *= factorial(r);
      out.add_term(lambda, weight);
      return;
    }
    const int v = std::countr_zero(left);
    const std::uint32_t candidates = left & ~g.neighbours(v) & ~(1u << v);
    for (std::uint32_t sub = candidates;; sub = (sub - 1) & candidates) {
      const std::uint32_t block = sub | (1u << v);
      if (g.is_stable(block)) {
        sizes.push_back(std::popcount(block));
        self(self, left & ~block);
        sizes.pop_back();
      }
      if (sub == 0) break;
    }
  };
  if (n > 0) rec(rec, all);
  return out;
}

VPoly csf_coloring_oracle(const Graph& g, int colors) {
  const int n = g.size();
  VPoly out(colors);
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  std::vector<int> exps(static_cast<std::size_t>(colors), 0);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.add_term(VertexMonomial(exps), 1);
      return;
    }
    for (int c = 0; c < colors; ++c) {
      bool proper = true;
      for (int u = 0; u < v && proper; ++u) proper = !(g.adjacent(u, v) && colour[u] == c);
      if (!proper) continue;
      colour[v] = c;
      ++exps[c];
      self(self, v + 1);
      --exps[c];
    }
  };
  rec(rec, 0);
  return out;
}

SymF csf_p_oracle(const Graph& g) {
  const auto edges = g.edges();
  if (edges.size() > 24)
    throw LimitError("csf_p_oracle: " + std::to_string(edges.size()) + " edges exceeds cap 24");
  const int n = g.size();
  SymF out(Basis::p, n);
  const std::uint64_t subsets = std::uint64_t{1} << edges.size();
  std::vector<int> parent(static_cast<std::size_t>(n));
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t s = 0; s < subsets; ++s) {
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if ((s >> e) & 1u) parent[find(edges[e].first)] = find(edges[e].second);
    }
    std::vector<int> size(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) ++size[find(v)];
    std::vector<int> parts;
    for (int c : size) if (c) parts.push_back(c);
    out.add_term(Partition(std::move(parts)), std::popcount(s) % 2 ? Integer(-1) : Integer(1));
  }
  return out;
}

PartitionMap e_coefficients(const Graph& g) { return to_e_basis(csf(g)).coeffs(); }

EPositivityReport e_positivity(const PartitionMap& coeffs, int degree) {
  EPositivityReport r;
  for (const Partition& lambda : partitions_of(degree)) {
    auto it = coeffs.find(lambda);
    const Integer c = it == coeffs.end() ? Integer(0) : it->second;
    if (c < r.min_coeff) {
      r.min_coeff = c;
      r.witness = lambda;
    }
  }
  r.positive = r.min_coeff >= 0;
  return r;
}

EPositivityReport is_e_positive(const Graph& g) { return e_positivity(e_coefficients(g), g.size()); }

std::map<int, Integer> sink_sums(const PartitionMap& coeffs, int degree) {
  std::map<int, Integer> sums;
  for (int j = 1; j <= degree; ++j) sums[j] = 0;
  for (const auto& [lambda, c] : coeffs) sums[lambda.length()] += c;
  return sums;
}

bool sink_crosscheck(const Graph& g) {
  const auto sums = sink_sums(e_coefficients(g), g.size());
  const auto counts = acyclic_sink_counts(g);
  for (const auto& [j, c] : sums) {
    auto it = counts.find(j);
    if ((it == counts.end() ? Integer(0) : it->second) != c) return false;
  }
  for (const auto& [j, c] : counts)
    if (!sums.count(j)) return false;
  return true;
}

nlohmann::json coeffs_to_json(const PartitionMap& coeffs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [lambda, c] : coeffs) out.push_back({{"partition", lambda}, {"coeff", to_decimal(c)}});
  return out;
}

}  // namespace csfkit
