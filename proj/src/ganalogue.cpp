#include "csfkit/ganalogue.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

#include "csfkit/chromatic.hpp"
#include "csfkit/limits.hpp"

namespace csfkit {

VPoly e_G(int i, const Graph& g) {
  const int n = g.size();
  if (i == 0) return VPoly::constant(n, 1);
  VPoly out(n);
  if (i < 0 || i > n) return out;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int from, std::uint32_t blocked) -> void {
    if (static_cast<int>(chosen.size()) == i) {
      out.add_term(VertexMonomial::from_vertices(n, chosen), 1);
      return;
    }
    for (int v = from; v <= n - (i - static_cast<int>(chosen.size())); ++v) {
      if ((blocked >> v) & 1u) continue;
      chosen.push_back(v);
      self(self, v + 1, blocked | g.neighbours(v));
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0u);
  return out;
}

VPoly phi_G(const SymF& f, const Graph& g) {
  const SymF in_e = to_e_basis(f);
  const int n = g.size();
  std::vector<VPoly> e;
  for (int i = 0; i <= in_e.degree(); ++i) e.push_back(e_G(i, g));
  VPoly out(n);
  for (const auto& [mu, c] : in_e.coeffs()) {
    VPoly term = VPoly::constant(n, c);
    for (int part : mu.parts()) {
      term = term * e[static_cast<std::size_t>(part)];
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

VPoly p_G(int k, const Graph& g) { return phi_G(p_to_e(k), g); }

VPoly m_G(const Partition& lambda, const Graph& g) { return phi_G(monomial_in_e(lambda), g); }

VPoly s_G(const Partition& lambda, const Graph& g) { return phi_G(schur_in_e(lambda), g); }

VPoly s_G_determinant(const Partition& lambda, const Graph& g) {
  const Partition dual = conjugate(lambda);
  const int r = dual.length();
  Matrix<VPoly> jt(r, r, VPoly(g.size()));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) jt(i, j) = e_G(dual[static_cast<std::size_t>(i)] + j - i, g);
  return determinant(jt, VPoly::constant(g.size(), 1));
}

bool cauchy_check(const Graph& g) {
  const int n = g.size();
  for (int d = 1; d <= n; ++d) {
    const auto parts = partitions_of(d);
    std::map<Partition, VPoly, LexDescending> by_e, by_s, by_m;
    for (const Partition& mu : parts) {
      by_e[mu] = VPoly(n);
      by_s[mu] = VPoly(n);
      by_m[mu] = VPoly(n);
    }
    for (const Partition& lambda : parts) {
      VPoly e_lambda = VPoly::constant(n, 1);
      for (int part : lambda.parts()) e_lambda = e_lambda * e_G(part, g);
      by_e[lambda] += e_lambda;

      const VPoly s_dual = s_G(conjugate(lambda), g);
      const SymF s_in_m = expand_in_monomials(SymF::s(lambda));
      for (const auto& [mu, k] : s_in_m.coeffs()) by_s[mu] += s_dual * k;

      const VPoly m_lambda = m_G(lambda, g);
      const SymF e_in_m = expand_in_monomials(SymF::e(lambda));
      for (const auto& [mu, a] : e_in_m.coeffs()) by_m[mu] += m_lambda * a;
    }
    if (by_e != by_s || by_e != by_m) return false;
  }
  return true;
}

Integer alpha_coefficient(const Graph& g, const std::vector<int>& alpha, const Partition& lambda) {
  if (static_cast<int>(alpha.size()) != g.size())
    throw std::invalid_argument("alpha has the wrong number of entries");
  if (std::accumulate(alpha.begin(), alpha.end(), 0) != lambda.weight())
    throw std::invalid_argument("|alpha| must equal |lambda|");
  Integer scale = 1;
  for (int a : alpha) scale *= factorial(a);
  return coeff_of(m_G(lambda, g), VertexMonomial(alpha)) * scale;
}

bool alpha_coefficient_check(const Graph& g, const std::vector<int>& alpha, const Partition& lambda) {
  const Integer rhs = alpha_coefficient(g, alpha, lambda);
  const PartitionMap c = e_coefficients(clique_expand(g, alpha));
  auto it = c.find(lambda);
  return (it == c.end() ? Integer(0) : it->second) == rhs;
}

}  // namespace csfkit
