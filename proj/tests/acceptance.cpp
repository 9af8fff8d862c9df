#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "csfkit/bijections.hpp"
#include "csfkit/chromatic.hpp"
#include "csfkit/corrects.hpp"
#include "csfkit/ganalogue.hpp"
#include "csfkit/uio.hpp"

using namespace csfkit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::vector<Uio> uios_up_to(int n) {
  std::vector<Uio> out;
  for (int m = 1; m <= n; ++m)
    for (const Uio& u : enumerate_uios(m)) out.push_back(u);
  return out;
}

Integer e_coeff(const PartitionMap& c, const Partition& lambda) {
  auto it = c.find(lambda);
  return it == c.end() ? Integer(0) : it->second;
}

Outcome check_complete_graphs() {
  for (int n = 1; n <= 6; ++n)
    if (e_coefficients(Graph::complete(n)) != PartitionMap{{Partition{n}, factorial(n)}})
      return {false, "X_{K_" + std::to_string(n) + "} is not n! e_n"};
  return {true, "n <= 6"};
}

Outcome check_oracle_triangle() {
  const auto uios = uios_up_to(6);
  for (const Uio& u : uios) {
    const Graph g = incomparability_graph(u);
    const SymF x = csf(g);
    if (to_polynomial(x, u.size()) != csf_coloring_oracle(g, u.size()))
      return {false, "coloring oracle differs on " + u.to_string()};
    if (to_e_basis(csf_p_oracle(g)) != to_e_basis(x)) return {false, "power-sum oracle differs on " + u.to_string()};
  }
  return {true, std::to_string(uios.size()) + " UIOs, n <= 6"};
}

Outcome check_e_positivity() {
  const auto uios = uios_up_to(7);
  for (const Uio& u : uios) {
    const auto r = is_e_positive(incomparability_graph(u));
    if (!r.positive) return {false, u.to_string() + " has c" + r.witness->to_string() + " < 0"};
  }
  const auto claw = is_e_positive(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}));
  if (claw.positive) return {false, "claw reported e-positive"};
  return {true, std::to_string(uios.size()) + " UIOs e-positive, claw min coeff " + to_decimal(claw.min_coeff) + " at " +
                    claw.witness->to_string()};
}

Outcome check_power_sums() {
  const auto uios = uios_up_to(5);
  for (const Uio& u : uios) {
    const Graph g = incomparability_graph(u);
    for (int k = 1; k <= 5; ++k)
      if (p_G(k, g) != monomial_sum(u.size(), enumerate_corrects(u, k)))
        return {false, u.to_string() + " k=" + std::to_string(k)};
  }
  return {true, std::to_string(uios.size()) + " UIOs, k <= 5"};
}

Outcome check_top_coefficient() {
  const auto uios = uios_up_to(6);
  for (const Uio& u : uios) {
    const Integer c = e_coeff(e_coefficients(incomparability_graph(u)), Partition{u.size()});
    if (c != hamiltonian_corrects_count(u)) return {false, u.to_string()};
  }
  return {true, std::to_string(uios.size()) + " UIOs, n <= 6"};
}

Outcome check_msets() {
  const int max_total = 6;
  std::vector<MSetParams> params;
  for (int l = 1; l + 1 <= max_total; ++l) params.push_back({MSet::l1, l, 0});
  for (int l = 1; l <= max_total; ++l)
    for (int k = 1; l + k <= max_total; ++k) params.push_back({MSet::l1k, l, k});
  for (int l = 2; l + 2 <= max_total; ++l) params.push_back({MSet::l2, l, 0});
  for (int l = 2; l + 3 <= max_total; ++l) params.push_back({MSet::l21, l, 0});
  std::erase_if(params, [](const MSetParams& p) { return !identity_gate_holds(p); });
  std::vector<MSetParams> twos;
  for (int l = 1; 2 * l <= max_total; ++l)
    for (int k = 0; 2 * l + k <= max_total; ++k) twos.push_back({MSet::l2_1k, l, k});

  const auto uios = uios_up_to(5);
  bool strict_all = true, loose_all = true;
  std::size_t checks = 0;
  for (const Uio& u : uios) {
    for (const MSetParams& p : params) {
      ++checks;
      if (!check_mset(u, p).matches)
        return {false, mset_name(p.which) + " l=" + std::to_string(p.l) + " k=" + std::to_string(p.k) + " on " +
                           u.to_string()};
    }
    for (MSetParams p : twos) {
      p.strict_last_index = true;
      const bool s = check_mset(u, p).matches;
      p.strict_last_index = false;
      const bool n = check_mset(u, p).matches;
      checks += 2;
      if (!s && !n) return {false, "neither 2^l1^k reading matches on " + u.to_string()};
      strict_all = strict_all && s;
      loose_all = loose_all && n;
    }
  }
  if (!strict_all && !loose_all) return {false, "no 2^l1^k reading matches on every instance"};
  return {true, std::to_string(checks) + " comparisons; 2^l1^k reading: " +
                    std::string(strict_all && loose_all ? "both" : strict_all ? "i_l < k+l" : "i_l <= k+l")};
}

std::string reproduce(const BijectionParams& p, const std::string& uio) {
  std::ostringstream os;
  os << "csfkit verify-bijection --which " << bijection_name(p.which) << " --l " << p.l;
  if (p.which == BijectionKind::l1k) os << " --k " << p.k;
  os << " --uio " << uio;
  return os.str();
}

Outcome check_bijections() {
  std::vector<BijectionParams> configs;
  for (int l = 2; l <= 3; ++l)
    for (int k = 1; k <= 2; ++k) configs.push_back({BijectionKind::l1k, l, k});
  configs.push_back({BijectionKind::l2, 2, 0});
  configs.push_back({BijectionKind::l2, 3, 0});
  configs.push_back({BijectionKind::l21, 3, 0});

  const auto uios = uios_up_to(4);
  Outcome out;
  std::ostringstream detail;
  for (const BijectionParams& p : configs) {
    std::size_t rt = 0, nc = 0, mc = 0, cv = 0, card = 0;
    const BijectionReport* first_bad = nullptr;
    std::vector<BijectionReport> reports;
    reports.reserve(uios.size());
    for (const Uio& u : uios) reports.push_back(verify_bijection(u, p));
    for (const auto& r : reports) {
      rt += r.roundtrip_failures;
      nc += r.no_case;
      mc += r.multi_case;
      cv += r.codomain_violations;
      card += !r.cardinality_ok();
      if (!r.clean() && !first_bad) first_bad = &r;
    }
    detail << "\n    " << bijection_name(p.which) << " l=" << p.l;
    if (p.which == BijectionKind::l1k) detail << " k=" << p.k;
    detail << ": roundtrip=" << rt << " no-case=" << nc << " multi-case=" << mc << " codomain=" << cv
           << " cardinality-mismatch=" << card;
    if (first_bad) {
      out.ok = false;
      detail << "\n      counterexample: U=" << first_bad->uio;
      if (!first_bad->findings.empty()) {
        const Finding& f = first_bad->findings.front();
        detail << " " << f.kind << " " << f.direction << " input " << f.input << " -> " << f.output << " [" << f.label
               << "]";
      }
      detail << "\n      reproduce: " << reproduce(p, first_bad->uio);
    }
  }
  out.detail = detail.str();
  return out;
}

Outcome check_identities() {
  for (const Uio& u : uios_up_to(4))
    if (!cauchy_check(incomparability_graph(u))) return {false, "cauchy fails on " + u.to_string()};
  std::size_t checks = 0;
  for (const Uio& u : uios_up_to(3)) {
    const Graph g = incomparability_graph(u);
    const int n = u.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> a(static_cast<std::size_t>(n));
      int w = 0;
      for (int v = 0; v < n; ++v) w += a[v] = 1 + ((mask >> v) & 1u);
      for (const Partition& lambda : partitions_of(w)) {
        ++checks;
        if (!alpha_coefficient_check(g, a, lambda)) return {false, "alpha check fails on " + u.to_string()};
      }
    }
  }
  return {true, "cauchy on |U| <= 4; " + std::to_string(checks) + " alpha checks on |U| <= 3"};
}

Outcome check_sinks() {
  const auto uios = uios_up_to(5);
  for (const Uio& u : uios)
    if (!sink_crosscheck(incomparability_graph(u))) return {false, u.to_string()};
  return {true, std::to_string(uios.size()) + " UIOs, n <= 5"};
}

Outcome check_structure() {
  Integer catalan = 1;
  std::ostringstream counts;
  for (int n = 0; n <= 8; ++n) {
    if (n > 0) catalan = catalan * 2 * (2 * n - 1) / (n + 1);
    std::size_t count = 0;
    bool free = true;
    for_each_uio(n, [&](const Uio& u) {
      ++count;
      free = free && is_ab_free(u, 2, 2) && is_ab_free(u, 3, 1);
    });
    if (Integer(count) != catalan) return {false, "n=" + std::to_string(n) + " count " + std::to_string(count)};
    if (!free) return {false, "non-free UIO at n=" + std::to_string(n)};
    counts << (n ? "," : "") << count;
  }
  return {true, "counts " + counts.str()};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "complete-graph law", 1, check_complete_graphs},
      {2, "oracle triangle", 120, check_oracle_triangle},
      {3, "e-positivity sweep", 600, check_e_positivity},
      {4, "power sums as corrects", 120, check_power_sums},
      {5, "top coefficient as hamiltonian corrects", 120, check_top_coefficient},
      {6, "M-set monomial sums", 900, check_msets},
      {7, "bijection certification", 900, check_bijections},
      {8, "cauchy and alpha identities", 300, check_identities},
      {9, "sink cross-check", 60, check_sinks},
      {10, "UIO structure", 60, check_structure},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    const bool in_time = dt.count() < c.limit_seconds;
    const bool pass = o.ok && in_time;
    failed += !pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", dt.count(), c.limit_seconds);
    std::cout << "criterion " << c.id << " " << (pass ? "PASS" : "FAIL") << " " << c.name << " (" << timing << ")"
              << (in_time ? "" : " over time limit") << ": " << o.detail << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failed ? 1 : 0;
}
