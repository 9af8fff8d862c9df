#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "csfkit/bijections.hpp"
#include "csfkit/chromatic.hpp"
#include "csfkit/corrects.hpp"
#include "csfkit/ganalogue.hpp"
#include "csfkit/limits.hpp"
#include "csfkit/parallel.hpp"
#include "csfkit/uio.hpp"

using json = nlohmann::json;
using namespace csfkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string format = "json";
  int jobs = 1;
  int max_degree = 0;
  bool timing = false;
};

// ---- rendering ------------------------------------------------------------

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_text(const json& j, std::ostream& os, const std::string& indent = "") {
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        os << indent << key << ":\n";
        render_text(v, os, indent + "  ");
      } else {
        os << indent << key << ": " << scalar_text(v) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        os << indent << "-\n";
        render_text(v, os, indent + "  ");
      } else {
        os << indent << "- " << scalar_text(v) << '\n';
      }
    }
  } else {
    os << indent << scalar_text(j) << '\n';
  }
}

std::string csv_field(const json& v) {
  std::string s = v.is_structured() ? v.dump() : scalar_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

// Rows of the "instances" array when present, otherwise key,value pairs.
void render_csv(const json& j, std::ostream& os) {
  if (j.contains("instances") && j["instances"].is_array() && !j["instances"].empty()) {
    std::vector<std::string> cols;
    for (const auto& [key, v] : j["instances"][0].items()) cols.push_back(key);
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << '\n';
    for (const auto& row : j["instances"]) {
      for (std::size_t i = 0; i < cols.size(); ++i)
        os << (i ? "," : "") << (row.contains(cols[i]) ? csv_field(row[cols[i]]) : "");
      os << '\n';
    }
    return;
  }
  os << "key,value\n";
  for (const auto& [key, v] : j.items()) os << csv_field(json(key)) << ',' << csv_field(v) << '\n';
}

void emit(const Common& c, const json& j) {
  if (c.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else if (c.format == "csv") {
    render_csv(j, std::cout);
  } else {
    render_text(j, std::cout);
  }
}

// ---- helpers --------------------------------------------------------------

json poly_json(const VPoly& p) { return json(p); }

std::vector<Uio> uios_up_to(int max_n) {
  std::vector<Uio> all;
  for (int n = 1; n <= max_n; ++n)
    for (auto& u : enumerate_uios(n)) all.push_back(std::move(u));
  return all;
}

// One failure payload per UIO (or none); summarised in enumeration order.
json sweep(const std::string& name, const std::vector<Uio>& uios, int jobs,
           const std::function<std::optional<json>(const Uio&)>& check) {
  const auto results = parallel_map(uios.size(), jobs, [&](std::size_t i) { return check(uios[i]); });
  std::size_t failures = 0;
  json first;
  for (const auto& r : results) {
    if (!r) continue;
    if (failures++ == 0) first = *r;
  }
  json out{{"check", name}, {"instances", uios.size()}, {"failures", failures},
           {"verdict", failures == 0 ? "pass" : "fail"}};
  if (failures) out["first_failure"] = first;
  return out;
}

json coeff_object(const PartitionMap& coeffs) {
  json out = json::object();
  for (const auto& [lambda, c] : coeffs) out[lambda.to_string()] = to_decimal(c);
  return out;
}

std::vector<std::vector<int>> alphas(int n, int max_entry) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(n), 1);
  for (;;) {
    out.push_back(a);
    int i = 0;
    while (i < n && a[i] == max_entry) a[i++] = 1;
    if (i == n) break;
    ++a[i];
  }
  return out;
}

// ---- verify checks ----------------------------------------------------------

json check_complete(int max_n) {
  std::size_t failures = 0;
  for (int n = 1; n <= max_n; ++n) {
    const auto c = e_coefficients(Graph::complete(n));
    if (c.size() != 1 || c.begin()->first != Partition{n} || c.begin()->second != factorial(n)) ++failures;
  }
  return {{"check", "complete"}, {"instances", max_n}, {"failures", failures},
          {"verdict", failures == 0 ? "pass" : "fail"}};
}

json check_oracles(const std::vector<Uio>& uios, int jobs) {
  return sweep("oracles", uios, jobs, [](const Uio& u) -> std::optional<json> {
    const Graph g = incomparability_graph(u);
    const SymF x = csf(g);
    const bool colouring = to_polynomial(x, u.size()) == csf_coloring_oracle(g, u.size());
    const bool power = to_e_basis(csf_p_oracle(g)) == to_e_basis(x);
    if (colouring && power) return std::nullopt;
    return json{{"uio", u.to_string()}, {"coloring_agrees", colouring}, {"p_oracle_agrees", power}};
  });
}

json check_epositivity(const std::vector<Uio>& uios, int jobs) {
  return sweep("epositivity", uios, jobs, [](const Uio& u) -> std::optional<json> {
    const auto r = is_e_positive(incomparability_graph(u));
    if (r.positive) return std::nullopt;
    return json{{"uio", u.to_string()}, {"min_coeff", to_decimal(r.min_coeff)}, {"witness", *r.witness}};
  });
}

json check_power_sums(const std::vector<Uio>& uios, int jobs, int max_k) {
  return sweep("power-sums", uios, jobs, [max_k](const Uio& u) -> std::optional<json> {
    const Graph g = incomparability_graph(u);
    for (int k = 1; k <= max_k; ++k)
      if (p_G(k, g) != monomial_sum(u.size(), enumerate_corrects(u, k))) return json{{"uio", u.to_string()}, {"k", k}};
    return std::nullopt;
  });
}

json check_top_coeff(const std::vector<Uio>& uios, int jobs) {
  return sweep("top-coeff", uios, jobs, [](const Uio& u) -> std::optional<json> {
    const auto c = e_coefficients(incomparability_graph(u));
    auto it = c.find(Partition{u.size()});
    const Integer cn = it == c.end() ? Integer(0) : it->second;
    const Integer h = hamiltonian_corrects_count(u);
    if (cn == h) return std::nullopt;
    return json{{"uio", u.to_string()}, {"c_n", to_decimal(cn)}, {"hamiltonian", to_decimal(h)}};
  });
}

// Every gated (l, k) of total degree at most max_total.
std::vector<MSetParams> gated_params(int max_total) {
  std::vector<MSetParams> out;
  for (int l = 1; l + 1 <= max_total; ++l)
    if (identity_gate_holds({MSet::l1, l, 1})) out.push_back({MSet::l1, l, 1});
  for (int l = 1; l <= max_total; ++l)
    for (int k = 1; l + k <= max_total; ++k)
      if (identity_gate_holds({MSet::l1k, l, k})) out.push_back({MSet::l1k, l, k});
  for (int l = 2; l + 2 <= max_total; ++l)
    if (identity_gate_holds({MSet::l2, l, 0})) out.push_back({MSet::l2, l, 0});
  for (int l = 2; l + 3 <= max_total; ++l)
    if (identity_gate_holds({MSet::l21, l, 0})) out.push_back({MSet::l21, l, 0});
  for (int l = 1; 2 * l <= max_total; ++l)
    for (int k = 0; 2 * l + k <= max_total; ++k) out.push_back({MSet::l2_1k, l, k});
  return out;
}

json check_msets(const std::vector<Uio>& uios, int jobs, int max_total) {
  const auto params = gated_params(max_total);
  struct Outcome {
    std::optional<json> failure;
    bool strict_all = true;
    bool loose_all = true;
  };
  const auto results = parallel_map(uios.size(), jobs, [&](std::size_t i) {
    const Uio& u = uios[i];
    Outcome o;
    for (MSetParams p : params) {
      if (mset_shape(p).weight() > max_total) continue;
      if (p.which == MSet::l2_1k) {
        p.strict_last_index = true;
        o.strict_all = o.strict_all && check_mset(u, p).matches;
        p.strict_last_index = false;
        o.loose_all = o.loose_all && check_mset(u, p).matches;
        continue;
      }
      if (!o.failure && !check_mset(u, p).matches)
        o.failure = json{{"uio", u.to_string()}, {"which", mset_name(p.which)}, {"l", p.l}, {"k", p.k}};
    }
    return o;
  });
  std::size_t failures = 0;
  bool strict_all = true, loose_all = true;
  json first;
  for (const auto& o : results) {
    strict_all = strict_all && o.strict_all;
    loose_all = loose_all && o.loose_all;
    if (o.failure && failures++ == 0) first = *o.failure;
  }
  const bool reading_ok = strict_all || loose_all;
  json out{{"check", "msets"},
           {"instances", uios.size()},
           {"parameter_sets", params.size()},
           {"failures", failures},
           {"2l1k_strict_matches_all", strict_all},
           {"2l1k_nonstrict_matches_all", loose_all},
           {"verdict", failures == 0 && reading_ok ? "pass" : "fail"}};
  if (failures) out["first_failure"] = first;
  return out;
}

json check_cauchy(const std::vector<Uio>& uios, int jobs) {
  return sweep("cauchy", uios, jobs, [](const Uio& u) -> std::optional<json> {
    if (cauchy_check(incomparability_graph(u))) return std::nullopt;
    return json{{"uio", u.to_string()}};
  });
}

json check_alpha(const std::vector<Uio>& uios, int jobs) {
  return sweep("alpha", uios, jobs, [](const Uio& u) -> std::optional<json> {
    const Graph g = incomparability_graph(u);
    for (const auto& a : alphas(u.size(), 2)) {
      int weight = 0;
      for (int x : a) weight += x;
      for (const Partition& lambda : partitions_of(weight))
        if (!alpha_coefficient_check(g, a, lambda))
          return json{{"uio", u.to_string()}, {"alpha", a}, {"partition", lambda}};
    }
    return std::nullopt;
  });
}

json check_sinks(const std::vector<Uio>& uios, int jobs) {
  return sweep("sinks", uios, jobs, [](const Uio& u) -> std::optional<json> {
    if (sink_crosscheck(incomparability_graph(u))) return std::nullopt;
    return json{{"uio", u.to_string()}};
  });
}

json check_structure(int max_n) {
  std::size_t failures = 0;
  json counts = json::array();
  Integer catalan = 1;
  for (int n = 0; n <= max_n; ++n) {
    if (n > 0) catalan = catalan * 2 * (2 * n - 1) / (n + 1);
    std::size_t count = 0;
    bool free = true;
    for_each_uio(n, [&](const Uio& u) {
      ++count;
      free = free && is_ab_free(u, 2, 2) && is_ab_free(u, 3, 1);
    });
    counts.push_back(count);
    if (Integer(count) != catalan || !free) ++failures;
  }
  return {{"check", "structure"}, {"counts", counts}, {"failures", failures},
          {"verdict", failures == 0 ? "pass" : "fail"}};
}

// ---- bijection sweep ----------------------------------------------------------

json instance_summary(const BijectionReport& r) {
  return {{"uio", r.uio},
          {"domain_size", r.domain_size},
          {"codomain_total", r.codomain_total},
          {"roundtrip_failures", r.roundtrip_failures},
          {"codomain_violations", r.codomain_violations},
          {"no_case", r.no_case},
          {"multi_case", r.multi_case},
          {"identity_check", r.identity_check},
          {"clean", r.clean()}};
}

std::string reproduce(const BijectionParams& p, const std::string& uio) {
  std::ostringstream os;
  os << "csfkit verify-bijection --which " << bijection_name(p.which) << " --l " << p.l;
  if (p.which == BijectionKind::l1k) os << " --k " << p.k;
  os << " --uio " << uio;
  return os.str();
}

json bijection_sweep(const BijectionParams& p, const std::vector<Uio>& uios, int jobs) {
  const auto reports = parallel_map(uios.size(), jobs, [&](std::size_t i) { return verify_bijection(uios[i], p); });
  json instances = json::array();
  std::size_t rt = 0, cv = 0, nc = 0, mc = 0, card = 0, ident = 0;
  std::map<std::string, std::size_t> phi, psi, pairs;
  json counterexample;
  for (const auto& r : reports) {
    instances.push_back(instance_summary(r));
    rt += r.roundtrip_failures;
    cv += r.codomain_violations;
    nc += r.no_case;
    mc += r.multi_case;
    card += !r.cardinality_ok();
    ident += r.identity_check == "fail";
    for (const auto& [k, v] : r.phi_cases) phi[k] += v;
    for (const auto& [k, v] : r.psi_cases) psi[k] += v;
    for (const auto& [k, v] : r.case_pairs) pairs[k] += v;
    if (!r.clean() && counterexample.is_null()) {
      counterexample = {{"uio", r.uio}, {"reproduce", reproduce(p, r.uio)}};
      if (!r.findings.empty()) counterexample["finding"] = r.findings.front();
      else counterexample["cardinality_ok"] = r.cardinality_ok();
    }
  }
  const bool clean = rt == 0 && cv == 0 && nc == 0 && mc == 0 && card == 0 && ident == 0;
  json out{{"which", bijection_name(p.which)},
           {"l", p.l},
           {"k", p.k},
           {"roundtrip_failures", rt},
           {"codomain_violations", cv},
           {"no_case", nc},
           {"multi_case", mc},
           {"cardinality_mismatches", card},
           {"identity_failures", ident},
           {"phi_cases", phi},
           {"psi_cases", psi},
           {"case_pairs", pairs},
           {"verdict", clean ? "clean" : "failures"},
           {"instances", instances}};
  if (!clean) out["counterexample"] = counterexample;
  return out;
}

Uio uio_option(const std::string& text) { return parse_uio(text); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic symmetric functions of unit interval orders: computation and verification."};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--jobs", common.jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--max-degree", common.max_degree, "Degree cap (default 12 or CSFKIT_MAX_DEGREE)");
  app.add_flag("--timing", common.timing, "Print elapsed time on stderr");

  int n = 3;
  auto* enumerate = app.add_subcommand("uio-enumerate", "List all UIOs of a size in successor form");
  enumerate->add_option("--n", n, "Number of elements")->required();

  std::string uio_spec, basis = "e";
  auto* csf_cmd = app.add_subcommand("csf", "Chromatic symmetric function of inc(U)");
  csf_cmd->add_option("--uio", uio_spec, "UIO as s:... or u:...")->required();
  csf_cmd->add_option("--basis", basis, "Output basis")->check(CLI::IsMember({"e", "m"}))->capture_default_str();

  std::string which = "m", partition_text;
  auto* gan = app.add_subcommand("ganalogue", "G-analogue vertex polynomial e/p/m/s^G_lambda of inc(U)");
  gan->add_option("--uio", uio_spec)->required();
  gan->add_option("--which", which)->check(CLI::IsMember({"e", "p", "m", "s"}))->capture_default_str();
  gan->add_option("--partition", partition_text, "e.g. 3,1")->required();

  int l = 2, k = 1;
  std::string strict = "true";
  auto* msets = app.add_subcommand("msets", "Build an M-set and compare its monomial sum with m^U_lambda");
  msets->add_option("--uio", uio_spec)->required();
  msets->add_option("--which", which)->check(CLI::IsMember({"l1", "l1k", "l2", "l21", "2l1k"}))->required();
  msets->add_option("--l", l);
  msets->add_option("--k", k);
  msets->add_option("--strict-last-index", strict, "2l1k index bound reading")
      ->check(CLI::IsMember({"true", "false", "both"}))
      ->capture_default_str();

  std::string theorem = "all";
  int max_n = 4, max_k = 5, max_total = 6;
  auto* verify = app.add_subcommand("verify", "Run the module oracles over all UIOs up to a size");
  verify->add_option("--theorem", theorem)
      ->check(CLI::IsMember({"all", "complete", "oracles", "epositivity", "power-sums", "top-coeff", "msets", "cauchy", "alpha",
                             "sinks", "structure"}))
      ->capture_default_str();
  verify->add_option("--max-n", max_n)->capture_default_str();
  verify->add_option("--max-k", max_k, "Longest correct sequence for power-sums")->capture_default_str();
  verify->add_option("--max-total", max_total, "Largest M-set degree")->capture_default_str();

  auto* vb = app.add_subcommand("verify-bijection", "Certify a proof bijection on one UIO or all up to a size");
  vb->add_option("--which", which)->check(CLI::IsMember({"l1k", "l2", "l21"}))->required();
  vb->add_option("--l", l);
  vb->add_option("--k", k);
  auto* vb_uio = vb->add_option("--uio", uio_spec);
  auto* vb_max = vb->add_option("--max-n", max_n);
  vb_uio->excludes(vb_max);
  bool json_flag = false;
  vb->add_flag("--json", json_flag, "Same as --format json");

  std::string graph_text;
  auto* epos = app.add_subcommand("epositivity", "e-positivity of inc(U) for all UIOs up to a size, or one graph");
  auto* epos_max = epos->add_option("--max-n", max_n);
  auto* epos_graph = epos->add_option("--graph", graph_text, "n=4;1-2,1-3,1-4 (1-based edges)");
  epos_max->excludes(epos_graph);

  auto* sinks = app.add_subcommand("sinks", "Acyclic orientation sink counts against e-coefficient sums");
  auto* sinks_uio = sinks->add_option("--uio", uio_spec);
  auto* sinks_max = sinks->add_option("--max-n", max_n);
  sinks_uio->excludes(sinks_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (json_flag) common.format = "json";

  const auto start = std::chrono::steady_clock::now();
  int status = kExitOk;
  try {
    Limits::load_environment();
    if (common.max_degree > 0) Limits::set_max_degree(common.max_degree);

    if (enumerate->parsed()) {
      const auto all = enumerate_uios(n);
      if (common.format == "text") {
        for (const auto& u : all) std::cout << u.to_string() << '\n';
      } else {
        json rows = json::array();
        for (std::size_t i = 0; i < all.size(); ++i) rows.push_back({{"index", i}, {"uio", all[i].to_string()}});
        emit(common, {{"n", n}, {"count", all.size()}, {"instances", rows}});
      }
    } else if (csf_cmd->parsed()) {
      const Uio u = uio_option(uio_spec);
      const Graph g = incomparability_graph(u);
      const SymF x = csf(g);
      const PartitionMap e = to_e_basis(x).coeffs();
      const auto pos = e_positivity(e, u.size());
      emit(common, {{"uio", u.to_string()},
                    {"graph", g.to_string()},
                    {"basis", basis},
                    {"coeffs", coeff_object(basis == "e" ? e : x.coeffs())},
                    {"e_positive", pos.positive},
                    {"min_coeff", to_decimal(pos.min_coeff)}});
    } else if (gan->parsed()) {
      const Uio u = uio_option(uio_spec);
      const Graph g = incomparability_graph(u);
      const Partition lambda = parse_partition(partition_text);
      const SymF f = SymF::single(parse_basis(which), lambda);
      const VPoly poly = phi_G(f, g);
      json out{{"uio", u.to_string()},       {"which", which}, {"partition", lambda}, {"poly", poly_json(poly)},
               {"monomial_positive", is_monomial_positive(poly)}};
      if (which == "s") out["determinant_agrees"] = s_G_determinant(lambda, g) == poly;
      emit(common, out);
    } else if (msets->parsed()) {
      const Uio u = uio_option(uio_spec);
      MSetParams p{parse_mset(which), l, k};
      std::vector<bool> readings{true};
      if (p.which == MSet::l2_1k) {
        if (strict == "both") readings = {true, false};
        else readings = {strict == "true"};
      }
      json rows = json::array();
      bool any_match = false;
      for (bool r : readings) {
        p.strict_last_index = r;
        const MSetCheck c = check_mset(u, p);
        any_match = any_match || c.matches;
        json row{{"size", c.size}, {"sum", poly_json(c.sum)}, {"oracle", poly_json(c.oracle)}, {"matches", c.matches}};
        if (p.which == MSet::l2_1k) row["strict_last_index"] = r;
        rows.push_back(row);
      }
      emit(common, {{"uio", u.to_string()},
                    {"which", which},
                    {"l", p.l},
                    {"k", p.k},
                    {"shape", mset_shape(p)},
                    {"readings", rows},
                    {"verdict", any_match ? "match" : "mismatch"}});
      status = any_match ? kExitOk : kExitFailed;
    } else if (verify->parsed()) {
      const auto uios = uios_up_to(max_n);
      json checks = json::array();
      auto want = [&](const char* name) { return theorem == "all" || theorem == name; };
      if (want("structure")) checks.push_back(check_structure(max_n));
      if (want("complete")) checks.push_back(check_complete(max_n));
      if (want("oracles")) checks.push_back(check_oracles(uios, common.jobs));
      if (want("epositivity")) checks.push_back(check_epositivity(uios, common.jobs));
      if (want("power-sums")) checks.push_back(check_power_sums(uios, common.jobs, max_k));
      if (want("top-coeff")) checks.push_back(check_top_coeff(uios, common.jobs));
      if (want("msets")) checks.push_back(check_msets(uios, common.jobs, max_total));
      if (want("cauchy")) checks.push_back(check_cauchy(uios, common.jobs));
      if (want("alpha")) checks.push_back(check_alpha(uios, common.jobs));
      if (want("sinks")) checks.push_back(check_sinks(uios, common.jobs));
      bool pass = true;
      for (const auto& c : checks) pass = pass && c["verdict"] == "pass";
      emit(common, {{"theorem", theorem}, {"max_n", max_n}, {"checks", checks}, {"verdict", pass ? "pass" : "fail"}});
      status = pass ? kExitOk : kExitFailed;
    } else if (vb->parsed()) {
      const BijectionParams p{parse_bijection(which), l, k};
      check_bijection_params(p);
      if (!uio_spec.empty()) {
        const auto r = verify_bijection(uio_option(uio_spec), p);
        json out = r;
        if (!r.clean()) out["reproduce"] = reproduce(p, r.uio);
        emit(common, out);
        status = r.clean() ? kExitOk : kExitFailed;
      } else {
        const json out = bijection_sweep(p, uios_up_to(max_n), common.jobs);
        emit(common, out);
        status = out["verdict"] == "clean" ? kExitOk : kExitFailed;
      }
    } else if (epos->parsed()) {
      if (!graph_text.empty()) {
        const auto semi = graph_text.find(';');
        if (graph_text.rfind("n=", 0) != 0 || semi == std::string::npos)
          throw std::invalid_argument("graph must look like n=4;1-2,1-3");
        const int gn = std::stoi(graph_text.substr(2, semi - 2));
        Graph g(gn);
        std::istringstream edges(graph_text.substr(semi + 1));
        std::string e;
        while (std::getline(edges, e, ',')) {
          const auto dash = e.find('-');
          if (dash == std::string::npos) throw std::invalid_argument("bad edge: " + e);
          g.add_edge(std::stoi(e.substr(0, dash)) - 1, std::stoi(e.substr(dash + 1)) - 1);
        }
        const auto c = e_coefficients(g);
        const auto r = e_positivity(c, gn);
        json out{{"graph", g.to_string()},     {"basis", "e"}, {"coeffs", coeffs_to_json(c)}, {"e_positive", r.positive},
                 {"min_coeff", to_decimal(r.min_coeff)}};
        if (r.witness) out["witness"] = *r.witness;
        emit(common, out);
        status = r.positive ? kExitOk : kExitFailed;
      } else {
        json per_n = json::array();
        bool all_positive = true;
        json witness;
        for (int size = 1; size <= max_n; ++size) {
          const auto uios = enumerate_uios(size);
          const auto reports = parallel_map(uios.size(), common.jobs, [&](std::size_t i) {
            return is_e_positive(incomparability_graph(uios[i]));
          });
          std::size_t positive = 0;
          for (std::size_t i = 0; i < reports.size(); ++i) {
            if (reports[i].positive) {
              ++positive;
            } else if (witness.is_null()) {
              witness = {{"uio", uios[i].to_string()}, {"min_coeff", to_decimal(reports[i].min_coeff)},
                         {"partition", *reports[i].witness}};
            }
          }
          all_positive = all_positive && positive == uios.size();
          per_n.push_back({{"n", size}, {"uios", uios.size()}, {"e_positive", positive}});
        }
        json out{{"max_n", max_n}, {"instances", per_n},
                 {"verdict", all_positive ? "all e-positive" : "not all e-positive"}};
        if (!witness.is_null()) out["counterexample"] = witness;
        emit(common, out);
        status = all_positive ? kExitOk : kExitFailed;
      }
    } else if (sinks->parsed()) {
      auto row = [](const Uio& u) {
        const Graph g = incomparability_graph(u);
        const auto counts = acyclic_sink_counts(g);
        const auto sums = sink_sums(e_coefficients(g), u.size());
        json per_j = json::array();
        bool ok = true;
        for (const auto& [j, s] : sums) {
          auto it = counts.find(j);
          const Integer c = it == counts.end() ? Integer(0) : it->second;
          ok = ok && c == s;
          per_j.push_back({{"j", j}, {"sinks", to_decimal(c)}, {"coeff_sum", to_decimal(s)}});
        }
        return json{{"uio", u.to_string()}, {"per_j", per_j}, {"matches", ok}};
      };
      if (!uio_spec.empty()) {
        const json r = row(uio_option(uio_spec));
        emit(common, r);
        status = r["matches"].get<bool>() ? kExitOk : kExitFailed;
      } else {
        const auto uios = uios_up_to(max_n);
        const auto rows = parallel_map(uios.size(), common.jobs, [&](std::size_t i) { return row(uios[i]); });
        bool ok = true;
        json instances = json::array();
        for (const auto& r : rows) {
          ok = ok && r["matches"].get<bool>();
          instances.push_back({{"uio", r["uio"]}, {"matches", r["matches"]}});
        }
        emit(common, {{"max_n", max_n}, {"instances", instances}, {"verdict", ok ? "pass" : "fail"}});
        status = ok ? kExitOk : kExitFailed;
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (common.timing) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    std::cerr << "elapsed: " << dt.count() << " s\n";
  }
  return status;
}
