#include "csfkit/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "csfkit/limits.hpp"

namespace csfkit {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::e: return "e";
    case Basis::p: return "p";
    case Basis::m: return "m";
    case Basis::s: return "s";
  }
  return "?";
}

Basis parse_basis(const std::string& name) {
  if (name == "e") return Basis::e;
  if (name == "p") return Basis::p;
  if (name == "m") return Basis::m;
  if (name == "s") return Basis::s;
  throw std::invalid_argument("unknown basis: " + name);
}

SymF::SymF(Basis basis, int degree) : basis_(basis), degree_(degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
}

SymF SymF::single(Basis basis, const Partition& lambda, const Integer& c) {
  SymF f(basis, lambda.weight());
  f.add_term(lambda, c);
  return f;
}

Integer SymF::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void SymF::add_term(const Partition& lambda, const Integer& c) {
  if (lambda.weight() != degree_)
    throw std::invalid_argument("term " + lambda.to_string() + " has wrong weight for degree " +
                                std::to_string(degree_));
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SymF& SymF::operator+=(const SymF& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("adding symmetric functions of different degree");
  if (o.basis_ != basis_) {
    *this = expand_in_monomials(*this);
    const SymF rhs = expand_in_monomials(o);
    for (const auto& [lambda, c] : rhs.coeffs_) add_term(lambda, c);
    return *this;
  }
  for (const auto& [lambda, c] : o.coeffs_) add_term(lambda, c);
  return *this;
}

SymF& SymF::operator-=(const SymF& o) {
  SymF neg(o);
  neg *= Integer(-1);
  return *this += neg;
}

SymF& SymF::operator*=(const Integer& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [lambda, x] : coeffs_) x *= c;
  return *this;
}

std::string SymF::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, c] : coeffs_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (mag != 1) os << mag << '*';
    os << basis_name(basis_) << lambda.to_string();
  }
  return os.str();
}

namespace {

// A polynomial in a fixed number of variables; keys are exponent vectors
// packed one char per variable.
class ConcretePoly {
 public:
  explicit ConcretePoly(int vars) : vars_(vars) { terms_.emplace(std::string(vars, '\0'), 1); }

  void multiply_by_e(int k) {
    if (k == 0) return;
    std::unordered_map<std::string, Integer> next;
    for (const auto& [key, c] : terms_) {
      std::string work = key;
      choose(work, 0, k, c, next);
    }
    terms_ = std::move(next);
  }

  void multiply_by_p(int k) {
    std::unordered_map<std::string, Integer> next;
    for (const auto& [key, c] : terms_) {
      for (int v = 0; v < vars_; ++v) {
        std::string work = key;
        work[v] = static_cast<char>(work[v] + k);
        if (viable(work)) next[work] += c;
      }
    }
    terms_ = std::move(next);
  }

  /// Coefficient of x^lambda, with lambda padded by zeros.
  Integer sorted_coefficient(const Partition& lambda) const {
    std::string key(vars_, '\0');
    for (int i = 0; i < lambda.length(); ++i) key[i] = static_cast<char>(lambda[i]);
    auto it = terms_.find(key);
    return it == terms_.end() ? Integer(0) : it->second;
  }

 private:
  void choose(std::string& work, int from, int left, const Integer& c,
              std::unordered_map<std::string, Integer>& out) {
    if (left == 0) {
      if (viable(work)) out[work] += c;
      return;
    }
    for (int v = from; v <= vars_ - left; ++v) {
      ++work[v];
      choose(work, v + 1, left - 1, c, out);
      --work[v];
    }
  }

  // A partial product can only reach a weakly decreasing exponent vector of
  // total `vars_` if its decreasing envelope fits in that total.
  bool viable(const std::string& key) const {
    int envelope = 0, running = 0;
    for (int v = vars_ - 1; v >= 0; --v) {
      running = std::max(running, static_cast<int>(key[v]));
      envelope += running;
    }
    return envelope <= vars_;
  }

  int vars_;
  std::unordered_map<std::string, Integer> terms_;
};

PartitionMap expand_product(Basis b, const Partition& mu) {
  const int d = mu.weight();
  ConcretePoly poly(d);
  for (int part : mu.parts()) {
    if (b == Basis::e) poly.multiply_by_e(part);
    else poly.multiply_by_p(part);
  }
  PartitionMap row;
  for (const Partition& lambda : partitions_of(d)) {
    Integer c = poly.sorted_coefficient(lambda);
    if (!c.is_zero()) row.emplace(lambda, std::move(c));
  }
  return row;
}

struct Caches {
  std::mutex mu;
  std::map<std::pair<int, Partition>, PartitionMap> rows;  // (basis, mu) -> m-expansion
  std::map<int, SymF> p_in_e;
  std::map<Partition, SymF> m_in_e;
  std::map<Partition, SymF> s_in_e;
};

Caches& caches() {
  static Caches c;
  return c;
}

const PartitionMap& row_in_m(Basis b, const Partition& mu) {
  auto& c = caches();
  const auto key = std::make_pair(static_cast<int>(b), mu);
  {
    std::lock_guard lock(c.mu);
    auto it = c.rows.find(key);
    if (it != c.rows.end()) return it->second;
  }
  PartitionMap row = expand_product(b, mu);
  std::lock_guard lock(c.mu);
  return c.rows.try_emplace(key, std::move(row)).first->second;
}

SymF solve_m_to_e(const SymF& f) {
  const int d = f.degree();
  SymF out(Basis::e, d);
  PartitionMap solved;
  for (const Partition& lambda : partitions_of(d)) {
    Integer value = f.coeff(lambda);
    for (const auto& [nu, c] : solved) {
      const auto& row = row_in_m(Basis::e, nu);
      auto it = row.find(lambda);
      if (it != row.end()) value -= c * it->second;
    }
    const Partition mu = conjugate(lambda);
    const auto& diag = row_in_m(Basis::e, mu);
    auto it = diag.find(lambda);
    if (it == diag.end() || it->second != 1)
      throw std::logic_error("e -> m transition is not unitriangular at " + lambda.to_string());
    if (!value.is_zero()) solved.emplace(mu, value);
  }
  for (const auto& [mu, c] : solved) out.add_term(mu, c);
  return out;
}

}  // namespace

SymF expand_in_monomials(const SymF& f) {
  require_degree(f.degree(), "expand_in_monomials");
  if (f.basis() == Basis::m) return f;
  if (f.basis() == Basis::s) return expand_in_monomials(to_e_basis(f));
  SymF out(Basis::m, f.degree());
  for (const auto& [mu, c] : f.coeffs()) {
    for (const auto& [lambda, a] : row_in_m(f.basis(), mu)) out.add_term(lambda, c * a);
  }
  return out;
}

SymF p_to_e(int k) {
  if (k < 1) throw std::invalid_argument("p_to_e: k must be positive");
  require_degree(k, "p_to_e");
  auto& c = caches();
  {
    std::lock_guard lock(c.mu);
    auto it = c.p_in_e.find(k);
    if (it != c.p_in_e.end()) return it->second;
  }
  SymF out = SymF::single(Basis::e, Partition{k}, (k % 2 == 1) ? Integer(k) : Integer(-k));
  for (int i = 1; i < k; ++i) {
    SymF term = multiply(SymF::e(Partition{i}), p_to_e(k - i));
    if (i % 2 == 0) term *= Integer(-1);
    out += term;
  }
  std::lock_guard lock(c.mu);
  return c.p_in_e.try_emplace(k, std::move(out)).first->second;
}

SymF schur_in_e(const Partition& lambda) {
  require_degree(lambda.weight(), "schur_in_e");
  auto& cache = caches();
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.s_in_e.find(lambda);
    if (it != cache.s_in_e.end()) return it->second;
  }
  const Partition dual = conjugate(lambda);
  const int r = dual.length();
  SymF out(Basis::e, lambda.weight());
  std::vector<int> picked;
  // Leibniz expansion over permutations whose entries e_{dual_i + j - i} are
  // nonzero; the sign of each choice is the parity of unused columns before it.
  auto rec = [&](auto&& self, int row, std::uint32_t used, int sign) -> void {
    if (row == r) {
      std::vector<int> parts;
      for (int x : picked) if (x > 0) parts.push_back(x);
      out.add_term(Partition(std::move(parts)), Integer(sign));
      return;
    }
    int before = 0;
    for (int col = 0; col < r; ++col) {
      if (used & (1u << col)) continue;
      const int index = dual[row] + col - row;
      if (index >= 0) {
        picked.push_back(index);
        self(self, row + 1, used | (1u << col), (before % 2 == 0) ? sign : -sign);
        picked.pop_back();
      }
      ++before;
    }
  };
  rec(rec, 0, 0u, 1);
  std::lock_guard lock(cache.mu);
  return cache.s_in_e.try_emplace(lambda, std::move(out)).first->second;
}

const SymF& monomial_in_e(const Partition& lambda) {
  auto& c = caches();
  {
    std::lock_guard lock(c.mu);
    auto it = c.m_in_e.find(lambda);
    if (it != c.m_in_e.end()) return it->second;
  }
  SymF solved = solve_m_to_e(SymF::m(lambda));
  std::lock_guard lock(c.mu);
  return c.m_in_e.try_emplace(lambda, std::move(solved)).first->second;
}

SymF to_e_basis(const SymF& f) {
  require_degree(f.degree(), "to_e_basis");
  switch (f.basis()) {
    case Basis::e:
      return f;
    case Basis::m:
      return solve_m_to_e(f);
    case Basis::p: {
      SymF out(Basis::e, f.degree());
      for (const auto& [mu, c] : f.coeffs()) {
        SymF term = SymF::single(Basis::e, Partition{}, 1);
        for (int part : mu.parts()) term = multiply(term, p_to_e(part));
        out += term * c;
      }
      return out;
    }
    case Basis::s: {
      SymF out(Basis::e, f.degree());
      for (const auto& [mu, c] : f.coeffs()) out += schur_in_e(mu) * c;
      return out;
    }
  }
  throw std::logic_error("unreachable basis");
}

SymF multiply(const SymF& f, const SymF& g) {
  const int d = f.degree() + g.degree();
  require_degree(d, "multiply");
  if (f.basis() == g.basis() && (f.basis() == Basis::e || f.basis() == Basis::p)) {
    SymF out(f.basis(), d);
    for (const auto& [a, ca] : f.coeffs()) {
      for (const auto& [b, cb] : g.coeffs()) out.add_term(a.merged(b), ca * cb);
    }
    return out;
  }
  return multiply(to_e_basis(f), to_e_basis(g));
}

bool check_identity(const SymF& lhs, const SymF& rhs) {
  if (lhs.degree() != rhs.degree()) return false;
  return expand_in_monomials(lhs).coeffs() == expand_in_monomials(rhs).coeffs();
}

VPoly to_polynomial(const SymF& f, int vars) {
  VPoly out(vars);
  const SymF in_m = expand_in_monomials(f);
  for (const auto& [lambda, c] : in_m.coeffs()) {
    if (lambda.length() > vars) continue;
    std::vector<int> exps(static_cast<std::size_t>(vars), 0);
    std::copy(lambda.parts().begin(), lambda.parts().end(), exps.begin());
    std::sort(exps.begin(), exps.end());
    do {
      out.add_term(VertexMonomial(exps), c);
    } while (std::next_permutation(exps.begin(), exps.end()));
  }
  return out;
}

void to_json(nlohmann::json& j, const SymF& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [lambda, c] : f.coeffs())
    terms.push_back({{"partition", lambda}, {"coeff", to_decimal(c)}});
  j = nlohmann::json{{"basis", basis_name(f.basis())}, {"degree", f.degree()}, {"terms", terms}};
}

void from_json(const nlohmann::json& j, SymF& f) {
  f = SymF(parse_basis(j.at("basis").get<std::string>()), j.at("degree").get<int>());
  for (const auto& t : j.at("terms"))
    f.add_term(t.at("partition").get<Partition>(), from_decimal(t.at("coeff").get<std::string>()));
}

}  // namespace csfkit
