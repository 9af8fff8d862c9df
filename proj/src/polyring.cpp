#include "csfkit/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace csfkit {

VertexMonomial::VertexMonomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
  }
}

VertexMonomial VertexMonomial::from_vertices(int n, std::span<const int> vertices) {
  VertexMonomial m(n);
  for (int v : vertices) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex index out of range");
    ++m.exps_[static_cast<std::size_t>(v)];
  }
  return m;
}

int VertexMonomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

VertexMonomial VertexMonomial::operator*(const VertexMonomial& o) const {
  if (o.exps_.size() != exps_.size()) throw std::invalid_argument("monomials over different rings");
  VertexMonomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  return r;
}

std::string VertexMonomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'v' << (i + 1);
    if (exps_[i] > 1) os << '^' << exps_[i];
  }
  if (first) os << '1';
  return os.str();
}

bool GradedLex::operator()(const VertexMonomial& a, const VertexMonomial& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  auto ea = a.exponents(), eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

VPoly VPoly::constant(int n, const Integer& c) {
  VPoly p(n);
  p.add_term(VertexMonomial(n), c);
  return p;
}

VPoly VPoly::variable(int n, int v) {
  const int vs[] = {v};
  return monomial(VertexMonomial::from_vertices(n, vs));
}

VPoly VPoly::monomial(const VertexMonomial& m, const Integer& c) {
  VPoly p(m.vars());
  p.add_term(m, c);
  return p;
}

void VPoly::add_term(const VertexMonomial& m, const Integer& c) {
  if (m.vars() != n_) throw std::invalid_argument("monomial over a different ring");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void VPoly::check_same_ring(const VPoly& o) const {
  if (o.n_ != n_) throw std::invalid_argument("VPoly operands have different vertex counts");
}

VPoly& VPoly::operator+=(const VPoly& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

VPoly& VPoly::operator-=(const VPoly& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

VPoly& VPoly::operator*=(const Integer& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

VPoly operator*(const VPoly& a, const VPoly& b) {
  a.check_same_ring(b);
  VPoly r(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

VPoly VPoly::operator-() const {
  VPoly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

std::string VPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = m.degree() == 0;
    if (mag != 1 || unit) {
      os << mag;
      if (!unit) os << '*';
    }
    if (!unit) os << m.to_string();
  }
  return os.str();
}

Integer coeff_of(const VPoly& p, const VertexMonomial& alpha) {
  auto it = p.terms().find(alpha);
  return it == p.terms().end() ? Integer(0) : it->second;
}

bool is_monomial_positive(const VPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& t) { return t.second > 0; });
}

void to_json(nlohmann::json& j, const VPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (int v = 0; v < m.vars(); ++v) {
      if (m.exponent(v) > 0) exps[std::to_string(v + 1)] = m.exponent(v);
    }
    terms.push_back({{"exps", exps}, {"coeff", to_decimal(c)}});
  }
  j = nlohmann::json{{"n", p.vars()}, {"terms", terms}};
}

void from_json(const nlohmann::json& j, VPoly& p) {
  const int n = j.at("n").get<int>();
  p = VPoly(n);
  for (const auto& t : j.at("terms")) {
    VertexMonomial m(n);
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (const auto& [key, value] : t.at("exps").items()) {
      const int v = std::stoi(key);
      if (v < 1 || v > n) throw std::out_of_range("vertex index out of range in JSON");
      exps[static_cast<std::size_t>(v - 1)] = value.get<int>();
    }
    p.add_term(VertexMonomial(std::move(exps)), from_decimal(t.at("coeff").get<std::string>()));
  }
}

}  // namespace csfkit
