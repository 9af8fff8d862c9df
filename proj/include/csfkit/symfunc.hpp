#pragma once

#include <string>

#include <json.hpp>

#include "csfkit/integer.hpp"
#include "csfkit/partitions.hpp"
#include "csfkit/polyring.hpp"

namespace csfkit {

enum class Basis { e, p, m, s };

std::string basis_name(Basis b);
Basis parse_basis(const std::string& name);

/// A homogeneous symmetric function of fixed degree, expanded in one basis.
/// Coefficients are integers: every conversion here is integral.
class SymF {
 public:
  SymF(Basis basis, int degree);

  /// c * b_lambda for the basis b.
  static SymF single(Basis basis, const Partition& lambda, const Integer& c = 1);
  static SymF e(const Partition& lambda) { return single(Basis::e, lambda); }
  static SymF p(const Partition& lambda) { return single(Basis::p, lambda); }
  static SymF m(const Partition& lambda) { return single(Basis::m, lambda); }
  static SymF s(const Partition& lambda) { return single(Basis::s, lambda); }

  Basis basis() const { return basis_; }
  int degree() const { return degree_; }
  const PartitionMap& coeffs() const { return coeffs_; }
  Integer coeff(const Partition& lambda) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(const Partition& lambda, const Integer& c);

  /// Same basis adds termwise; mixed bases are both pushed to m first.
  SymF& operator+=(const SymF& o);
  SymF& operator-=(const SymF& o);
  SymF& operator*=(const Integer& c);
  friend SymF operator+(SymF a, const SymF& b) { return a += b; }
  friend SymF operator-(SymF a, const SymF& b) { return a -= b; }
  friend SymF operator*(SymF a, const Integer& c) { return a *= c; }

  /// Literal equality: same basis, degree and coefficients.
  bool operator==(const SymF&) const = default;

  std::string to_string() const;

 private:
  Basis basis_;
  int degree_;
  PartitionMap coeffs_;
};

/// m-basis expansion, read off a concrete polynomial in `degree` variables.
SymF expand_in_monomials(const SymF& f);

/// e-basis expansion. Monomial inputs are solved against the e -> m
/// transition, which is unitriangular once e_mu is paired with m_{mu*}.
SymF to_e_basis(const SymF& f);

/// p_k in the e basis via Newton's recurrence.
SymF p_to_e(int k);

/// Jacobi-Trudi: s_lambda = det(e_{lambda*_i + j - i}), with e_0 = 1 and
/// e_{<0} = 0.
SymF schur_in_e(const Partition& lambda);

/// m_lambda in the e basis (cached).
const SymF& monomial_in_e(const Partition& lambda);

/// Product of degree deg(f) + deg(g). Two e (or two p) inputs stay in that
/// basis; anything else is multiplied in the e basis.
SymF multiply(const SymF& f, const SymF& g);
inline SymF operator*(const SymF& f, const SymF& g) { return multiply(f, g); }

/// True iff lhs and rhs agree in the m basis. Different degrees compare false.
bool check_identity(const SymF& lhs, const SymF& rhs);

/// f restricted to the variables x_1..x_vars, as a concrete polynomial.
VPoly to_polynomial(const SymF& f, int vars);

void to_json(nlohmann::json& j, const SymF& f);
void from_json(const nlohmann::json& j, SymF& f);

}  // namespace csfkit
