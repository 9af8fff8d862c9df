#pragma once

#include <vector>

#include "csfkit/partitions.hpp"
#include "csfkit/polyring.hpp"
#include "csfkit/symfunc.hpp"
#include "csfkit/uio.hpp"

namespace csfkit {

/// Sum over stable i-subsets S of prod_{v in S} v; 1 for i = 0, 0 outside [0, n].
VPoly e_G(int i, const Graph& g);

/// The ring map e_i -> e_i^G applied to f (converted to the e basis first).
VPoly phi_G(const SymF& f, const Graph& g);

VPoly p_G(int k, const Graph& g);
VPoly m_G(const Partition& lambda, const Graph& g);
/// Through phi_G of the Jacobi-Trudi e-expansion.
VPoly s_G(const Partition& lambda, const Graph& g);
/// det(e^G_{lambda*_i + j - i}) evaluated directly in the vertex ring.
VPoly s_G_determinant(const Partition& lambda, const Graph& g);

/// Compares, degree by degree up to n, the coefficient of m_mu(x) in
///   sum m_lambda(x) e^G_lambda,  sum s_lambda(x) s^G_{lambda*},  sum e_lambda(x) m^G_lambda.
bool cauchy_check(const Graph& g);

/// prod_v alpha(v)! [v^alpha] m^G_lambda.
Integer alpha_coefficient(const Graph& g, const std::vector<int>& alpha, const Partition& lambda);

/// The e_lambda coefficient of X_{G^alpha} against alpha_coefficient.
bool alpha_coefficient_check(const Graph& g, const std::vector<int>& alpha, const Partition& lambda);

}  // namespace csfkit
