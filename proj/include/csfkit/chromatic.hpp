#pragma once

#include <map>
#include <optional>

#include <json.hpp>

#include "csfkit/partitions.hpp"
#include "csfkit/polyring.hpp"
#include "csfkit/symfunc.hpp"
#include "csfkit/uio.hpp"

namespace csfkit {

/// X_G in the m basis: each partition of V(G) into stable blocks with block
/// sizes lambda contributes prod_i r_i! m_lambda, r_i the part multiplicities.
SymF csf(const Graph& g);

/// Sum of x^c over proper colourings c : V -> {1..colors}, as a polynomial in
/// `colors` variables. Brute force; for cross-checking csf.
VPoly csf_coloring_oracle(const Graph& g, int colors);

/// Sum over edge subsets S of (-1)^|S| p_{lambda(S)}, lambda(S) the component
/// sizes of (V, S). Capped at 24 edges.
SymF csf_p_oracle(const Graph& g);

/// The c_lambda of X_G = sum c_lambda e_lambda.
PartitionMap e_coefficients(const Graph& g);

struct EPositivityReport {
  bool positive = true;
  /// Smallest c_lambda over all partitions of n, zeros included.
  Integer min_coeff = 0;
  /// First partition (canonical order) attaining a negative minimum.
  std::optional<Partition> witness;
};

EPositivityReport e_positivity(const PartitionMap& coeffs, int degree);
EPositivityReport is_e_positive(const Graph& g);

/// j -> sum of c_lambda over partitions of length j (j = 1..n, zeros kept).
std::map<int, Integer> sink_sums(const PartitionMap& coeffs, int degree);

/// Stanley's sink theorem on g: acyclic orientations with j sinks versus the
/// e-coefficient sums at length j.
bool sink_crosscheck(const Graph& g);

nlohmann::json coeffs_to_json(const PartitionMap& coeffs);

}  // namespace csfkit
