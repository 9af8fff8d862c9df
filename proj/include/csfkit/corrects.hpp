#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "csfkit/integer.hpp"
#include "csfkit/partitions.hpp"
#include "csfkit/polyring.hpp"
#include "csfkit/uio.hpp"

namespace csfkit {

using Seq = std::vector<int>;

/// A tuple of sequences over UIO elements, stored flat with block lengths.
/// For lambda-corrects every block is correct; in M-sets some blocks are
/// chains (e.g. the epsilon of P_l x E_k).
struct BlockSequence {
  Seq entries;
  std::vector<int> blocks;

  BlockSequence() = default;
  BlockSequence(Seq e, std::vector<int> b);
  /// Concatenation of the given pieces, one block each.
  static BlockSequence of(std::initializer_list<Seq> pieces);

  std::span<const int> block(std::size_t b) const;
  Seq block_copy(std::size_t b) const;

  auto operator<=>(const BlockSequence&) const = default;
  bool operator==(const BlockSequence&) const = default;

  /// 1-based entries, blocks separated by '|': "(1,2|3)".
  std::string to_string() const;
};

/// w_i does not succeed w_{i+1}, and every w_j (j >= 2) has an earlier w_i
/// with w_i not preceding w_j.
bool is_correct(const Uio& u, std::span<const int> w);

/// Every prefix {w_1..w_j} is connected in the incomparability graph.
bool prefixes_connected(const Uio& u, std::span<const int> w);

/// Correct sequences of length k in lexicographic order, pruned on prefixes.
void for_each_correct(const Uio& u, int k, const std::function<void(const Seq&)>& visit);
std::vector<Seq> enumerate_corrects(const Uio& u, int k);

/// Products of per-block correct sets, blocks of lengths lambda_1, lambda_2, ...
std::vector<BlockSequence> enumerate_lambda_corrects(const Uio& u, const Partition& lambda);

/// Strict chains e_1 < ... < e_k; the single empty chain for k = 0.
std::vector<Seq> enumerate_chains(const Uio& u, int k);

bool is_chain(const Uio& u, std::span<const int> e);

/// Sum over elements of the product of their entries.
VPoly monomial_sum(int n, const std::vector<BlockSequence>& set);
VPoly monomial_sum(int n, const std::vector<Seq>& set);

/// theta(w) = max{i < l : w_i ~ w_{i+1}}, 1-based. Throws on length < 2 or
/// when no such i exists (never for a correct sequence).
int theta(const Uio& u, std::span<const int> w);

/// Correct permutations of all n elements.
Integer hamiltonian_corrects_count(const Uio& u);

// ---- M-sets -------------------------------------------------------------

enum class MSet { l1, l1k, l2, l21, l2_1k };

std::string mset_name(MSet m);
MSet parse_mset(const std::string& name);

struct MSetParams {
  MSet which = MSet::l1;
  int l = 1;
  int k = 0;
  /// For 2^l 1^k: i_l < k + l (true) or i_l <= k + l (false).
  bool strict_last_index = true;
};

/// Raised when the product identity behind a theorem fails at the requested
/// parameters, so the M-set cannot be expected to match m^U_lambda.
class GateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (l,1), (l,1^k), (l,2), (l,2,1) or (2^l,1^k).
Partition mset_shape(const MSetParams& p);

/// Checks the multiplication identity that the theorem's proof rests on:
///   l1:  p_l p_1 = m_{l,1} + p_{l+1}
///   l1k: p_l e_k = m_{l,1^k} + m_{l+1,1^{k-1}}
///   l2:  p_l p_2 = m_{l,2} + p_{l+2}
///   l21: p_l m_{2,1} = m_{l+2,1} + m_{l+1,2} + m_{l,2,1}
/// 2^l 1^k rests on no such identity and always passes.
bool identity_gate_holds(const MSetParams& p);

/// Throws std::invalid_argument for malformed parameters and GateError when
/// the identity gate fails.
void check_mset_params(const MSetParams& p, bool enforce_gate = true);

// Membership predicates, entries 0-based; w, q, xi, eps are single blocks.
bool in_M_l1(const Uio& u, std::span<const int> w, int z);
bool in_M_l1k(const Uio& u, std::span<const int> w, std::span<const int> eps);
bool in_M_l2(const Uio& u, std::span<const int> w, int q0, int q1);
bool in_M_21(const Uio& u, int q0, int q1, int z);
/// Bit c-1 is set when clause c of M_{l,2,1} admits the element. Clause 1
/// is the pairwise-membership clause; 2 and 3 are the two exceptional families.
unsigned M_l21_clauses(const Uio& u, std::span<const int> w, int q0, int q1, int z);
bool in_M_l21(const Uio& u, std::span<const int> w, int q0, int q1, int z);
bool in_M_2l1k(const Uio& u, std::span<const int> xi, std::span<const int> eps, bool strict_last_index);

/// Streams the M-set in lexicographic order of its flattened blocks.
void for_each_in_M(const Uio& u, const MSetParams& p, const std::function<void(const BlockSequence&)>& visit,
                   bool enforce_gate = true);
std::vector<BlockSequence> build_M(const Uio& u, const MSetParams& p, bool enforce_gate = true);

std::vector<BlockSequence> build_M_l1(const Uio& u, int l);
std::vector<BlockSequence> build_M_l1k(const Uio& u, int l, int k);
std::vector<BlockSequence> build_M_l2(const Uio& u, int l);
std::vector<BlockSequence> build_M_l21(const Uio& u, int l);
std::vector<BlockSequence> build_M_2l1k(const Uio& u, int l, int k, bool strict_last_index = true);

struct MSetCheck {
  Partition shape;
  std::size_t size = 0;
  VPoly sum;
  VPoly oracle;
  bool matches = false;
};

/// monomial_sum(M) against m^G_shape on inc(U).
MSetCheck check_mset(const Uio& u, const MSetParams& p);

}  // namespace csfkit
