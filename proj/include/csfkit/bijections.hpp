#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "csfkit/corrects.hpp"
#include "csfkit/uio.hpp"

namespace csfkit {

enum class BijectionKind { l1k, l2, l21 };

std::string bijection_name(BijectionKind b);
BijectionKind parse_bijection(const std::string& name);

/// Result of applying one map to one element.
struct Mapped {
  /// Codomain part the value belongs to (index into the part list).
  int part = 0;
  std::optional<BlockSequence> value;
  /// The proof case that produced `value` ("1221", "411", ...).
  std::string label;
  /// Every case whose condition held. More than one is a multi-case finding;
  /// none (value empty) is a no-case finding.
  std::vector<std::string> fired;
};

// ---- p_l x E_{k+1}  ->  M_{l,1^{k+1}} (part 0)  +  M_{l+1,1^k} (part 1) -----

/// x = (w | eps) with w in P_l, eps in E_{k+1}.
Mapped phi_l1k(const Uio& u, int l, int k, const BlockSequence& x);
/// part 0: (w | eps); part 1: (w_1..w_{l+1} | eps_1..eps_k).
Mapped psi_l1k(const Uio& u, int l, int k, int part, const BlockSequence& y);

// ---- (P_{l,2} minus M_{l,2})  ->  P_{l+2} -----------------------------------

/// tau = max{i <= l : q_1 does not precede w_i, or (i < l and w_i ~ w_{i+1})}.
int tau_l2(const Uio& u, std::span<const int> w, int q1);
/// x = (w | q0, q1).
Mapped phi_l2(const Uio& u, int l, const BlockSequence& x);
/// y = (u_1 .. u_{l+2}), a single block.
Mapped psi_l2(const Uio& u, int l, const BlockSequence& y);

// ---- P_l x M_{2,1} -> M_{l+2,1} (part 0) + M_{l+1,2} (part 1) + M_{l,2,1} (part 2)

/// x = (w | q0, q1 | z).
Mapped phi_l21(const Uio& u, int l, const BlockSequence& x);
/// part 0: (u | xi) with |u| = l+2; part 1: (w, xi | q0, q1) with |w,xi| = l+1;
/// part 2: (w | q0, q1 | z).
Mapped psi_l21(const Uio& u, int l, int part, const BlockSequence& y);

struct BijectionParams {
  BijectionKind which = BijectionKind::l1k;
  int l = 2;
  int k = 1;
};

/// A single problem found by the harness.
struct Finding {
  std::string kind;  // no-case, multi-case, codomain, roundtrip, inverse-domain
  std::string direction;  // phi or psi
  std::string uio;
  std::string input;
  std::string output;
  std::string label;
  std::vector<std::string> fired;
};

struct BijectionReport {
  BijectionParams params;
  std::string uio;
  std::size_t domain_size = 0;
  std::vector<std::pair<std::string, std::size_t>> codomain_sizes;
  std::size_t codomain_total = 0;
  std::size_t roundtrip_failures = 0;
  std::size_t codomain_violations = 0;
  std::size_t no_case = 0;
  std::size_t multi_case = 0;
  std::map<std::string, std::size_t> phi_cases;
  std::map<std::string, std::size_t> psi_cases;
  /// "phi-label>psi-label" for every domain element whose image maps back.
  std::map<std::string, std::size_t> case_pairs;
  /// "pass", "fail", or "skipped" (identity gate fails at these parameters).
  std::string identity_check = "skipped";
  /// The first few findings in enumeration order; counts above are complete.
  std::vector<Finding> findings;

  bool cardinality_ok() const { return domain_size == codomain_total; }
  bool clean() const {
    return cardinality_ok() && roundtrip_failures == 0 && codomain_violations == 0 && no_case == 0 &&
           multi_case == 0 && identity_check != "fail";
  }
};

/// Throws GateError when the parameters are gated out. The l2 bijection is
/// compared as a map of sets, so it runs even where its identity gate fails
/// (the monomial cross-check is then skipped).
void check_bijection_params(const BijectionParams& p);

BijectionReport verify_bijection(const Uio& u, const BijectionParams& p, std::size_t max_findings = 8);

void to_json(nlohmann::json& j, const Finding& f);
void to_json(nlohmann::json& j, const BijectionReport& r);

}  // namespace csfkit
