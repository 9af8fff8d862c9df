#include "csfkit/corrects.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "csfkit/ganalogue.hpp"
#include "csfkit/limits.hpp"
#include "csfkit/symfunc.hpp"

namespace csfkit {

BlockSequence::BlockSequence(Seq e, std::vector<int> b) : entries(std::move(e)), blocks(std::move(b)) {
  if (std::accumulate(blocks.begin(), blocks.end(), 0) != static_cast<int>(entries.size()))
    throw std::invalid_argument("block lengths do not cover the entries");
}

BlockSequence BlockSequence::of(std::initializer_list<Seq> pieces) {
  BlockSequence out;
  for (const Seq& p : pieces) {
    out.entries.insert(out.entries.end(), p.begin(), p.end());
    out.blocks.push_back(static_cast<int>(p.size()));
  }
  return out;
}

std::span<const int> BlockSequence::block(std::size_t b) const {
  std::size_t start = 0;
  for (std::size_t i = 0; i < b; ++i) start += static_cast<std::size_t>(blocks.at(i));
  return std::span<const int>(entries).subspan(start, static_cast<std::size_t>(blocks.at(b)));
}

Seq BlockSequence::block_copy(std::size_t b) const {
  auto s = block(b);
  return Seq(s.begin(), s.end());
}

std::string BlockSequence::to_string() const {
  std::ostringstream os;
  os << '(';
  std::size_t pos = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) os << '|';
    for (int i = 0; i < blocks[b]; ++i, ++pos) {
      if (i) os << ',';
      os << entries[pos] + 1;
    }
  }
  os << ')';
  return os.str();
}

namespace {

// Condition (a) and (b) for the last entry only, given a correct prefix.
bool extends_correctly(const Uio& u, std::span<const int> w) {
  const std::size_t j = w.size() - 1;
  if (j == 0) return true;
  if (u.succeeds(w[j - 1], w[j])) return false;
  for (std::size_t i = 0; i < j; ++i)
    if (!u.precedes(w[i], w[j])) return true;
  return false;
}

void require_length(int k, const char* what) {
  if (k > Limits::max_correct_length())
    throw LimitError(std::string(what) + ": length " + std::to_string(k) + " exceeds cap " +
                     std::to_string(Limits::max_correct_length()));
}

}  // namespace

bool is_correct(const Uio& u, std::span<const int> w) {
  if (w.empty()) return false;
  for (int x : w)
    if (x < 0 || x >= u.size()) return false;
  for (std::size_t j = 1; j <= w.size(); ++j)
    if (!extends_correctly(u, w.first(j))) return false;
  return true;
}

bool prefixes_connected(const Uio& u, std::span<const int> w) {
  for (std::size_t j = 1; j <= w.size(); ++j) {
    // Connectivity of the distinct elements among w_1..w_j under ~.
    std::vector<int> nodes(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j));
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    std::vector<bool> seen(nodes.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < nodes.size(); ++b) {
        if (!seen[b] && u.incomparable(nodes[a], nodes[b])) {
          seen[b] = true;
          ++reached;
          stack.push_back(b);
        }
      }
    }
    if (reached != nodes.size()) return false;
  }
  return true;
}

void for_each_correct(const Uio& u, int k, const std::function<void(const Seq&)>& visit) {
  if (k < 1) throw std::invalid_argument("correct sequences have positive length");
  require_length(k, "for_each_correct");
  Seq w;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(w.size()) == k) {
      visit(w);
      return;
    }
    for (int x = 0; x < u.size(); ++x) {
      w.push_back(x);
      if (extends_correctly(u, w)) self(self);
      w.pop_back();
    }
  };
  rec(rec);
}

std::vector<Seq> enumerate_corrects(const Uio& u, int k) {
  std::vector<Seq> out;
  for_each_correct(u, k, [&](const Seq& w) { out.push_back(w); });
  return out;
}

std::vector<BlockSequence> enumerate_lambda_corrects(const Uio& u, const Partition& lambda) {
  require_length(lambda.weight(), "enumerate_lambda_corrects");
  std::vector<BlockSequence> out{BlockSequence{}};
  for (int part : lambda.parts()) {
    const auto block = enumerate_corrects(u, part);
    std::vector<BlockSequence> next;
    next.reserve(out.size() * block.size());
    for (const auto& prefix : out) {
      for (const Seq& w : block) {
        BlockSequence b = prefix;
        b.entries.insert(b.entries.end(), w.begin(), w.end());
        b.blocks.push_back(part);
        next.push_back(std::move(b));
      }
    }
    out = std::move(next);
  }
  return out;
}

bool is_chain(const Uio& u, std::span<const int> e) {
  for (std::size_t i = 0; i + 1 < e.size(); ++i)
    if (!u.precedes(e[i], e[i + 1])) return false;
  return true;
}

std::vector<Seq> enumerate_chains(const Uio& u, int k) {
  if (k < 0) throw std::invalid_argument("negative chain length");
  std::vector<Seq> out;
  Seq e;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(e.size()) == k) {
      out.push_back(e);
      return;
    }
    for (int x = from; x < u.size(); ++x) {
      if (!e.empty() && !u.precedes(e.back(), x)) continue;
      e.push_back(x);
      self(self, x + 1);
      e.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

VPoly monomial_sum(int n, const std::vector<BlockSequence>& set) {
  VPoly out(n);
  for (const auto& b : set) out.add_term(VertexMonomial::from_vertices(n, b.entries), 1);
  return out;
}

VPoly monomial_sum(int n, const std::vector<Seq>& set) {
  VPoly out(n);
  for (const auto& w : set) out.add_term(VertexMonomial::from_vertices(n, w), 1);
  return out;
}

int theta(const Uio& u, std::span<const int> w) {
  if (w.size() < 2) throw std::invalid_argument("theta needs a block of length at least 2");
  for (std::size_t i = w.size() - 1; i >= 1; --i)
    if (u.incomparable(w[i - 1], w[i])) return static_cast<int>(i);
  throw std::logic_error("theta: no adjacent incomparable pair");
}

Integer hamiltonian_corrects_count(const Uio& u) {
  const int n = u.size();
  if (n > 9) throw LimitError("hamiltonian_corrects_count: n exceeds 9");
  Integer count = 0;
  Seq w;
  std::uint32_t used = 0;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(w.size()) == n) {
      ++count;
      return;
    }
    for (int x = 0; x < n; ++x) {
      if ((used >> x) & 1u) continue;
      w.push_back(x);
      if (extends_correctly(u, w)) {
        used |= 1u << x;
        self(self);
        used &= ~(1u << x);
      }
      w.pop_back();
    }
  };
  rec(rec);
  return count;
}

// ---- M-sets -------------------------------------------------------------

std::string mset_name(MSet m) {
  switch (m) {
    case MSet::l1: return "l1";
    case MSet::l1k: return "l1k";
    case MSet::l2: return "l2";
    case MSet::l21: return "l21";
    case MSet::l2_1k: return "2l1k";
  }
  return "?";
}

MSet parse_mset(const std::string& name) {
  if (name == "l1") return MSet::l1;
  if (name == "l1k") return MSet::l1k;
  if (name == "l2") return MSet::l2;
  if (name == "l21") return MSet::l21;
  if (name == "2l1k") return MSet::l2_1k;
  throw std::invalid_argument("unknown M-set: " + name);
}

Partition mset_shape(const MSetParams& p) {
  switch (p.which) {
    case MSet::l1: return Partition{p.l, 1};
    case MSet::l1k: {
      std::vector<int> parts(static_cast<std::size_t>(p.k), 1);
      parts.push_back(p.l);
      return Partition(parts);
    }
    case MSet::l2: return Partition{p.l, 2};
    case MSet::l21: return Partition{p.l, 2, 1};
    case MSet::l2_1k: {
      std::vector<int> parts(static_cast<std::size_t>(p.l), 2);
      parts.insert(parts.end(), static_cast<std::size_t>(p.k), 1);
      return Partition(parts);
    }
  }
  throw std::logic_error("unreachable M-set");
}

namespace {

SymF p_single(int k) { return SymF::p(Partition{k}); }

SymF m_of(std::vector<int> parts) { return SymF::m(Partition(std::move(parts))); }

}  // namespace

bool identity_gate_holds(const MSetParams& p) {
  switch (p.which) {
    case MSet::l1:
      return check_identity(p_single(p.l) * p_single(1), m_of({p.l, 1}) + p_single(p.l + 1));
    case MSet::l1k: {
      std::vector<int> with_l(static_cast<std::size_t>(p.k), 1), with_l1(static_cast<std::size_t>(p.k - 1), 1);
      with_l.push_back(p.l);
      with_l1.push_back(p.l + 1);
      return check_identity(p_single(p.l) * SymF::e(Partition{p.k}), m_of(with_l) + m_of(with_l1));
    }
    case MSet::l2:
      return check_identity(p_single(p.l) * p_single(2), m_of({p.l, 2}) + p_single(p.l + 2));
    case MSet::l21:
      return check_identity(p_single(p.l) * m_of({2, 1}),
                            m_of({p.l + 2, 1}) + m_of({p.l + 1, 2}) + m_of({p.l, 2, 1}));
    case MSet::l2_1k:
      return true;
  }
  return false;
}

void check_mset_params(const MSetParams& p, bool enforce_gate) {
  const std::string name = mset_name(p.which);
  switch (p.which) {
    case MSet::l1:
      if (p.l < 1) throw std::invalid_argument(name + ": l must be at least 1");
      break;
    case MSet::l1k:
      if (p.l < 1 || p.k < 1) throw std::invalid_argument(name + ": l and k must be at least 1");
      break;
    case MSet::l2:
    case MSet::l21:
      if (p.l < 2) throw std::invalid_argument(name + ": l must be at least 2");
      break;
    case MSet::l2_1k:
      if (p.l < 1 || p.k < 0) throw std::invalid_argument(name + ": need l >= 1 and k >= 0");
      break;
  }
  require_degree(mset_shape(p).weight(), name.c_str());
  if (enforce_gate && !identity_gate_holds(p))
    throw GateError(name + ": the product identity fails at l=" + std::to_string(p.l) +
                    ", k=" + std::to_string(p.k));
}

namespace {

bool above_all(const Uio& u, int z, std::span<const int> w) {
  for (int x : w)
    if (!u.precedes(x, z)) return false;
  return true;
}

bool exists_gamma(std::span<const int> w, int th, const std::function<bool(int)>& pred) {
  const int l = static_cast<int>(w.size());
  for (int g = th + 1; g < l; ++g)
    if (pred(w[static_cast<std::size_t>(g - 1)])) return true;
  return false;
}

}  // namespace

bool in_M_l1(const Uio& u, std::span<const int> w, int z) {
  return above_all(u, z, w) || u.precedes(z, w.back());
}

bool in_M_l1k(const Uio& u, std::span<const int> w, std::span<const int> eps) {
  for (int e : eps)
    if (!(u.precedes(e, w.back()) || above_all(u, e, w))) return false;
  return true;
}

bool in_M_l2(const Uio& u, std::span<const int> w, int q0, int q1) {
  const int th = theta(u, w);
  const auto at = [&](int i) { return w[static_cast<std::size_t>(i - 1)]; };
  const bool first = above_all(u, q0, w.first(w.size() - 1)) && u.precedes(w.back(), q1);
  const bool second = u.succeeds(at(th), q0) && u.succeeds(at(th + 1), q1);
  return first || second;
}

bool in_M_21(const Uio& u, int q0, int q1, int z) {
  const int q[2] = {q0, q1};
  return above_all(u, z, q) || u.precedes(z, q1);
}

unsigned M_l21_clauses(const Uio& u, std::span<const int> w, int q0, int q1, int z) {
  unsigned mask = 0;
  if (in_M_l2(u, w, q0, q1) && in_M_l1(u, w, z) && in_M_21(u, q0, q1, z)) mask |= 1u;
  const int th = theta(u, w);
  const int wl = w.back();
  const int q[2] = {q0, q1};
  if (u.succeeds(wl, z) && above_all(u, z, q) &&
      exists_gamma(w, th, [&](int wg) { return u.incomparable(wg, z) && u.succeeds(wg, q1); }))
    mask |= 2u;
  if (u.succeeds(wl, z) && u.succeeds(z, q1) &&
      exists_gamma(w, th, [&](int wg) {
        return u.incomparable(wg, z) && u.incomparable(z, q0) && u.succeeds(wg, q0);
      }))
    mask |= 4u;
  return mask;
}

bool in_M_l21(const Uio& u, std::span<const int> w, int q0, int q1, int z) {
  return M_l21_clauses(u, w, q0, q1, z) != 0;
}

bool in_M_2l1k(const Uio& u, std::span<const int> xi, std::span<const int> eps, bool strict_last_index) {
  const int l = static_cast<int>(xi.size());
  const int bound = static_cast<int>(eps.size()) - (strict_last_index ? 1 : 0);
  // Greedy leftmost matching decides whether increasing indices exist.
  int next = 1;
  for (int j = 0; j < l; ++j) {
    while (next <= bound && !u.incomparable(xi[static_cast<std::size_t>(j)], eps[static_cast<std::size_t>(next - 1)]))
      ++next;
    if (next > bound) return false;
    ++next;
  }
  return true;
}

void for_each_in_M(const Uio& u, const MSetParams& p, const std::function<void(const BlockSequence&)>& visit,
                   bool enforce_gate) {
  check_mset_params(p, enforce_gate);
  const int n = u.size();
  switch (p.which) {
    case MSet::l1:
      for_each_correct(u, p.l, [&](const Seq& w) {
        for (int z = 0; z < n; ++z)
          if (in_M_l1(u, w, z)) visit(BlockSequence::of({w, {z}}));
      });
      return;
    case MSet::l1k: {
      const auto chains = enumerate_chains(u, p.k);
      for_each_correct(u, p.l, [&](const Seq& w) {
        for (const Seq& e : chains)
          if (in_M_l1k(u, w, e)) visit(BlockSequence::of({w, e}));
      });
      return;
    }
    case MSet::l2: {
      const auto pairs = enumerate_corrects(u, 2);
      for_each_correct(u, p.l, [&](const Seq& w) {
        for (const Seq& q : pairs)
          if (in_M_l2(u, w, q[0], q[1])) visit(BlockSequence::of({w, q}));
      });
      return;
    }
    case MSet::l21: {
      const auto pairs = enumerate_corrects(u, 2);
      for_each_correct(u, p.l, [&](const Seq& w) {
        for (const Seq& q : pairs)
          for (int z = 0; z < n; ++z)
            if (in_M_l21(u, w, q[0], q[1], z)) visit(BlockSequence::of({w, q, {z}}));
      });
      return;
    }
    case MSet::l2_1k: {
      const auto xis = enumerate_chains(u, p.l);
      const auto epss = enumerate_chains(u, p.k + p.l);
      for (const Seq& xi : xis)
        for (const Seq& e : epss)
          if (in_M_2l1k(u, xi, e, p.strict_last_index)) visit(BlockSequence::of({xi, e}));
      return;
    }
  }
}

std::vector<BlockSequence> build_M(const Uio& u, const MSetParams& p, bool enforce_gate) {
  std::vector<BlockSequence> out;
  for_each_in_M(u, p, [&](const BlockSequence& b) { out.push_back(b); }, enforce_gate);
  return out;
}

std::vector<BlockSequence> build_M_l1(const Uio& u, int l) { return build_M(u, {MSet::l1, l, 1}); }
std::vector<BlockSequence> build_M_l1k(const Uio& u, int l, int k) { return build_M(u, {MSet::l1k, l, k}); }
std::vector<BlockSequence> build_M_l2(const Uio& u, int l) { return build_M(u, {MSet::l2, l, 0}); }
std::vector<BlockSequence> build_M_l21(const Uio& u, int l) { return build_M(u, {MSet::l21, l, 0}); }
std::vector<BlockSequence> build_M_2l1k(const Uio& u, int l, int k, bool strict_last_index) {
  return build_M(u, {MSet::l2_1k, l, k, strict_last_index});
}

MSetCheck check_mset(const Uio& u, const MSetParams& p) {
  MSetCheck r;
  r.shape = mset_shape(p);
  r.sum = VPoly(u.size());
  for_each_in_M(u, p, [&](const BlockSequence& b) {
    ++r.size;
    r.sum.add_term(VertexMonomial::from_vertices(u.size(), b.entries), 1);
  });
  r.oracle = m_G(r.shape, incomparability_graph(u));
  r.matches = r.sum == r.oracle;
  return r;
}

}  // namespace csfkit
