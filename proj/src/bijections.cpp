#include "csfkit/bijections.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "csfkit/ganalogue.hpp"
#include "csfkit/symfunc.hpp"

namespace csfkit {

std::string bijection_name(BijectionKind b) {
  switch (b) {
    case BijectionKind::l1k: return "l1k";
    case BijectionKind::l2: return "l2";
    case BijectionKind::l21: return "l21";
  }
  return "?";
}

BijectionKind parse_bijection(const std::string& name) {
  if (name == "l1k") return BijectionKind::l1k;
  if (name == "l2") return BijectionKind::l2;
  if (name == "l21") return BijectionKind::l21;
  throw std::invalid_argument("unknown bijection: " + name);
}

namespace {

// Order relations with 1-based positions into a block; positions outside
// the block make every relation false.
class Rel {
 public:
  Rel(const Uio& u, std::span<const int> s) : u_(u), s_(s) {}

  int len() const { return static_cast<int>(s_.size()); }
  bool has(int i) const { return i >= 1 && i <= len(); }
  int operator()(int i) const { return s_[static_cast<std::size_t>(i - 1)]; }

  bool lt(int a, int b) const { return a >= 0 && b >= 0 && u_.precedes(a, b); }
  bool gt(int a, int b) const { return lt(b, a); }
  bool inc(int a, int b) const { return a >= 0 && b >= 0 && u_.incomparable(a, b); }
  int at(int i) const { return has(i) ? (*this)(i) : -1; }

  /// x above every entry of positions [from, to].
  bool above(int x, int from, int to) const {
    for (int i = from; i <= to; ++i)
      if (!lt(at(i), x)) return false;
    return true;
  }
  bool above_all(int x) const { return above(x, 1, len()); }

 private:
  const Uio& u_;
  std::span<const int> s_;
};

Seq slice(std::span<const int> s, int from, int to) {  // 1-based, inclusive
  Seq out;
  for (int i = from; i <= to; ++i) out.push_back(s[static_cast<std::size_t>(i - 1)]);
  return out;
}

Seq without(std::span<const int> s, int a, int b) {  // drop 1-based positions a and b
  Seq out;
  for (int i = 1; i <= static_cast<int>(s.size()); ++i)
    if (i != a && i != b) out.push_back(s[static_cast<std::size_t>(i - 1)]);
  return out;
}

Seq concat(std::initializer_list<Seq> parts) {
  Seq out;
  for (const Seq& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Mapped make(int part, BlockSequence value, std::string label) {
  Mapped m;
  m.part = part;
  m.value = std::move(value);
  m.fired = {label};
  m.label = std::move(label);
  return m;
}

// Records which sibling cases held at each level of a case tree.
struct Trace {
  std::vector<std::string> overlaps;
  std::string dead_end;

  /// Index of the first branch whose condition holds, or -1.
  int pick(const std::string& parent, std::initializer_list<std::pair<const char*, bool>> branches) {
    int first = -1, index = 0;
    std::vector<std::string> held;
    for (const auto& [label, cond] : branches) {
      if (cond) {
        if (first < 0) first = index;
        held.emplace_back(label);
      }
      ++index;
    }
    if (held.size() > 1) overlaps.insert(overlaps.end(), held.begin(), held.end());
    if (first < 0) dead_end = parent.empty() ? "root" : parent;
    return first;
  }

  Mapped finish(Mapped m) const {
    if (!overlaps.empty()) m.fired = overlaps;
    return m;
  }

  Mapped none() const {
    Mapped m;
    m.label = "none under " + dead_end;
    if (!overlaps.empty()) m.fired = overlaps;
    return m;
  }
};

struct L2Image {
  Seq seq;
  std::string label;
};

L2Image phi_l2_core(const Uio& u, std::span<const int> w, int q0, int q1) {
  const Rel W(u, w);
  const int l = W.len();
  if (W.above_all(q0)) return {concat({slice(w, 1, l - 1), {q1, W(l), q0}}), "1"};
  const int t = tau_l2(u, w, q1);
  if (W.lt(q0, W(t))) return {concat({slice(w, 1, t), {q1, q0}, slice(w, t + 1, l)}), "2"};
  return {concat({slice(w, 1, t), {q0, q1}, slice(w, t + 1, l)}), "3"};
}

struct L2Preimage {
  Seq w;
  int q0, q1;
  std::string label;
};

L2Preimage psi_l2_core(const Uio& u, int l, std::span<const int> s) {
  const Rel S(u, s);
  if (S.above(S(l + 2), 1, l - 1) && S.gt(S(l + 2), S(l + 1)))
    return {concat({slice(s, 1, l - 1), {S(l + 1)}}), S(l + 2), S(l), "1"};
  const int tb = theta(u, s);
  const Seq rest = without(s, tb, tb + 1);
  if (tb >= 2 && S.lt(S(tb + 1), S(tb - 1))) return {rest, S(tb + 1), S(tb), "2"};
  return {rest, S(tb), S(tb + 1), "3"};
}

}  // namespace

// ---- l1k ----------------------------------------------------------------

Mapped phi_l1k(const Uio& u, int l, int k, const BlockSequence& x) {
  const Seq w = x.block_copy(0);
  const Seq eps = x.block_copy(1);
  if (static_cast<int>(w.size()) != l || static_cast<int>(eps.size()) != k + 1)
    throw std::invalid_argument("phi_l1k: element has the wrong shape");
  const Rel W(u, w);
  int m = 0;
  for (int i = 1; i <= k + 1; ++i) {
    const int e = eps[static_cast<std::size_t>(i - 1)];
    if (!(W.lt(e, W(l)) || W.above_all(e))) m = i;
  }
  if (m == 0) return make(0, x, "1");
  Seq rest = eps;
  rest.erase(rest.begin() + (m - 1));
  return make(1, BlockSequence::of({concat({w, {eps[static_cast<std::size_t>(m - 1)]}}), rest}), "2");
}

Mapped psi_l1k(const Uio& u, int l, int k, int part, const BlockSequence& y) {
  if (part == 0) return make(0, y, "1");
  const Seq w1 = y.block_copy(0);
  Seq nu = y.block_copy(1);
  if (static_cast<int>(w1.size()) != l + 1 || static_cast<int>(nu.size()) != k)
    throw std::invalid_argument("psi_l1k: element has the wrong shape");
  const int z = w1.back();
  std::size_t j = nu.size();
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (u.precedes(z, nu[i])) {
      j = i;
      break;
    }
  }
  nu.insert(nu.begin() + static_cast<std::ptrdiff_t>(j), z);
  return make(0, BlockSequence::of({Seq(w1.begin(), w1.end() - 1), nu}), "2");
}

// ---- l2 -----------------------------------------------------------------

int tau_l2(const Uio& u, std::span<const int> w, int q1) {
  const Rel W(u, w);
  const int l = W.len();
  for (int i = l; i >= 1; --i)
    if (!W.lt(q1, W(i)) || (i < l && W.inc(W(i), W(i + 1)))) return i;
  return 0;
}

Mapped phi_l2(const Uio& u, int l, const BlockSequence& x) {
  const Seq w = x.block_copy(0);
  const Seq q = x.block_copy(1);
  if (static_cast<int>(w.size()) != l || q.size() != 2) throw std::invalid_argument("phi_l2: wrong shape");
  auto img = phi_l2_core(u, w, q[0], q[1]);
  return make(0, BlockSequence::of({img.seq}), img.label);
}

Mapped psi_l2(const Uio& u, int l, const BlockSequence& y) {
  if (static_cast<int>(y.entries.size()) != l + 2) throw std::invalid_argument("psi_l2: wrong shape");
  auto pre = psi_l2_core(u, l, y.entries);
  return make(0, BlockSequence::of({pre.w, {pre.q0, pre.q1}}), pre.label);
}

// ---- l21 ----------------------------------------------------------------

Mapped phi_l21(const Uio& u, int l, const BlockSequence& x) {
  const Seq w = x.block_copy(0);
  const Seq q = x.block_copy(1);
  const Seq zs = x.block_copy(2);
  if (static_cast<int>(w.size()) != l || q.size() != 2 || zs.size() != 1)
    throw std::invalid_argument("phi_l21: wrong shape");
  const int q0 = q[0], q1 = q[1], z = zs[0];
  const Rel W(u, w);
  const int th = theta(u, w);
  const int wl = W(l);
  Trace tr;

  const auto same = [&](const char* label) { return tr.finish(make(2, x, label)); };
  const auto into_A_via_l2 = [&](const char* label) {
    const auto img = phi_l2_core(u, w, q0, q1);
    return tr.finish(make(0, BlockSequence::of({img.seq, {z}}), label));
  };
  const bool in_l2 = in_M_l2(u, w, q0, q1);

  switch (tr.pick("", {{"1", W.gt(z, q0) && W.gt(z, q1)},
                       {"2", W.gt(q1, z) && W.inc(q0, z)},
                       {"3", W.gt(q1, z) && W.gt(q0, z)}})) {
    case 0:
      switch (tr.pick("1", {{"11", W.above_all(z)},
                            {"12", !W.lt(z, wl) && !W.above_all(z)},
                            {"13", W.lt(z, wl)}})) {
        case 0:
          switch (tr.pick("11", {{"111", in_l2}, {"112", !in_l2}})) {
            case 0: return same("111");
            case 1: return into_A_via_l2("112");
          }
          break;
        case 1: {
          const bool lz = W.inc(wl, z);
          const int hat0 = lz ? wl : W(th);
          const int hat1 = lz ? z : W(th + 1);
          const bool hat_ok = W.gt(hat0, q0) && W.gt(hat1, q1);
          switch (tr.pick("12", {{"121", hat_ok}, {"122", !hat_ok}})) {
            case 0: return tr.finish(make(1, BlockSequence::of({concat({w, {z}}), q}), "121"));
            case 1: {
              int t = 0;
              for (int i = l - 1; i >= 1 && t == 0; --i)
                if (!W.gt(W(i), q1) || W.inc(W(i), W(i + 1)) || W.inc(W(i), z)) t = i;
              const bool below = W.lt(q0, W.at(t));
              switch (tr.pick("122", {{"1221", below}, {"1222", !below}})) {
                case 0:
                  return tr.finish(make(
                      0, BlockSequence::of({concat({slice(w, 1, t), {q1}, slice(w, t + 1, l), {z}}), {q0}}), "1221"));
                case 1:
                  return tr.finish(make(
                      0, BlockSequence::of({concat({slice(w, 1, t), {q0}, slice(w, t + 1, l), {z}}), {q1}}), "1222"));
              }
            }
          }
          break;
        }
        case 2: {
          const bool theta_ok = W.gt(W(th + 1), q1) && W.gt(W(th), q0);
          switch (tr.pick("13", {{"131", theta_ok}, {"132", !theta_ok}})) {
            case 0: return same("131");
            case 1: {
              int gamma = 0;
              for (int i = l - 1; i > th && gamma == 0; --i)
                if (W.inc(W(i), z)) gamma = i;
              const int t = tau_l2(u, w, q1);
              switch (tr.pick("132", {{"1321", gamma > th && gamma > t}, {"1322", gamma == 0 || gamma < t}})) {
                case 0: return same("1321");
                case 1: return into_A_via_l2("1322");
              }
            }
          }
          break;
        }
      }
      break;
    case 1:
      switch (tr.pick("2", {{"21", W.above_all(q0)},
                            {"22", !W.above_all(q0) && !W.lt(q0, wl)},
                            {"23", W.lt(q0, wl)}})) {
        case 0:
          switch (tr.pick("21", {{"211", W.above_all(z)}, {"212", !W.above_all(z) && !W.lt(z, wl)}})) {
            case 0: return same("211");
            case 1: return tr.finish(make(1, BlockSequence::of({concat({w, {z}}), q}), "212"));
          }
          break;
        case 1:
          return tr.finish(make(0, BlockSequence::of({concat({w, {q0, q1}}), {z}}), "22"));
        case 2: {
          const bool theta_ok = W.gt(W(th), q0) && W.gt(W(th + 1), q1);
          switch (tr.pick("23", {{"231", W.inc(q1, wl)},
                                 {"232", W.lt(q1, wl) && theta_ok},
                                 {"233", W.lt(q1, wl) && !theta_ok}})) {
            case 0: return tr.finish(make(1, BlockSequence::of({concat({w, {q1}}), {q0, z}}), "231"));
            case 1: return same("232");
            case 2: {
              int t = 0;
              for (int i = l - 1; i >= 1 && t == 0; --i)
                if (!W.gt(W(i), q1) || W.inc(W(i), W(i + 1))) t = i;
              const bool below = W.lt(q0, W.at(t));
              switch (tr.pick("233", {{"2331", below}, {"2332", !below}})) {
                case 0: return same("2331");
                case 1:
                  return tr.finish(make(
                      0, BlockSequence::of({concat({slice(w, 1, t), {q0, z}, slice(w, t + 1, l)}), {q1}}), "2332"));
              }
            }
          }
          break;
        }
      }
      break;
    case 2:
      switch (tr.pick("3", {{"31", W.above_all(z)},
                            {"32", !W.lt(z, wl) && !W.above_all(z)},
                            {"33", W.lt(z, wl)}})) {
        case 0: return same("31");
        case 1:
          switch (tr.pick("32", {{"321", W.above_all(q0)}, {"322", !W.above_all(q0)}})) {
            case 0: return tr.finish(make(1, BlockSequence::of({concat({w, {z}}), q}), "321"));
            case 1: return tr.finish(make(0, BlockSequence::of({concat({w, {q0, q1}}), {z}}), "322"));
          }
          break;
        case 2:
          switch (tr.pick("33", {{"331", in_l2}, {"332", !in_l2}})) {
            case 0: return same("331");
            case 1: return into_A_via_l2("332");
          }
          break;
      }
      break;
  }
  return tr.none();
}

namespace {

// ψ side: the nineteen cases are checked independently within the
// codomain part; the first in case order produces the value.
struct CaseList {
  std::vector<std::pair<std::string, std::function<BlockSequence()>>> held;

  void add(const char* label, bool cond, std::function<BlockSequence()> out) {
    if (cond) held.emplace_back(label, std::move(out));
  }

  Mapped result(const std::string& part_name) const {
    Mapped m;
    if (held.empty()) {
      m.label = "none in " + part_name;
      return m;
    }
    m.part = 0;
    m.value = held.front().second();
    m.label = held.front().first;
    for (const auto& h : held) m.fired.push_back(h.first);
    return m;
  }
};

}  // namespace

Mapped psi_l21(const Uio& u, int l, int part, const BlockSequence& y) {
  CaseList cases;
  if (part == 0) {
    const Seq s = y.block_copy(0);
    const int xi = y.block(1)[0];
    if (static_cast<int>(s.size()) != l + 2) throw std::invalid_argument("psi_l21: wrong shape");
    const Rel S(u, s);
    const int tb = theta(u, s);
    const bool below_top = S.lt(xi, S(l + 2));
    int eta = 0;
    if (below_top)
      for (int i = l + 2; i >= tb && eta == 0; --i)
        if (S.inc(S(i), xi)) eta = i;
    const auto via_l2 = [&] {
      const auto pre = psi_l2_core(u, l, s);
      return BlockSequence::of({pre.w, {pre.q0, pre.q1}, {xi}});
    };
    const auto split_top = [&] { return BlockSequence::of({slice(s, 1, l), {S(l + 1), S(l + 2)}, {xi}}); };

    cases.add("2", S.above_all(xi), via_l2);
    cases.add("411", below_top && eta > 0 && eta == tb + 1 && S.gt(S.at(tb), xi),
              [&] { return BlockSequence::of({without(s, eta, l + 2), {xi, S(eta)}, {S(l + 2)}}); });
    cases.add("412",
              below_top && eta > 0 &&
                  ((eta == tb && S.lt(xi, S.at(tb + 1))) ||
                   (eta == tb + 1 && (S.inc(S.at(tb), S.at(tb + 2)) || !S.gt(S.at(tb), xi))) || eta > tb + 1),
              [&] { return BlockSequence::of({without(s, eta, l + 2), {S(eta), xi}, {S(l + 2)}}); });
    cases.add("7", below_top && eta == 0 && S.gt(xi, S.at(tb + 1)) && S.gt(xi, S.at(tb)), via_l2);
    cases.add("10", S.inc(S(l + 1), xi) && S.inc(S(l + 1), S(l + 2)) && S.gt(S(l + 2), xi), split_top);
    cases.add("14", below_top && eta == tb && S.gt(xi, S.at(tb + 1)),
              [&] { return BlockSequence::of({without(s, tb, tb + 1), {S(tb), xi}, {S(tb + 1)}}); });
    // Printed as "xi < u_{l+2} and xi < u_{l+2}".
    cases.add("17", below_top, split_top);
    cases.add("19", below_top && eta == 0 && S.lt(xi, S.at(tb + 1)) && S.lt(xi, S.at(tb)), via_l2);
    return cases.result("M_{l+2,1}");
  }
  if (part == 1) {
    const Seq wx = y.block_copy(0);
    const Seq q = y.block_copy(1);
    if (static_cast<int>(wx.size()) != l + 1 || q.size() != 2) throw std::invalid_argument("psi_l21: wrong shape");
    const Seq w(wx.begin(), wx.end() - 1);
    const int xi = wx.back(), q0 = q[0], q1 = q[1];
    const Rel W(u, w);
    const int th = theta(u, w);
    const int wl = W(l);
    const auto back = [&] { return BlockSequence::of({w, q, {xi}}); };
    cases.add("3",
              (W.gt(xi, wl) && W.gt(W(th), q0) && W.gt(W(th + 1), q1) && W.gt(xi, q0)) ||
                  (W.inc(xi, wl) && W.gt(wl, q0) && W.gt(xi, q1) && W.gt(xi, q0)),
              back);
    cases.add("9", W.above_all(q0) && W.inc(q0, xi) && W.gt(q1, xi), back);
    cases.add("11", W.inc(xi, wl) && W.inc(xi, q0) && W.lt(q0, wl) && W.lt(q1, xi),
              [&] { return BlockSequence::of({w, {q0, xi}, {q1}}); });
    cases.add("16", W.above_all(q0) && W.gt(q1, xi), back);
    Mapped m = cases.result("M_{l+1,2}");
    return m;
  }
  if (part == 2) {
    const Seq w = y.block_copy(0);
    const Seq q = y.block_copy(1);
    const int z = y.block(2)[0];
    if (static_cast<int>(w.size()) != l || q.size() != 2) throw std::invalid_argument("psi_l21: wrong shape");
    const int q0 = q[0], q1 = q[1];
    const Rel W(u, w);
    const int th = theta(u, w);
    const int wl = W(l);
    const unsigned clauses = M_l21_clauses(u, w, q0, q1, z);
    const bool theta_ok = W.gt(W(th), q0) && W.gt(W(th + 1), q1);
    const bool z_over_q = W.gt(z, q0) && W.gt(z, q1);
    const auto same = [&] { return y; };
    cases.add("1", z_over_q && W.above_all(z), same);
    cases.add("5", z_over_q && W.lt(z, wl) && theta_ok, same);
    cases.add("6", (clauses & 2u) && !(clauses & 1u), same);
    cases.add("8", W.gt(q1, z) && W.inc(q0, z) && W.above_all(z), same);
    cases.add("12", theta_ok && W.inc(q0, z) && W.gt(q1, z), same);
    cases.add("13", (clauses & 4u) && !(clauses & 1u), same);
    cases.add("15", W.above_all(z) && W.gt(q0, z) && W.gt(q1, z), same);
    cases.add("18", W.gt(q0, z) && W.gt(q1, z) && W.gt(wl, z), same);
    return cases.result("M_{l,2,1}");
  }
  throw std::invalid_argument("psi_l21: part must be 0, 1 or 2");
}

// ---- harness ------------------------------------------------------------

void check_bijection_params(const BijectionParams& p) {
  const std::string name = bijection_name(p.which);
  switch (p.which) {
    case BijectionKind::l1k:
      if (p.l < 1 || p.k < 1) throw std::invalid_argument(name + ": need l >= 1 and k >= 1");
      check_mset_params({MSet::l1k, p.l, p.k + 1});
      check_mset_params({MSet::l1k, p.l + 1, p.k});
      return;
    case BijectionKind::l2:
      if (p.l < 2) throw std::invalid_argument(name + ": need l >= 2");
      check_mset_params({MSet::l2, p.l, 0}, false);
      return;
    case BijectionKind::l21:
      check_mset_params({MSet::l21, p.l, 0});
      return;
  }
}

namespace {

struct Sides {
  std::vector<BlockSequence> domain;
  std::vector<std::pair<std::string, std::vector<BlockSequence>>> parts;
  SymF domain_sf{Basis::e, 0};
  std::vector<SymF> part_sf;
};

SymF p_of(int k) { return SymF::p(Partition{k}); }

Sides build_sides(const Uio& u, const BijectionParams& p) {
  Sides s;
  const int n = u.size();
  const int l = p.l;
  switch (p.which) {
    case BijectionKind::l1k: {
      const auto chains = enumerate_chains(u, p.k + 1);
      for_each_correct(u, l, [&](const Seq& w) {
        for (const Seq& e : chains) s.domain.push_back(BlockSequence::of({w, e}));
      });
      const MSetParams a{MSet::l1k, l, p.k + 1}, b{MSet::l1k, l + 1, p.k};
      s.parts = {{"M" + mset_shape(a).to_string(), build_M(u, a)}, {"M" + mset_shape(b).to_string(), build_M(u, b)}};
      s.domain_sf = multiply(p_of(l), SymF::e(Partition{p.k + 1}));
      s.part_sf = {SymF::m(mset_shape(a)), SymF::m(mset_shape(b))};
      break;
    }
    case BijectionKind::l2: {
      const auto pairs = enumerate_corrects(u, 2);
      for_each_correct(u, l, [&](const Seq& w) {
        for (const Seq& q : pairs)
          if (!in_M_l2(u, w, q[0], q[1])) s.domain.push_back(BlockSequence::of({w, q}));
      });
      std::vector<BlockSequence> top;
      for_each_correct(u, l + 2, [&](const Seq& v) { top.push_back(BlockSequence::of({v})); });
      s.parts = {{"P(" + std::to_string(l + 2) + ")", std::move(top)}};
      s.domain_sf = multiply(p_of(l), p_of(2)) - SymF::m(Partition{l, 2});
      s.part_sf = {p_of(l + 2)};
      break;
    }
    case BijectionKind::l21: {
      const auto pairs = enumerate_corrects(u, 2);
      for_each_correct(u, l, [&](const Seq& w) {
        for (const Seq& q : pairs)
          for (int z = 0; z < n; ++z)
            if (in_M_21(u, q[0], q[1], z)) s.domain.push_back(BlockSequence::of({w, q, {z}}));
      });
      const MSetParams a{MSet::l1, l + 2, 1}, b{MSet::l2, l + 1, 0}, c{MSet::l21, l, 0};
      s.parts = {{"M" + mset_shape(a).to_string(), build_M(u, a, false)},
                 {"M" + mset_shape(b).to_string(), build_M(u, b, false)},
                 {"M" + mset_shape(c).to_string(), build_M(u, c, false)}};
      s.domain_sf = multiply(p_of(l), SymF::m(Partition{2, 1}));
      s.part_sf = {SymF::m(mset_shape(a)), SymF::m(mset_shape(b)), SymF::m(mset_shape(c))};
      break;
    }
  }
  return s;
}

Mapped apply_phi(const Uio& u, const BijectionParams& p, const BlockSequence& x) {
  switch (p.which) {
    case BijectionKind::l1k: return phi_l1k(u, p.l, p.k, x);
    case BijectionKind::l2: return phi_l2(u, p.l, x);
    case BijectionKind::l21: return phi_l21(u, p.l, x);
  }
  throw std::logic_error("unreachable");
}

Mapped apply_psi(const Uio& u, const BijectionParams& p, int part, const BlockSequence& y) {
  switch (p.which) {
    case BijectionKind::l1k: return psi_l1k(u, p.l, p.k, part, y);
    case BijectionKind::l2: return psi_l2(u, p.l, y);
    case BijectionKind::l21: return psi_l21(u, p.l, part, y);
  }
  throw std::logic_error("unreachable");
}

// Maps throw only on malformed input, which a broken case can produce.
Mapped guarded(const std::function<Mapped()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    Mapped m;
    m.label = std::string("error: ") + e.what();
    return m;
  }
}

bool identity_gate(const BijectionParams& p) {
  switch (p.which) {
    case BijectionKind::l1k: return identity_gate_holds({MSet::l1k, p.l, p.k + 1});
    case BijectionKind::l2: return identity_gate_holds({MSet::l2, p.l, 0});
    case BijectionKind::l21: return identity_gate_holds({MSet::l21, p.l, 0});
  }
  return false;
}

}  // namespace

BijectionReport verify_bijection(const Uio& u, const BijectionParams& p, std::size_t max_findings) {
  check_bijection_params(p);
  BijectionReport r;
  r.params = p;
  r.uio = u.to_string();
  const Sides sides = build_sides(u, p);
  r.domain_size = sides.domain.size();
  std::vector<std::set<BlockSequence>> part_sets;
  for (const auto& [name, elems] : sides.parts) {
    r.codomain_sizes.emplace_back(name, elems.size());
    r.codomain_total += elems.size();
    part_sets.emplace_back(elems.begin(), elems.end());
  }
  const std::set<BlockSequence> domain_set(sides.domain.begin(), sides.domain.end());

  auto note = [&](Finding f) {
    f.uio = r.uio;
    if (r.findings.size() < max_findings) r.findings.push_back(std::move(f));
  };
  auto part_name = [&](int part) {
    return part >= 0 && part < static_cast<int>(sides.parts.size()) ? sides.parts[part].first : std::string("?");
  };

  for (const auto& x : sides.domain) {
    const Mapped m = guarded([&] { return apply_phi(u, p, x); });
    ++r.phi_cases[m.value ? m.label : "none"];
    if (!m.value) {
      ++r.no_case;
      note({"no-case", "phi", "", x.to_string(), "", m.label, m.fired});
      continue;
    }
    const std::string out = part_name(m.part) + m.value->to_string();
    if (m.fired.size() > 1) {
      ++r.multi_case;
      note({"multi-case", "phi", "", x.to_string(), out, m.label, m.fired});
    }
    if (m.part < 0 || m.part >= static_cast<int>(part_sets.size()) || !part_sets[m.part].count(*m.value)) {
      ++r.codomain_violations;
      note({"codomain", "phi", "", x.to_string(), out, m.label, m.fired});
      continue;
    }
    const Mapped back = guarded([&] { return apply_psi(u, p, m.part, *m.value); });
    if (!back.value || *back.value != x) {
      ++r.roundtrip_failures;
      note({"roundtrip", "phi", "", x.to_string(), out + " -> " + (back.value ? back.value->to_string() : back.label),
            m.label + ">" + back.label, {}});
      continue;
    }
    ++r.case_pairs[m.label + ">" + back.label];
  }

  for (std::size_t part = 0; part < sides.parts.size(); ++part) {
    for (const auto& y : sides.parts[part].second) {
      const int pi = static_cast<int>(part);
      const Mapped m = guarded([&] { return apply_psi(u, p, pi, y); });
      const std::string in = part_name(pi) + y.to_string();
      ++r.psi_cases[m.value ? m.label : "none"];
      if (!m.value) {
        ++r.no_case;
        note({"no-case", "psi", "", in, "", m.label, m.fired});
        continue;
      }
      if (m.fired.size() > 1) {
        ++r.multi_case;
        note({"multi-case", "psi", "", in, m.value->to_string(), m.label, m.fired});
      }
      if (!domain_set.count(*m.value)) {
        ++r.codomain_violations;
        note({"codomain", "psi", "", in, m.value->to_string(), m.label, m.fired});
        continue;
      }
      const Mapped back = guarded([&] { return apply_phi(u, p, *m.value); });
      if (!back.value || back.part != pi || *back.value != y) {
        ++r.roundtrip_failures;
        note({"roundtrip", "psi", "", in,
              m.value->to_string() + " -> " + (back.value ? part_name(back.part) + back.value->to_string() : back.label),
              m.label + ">" + back.label, {}});
      }
    }
  }

  if (identity_gate(p)) {
    const Graph g = incomparability_graph(u);
    bool ok = monomial_sum(u.size(), sides.domain) == phi_G(sides.domain_sf, g);
    for (std::size_t i = 0; i < sides.parts.size() && ok; ++i)
      ok = monomial_sum(u.size(), sides.parts[i].second) == phi_G(sides.part_sf[i], g);
    r.identity_check = ok ? "pass" : "fail";
  }
  return r;
}

void to_json(nlohmann::json& j, const Finding& f) {
  j = nlohmann::json{{"kind", f.kind}, {"direction", f.direction}, {"uio", f.uio},   {"input", f.input},
                     {"output", f.output}, {"label", f.label},       {"fired", f.fired}};
}

void to_json(nlohmann::json& j, const BijectionReport& r) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& [name, size] : r.codomain_sizes) parts.push_back({{"part", name}, {"size", size}});
  j = nlohmann::json{{"which", bijection_name(r.params.which)},
                     {"l", r.params.l},
                     {"k", r.params.k},
                     {"uio", r.uio},
                     {"domain_size", r.domain_size},
                     {"codomain", parts},
                     {"codomain_total", r.codomain_total},
                     {"cardinality_ok", r.cardinality_ok()},
                     {"roundtrip_failures", r.roundtrip_failures},
                     {"codomain_violations", r.codomain_violations},
                     {"no_case", r.no_case},
                     {"multi_case", r.multi_case},
                     {"phi_cases", r.phi_cases},
                     {"psi_cases", r.psi_cases},
                     {"case_pairs", r.case_pairs},
                     {"identity_check", r.identity_check},
                     {"clean", r.clean()},
                     {"findings", r.findings}};
}

}  // namespace csfkit
