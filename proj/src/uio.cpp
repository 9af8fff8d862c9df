#include "csfkit/uio.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "csfkit/limits.hpp"

namespace csfkit {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0u) {
  if (n < 0 || n > 32) throw std::invalid_argument("graph size must be in [0, 32]");
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
  adj_[u] |= 1u << v;
  adj_[v] |= 1u << u;
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto a : adj_) twice += std::popcount(a);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

bool Graph::is_stable(std::uint32_t mask) const {
  for (std::uint32_t m = mask; m; m &= m - 1) {
    if (adj_[std::countr_zero(m)] & mask) return false;
  }
  return true;
}

std::string Graph::to_string() const {
  std::ostringstream os;
  os << "n=" << n_ << ';';
  bool first = true;
  for (auto [u, v] : edges()) {
    if (!first) os << ',';
    first = false;
    os << u + 1 << '-' << v + 1;
  }
  return os.str();
}

Uio::Uio(const std::vector<int>& successors) {
  const int n = static_cast<int>(successors.size());
  next_.reserve(successors.size());
  for (int i = 0; i < n; ++i) {
    const int s = successors[static_cast<std::size_t>(i)] - 1;
    if (s < i + 1 || s > n)
      throw std::invalid_argument("successor entry " + std::to_string(i + 1) + " out of range");
    if (i > 0 && s < next_.back()) throw std::invalid_argument("successor sequence must be weakly increasing");
    next_.push_back(s);
  }
}

std::vector<int> Uio::successors() const {
  std::vector<int> out;
  out.reserve(next_.size());
  for (int s : next_) out.push_back(s + 1);
  return out;
}

std::string Uio::to_string() const {
  std::ostringstream os;
  os << "s:";
  for (std::size_t i = 0; i < next_.size(); ++i) {
    if (i) os << ',';
    os << next_[i] + 1;
  }
  return os.str();
}

Uio from_intervals(std::vector<Rational> reps) {
  if (reps.empty()) throw std::invalid_argument("from_intervals: no representatives");
  std::sort(reps.begin(), reps.end());
  const std::size_t n = reps.size();
  std::vector<int> succ(n);
  std::size_t j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (j < n && reps[j] < reps[i] + 1) ++j;
    succ[i] = static_cast<int>(j) + 1;
  }
  return Uio(succ);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

int parse_int(const std::string& s) {
  std::size_t pos = 0;
  const int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not an integer: " + s);
  return v;
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  Integer num(s.substr(0, slash)), den(s.substr(slash + 1));
  if (den.is_zero()) throw std::invalid_argument("zero denominator in " + s);
  return Rational(num, den);
}

}  // namespace

Uio parse_uio(const std::string& text) {
  if (text.size() < 3 || text[1] != ':')
    throw std::invalid_argument("UIO string must start with 's:' or 'u:': " + text);
  const auto fields = split(text.substr(2), ',');
  try {
    if (text[0] == 's') {
      std::vector<int> succ;
      for (const auto& f : fields) succ.push_back(parse_int(f));
      return Uio(succ);
    }
    if (text[0] == 'u') {
      std::vector<Rational> reps;
      for (const auto& f : fields) reps.push_back(parse_rational(f));
      return from_intervals(std::move(reps));
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    throw std::invalid_argument("bad UIO string '" + text + "': " + e.what());
  }
  throw std::invalid_argument("UIO string must start with 's:' or 'u:': " + text);
}

void for_each_uio(int n, const std::function<void(const Uio&)>& visit) {
  if (n < 0) throw std::invalid_argument("enumerate_uios: n must be non-negative");
  if (n > Limits::max_uio_size())
    throw LimitError("enumerate_uios: n = " + std::to_string(n) + " exceeds cap " +
                     std::to_string(Limits::max_uio_size()));
  if (n == 0) {
    visit(Uio({}));
    return;
  }
  std::vector<int> succ(static_cast<std::size_t>(n));
  succ.back() = n + 1;
  // Fill from the last position down, largest values first.
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos < 0) {
      visit(Uio(succ));
      return;
    }
    for (int s = succ[static_cast<std::size_t>(pos) + 1]; s >= pos + 2; --s) {
      succ[static_cast<std::size_t>(pos)] = s;
      self(self, pos - 1);
    }
  };
  rec(rec, n - 2);
}

std::vector<Uio> enumerate_uios(int n) {
  std::vector<Uio> out;
  for_each_uio(n, [&](const Uio& u) { out.push_back(u); });
  return out;
}

bool is_ab_free(int n, const StrictOrder& less, int a, int b) {
  if (a < 1 || b < 1) return true;
  if (a + b > n) return true;
  auto comparable = [&](int x, int y) { return less(x, y) || less(y, x); };

  // Longest chain inside `allowed`, by memoised depth from each element.
  auto longest_chain = [&](std::uint32_t allowed) {
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    int best = 0;
    auto dfs = [&](auto&& self, int x) -> int {
      if (depth[x]) return depth[x];
      int d = 1;
      for (int y = 0; y < n; ++y)
        if (((allowed >> y) & 1u) && less(x, y)) d = std::max(d, 1 + self(self, y));
      return depth[x] = d;
    };
    for (int x = 0; x < n; ++x)
      if ((allowed >> x) & 1u) best = std::max(best, dfs(dfs, x));
    return best;
  };

  std::vector<int> chain;
  auto rec = [&](auto&& self, std::uint32_t used) -> bool {
    if (static_cast<int>(chain.size()) == a) {
      std::uint32_t allowed = 0;
      for (int y = 0; y < n; ++y) {
        if ((used >> y) & 1u) continue;
        bool ok = true;
        for (int c : chain) ok = ok && !comparable(c, y);
        if (ok) allowed |= 1u << y;
      }
      return longest_chain(allowed) >= b;
    }
    for (int y = 0; y < n; ++y) {
      if ((used >> y) & 1u) continue;
      if (!chain.empty() && !less(chain.back(), y)) continue;
      chain.push_back(y);
      const bool found = self(self, used | (1u << y));
      chain.pop_back();
      if (found) return true;
    }
    return false;
  };
  return !rec(rec, 0u);
}

bool is_ab_free(const Uio& u, int a, int b) {
  return is_ab_free(u.size(), [&u](int i, int j) { return u.precedes(i, j); }, a, b);
}

Graph incomparability_graph(const Uio& u) {
  Graph g(u.size());
  for (int i = 0; i < u.size(); ++i)
    for (int j = i + 1; j < u.size(); ++j)
      if (u.incomparable(i, j)) g.add_edge(i, j);
  return g;
}

Graph clique_expand(const Graph& g, const std::vector<int>& alpha) {
  if (static_cast<int>(alpha.size()) != g.size())
    throw std::invalid_argument("clique_expand: multiplicity vector has wrong length");
  std::vector<int> first(alpha.size() + 1, 0);
  for (std::size_t v = 0; v < alpha.size(); ++v) {
    if (alpha[v] < 1) throw std::invalid_argument("clique_expand: multiplicities must be positive");
    first[v + 1] = first[v] + alpha[v];
  }
  Graph out(first.back());
  for (int v = 0; v < g.size(); ++v) {
    for (int a = first[v]; a < first[v + 1]; ++a) {
      for (int b = a + 1; b < first[v + 1]; ++b) out.add_edge(a, b);
      for (int u = v + 1; u < g.size(); ++u) {
        if (!g.adjacent(v, u)) continue;
        for (int b = first[u]; b < first[u + 1]; ++b) out.add_edge(a, b);
      }
    }
  }
  return out;
}

std::map<int, Integer> acyclic_sink_counts(const Graph& g) {
  const auto edges = g.edges();
  if (edges.size() > 24)
    throw LimitError("acyclic_sink_counts: " + std::to_string(edges.size()) + " edges exceeds cap 24");
  const int n = g.size();
  std::map<int, Integer> counts;
  // reach[v]: vertices reachable from v (including v) along chosen arcs.
  std::vector<std::uint32_t> reach(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) reach[v] = 1u << v;
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n), 0u);

  auto rec = [&](auto&& self, std::size_t e) -> void {
    if (e == edges.size()) {
      int sinks = 0;
      for (int v = 0; v < n; ++v) sinks += out[v] == 0;
      counts[sinks] += 1;
      return;
    }
    for (int dir = 0; dir < 2; ++dir) {
      const int from = dir ? edges[e].second : edges[e].first;
      const int to = dir ? edges[e].first : edges[e].second;
      if ((reach[to] >> from) & 1u) continue;  // from->to would close a cycle
      const auto saved = reach;
      for (int v = 0; v < n; ++v)
        if ((reach[v] >> from) & 1u) reach[v] |= reach[to];
      out[from] |= 1u << to;
      self(self, e + 1);
      out[from] &= ~(1u << to);
      reach = saved;
    }
  };
  rec(rec, 0);
  return counts;
}

}  // namespace csfkit
