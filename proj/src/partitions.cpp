#include "csfkit/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace csfkit {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::repeated(int part, int count) {
  return Partition(std::vector<int>(static_cast<std::size_t>(std::max(count, 0)), part));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(static_cast<std::size_t>(parts_.empty() ? 1 : parts_.front() + 1), 0);
  for (int p : parts_) ++m[static_cast<std::size_t>(p)];
  return m;
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> all(parts_);
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(all));
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
  return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(),
                                                other.parts_.begin(), other.parts_.end());
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(lambda[0]), 0);
  for (int p : lambda.parts()) {
    for (int i = 0; i < p; ++i) ++out[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(out));
}

namespace {
void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    generate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(n, n, prefix, out);
  return out;
}

Dominance dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight())
    throw std::invalid_argument("dominance_leq: partitions of different weight");
  bool mu_leq = true;
  bool lambda_leq = true;
  int sm = 0, sl = 0;
  const auto len = static_cast<std::size_t>(std::max(mu.length(), lambda.length()));
  for (std::size_t i = 0; i < len; ++i) {
    sm += mu.part_or_zero(i);
    sl += lambda.part_or_zero(i);
    if (sm > sl) mu_leq = false;
    if (sl > sm) lambda_leq = false;
  }
  if (mu_leq) return Dominance::Leq;
  if (lambda_leq) return Dominance::GeqOnly;
  return Dominance::Incomparable;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  for (char c : text) {
    if (c == '[' || c == ']' || c == '(' || c == ')' || c == ' ') continue;
    if (c == ',') {
      if (!token.empty()) parts.push_back(std::stoi(token));
      token.clear();
    } else if (c >= '0' && c <= '9') {
      token += c;
    } else {
      throw std::invalid_argument("bad partition: " + text);
    }
  }
  if (!token.empty()) parts.push_back(std::stoi(token));
  return Partition(std::move(parts));
}

void to_json(nlohmann::json& j, const Partition& p) {
  j = nlohmann::json::array();
  for (int x : p.parts()) j.push_back(x);
}

void from_json(const nlohmann::json& j, Partition& p) {
  p = Partition(j.get<std::vector<int>>());
}

}  // namespace csfkit
