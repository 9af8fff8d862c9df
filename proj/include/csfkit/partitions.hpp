#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "csfkit/integer.hpp"

namespace csfkit {

/// A weakly decreasing sequence of positive integers. Constructors sort and
/// validate, so every partition has exactly one representation.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// n copies of `part`.
  static Partition repeated(int part, int count);

  std::span<const int> parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  /// Part i, or 0 past the end.
  int part_or_zero(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Multiplicity of each part size, indexed by size (index 0 unused).
  std::vector<int> multiplicities() const;

  /// Concatenation, re-sorted: the index of a product e_a e_b.
  Partition merged(const Partition& other) const;

  bool operator==(const Partition&) const = default;
  /// Plain lexicographic comparison of the part sequences.
  std::strong_ordering operator<=>(const Partition& other) const;

  /// "(3,1)"; the empty partition prints as "()".
  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Canonical order used by every map and report: lexicographically decreasing,
/// so (n) comes first and 1^n last.
struct LexDescending {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

using PartitionMap = std::map<Partition, Integer, LexDescending>;

Partition conjugate(const Partition& lambda);

/// All partitions of n in lexicographically decreasing order.
std::vector<Partition> partitions_of(int n);

enum class Dominance { Leq, GeqOnly, Incomparable };

/// Compares prefix sums: Leq when mu is dominated by lambda (including mu ==
/// lambda), GeqOnly when only lambda <= mu holds. Throws on unequal weights.
Dominance dominance_leq(const Partition& mu, const Partition& lambda);

/// Parses "3,1" or "[3,1]" or "(3,1)".
Partition parse_partition(const std::string& text);

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

}  // namespace csfkit
