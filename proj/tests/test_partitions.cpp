#include <doctest.h>

#include <set>

#include "csfkit/partitions.hpp"
#include "oracles.hpp"

using namespace csfkit;

TEST_CASE("partition construction and invariants") {
  const Partition p{1, 3, 1};
  CHECK(p == Partition{3, 1, 1});
  CHECK(p.weight() == 5);
  CHECK(p.length() == 3);
  CHECK(Partition{}.weight() == 0);
  CHECK(Partition{}.to_string() == "()");
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("conjugate examples") {
  CHECK(conjugate({2, 2}) == Partition{2, 2});
  CHECK(conjugate({5}) == Partition::repeated(1, 5));
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate({}) == Partition{});
}

TEST_CASE("conjugate is an involution up to weight 12") {
  for (int n = 0; n <= 12; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      const Partition c = conjugate(lambda);
      CHECK(c.weight() == n);
      CHECK(c.length() == lambda.part_or_zero(0));
      CHECK(conjugate(c) == lambda);
    }
}

TEST_CASE("partitions_of examples and order") {
  CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
  CHECK(partitions_of(1) == std::vector<Partition>{Partition{1}});
  CHECK(partitions_of(4) ==
        std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
}

TEST_CASE("partition counts match the recursive oracle up to 20") {
  for (int n = 0; n <= 20; ++n) {
    const auto all = partitions_of(n);
    CHECK(Integer(all.size()) == oracle::partition_count(n, n));
    const std::set<Partition> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i] < all[i - 1]);
  }
}

TEST_CASE("dominance examples") {
  CHECK(dominance_leq({2, 2}, {3, 1}) == Dominance::Leq);
  CHECK(dominance_leq({3, 1}, {3, 1}) == Dominance::Leq);
  CHECK(dominance_leq({3, 1}, {2, 2}) == Dominance::GeqOnly);
  CHECK(dominance_leq({3, 1, 1, 1}, {2, 2, 2}) == Dominance::Incomparable);
  CHECK_THROWS_AS(dominance_leq({2}, {1}), std::invalid_argument);
}

TEST_CASE("dominance is a partial order") {
  for (int n = 1; n <= 7; ++n) {
    const auto all = partitions_of(n);
    auto leq = [](const Partition& a, const Partition& b) { return dominance_leq(a, b) == Dominance::Leq; };
    for (const auto& a : all) {
      CHECK(leq(a, a));
      for (const auto& b : all) {
        if (leq(a, b) && leq(b, a)) CHECK(a == b);
        if (leq(a, b)) CHECK(leq(conjugate(b), conjugate(a)));
        for (const auto& c : all)
          if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
      }
    }
  }
}

TEST_CASE("partition parsing and json") {
  CHECK(parse_partition("3,1") == Partition{3, 1});
  CHECK(parse_partition("(1,3)") == Partition{3, 1});
  CHECK(parse_partition("[2,2]") == Partition{2, 2});
  CHECK_THROWS_AS(parse_partition("3,x"), std::invalid_argument);
  for (const Partition& p : partitions_of(6)) {
    nlohmann::json j = p;
    CHECK(j.get<Partition>() == p);
  }
}
