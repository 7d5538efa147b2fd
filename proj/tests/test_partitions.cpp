#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <unordered_set>
#include <vector>

#include "liskron/errors.hpp"
#include "liskron/partition.hpp"

using namespace liskron;

namespace {

// Independent p(n) oracle: Euler's pentagonal-number recurrence.
std::vector<long long> partition_counts(int max_n) {
  std::vector<long long> p(static_cast<std::size_t>(max_n) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    long long total = 0;
    for (int k = 1;; ++k) {
      const long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
      const long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      const long long sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= n) total += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) total += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = total;
  }
  return p;
}

}  // namespace

TEST_CASE("partition construction and text form") {
  Partition p({3, 1, 1});
  CHECK(p.n() == 5);
  CHECK(p.length() == 3);
  CHECK(p.str() == "3,1,1");
  CHECK(Partition::parse("3,1,1") == p);
  CHECK(Partition::parse("7").n() == 7);

  CHECK(Partition::parse("").empty());  // the degree-0 base case
  CHECK_THROWS_AS(Partition::parse("0"), DomainError);
  CHECK_THROWS_AS(Partition::parse("1,2"), DomainError);  // not decreasing
  CHECK_THROWS_AS(Partition::parse("-2,1"), DomainError);
  CHECK_THROWS_AS(Partition::parse("3,,1"), DomainError);
  CHECK_THROWS_AS(Partition::parse("a,b"), DomainError);
  CHECK_THROWS_AS(Partition(std::vector<int>{2, 3}), DomainError);
  CHECK_THROWS_AS(Partition(std::vector<int>{1, 0}), DomainError);
}

TEST_CASE("enumeration counts match the pentagonal recurrence") {
  const auto oracle = partition_counts(30);
  for (int n = 1; n <= 30; ++n) {
    CHECK(partitions_of(n).size() ==
          static_cast<std::size_t>(oracle[static_cast<std::size_t>(n)]));
  }
}

TEST_CASE("enumeration order is canonical and deterministic") {
  for (int n = 1; n <= 12; ++n) {
    const auto all = partitions_of(n);
    REQUIRE(!all.empty());
    CHECK(all.front() == Partition({n}));
    CHECK(all.back().length() == n);  // 1^n comes last
    CanonicalLess less;
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      CHECK(less(all[i], all[i + 1]));
      CHECK_FALSE(less(all[i + 1], all[i]));
    }
    // every entry really is a partition of n
    for (const auto& shape : all) CHECK(shape.n() == n);
  }
}

TEST_CASE("length filter slices the full enumeration") {
  for (int n = 1; n <= 10; ++n) {
    const auto all = partitions_of(n);
    for (int k = 1; k <= n; ++k) {
      const auto filtered = partitions_of(n, k);
      std::vector<Partition> expected;
      for (const auto& shape : all) {
        if (shape.length() == k) expected.push_back(shape);
      }
      CHECK(filtered == expected);
    }
  }
  // a filter selecting nothing is an empty sequence, not an error
  CHECK(partitions_of(4, 5).empty());
  CHECK(partitions_of(4, 0).empty());
  CHECK(partitions_of(4, -1).empty());
}

TEST_CASE("enumeration bounds") {
  CHECK_THROWS_AS(partitions_of(0), BoundsError);
  CHECK_THROWS_AS(partitions_of(-3), BoundsError);
  CHECK_THROWS_AS(partitions_of(kDefaultPartitionMax + 1), BoundsError);
  CHECK_NOTHROW(partitions_of(35, std::nullopt, 40));
}

TEST_CASE("conjugation is an involution and transposes rows/columns") {
  CHECK(Partition({2, 2, 1}).conjugate() == Partition({3, 2}));
  CHECK(Partition({5}).conjugate() == Partition({1, 1, 1, 1, 1}));
  for (int n = 1; n <= 12; ++n) {
    for (const auto& shape : partitions_of(n)) {
      const Partition conj = shape.conjugate();
      CHECK(conj.n() == n);
      CHECK(conj.conjugate() == shape);
      CHECK(conj.length() == shape.parts().front());
    }
  }
}

TEST_CASE("hook data for (2,2,1)") {
  const Partition shape({2, 2, 1});
  const HookData data = hook_data(shape);
  CHECK(data.hook_lengths ==
        std::vector<std::vector<int>>{{4, 2}, {3, 1}, {1}});
  CHECK(data.hook_product == 24);
  CHECK(data.syt_count == 5);
  CHECK(syt_count(shape) == 5);
}

TEST_CASE("dimension facts") {
  // first column of the n=5 table, shapes in canonical order
  const std::vector<Int> expected = {1, 4, 5, 6, 5, 4, 1};
  const auto shapes = partitions_of(5);
  REQUIRE(shapes.size() == expected.size());
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    CHECK(syt_count(shapes[i]) == expected[i]);
  }

  // f is conjugation-invariant, and sum of f^2 over shapes is n!
  for (int n = 1; n <= 12; ++n) {
    Int sum_sq = 0;
    for (const auto& shape : partitions_of(n)) {
      const Int f = syt_count(shape);
      CHECK(f == syt_count(shape.conjugate()));
      sum_sq += f * f;
    }
    CHECK(sum_sq == factorial(n));
  }
}

TEST_CASE("class data") {
  // z values for n=4: (4):4, (3,1):3, (2,2):8, (2,1,1):4, (1^4):24
  CHECK(class_data(Partition({4})).z_rho == 4);
  CHECK(class_data(Partition({3, 1})).z_rho == 3);
  CHECK(class_data(Partition({2, 2})).z_rho == 8);
  CHECK(class_data(Partition({2, 1, 1})).z_rho == 4);
  CHECK(class_data(Partition({1, 1, 1, 1})).z_rho == 24);

  for (int n = 1; n <= 12; ++n) {
    Int total = 0;
    for (const auto& rho : partitions_of(n)) {
      const ClassData data = class_data(rho);
      CHECK(data.z_rho * data.class_size == factorial(n));
      total += data.class_size;
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(12) == Int("479001600"));
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(7, 7) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  for (int n = 1; n <= 20; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("ordering and hashing") {
  // lexicographic comparison on parts
  CHECK(Partition({2, 1}) < Partition({3}));
  CHECK(Partition({2, 1}) < Partition({2, 2}));
  // canonical order sorts largest-first shapes ahead
  CanonicalLess less;
  CHECK(less(Partition({3}), Partition({2, 1})));
  CHECK(less(Partition({2, 1}), Partition({1, 1, 1})));
  CHECK_FALSE(less(Partition({2, 1}), Partition({2, 1})));

  PartitionHash hash;
  std::unordered_set<std::size_t> seen;
  for (const auto& shape : partitions_of(12)) {
    CHECK(hash(shape) == hash(Partition(shape.parts())));
    seen.insert(hash(shape));
  }
  // no wholesale collisions across one degree
  CHECK(seen.size() > partitions_of(12).size() / 2);
}
