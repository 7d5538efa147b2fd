#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "liskron/characters.hpp"
#include "liskron/errors.hpp"
#include "liskron/kronecker.hpp"
#include "liskron/partition.hpp"
#include "liskron/rsk.hpp"
#include "liskron/schur.hpp"

using namespace liskron;

namespace {

// A reproducible small vector with coefficients in [-3, 3].
SchurVector random_vector(int n, std::uint64_t seed) {
  SchurVector vec(n);
  const auto shapes = partitions_of(n);
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const auto draw = splitmix64_at(seed, i + 1);
    vec.add_term(shapes[i], Int(static_cast<long long>(draw % 7) - 3));
  }
  return vec;
}

}  // namespace

TEST_CASE("basic vector algebra") {
  SchurVector zero(4);
  CHECK(zero.is_zero());
  CHECK(zero.coeff(Partition({4})) == 0);

  SchurVector single = SchurVector::single(Partition({2, 2}), 3);
  CHECK(single.n() == 4);
  CHECK(single.coeff(Partition({2, 2})) == 3);
  CHECK(single.coeff(Partition({3, 1})) == 0);

  // cancellation drops the stored term
  single.add_term(Partition({2, 2}), -3);
  CHECK(single.is_zero());
  CHECK_THROWS_AS(single.add_term(Partition({3}), 1), DomainError);

  const SchurVector f = random_vector(5, 21);
  const SchurVector g = random_vector(5, 22);
  const SchurVector sum = linear_combine(1, f, 1, g);
  for (const auto& shape : partitions_of(5)) {
    CHECK(sum.coeff(shape) == f.coeff(shape) + g.coeff(shape));
  }
  CHECK(linear_combine(1, f, -1, f).is_zero());
  CHECK_THROWS_AS(linear_combine(1, f, 1, SchurVector(4)), DomainError);
}

TEST_CASE("terms stay in canonical order") {
  SchurVector vec(5);
  vec.add_term(Partition({1, 1, 1, 1, 1}), 2);
  vec.add_term(Partition({5}), 1);
  vec.add_term(Partition({3, 2}), 4);
  std::vector<Partition> order;
  for (const auto& [shape, coeff] : vec.terms()) order.push_back(shape);
  CHECK(order == std::vector<Partition>{Partition({5}), Partition({3, 2}),
                                        Partition({1, 1, 1, 1, 1})});
}

TEST_CASE("length-class sums") {
  const SchurVector s52 = snk(5, 2);
  CHECK(s52.terms().size() == 2);
  CHECK(s52.coeff(Partition({4, 1})) == 4);
  CHECK(s52.coeff(Partition({3, 2})) == 5);

  CHECK(snk(6, 1) == SchurVector::single(Partition({6})));
  CHECK(snk(6, 6) == SchurVector::single(Partition({1, 1, 1, 1, 1, 1})));
  CHECK_THROWS_AS(snk(5, 0), BoundsError);
  CHECK_THROWS_AS(snk(5, 6), BoundsError);

  // summing over k gives the all-shapes vector with coefficients f^lambda
  for (int n = 1; n <= 12; ++n) {
    SchurVector total(n);
    for (int k = 1; k <= n; ++k) total = linear_combine(1, total, 1, snk(n, k));
    for (const auto& shape : partitions_of(n)) {
      CHECK(total.coeff(shape) == syt_count(shape));
    }
  }
}

TEST_CASE("dimension functional") {
  CHECK(frob_dimension(snk(5, 3)) == 61);
  for (int n = 1; n <= 10; ++n) {
    for (const auto& shape : partitions_of(n)) {
      CHECK(frob_dimension(SchurVector::single(shape)) == syt_count(shape));
    }
    // dim(S_{n,k}) recovers the census numbers
    const CensusTable census = census_hook(n);
    for (int k = 1; k <= n; ++k) {
      CHECK(frob_dimension(snk(n, k)) == census.a(k));
    }
  }
}

TEST_CASE("pinned product values") {
  const CharacterTable table = CharacterTable::build(3);
  const SchurVector prod =
      kronecker_product(SchurVector::single(Partition({2, 1})),
                        SchurVector::single(Partition({2, 1})), table);
  CHECK(prod.coeff(Partition({3})) == 1);
  CHECK(prod.coeff(Partition({2, 1})) == 1);
  CHECK(prod.coeff(Partition({1, 1, 1})) == 1);
  CHECK(prod.terms().size() == 3);
}

TEST_CASE("trivial shape is the product identity") {
  const CharacterTable table = CharacterTable::build(6);
  const SchurVector f = random_vector(6, 31);
  const SchurVector one = SchurVector::single(Partition({6}));
  CHECK(kronecker_product(one, f, table) == f);
  CHECK(kronecker_product(f, one, table) == f);
}

TEST_CASE("product is commutative and associative") {
  const CharacterTable table = CharacterTable::build(5);
  const SchurVector f = random_vector(5, 41);
  const SchurVector g = random_vector(5, 42);
  const SchurVector h = random_vector(5, 43);
  CHECK(kronecker_product(f, g, table) == kronecker_product(g, f, table));
  CHECK(kronecker_product(kronecker_product(f, g, table), h, table) ==
        kronecker_product(f, kronecker_product(g, h, table), table));
  // bilinearity in the first slot
  const SchurVector combined = linear_combine(2, f, -1, g);
  const SchurVector left = kronecker_product(combined, h, table);
  const SchurVector right = linear_combine(
      2, kronecker_product(f, h, table), -1, kronecker_product(g, h, table));
  CHECK(left == right);
}

TEST_CASE("table route and cache route agree") {
  for (int n = 2; n <= 6; ++n) {
    const CharacterTable table = CharacterTable::build(n);
    const KroneckerCache cache = kronecker_tensor(n, table);
    for (const auto& lambda : table.shapes()) {
      for (const auto& mu : table.shapes()) {
        const SchurVector via_table =
            kronecker_product(SchurVector::single(lambda),
                              SchurVector::single(mu), table);
        const SchurVector via_cache = kronecker_product(
            SchurVector::single(lambda), SchurVector::single(mu), cache);
        CHECK(via_table == via_cache);
      }
    }
  }
}

TEST_CASE("parallel product is deterministic") {
  const CharacterTable table = CharacterTable::build(8);
  const SchurVector f = snk(8, 3);
  const SchurVector g = snk(8, 5);
  CHECK(kronecker_product(f, g, table, 1) ==
        kronecker_product(f, g, table, 4));
}

TEST_CASE("degree mismatches are rejected") {
  const CharacterTable table = CharacterTable::build(5);
  CHECK_THROWS_AS(kronecker_product(SchurVector(4), SchurVector(5), table),
                  DomainError);
  // a table of the wrong degree means the needed data is not computed yet
  CHECK_THROWS_AS(kronecker_product(SchurVector(4), SchurVector(4), table),
                  PrecomputationRequiredError);
}

TEST_CASE("comparison lists negative coefficients of the difference") {
  const CharacterTable table = CharacterTable::build(3);
  // pinned gap vector: S_{3,2}*S_{3,2} - S_{3,1}*S_{3,3}
  const SchurVector same = kronecker_product(snk(3, 2), snk(3, 2), table);
  const SchurVector adjacent = kronecker_product(snk(3, 1), snk(3, 3), table);
  const SchurComparison cmp = schur_compare(adjacent, same);
  CHECK(cmp.positive);
  CHECK(cmp.negative_terms.empty());
  CHECK(cmp.difference.coeff(Partition({3})) == 4);
  CHECK(cmp.difference.coeff(Partition({2, 1})) == 4);
  CHECK(cmp.difference.coeff(Partition({1, 1, 1})) == 3);

  // reversed arguments expose the same magnitudes as negatives
  const SchurComparison reversed = schur_compare(same, adjacent);
  CHECK_FALSE(reversed.positive);
  CHECK(reversed.negative_terms.size() == 3);
  for (const auto& [shape, coeff] : reversed.negative_terms) {
    CHECK(coeff < 0);
    CHECK(coeff == -cmp.difference.coeff(shape));
  }
}

TEST_CASE("pinned hook-pair difference") {
  // i = j = 1 at n = 3: s(2,1)*s(2,1) - s(3)*s(3) = s(2,1) + s(1,1,1)
  const CharacterTable table = CharacterTable::build(3);
  const SchurVector head =
      kronecker_product(SchurVector::single(Partition({2, 1})),
                        SchurVector::single(Partition({2, 1})), table);
  const SchurVector tail =
      kronecker_product(SchurVector::single(Partition({3})),
                        SchurVector::single(Partition({3})), table);
  const SchurComparison cmp = schur_compare(tail, head);
  CHECK(cmp.positive);
  CHECK(cmp.difference.coeff(Partition({3})) == 0);
  CHECK(cmp.difference.coeff(Partition({2, 1})) == 1);
  CHECK(cmp.difference.coeff(Partition({1, 1, 1})) == 1);
  CHECK(frob_dimension(cmp.difference) == 3);
}
