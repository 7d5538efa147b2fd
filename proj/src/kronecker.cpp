#include "liskron/kronecker.hpp"

#include <algorithm>

#include "liskron/errors.hpp"
#include "liskron/parallel.hpp"

namespace liskron {

namespace {

Int divide_by_group_order(Int numerator, const CharacterTable& table,
                          const char* what) {
  const Int& nf = table.factorial_n();
  if (numerator % nf != 0) {
    throw InternalArithmeticError(std::string(what) +
                                  ": character sum not divisible by n!");
  }
  return numerator / nf;
}

}  // namespace

Int kronecker_coefficient(const Partition& lambda, const Partition& mu,
                          const Partition& nu, const CharacterTable& table) {
  const std::size_t a = table.shape_index(lambda);
  const std::size_t b = table.shape_index(mu);
  const std::size_t c = table.shape_index(nu);
  const auto& classes = table.classes();
  Int sum = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    sum += classes[i].class_size * table.value(a, i) * table.value(b, i) *
           table.value(c, i);
  }
  Int g = divide_by_group_order(std::move(sum), table, "kronecker_coefficient");
  if (g < 0) {
    throw InternalArithmeticError("kronecker_coefficient: negative result for (" +
                                  lambda.str() + ") (" + mu.str() + ") (" +
                                  nu.str() + ")");
  }
  return g;
}

std::vector<Int> aggregate_character(const CharacterTable& table, int k) {
  if (k < 1 || k > table.n()) {
    throw BoundsError("aggregate_character: k = " + std::to_string(k) +
                      " outside [1, " + std::to_string(table.n()) + "]");
  }
  const auto& shapes = table.shapes();
  const std::size_t count = shapes.size();
  std::vector<Int> psi(count, Int(0));
  for (std::size_t r = 0; r < count; ++r) {
    if (shapes[r].length() != k) continue;
    Int f = syt_count(shapes[r]);
    for (std::size_t c = 0; c < count; ++c) {
      psi[c] += f * table.value(r, c);
    }
  }
  return psi;
}

Int aggregate_multiplicity(const std::vector<Int>& psi_k,
                           const std::vector<Int>& psi_l, const Partition& nu,
                           const CharacterTable& table) {
  const std::size_t r = table.shape_index(nu);
  const auto& classes = table.classes();
  Int sum = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    sum += classes[c].class_size * psi_k[c] * psi_l[c] * table.value(r, c);
  }
  Int g = divide_by_group_order(std::move(sum), table, "aggregate_multiplicity");
  if (g < 0) {
    throw InternalArithmeticError(
        "aggregate_multiplicity: negative result at nu = " + nu.str());
  }
  return g;
}

Int aggregate_multiplicity(int k, int l, const Partition& nu,
                           const CharacterTable& table) {
  return aggregate_multiplicity(aggregate_character(table, k),
                                aggregate_character(table, l), nu, table);
}

KroneckerCache::KroneckerCache(int n, std::vector<Partition> shapes,
                               std::string provenance)
    : n_(n), provenance_(std::move(provenance)), shapes_(std::move(shapes)) {
  for (std::uint32_t i = 0; i < shapes_.size(); ++i) {
    shape_index_.emplace(shapes_[i], i);
  }
}

KroneckerCache::TripleKey KroneckerCache::canonical_key(
    const Partition& lambda, const Partition& mu, const Partition& nu) const {
  auto index_of = [&](const Partition& p) -> std::uint32_t {
    auto it = shape_index_.find(p);
    if (it == shape_index_.end()) {
      throw DomainError("partition " + p.str() + " is not a shape of n = " +
                        std::to_string(n_));
    }
    return it->second;
  };
  TripleKey key{index_of(lambda), index_of(mu), index_of(nu)};
  std::sort(key.begin(), key.end());
  return key;
}

const Int& KroneckerCache::coefficient(const Partition& lambda,
                                       const Partition& mu,
                                       const Partition& nu) const {
  auto it = entries_.find(canonical_key(lambda, mu, nu));
  if (it == entries_.end()) {
    throw PrecomputationRequiredError(
        n_, "Kronecker cache for n = " + std::to_string(n_) +
                " is missing a triple; recompute the tensor");
  }
  return it->second;
}

void KroneckerCache::insert(const TripleKey& key, Int value) {
  if (value < 0) {
    throw InternalArithmeticError("KroneckerCache: negative coefficient");
  }
  entries_[key] = std::move(value);
}

KroneckerCache kronecker_tensor(int n, const CharacterTable& table,
                                unsigned threads) {
  if (table.n() != n) {
    throw DomainError("kronecker_tensor: table is for n = " +
                      std::to_string(table.n()) + ", requested " +
                      std::to_string(n));
  }
  const auto& shapes = table.shapes();
  const std::uint32_t count = static_cast<std::uint32_t>(shapes.size());

  std::vector<KroneckerCache::TripleKey> keys;
  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b = a; b < count; ++b) {
      for (std::uint32_t c = b; c < count; ++c) {
        keys.push_back({a, b, c});
      }
    }
  }

  const auto& classes = table.classes();
  std::vector<Int> values(keys.size());
  parallel_for(keys.size(), threads, [&](std::size_t i) {
    const auto [a, b, c] = keys[i];
    Int sum = 0;
    for (std::size_t cls = 0; cls < classes.size(); ++cls) {
      sum += classes[cls].class_size * table.value(a, cls) *
             table.value(b, cls) * table.value(c, cls);
    }
    const Int& nf = table.factorial_n();
    if (sum % nf != 0 || sum < 0) {
      throw InternalArithmeticError(
          "kronecker_tensor: bad character sum for triple (" +
          shapes[a].str() + ") (" + shapes[b].str() + ") (" + shapes[c].str() +
          ")");
    }
    values[i] = sum / nf;
  });

  KroneckerCache cache(n, shapes, "char-table-n" + std::to_string(n) + "-v1");
  for (std::size_t i = 0; i < keys.size(); ++i) {
    cache.insert(keys[i], std::move(values[i]));
  }
  return cache;
}

}  // namespace liskron
