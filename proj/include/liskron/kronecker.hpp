#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liskron/characters.hpp"
#include "liskron/partition.hpp"

namespace liskron {

// g_{lambda,mu}^nu = (1/n!) sum_rho |C_rho| chi^lambda chi^mu chi^nu, with
// exact divisibility and nonnegativity asserted.
Int kronecker_coefficient(const Partition& lambda, const Partition& mu,
                          const Partition& nu, const CharacterTable& table);

// psi_k(rho) = sum over shapes of length k of f^lambda chi^lambda(rho),
// one value per class in table order. The aggregate character of the module
// summing f^lambda copies of each length-k irreducible.
std::vector<Int> aggregate_character(const CharacterTable& table, int k);

// Coefficient of nu in the product of the length-k and length-l aggregate
// modules: sum_{l(lambda)=k, l(mu)=l} f^lambda f^mu g_{lambda,mu}^nu,
// computed in one pass over classes through psi_k psi_l.
Int aggregate_multiplicity(int k, int l, const Partition& nu,
                           const CharacterTable& table);
Int aggregate_multiplicity(const std::vector<Int>& psi_k,
                           const std::vector<Int>& psi_l, const Partition& nu,
                           const CharacterTable& table);

// All coefficients for one n, stored once per S_3 symmetry class of the
// triple (lambda, mu, nu). Keys are canonical shape indices, sorted.
class KroneckerCache {
 public:
  using TripleKey = std::array<std::uint32_t, 3>;

  KroneckerCache(int n, std::vector<Partition> shapes, std::string provenance);

  int n() const { return n_; }
  const std::string& provenance() const { return provenance_; }
  const std::vector<Partition>& shapes() const { return shapes_; }
  const std::map<TripleKey, Int>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Looks up g for any ordering of the triple.
  const Int& coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu) const;

  TripleKey canonical_key(const Partition& lambda, const Partition& mu,
                          const Partition& nu) const;
  void insert(const TripleKey& key, Int value);

 private:
  int n_;
  std::string provenance_;
  std::vector<Partition> shapes_;
  std::map<Partition, std::uint32_t, CanonicalLess> shape_index_;
  std::map<TripleKey, Int> entries_;
};

// Evaluates g for every unordered triple of shapes of n, once per symmetry
// class. Parallelizes over triples; contents are deterministic.
KroneckerCache kronecker_tensor(int n, const CharacterTable& table,
                                unsigned threads = 1);

}  // namespace liskron
