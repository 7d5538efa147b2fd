#pragma once

#include <map>
#include <utility>
#include <vector>

#include "liskron/characters.hpp"
#include "liskron/kronecker.hpp"
#include "liskron/partition.hpp"

namespace liskron {

// A degree-n symmetric function in the Schur basis with exact integer
// coefficients. Zero coefficients are never stored; the zero vector is an
// empty map that still carries its degree. Values are immutable in spirit:
// every operation returns a fresh vector.
class SchurVector {
 public:
  explicit SchurVector(int n) : n_(n) {}
  static SchurVector single(Partition shape, Int coeff = 1);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Partition, Int, CanonicalLess>& terms() const {
    return terms_;
  }
  Int coeff(const Partition& shape) const;

  // Adds c * s_shape, dropping the term if it cancels. The shape degree must
  // match; builders below use this.
  void add_term(const Partition& shape, const Int& coeff);

  bool operator==(const SchurVector&) const = default;

 private:
  int n_;
  std::map<Partition, Int, CanonicalLess> terms_;
};

// a*F + b*G, canonicalized. Degrees must agree.
SchurVector linear_combine(const Int& a, const SchurVector& f, const Int& b,
                           const SchurVector& g);

// Kronecker product via the character table: the coefficient of s_nu is
// (1/n!) sum_rho |C_rho| chiF(rho) chiG(rho) chi^nu(rho) where chiF is the
// virtual character of F. Exact for arbitrary integer vectors.
SchurVector kronecker_product(const SchurVector& f, const SchurVector& g,
                              const CharacterTable& table,
                              unsigned threads = 1);

// Kronecker product by bilinear expansion over cached coefficients.
SchurVector kronecker_product(const SchurVector& f, const SchurVector& g,
                              const KroneckerCache& cache);

// S_{n,k}: sum of f^lambda s_lambda over shapes of length k.
SchurVector snk(int n, int k);

// D = G - F with the negative terms listed; positive means none.
struct SchurComparison {
  bool positive = true;
  std::vector<std::pair<Partition, Int>> negative_terms;
  SchurVector difference;
};

SchurComparison schur_compare(const SchurVector& f, const SchurVector& g);

// sum of F_lambda * f^lambda: the dimension of the virtual module behind F.
Int frob_dimension(const SchurVector& f);

}  // namespace liskron
