#include "liskron/schur.hpp"

#include "liskron/errors.hpp"
#include "liskron/parallel.hpp"

namespace liskron {

namespace {

void require_same_degree(const SchurVector& f, const SchurVector& g,
                         const char* op) {
  if (f.n() != g.n()) {
    throw DomainError(std::string(op) + ": degree mismatch (" +
                      std::to_string(f.n()) + " vs " + std::to_string(g.n()) +
                      ")");
  }
}

}  // namespace

SchurVector SchurVector::single(Partition shape, Int coeff) {
  SchurVector v(shape.n());
  v.add_term(shape, coeff);
  return v;
}

Int SchurVector::coeff(const Partition& shape) const {
  auto it = terms_.find(shape);
  return it == terms_.end() ? Int(0) : it->second;
}

void SchurVector::add_term(const Partition& shape, const Int& coeff) {
  if (shape.n() != n_) {
    throw DomainError("SchurVector: shape " + shape.str() +
                      " has degree " + std::to_string(shape.n()) +
                      ", vector has degree " + std::to_string(n_));
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(shape, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SchurVector linear_combine(const Int& a, const SchurVector& f, const Int& b,
                           const SchurVector& g) {
  require_same_degree(f, g, "linear_combine");
  SchurVector out(f.n());
  for (const auto& [shape, coeff] : f.terms()) out.add_term(shape, a * coeff);
  for (const auto& [shape, coeff] : g.terms()) out.add_term(shape, b * coeff);
  return out;
}

SchurVector kronecker_product(const SchurVector& f, const SchurVector& g,
                              const CharacterTable& table, unsigned threads) {
  require_same_degree(f, g, "kronecker_product");
  if (table.n() != f.n()) {
    throw PrecomputationRequiredError(
        f.n(), "kronecker_product: need character data for n = " +
                   std::to_string(f.n()) + " (table has n = " +
                   std::to_string(table.n()) + ")");
  }
  SchurVector out(f.n());
  if (f.is_zero() || g.is_zero()) return out;

  const auto& classes = table.classes();
  const std::size_t class_count = classes.size();

  auto virtual_character = [&](const SchurVector& v) {
    std::vector<Int> chi(class_count, Int(0));
    for (const auto& [shape, coeff] : v.terms()) {
      const std::size_t row = table.shape_index(shape);
      for (std::size_t c = 0; c < class_count; ++c) {
        chi[c] += coeff * table.value(row, c);
      }
    }
    return chi;
  };
  const std::vector<Int> chi_f = virtual_character(f);
  const std::vector<Int> chi_g = virtual_character(g);

  const auto& shapes = table.shapes();
  const Int& nf = table.factorial_n();
  std::vector<Int> coeffs(shapes.size());
  parallel_for(shapes.size(), threads, [&](std::size_t r) {
    Int sum = 0;
    for (std::size_t c = 0; c < class_count; ++c) {
      sum += classes[c].class_size * chi_f[c] * chi_g[c] * table.value(r, c);
    }
    if (sum % nf != 0) {
      throw InternalArithmeticError(
          "kronecker_product: character sum not divisible by n! at nu = " +
          shapes[r].str());
    }
    coeffs[r] = sum / nf;
  });
  for (std::size_t r = 0; r < shapes.size(); ++r) {
    out.add_term(shapes[r], coeffs[r]);
  }
  return out;
}

SchurVector kronecker_product(const SchurVector& f, const SchurVector& g,
                              const KroneckerCache& cache) {
  require_same_degree(f, g, "kronecker_product");
  if (cache.n() != f.n()) {
    throw PrecomputationRequiredError(
        f.n(), "kronecker_product: need Kronecker data for n = " +
                   std::to_string(f.n()) + " (cache has n = " +
                   std::to_string(cache.n()) + ")");
  }
  SchurVector out(f.n());
  for (const auto& nu : cache.shapes()) {
    Int total = 0;
    for (const auto& [lambda, cf] : f.terms()) {
      for (const auto& [mu, cg] : g.terms()) {
        total += cf * cg * cache.coefficient(lambda, mu, nu);
      }
    }
    out.add_term(nu, total);
  }
  return out;
}

SchurVector snk(int n, int k) {
  if (n < 1) throw BoundsError("snk: n must be positive");
  if (k < 1 || k > n) {
    throw BoundsError("snk: k = " + std::to_string(k) + " outside [1, " +
                      std::to_string(n) + "]");
  }
  SchurVector out(n);
  for (const auto& shape :
       partitions_of(n, k, std::max(n, kDefaultPartitionMax))) {
    out.add_term(shape, syt_count(shape));
  }
  return out;
}

SchurComparison schur_compare(const SchurVector& f, const SchurVector& g) {
  require_same_degree(f, g, "schur_compare");
  SchurComparison cmp{true, {}, linear_combine(-1, f, 1, g)};
  for (const auto& [shape, coeff] : cmp.difference.terms()) {
    if (coeff < 0) {
      cmp.positive = false;
      cmp.negative_terms.emplace_back(shape, coeff);
    }
  }
  return cmp;
}

Int frob_dimension(const SchurVector& f) {
  Int dim = 0;
  for (const auto& [shape, coeff] : f.terms()) {
    dim += coeff * syt_count(shape);
  }
  return dim;
}

}  // namespace liskron
