#include "liskron/verify.hpp"

#include <chrono>

#include "liskron/errors.hpp"
#include "liskron/kronecker.hpp"
#include "liskron/parallel.hpp"
#include "liskron/schur.hpp"

namespace liskron {

namespace {

class Timer {
 public:
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void require_min_n(int n, int min_n, const char* op) {
  if (n < min_n) {
    throw BoundsError(std::string(op) + ": n = " + std::to_string(n) +
                      " is below the minimum " + std::to_string(min_n));
  }
}

void require_table(int n, const CharacterTable& table, const char* op) {
  if (table.n() != n) {
    throw DomainError(std::string(op) + ": character table is for n = " +
                      std::to_string(table.n()) + ", requested n = " +
                      std::to_string(n));
  }
}

// Aggregate characters psi_k for k = 1..n, indexed psi[k-1].
std::vector<std::vector<Int>> all_aggregate_characters(
    const CharacterTable& table, unsigned threads) {
  std::vector<std::vector<Int>> psi(static_cast<std::size_t>(table.n()));
  parallel_for(psi.size(), threads, [&](std::size_t i) {
    psi[i] = aggregate_character(table, static_cast<int>(i) + 1);
  });
  return psi;
}

}  // namespace

VerificationReport verify_c1(int n, int hook_max) {
  Timer timer;
  require_min_n(n, 3, "verify_c1");
  CensusTable census = census_hook(n, hook_max);

  VerificationReport report;
  report.target = VerifyTarget::c1;
  report.n = n;
  report.set_config("n", std::to_string(n));
  report.set_config("census_method", "hook");

  for (int k = 2; k <= n - 1; ++k) {
    Int lhs = census.a(k - 1) * census.a(k + 1);
    Int rhs = census.a(k) * census.a(k);
    if (lhs > rhs) {
      report.witnesses.push_back(
          {k, std::nullopt, to_decimal(lhs), to_decimal(rhs), ""});
    }
  }
  report.status = report.witnesses.empty() ? VerifyStatus::verified
                                           : VerifyStatus::counterexample;
  report.elapsed_ms = timer.ms();
  return report;
}

VerificationReport verify_ineq3(int n, int hook_max) {
  Timer timer;
  require_min_n(n, 3, "verify_ineq3");

  // Length-class sums A_j = sum over l(lambda)=j of (f^lambda)^2. After
  // multiplying the hook-form inequality by (n!)^4 the double sums factor
  // into A_{k-1} A_{k+1} <= A_k^2, the census comparison again.
  std::vector<Int> class_sum(static_cast<std::size_t>(n) + 1, Int(0));
  for (const auto& shape : partitions_of(n, std::nullopt, hook_max)) {
    Int f = syt_count(shape);
    class_sum[static_cast<std::size_t>(shape.length())] += f * f;
  }

  VerificationReport report;
  report.target = VerifyTarget::ineq3;
  report.n = n;
  report.set_config("n", std::to_string(n));
  report.set_config("form", "hook, cleared by (n!)^4");

  CensusTable census = census_hook(n, hook_max);
  bool matches_c1 = true;
  for (int k = 2; k <= n - 1; ++k) {
    Int lhs = class_sum[static_cast<std::size_t>(k - 1)] *
              class_sum[static_cast<std::size_t>(k + 1)];
    Int rhs = class_sum[static_cast<std::size_t>(k)] *
              class_sum[static_cast<std::size_t>(k)];
    if (lhs != census.a(k - 1) * census.a(k + 1) ||
        rhs != census.a(k) * census.a(k)) {
      matches_c1 = false;
    }
    if (lhs > rhs) {
      report.witnesses.push_back(
          {k, std::nullopt, to_decimal(lhs), to_decimal(rhs), ""});
    }
  }
  if (!matches_c1) {
    throw InternalArithmeticError(
        "verify_ineq3: hook-form sums disagree with the census route");
  }
  report.set_config("matches_c1", "term-for-term");
  report.status = report.witnesses.empty() ? VerifyStatus::verified
                                           : VerifyStatus::counterexample;
  report.elapsed_ms = timer.ms();
  return report;
}

VerificationReport verify_c3(int n, const CharacterTable& table,
                             unsigned threads) {
  Timer timer;
  require_min_n(n, 3, "verify_c3");
  require_table(n, table, "verify_c3");

  VerificationReport report;
  report.target = VerifyTarget::c3;
  report.n = n;
  report.set_config("n", std::to_string(n));

  const auto psi = all_aggregate_characters(table, threads);
  const auto& shapes = table.shapes();
  const std::size_t shape_count = shapes.size();
  const int k_count = n - 2;  // k = 2..n-1

  // One slot per (k, nu) cell; parallel fills, canonical merge.
  std::vector<std::pair<Int, Int>> cells(
      static_cast<std::size_t>(k_count) * shape_count);
  parallel_for(cells.size(), threads, [&](std::size_t cell) {
    const int k = 2 + static_cast<int>(cell / shape_count);
    const std::size_t nu_idx = cell % shape_count;
    cells[cell] = {
        aggregate_multiplicity(psi[static_cast<std::size_t>(k - 2)],
                               psi[static_cast<std::size_t>(k)],
                               shapes[nu_idx], table),
        aggregate_multiplicity(psi[static_cast<std::size_t>(k - 1)],
                               psi[static_cast<std::size_t>(k - 1)],
                               shapes[nu_idx], table)};
  });

  // f^nu weights for the consistency sums.
  std::vector<Int> dims(shape_count);
  for (std::size_t i = 0; i < shape_count; ++i) dims[i] = syt_count(shapes[i]);
  CensusTable census = census_hook(n);

  for (int k = 2; k <= n - 1; ++k) {
    Int weighted_lhs = 0, weighted_rhs = 0;
    for (std::size_t nu_idx = 0; nu_idx < shape_count; ++nu_idx) {
      const auto& [lhs, rhs] =
          cells[static_cast<std::size_t>(k - 2) * shape_count + nu_idx];
      if (lhs > rhs) {
        report.witnesses.push_back({k, shapes[nu_idx], to_decimal(lhs),
                                    to_decimal(rhs), ""});
      }
      weighted_lhs += dims[nu_idx] * lhs;
      weighted_rhs += dims[nu_idx] * rhs;
    }
    if (weighted_lhs != census.a(k - 1) * census.a(k + 1) ||
        weighted_rhs != census.a(k) * census.a(k)) {
      throw InternalArithmeticError(
          "verify_c3: f-weighted sums do not reproduce the census sides at "
          "k = " +
          std::to_string(k));
    }
  }
  report.set_config("consistency", "f-weighted sums reproduce the census");

  report.status = report.witnesses.empty() ? VerifyStatus::verified
                                           : VerifyStatus::counterexample;
  report.elapsed_ms = timer.ms();
  return report;
}

VerificationReport verify_c4(int n, const CharacterTable& table,
                             unsigned threads) {
  Timer timer;
  require_min_n(n, 3, "verify_c4");
  require_table(n, table, "verify_c4");

  VerificationReport report;
  report.target = VerifyTarget::c4;
  report.n = n;
  report.set_config("n", std::to_string(n));

  std::vector<SchurVector> s;
  s.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) s.push_back(snk(n, k));
  const auto psi = all_aggregate_characters(table, threads);

  for (int k = 2; k <= n - 1; ++k) {
    const SchurVector same = kronecker_product(
        s[static_cast<std::size_t>(k - 1)], s[static_cast<std::size_t>(k - 1)],
        table, threads);
    const SchurVector adjacent = kronecker_product(
        s[static_cast<std::size_t>(k - 2)], s[static_cast<std::size_t>(k)],
        table, threads);
    const SchurComparison cmp = schur_compare(adjacent, same);
    for (const auto& [shape, coeff] : cmp.negative_terms) {
      report.witnesses.push_back({k, shape, to_decimal(adjacent.coeff(shape)),
                                  to_decimal(same.coeff(shape)), ""});
    }
    // Every coefficient of the difference must equal the gap computed by
    // the one-pass aggregate route.
    for (const auto& nu : table.shapes()) {
      Int gap = aggregate_multiplicity(psi[static_cast<std::size_t>(k - 1)],
                                       psi[static_cast<std::size_t>(k - 1)],
                                       nu, table) -
                aggregate_multiplicity(psi[static_cast<std::size_t>(k - 2)],
                                       psi[static_cast<std::size_t>(k)], nu,
                                       table);
      if (gap != cmp.difference.coeff(nu)) {
        throw InternalArithmeticError(
            "verify_c4: product route disagrees with aggregate route at k = " +
            std::to_string(k) + ", nu = " + nu.str());
      }
    }
  }
  report.set_config("c3_agreement", "coefficient gaps match per (k, nu)");

  report.status = report.witnesses.empty() ? VerifyStatus::verified
                                           : VerifyStatus::counterexample;
  report.elapsed_ms = timer.ms();
  return report;
}

namespace {

Partition hook_shape(int n, int i) {
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(i) + 1);
  parts.push_back(n - i);
  for (int r = 0; r < i; ++r) parts.push_back(1);
  return Partition(std::move(parts));
}

}  // namespace

VerificationReport verify_t1(int n, const CharacterTable& table,
                             unsigned threads) {
  Timer timer;
  require_min_n(n, 2, "verify_t1");
  require_table(n, table, "verify_t1");

  VerificationReport report;
  report.target = VerifyTarget::t1;
  report.n = n;
  report.set_config("n", std::to_string(n));
  report.set_config("region", "i+j<n");

  std::vector<std::pair<int, int>> region;
  for (int i = 0; i <= n - 1; ++i) {
    for (int j = 0; i + j < n && j <= n - 1; ++j) region.emplace_back(i, j);
  }

  std::vector<std::vector<VerifyWitness>> found(region.size());
  parallel_for(region.size(), threads, [&](std::size_t cell) {
    const auto [i, j] = region[cell];
    const SchurVector head = kronecker_product(
        SchurVector::single(hook_shape(n, i)),
        SchurVector::single(hook_shape(n, j)), table, 1);
    SchurVector tail(n);
    if (i > 0 && j > 0) {
      tail = kronecker_product(SchurVector::single(hook_shape(n, i - 1)),
                               SchurVector::single(hook_shape(n, j - 1)),
                               table, 1);
    }
    const SchurComparison cmp = schur_compare(tail, head);
    const std::string at = "i=" + std::to_string(i) + " j=" + std::to_string(j);
    for (const auto& [shape, coeff] : cmp.negative_terms) {
      found[cell].push_back({i, shape, to_decimal(tail.coeff(shape)),
                             to_decimal(head.coeff(shape)),
                             "negative Schur coefficient, " + at});
    }
    const Int expected = binomial(n - 1, i) * binomial(n - 1, j) -
                         binomial(n - 1, i - 1) * binomial(n - 1, j - 1);
    const Int dim = frob_dimension(cmp.difference);
    if (dim != expected) {
      found[cell].push_back({i, std::nullopt, to_decimal(dim),
                             to_decimal(expected), "dimension mismatch, " + at});
    }
    // Diagonal cells certify binomial log-concavity directly.
    if (j == n - 1 - i && dim < 0) {
      found[cell].push_back({i, std::nullopt, to_decimal(dim), "0",
                             "negative diagonal gap, " + at});
    }
  });
  for (auto& cell_witnesses : found) {
    for (auto& w : cell_witnesses) report.witnesses.push_back(std::move(w));
  }
  report.set_config("diagonal",
                    "gap at j=n-1-i is the binomial log-concavity margin");

  report.status = report.witnesses.empty() ? VerifyStatus::verified
                                           : VerifyStatus::counterexample;
  report.elapsed_ms = timer.ms();
  return report;
}

VerificationReport verify_t1_dimensions(int n) {
  Timer timer;
  require_min_n(n, 2, "verify_t1_dimensions");
  if (n > 1024) {
    throw BoundsError("verify_t1_dimensions: n = " + std::to_string(n) +
                      " exceeds 1024");
  }

  VerificationReport report;
  report.target = VerifyTarget::t1;
  report.n = n;
  report.set_config("n", std::to_string(n));
  report.set_config("mode", "dimensions-only");

  // Hook-formula dimensions, computed independently of binomial().
  std::vector<Int> hook_dim(static_cast<std::size_t>(n));
  for (int i = 0; i <= n - 1; ++i) {
    hook_dim[static_cast<std::size_t>(i)] = syt_count(hook_shape(n, i));
  }

  for (int i = 0; i <= n - 1; ++i) {
    const std::string at = "i=" + std::to_string(i);
    if (hook_dim[static_cast<std::size_t>(i)] != binomial(n - 1, i)) {
      report.witnesses.push_back(
          {i, std::nullopt, to_decimal(hook_dim[static_cast<std::size_t>(i)]),
           to_decimal(binomial(n - 1, i)), "hook dimension vs binomial, " + at});
    }
    for (int j = 0; i + j < n && j <= n - 1; ++j) {
      Int hooks = hook_dim[static_cast<std::size_t>(i)] *
                  hook_dim[static_cast<std::size_t>(j)];
      if (i > 0 && j > 0) {
        hooks -= hook_dim[static_cast<std::size_t>(i - 1)] *
                 hook_dim[static_cast<std::size_t>(j - 1)];
      }
      Int binomials = binomial(n - 1, i) * binomial(n - 1, j) -
                      binomial(n - 1, i - 1) * binomial(n - 1, j - 1);
      if (hooks != binomials) {
        report.witnesses.push_back({i, std::nullopt, to_decimal(hooks),
                                    to_decimal(binomials),
                                    "dimension routes disagree, " + at +
                                        " j=" + std::to_string(j)});
      }
      if (j == n - 1 - i && hooks < 0) {
        report.witnesses.push_back({i, std::nullopt, to_decimal(hooks), "0",
                                    "negative binomial gap, " + at});
      }
    }
  }

  report.status = report.witnesses.empty() ? VerifyStatus::verified
                                           : VerifyStatus::counterexample;
  report.elapsed_ms = timer.ms();
  return report;
}

VerificationReport cross_sum_check(int n, const CharacterTable& table,
                                   unsigned threads) {
  Timer timer;
  require_min_n(n, 3, "cross_sum_check");
  require_table(n, table, "cross_sum_check");

  VerificationReport report;
  report.target = VerifyTarget::c3;
  report.n = n;
  report.set_config("n", std::to_string(n));
  report.set_config("check", "f-weighted per-nu gaps against census gaps");

  const auto psi = all_aggregate_characters(table, threads);
  const auto& shapes = table.shapes();
  std::vector<Int> dims(shapes.size());
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    dims[i] = syt_count(shapes[i]);
  }
  CensusTable census = census_hook(n);

  std::vector<std::pair<Int, Int>> sides(static_cast<std::size_t>(n - 2));
  parallel_for(sides.size(), threads, [&](std::size_t cell) {
    const int k = 2 + static_cast<int>(cell);
    Int weighted = 0;
    for (std::size_t nu = 0; nu < shapes.size(); ++nu) {
      Int rhs = aggregate_multiplicity(psi[static_cast<std::size_t>(k - 1)],
                                       psi[static_cast<std::size_t>(k - 1)],
                                       shapes[nu], table);
      Int lhs = aggregate_multiplicity(psi[static_cast<std::size_t>(k - 2)],
                                       psi[static_cast<std::size_t>(k)],
                                       shapes[nu], table);
      weighted += dims[nu] * (rhs - lhs);
    }
    Int census_gap =
        census.a(k) * census.a(k) - census.a(k - 1) * census.a(k + 1);
    sides[cell] = {std::move(weighted), std::move(census_gap)};
  });

  for (std::size_t cell = 0; cell < sides.size(); ++cell) {
    const int k = 2 + static_cast<int>(cell);
    if (sides[cell].first != sides[cell].second) {
      report.witnesses.push_back({k, std::nullopt,
                                  to_decimal(sides[cell].first),
                                  to_decimal(sides[cell].second),
                                  "weighted gap vs census gap"});
    }
  }

  report.status = report.witnesses.empty() ? VerifyStatus::verified
                                           : VerifyStatus::counterexample;
  report.elapsed_ms = timer.ms();
  return report;
}

}  // namespace liskron
