#pragma once

#include "liskron/characters.hpp"
#include "liskron/report.hpp"
#include "liskron/rsk.hpp"

namespace liskron {

// Log-concavity of the census row n: a_{n,k-1} a_{n,k+1} <= a_{n,k}^2 for
// 2 <= k <= n-1, as exact integer comparisons on the hook census.
VerificationReport verify_c1(int n, int hook_max = kDefaultHookCensusMax);

// The same inequality reached through the hook form: after clearing (n!)^4
// the double sums over length classes collapse to census products, and the
// report records that the comparisons match verify_c1 term for term.
VerificationReport verify_ineq3(int n, int hook_max = kDefaultHookCensusMax);

// Per-irreducible refinement: for every nu and every interior k, the
// multiplicity of nu in the (k-1, k+1) aggregate product is at most its
// multiplicity in the (k, k) product. Also checks that the f^nu-weighted
// sums over nu reproduce both sides of the census inequality.
VerificationReport verify_c3(int n, const CharacterTable& table,
                             unsigned threads = 1);

// Schur-positivity form: S_{n,k}*S_{n,k} - S_{n,k-1}*S_{n,k+1} must have no
// negative Schur coefficient. Every coefficient of the difference is also
// cross-checked against the aggregate-multiplicity route.
VerificationReport verify_c4(int n, const CharacterTable& table,
                             unsigned threads = 1);

// Hook Kronecker differences: for i + j < n the difference
//   s_(n-i,1^i) * s_(n-j,1^j) - s_(n-i+1,1^(i-1)) * s_(n-j+1,1^(j-1))
// (second product zero when i = 0 or j = 0) must be Schur positive with
// dimension C(n-1,i) C(n-1,j) - C(n-1,i-1) C(n-1,j-1); the diagonal
// j = n-1-i certifies log-concavity of the binomial row n-1.
VerificationReport verify_t1(int n, const CharacterTable& table,
                             unsigned threads = 1);

// The dimension side of verify_t1 without any character data: hook-formula
// dimensions of hooks equal binomials, and the diagonal difference is the
// binomial log-concavity gap. Valid far beyond the character range.
VerificationReport verify_t1_dimensions(int n);

// Consistency of the refinement with the census: for each k, the f^nu-
// weighted sum of the per-nu gaps equals a_{n,k}^2 - a_{n,k-1} a_{n,k+1}.
VerificationReport cross_sum_check(int n, const CharacterTable& table,
                                   unsigned threads = 1);

}  // namespace liskron
