#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liskron/int_types.hpp"

namespace liskron {

// Guard for partition enumeration; callers with a genuine need (the hook
// census runs to 60) pass their own bound.
inline constexpr int kDefaultPartitionMax = 30;

// An integer partition: weakly decreasing positive parts with cached sum.
// Immutable after construction and usable as a map key. The empty partition
// (of 0) is allowed; it shows up as a recursion base case.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Parses the text form "p1,p2,...,pk", e.g. "3,1,1". "" is the empty
  // partition. Throws DomainError on malformed input.
  static Partition parse(std::string_view text);

  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  // Part i (0-based), or 0 past the end.
  int part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  // lambda'_j = #{i : lambda_i >= j}
  Partition conjugate() const;

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Plain lexicographic comparison on the parts; see CanonicalLess for the
  // library-wide canonical order.
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Canonical order is reverse lexicographic: (n) first, (1^n) last. All
// enumeration, table rows, and serialized terms follow it.
struct CanonicalLess {
  bool operator()(const Partition& a, const Partition& b) const {
    return b < a;
  }
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int part : p.parts()) {
      h ^= static_cast<std::size_t>(part) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

// All partitions of n in canonical order, optionally restricted to exactly
// `length_filter` parts. A filter selecting nothing yields an empty sequence;
// n outside [1, n_max] is a bounds error.
std::vector<Partition> partitions_of(
    int n, std::optional<int> length_filter = std::nullopt,
    int n_max = kDefaultPartitionMax);

// Hook lengths, their product H, and the tableau count f = n!/H. The
// divisibility is asserted; a failure would be an implementation bug.
struct HookData {
  std::vector<std::vector<int>> hook_lengths;
  Int hook_product;
  Int syt_count;
};

HookData hook_data(const Partition& shape);

// f^lambda = n!/H_lambda.
Int syt_count(const Partition& shape);

// Conjugacy-class combinatorics of a cycle type: z_rho = prod i^{m_i} m_i!
// and the class size n!/z_rho.
struct ClassData {
  Partition cycle_type;
  Int z_rho;
  Int class_size;
};

ClassData class_data(const Partition& cycle_type);

}  // namespace liskron
