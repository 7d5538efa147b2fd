#pragma once

#include <cstddef>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "liskron/partition.hpp"
#include "liskron/report.hpp"

namespace liskron {

inline constexpr int kDefaultCharacterMax = 16;

// Murnaghan-Nakayama evaluation of irreducible symmetric-group characters.
// The memo is keyed on (remaining shape, remaining cycle type); cycle parts
// are consumed largest-first, so suffixes are shared across cycle types of
// the same n. Thread-safe: concurrent callers insert identical values.
class MnEvaluator {
 public:
  explicit MnEvaluator(bool memoize = true) : memoize_(memoize) {}

  // chi^shape(cycle_type); both partitions must have the same size.
  Int evaluate(const Partition& shape, const Partition& cycle_type);

  std::size_t memo_size() const;

 private:
  struct Key {
    Partition shape;
    Partition cycles;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      PartitionHash h;
      return h(k.shape) * 0x9e3779b97f4a7c15ull ^ h(k.cycles);
    }
  };

  Int eval(const Partition& shape, const Partition& cycles);

  bool memoize_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Int, KeyHash> memo_;
};

// chi^lambda(rho) through a process-wide shared memo.
Int mn_character(const Partition& shape, const Partition& cycle_type);

// The full exact character table of S_n. Rows (shapes) follow the canonical
// partition order; columns (classes) are reversed so the identity class
// (1^n) sits in the first column and f^lambda is the first-column entry.
class CharacterTable {
 public:
  static CharacterTable build(int n, unsigned threads = 1,
                              int n_max = kDefaultCharacterMax);

  // Rebuilds a table around externally stored values (the CSV loader); the
  // matrix must be the full shapes x classes grid in table order.
  static CharacterTable assemble(int n, std::vector<std::vector<Int>> values,
                                 int n_max = kDefaultCharacterMax);

  int n() const { return n_; }
  const std::vector<Partition>& shapes() const { return shapes_; }
  const std::vector<ClassData>& classes() const { return classes_; }
  const Int& factorial_n() const { return factorial_n_; }

  const Int& value(std::size_t shape_idx, std::size_t class_idx) const {
    return values_[shape_idx][class_idx];
  }
  const Int& value(const Partition& shape, const Partition& cycle_type) const;

  std::size_t shape_index(const Partition& shape) const;
  std::size_t class_index(const Partition& cycle_type) const;
  bool has_shape(const Partition& shape) const;

  // Mutable access for fault-injection tests.
  Int& value_mut(std::size_t shape_idx, std::size_t class_idx) {
    return values_[shape_idx][class_idx];
  }

 private:
  CharacterTable() = default;
  static CharacterTable frame(int n, int n_max);

  int n_ = 0;
  Int factorial_n_;
  std::vector<Partition> shapes_;
  std::vector<ClassData> classes_;
  std::vector<std::vector<Int>> values_;
  std::unordered_map<Partition, std::size_t, PartitionHash> shape_index_;
  std::unordered_map<Partition, std::size_t, PartitionHash> class_index_;
};

// Checks both orthogonality relations, the first-column rule, and the
// trivial/sign rows. Violations become report witnesses, not exceptions.
VerificationReport validate_table(const CharacterTable& table);

}  // namespace liskron
