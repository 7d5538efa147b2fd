#include "liskron/characters.hpp"

#include <algorithm>
#include <chrono>

#include "liskron/errors.hpp"
#include "liskron/parallel.hpp"

namespace liskron {

namespace {

// Border strips are enumerated through first-column hook lengths ("beta
// numbers"): with L rows, b_i = lambda_i + (L-1-i) is strictly decreasing.
// Removing a strip of size t means replacing some b_i by b_i - t, provided
// the result stays a set; the strip height is the number of b_j passed over.
struct StripRemoval {
  Partition shape;
  int sign;  // (-1)^height
};

std::vector<StripRemoval> remove_border_strips(const Partition& shape, int t) {
  std::vector<StripRemoval> out;
  const auto& parts = shape.parts();
  const int len = shape.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] +
                                        (len - 1 - i);
  }
  for (int i = 0; i < len; ++i) {
    int target = beta[static_cast<std::size_t>(i)] - t;
    if (target < 0) continue;
    bool occupied = false;
    int height = 0;
    for (int j = 0; j < len; ++j) {
      if (j == i) continue;
      if (beta[static_cast<std::size_t>(j)] == target) occupied = true;
      if (beta[static_cast<std::size_t>(j)] > target &&
          beta[static_cast<std::size_t>(j)] < beta[static_cast<std::size_t>(i)]) {
        ++height;
      }
    }
    if (occupied) continue;

    std::vector<int> nb = beta;
    nb[static_cast<std::size_t>(i)] = target;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    std::vector<int> new_parts;
    new_parts.reserve(static_cast<std::size_t>(len));
    for (int r = 0; r < len; ++r) {
      int part = nb[static_cast<std::size_t>(r)] - (len - 1 - r);
      if (part > 0) new_parts.push_back(part);
    }
    out.push_back({Partition(std::move(new_parts)), (height % 2) ? -1 : 1});
  }
  return out;
}

Partition drop_first_part(const Partition& p) {
  std::vector<int> rest(p.parts().begin() + 1, p.parts().end());
  return Partition(std::move(rest));
}

}  // namespace

Int MnEvaluator::evaluate(const Partition& shape, const Partition& cycle_type) {
  if (shape.n() != cycle_type.n()) {
    throw DomainError("mn_character: |shape| = " + std::to_string(shape.n()) +
                      " but |cycle type| = " + std::to_string(cycle_type.n()));
  }
  return eval(shape, cycle_type);
}

std::size_t MnEvaluator::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

Int MnEvaluator::eval(const Partition& shape, const Partition& cycles) {
  if (cycles.empty()) return shape.empty() ? 1 : 0;

  Key key{shape, cycles};
  if (memoize_) {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }

  const int strip = cycles.part(0);
  const Partition rest = drop_first_part(cycles);
  Int total = 0;
  for (const auto& removal : remove_border_strips(shape, strip)) {
    if (removal.sign > 0) {
      total += eval(removal.shape, rest);
    } else {
      total -= eval(removal.shape, rest);
    }
  }

  if (memoize_) {
    std::unique_lock lock(mutex_);
    memo_.emplace(std::move(key), total);
  }
  return total;
}

Int mn_character(const Partition& shape, const Partition& cycle_type) {
  static MnEvaluator shared_evaluator;
  return shared_evaluator.evaluate(shape, cycle_type);
}

CharacterTable CharacterTable::frame(int n, int n_max) {
  if (n < 1 || n > n_max) {
    throw BoundsError("character_table: n = " + std::to_string(n) +
                      " outside [1, " + std::to_string(n_max) + "]");
  }
  CharacterTable t;
  t.n_ = n;
  t.factorial_n_ = factorial(n);
  t.shapes_ = partitions_of(n, std::nullopt, std::max(n, kDefaultPartitionMax));

  // Identity class first: reversed canonical order.
  for (auto it = t.shapes_.rbegin(); it != t.shapes_.rend(); ++it) {
    t.classes_.push_back(class_data(*it));
  }
  for (std::size_t i = 0; i < t.shapes_.size(); ++i) {
    t.shape_index_.emplace(t.shapes_[i], i);
    t.class_index_.emplace(t.classes_[i].cycle_type, i);
  }
  return t;
}

CharacterTable CharacterTable::build(int n, unsigned threads, int n_max) {
  CharacterTable t = frame(n, n_max);
  const std::size_t count = t.shapes_.size();
  t.values_.assign(count, std::vector<Int>(count));
  MnEvaluator evaluator;
  parallel_for(count, threads, [&](std::size_t row) {
    for (std::size_t col = 0; col < count; ++col) {
      t.values_[row][col] =
          evaluator.evaluate(t.shapes_[row], t.classes_[col].cycle_type);
    }
  });
  return t;
}

CharacterTable CharacterTable::assemble(int n,
                                        std::vector<std::vector<Int>> values,
                                        int n_max) {
  CharacterTable t = frame(n, n_max);
  const std::size_t count = t.shapes_.size();
  if (values.size() != count) {
    throw DomainError("character_table: expected " + std::to_string(count) +
                      " rows, got " + std::to_string(values.size()));
  }
  for (const auto& row : values) {
    if (row.size() != count) {
      throw DomainError("character_table: expected " + std::to_string(count) +
                        " columns, got " + std::to_string(row.size()));
    }
  }
  t.values_ = std::move(values);
  return t;
}

const Int& CharacterTable::value(const Partition& shape,
                                 const Partition& cycle_type) const {
  return values_[shape_index(shape)][class_index(cycle_type)];
}

std::size_t CharacterTable::shape_index(const Partition& shape) const {
  auto it = shape_index_.find(shape);
  if (it == shape_index_.end()) {
    throw DomainError("shape " + shape.str() + " is not a partition of " +
                      std::to_string(n_));
  }
  return it->second;
}

std::size_t CharacterTable::class_index(const Partition& cycle_type) const {
  auto it = class_index_.find(cycle_type);
  if (it == class_index_.end()) {
    throw DomainError("cycle type " + cycle_type.str() +
                      " is not a partition of " + std::to_string(n_));
  }
  return it->second;
}

bool CharacterTable::has_shape(const Partition& shape) const {
  return shape_index_.contains(shape);
}

VerificationReport validate_table(const CharacterTable& table) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.target = VerifyTarget::table_validation;
  report.n = table.n();
  report.set_config("n", std::to_string(table.n()));

  const auto& shapes = table.shapes();
  const auto& classes = table.classes();
  const std::size_t count = shapes.size();
  const Int& nf = table.factorial_n();

  auto add = [&](int k, const Partition& nu, const Int& lhs, const Int& rhs,
                 const std::string& detail) {
    report.witnesses.push_back(
        {k, nu, to_decimal(lhs), to_decimal(rhs), detail});
  };

  // Row orthogonality: sum_rho |C_rho| chi^l(rho) chi^m(rho) = n! [l = m].
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a; b < count; ++b) {
      Int sum = 0;
      for (std::size_t c = 0; c < count; ++c) {
        sum += classes[c].class_size * table.value(a, c) * table.value(b, c);
      }
      Int expected = (a == b) ? nf : Int(0);
      if (sum != expected) {
        add(static_cast<int>(a), shapes[b], sum, expected,
            "row-orthogonality " + shapes[a].str() + " x " + shapes[b].str());
      }
    }
  }

  // Column orthogonality: sum_lambda chi(rho) chi(sigma) = z_rho [rho = sigma].
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a; b < count; ++b) {
      Int sum = 0;
      for (std::size_t r = 0; r < count; ++r) {
        sum += table.value(r, a) * table.value(r, b);
      }
      Int expected = (a == b) ? classes[a].z_rho : Int(0);
      if (sum != expected) {
        add(static_cast<int>(a), classes[b].cycle_type, sum, expected,
            "column-orthogonality " + classes[a].cycle_type.str() + " x " +
                classes[b].cycle_type.str());
      }
    }
  }

  // First column carries the dimensions f^lambda.
  for (std::size_t r = 0; r < count; ++r) {
    Int f = syt_count(shapes[r]);
    if (table.value(r, 0) != f) {
      add(static_cast<int>(r), shapes[r], table.value(r, 0), f,
          "first-column " + shapes[r].str());
    }
  }

  // Trivial row is all ones; sign row is (-1)^(n - l(rho)).
  for (std::size_t c = 0; c < count; ++c) {
    if (table.value(0, c) != 1) {
      add(0, classes[c].cycle_type, table.value(0, c), Int(1), "trivial-row");
    }
    int sign = ((table.n() - classes[c].cycle_type.length()) % 2) ? -1 : 1;
    if (table.value(count - 1, c) != sign) {
      add(static_cast<int>(count - 1), classes[c].cycle_type,
          table.value(count - 1, c), Int(sign), "sign-row");
    }
  }

  // Class sizes must exhaust the group.
  Int class_total = 0;
  for (const auto& cls : classes) class_total += cls.class_size;
  if (class_total != nf) {
    add(0, Partition(), class_total, nf, "class-size-total");
  }

  report.status = report.witnesses.empty() ? VerifyStatus::verified
                                           : VerifyStatus::counterexample;
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace liskron
