#include "liskron/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "liskron/errors.hpp"

namespace liskron {

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is always a binomial coefficient here
  }
  return r;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  int prev = parts_.empty() ? 0 : parts_.front();
  for (int p : parts_) {
    if (p < 1) throw DomainError("partition parts must be positive");
    if (p > prev) throw DomainError("partition parts must be weakly decreasing");
    prev = p;
    n_ += p;
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw DomainError("bad partition text: '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    if (pos == text.size()) {
      throw DomainError("bad partition text: trailing comma in '" +
                        std::string(text) + "'");
    }
  }
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  if (!parts_.empty()) {
    conj.resize(static_cast<std::size_t>(parts_.front()));
    for (int j = 0; j < parts_.front(); ++j) {
      int count = 0;
      for (int p : parts_) {
        if (p >= j + 1) ++count;
      }
      conj[static_cast<std::size_t>(j)] = count;
    }
  }
  return Partition(std::move(conj));
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

// Emits partitions in canonical (reverse lexicographic) order by choosing
// parts largest-first. With an exact-length target the branch is pruned by
// the obvious bounds: r remaining parts can carry between r and r*max_part.
void emit_partitions(int remaining, int max_part, std::optional<int> target_len,
                     std::vector<int>& stack, std::vector<Partition>& out) {
  if (remaining == 0) {
    if (!target_len || static_cast<int>(stack.size()) == *target_len) {
      out.push_back(Partition(stack));
    }
    return;
  }
  for (int next = std::min(remaining, max_part); next >= 1; --next) {
    if (target_len) {
      int left = *target_len - static_cast<int>(stack.size()) - 1;
      int rest = remaining - next;
      if (left < 0 || rest < left) continue;
      if (static_cast<long long>(left) * next < rest) continue;
    }
    stack.push_back(next);
    emit_partitions(remaining - next, next, target_len, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, std::optional<int> length_filter,
                                     int n_max) {
  if (n < 1 || n > n_max) {
    throw BoundsError("partitions_of: n = " + std::to_string(n) +
                      " outside [1, " + std::to_string(n_max) + "]");
  }
  if (length_filter && (*length_filter < 1 || *length_filter > n)) {
    return {};  // empty-filter convention: no shapes, downstream sums are 0
  }
  std::vector<Partition> out;
  std::vector<int> stack;
  emit_partitions(n, n, length_filter, stack, out);
  return out;
}

HookData hook_data(const Partition& shape) {
  const auto& rows = shape.parts();
  Partition conj = shape.conjugate();
  HookData data;
  data.hook_lengths.reserve(rows.size());
  data.hook_product = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<int> row(static_cast<std::size_t>(rows[i]));
    for (int j = 0; j < rows[i]; ++j) {
      int arm = rows[i] - j - 1;
      int leg = conj.part(j) - static_cast<int>(i) - 1;
      row[static_cast<std::size_t>(j)] = arm + leg + 1;
      data.hook_product *= row[static_cast<std::size_t>(j)];
    }
    data.hook_lengths.push_back(std::move(row));
  }
  Int nf = factorial(shape.n());
  if (nf % data.hook_product != 0) {
    throw InternalArithmeticError("hook product does not divide n! for shape " +
                                  shape.str());
  }
  data.syt_count = nf / data.hook_product;
  return data;
}

Int syt_count(const Partition& shape) { return hook_data(shape).syt_count; }

ClassData class_data(const Partition& cycle_type) {
  ClassData data;
  data.cycle_type = cycle_type;
  data.z_rho = 1;
  const auto& parts = cycle_type.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    auto mult = static_cast<int>(j - i);
    for (int m = 1; m <= mult; ++m) data.z_rho *= Int(parts[i]) * m;
    i = j;
  }
  Int nf = factorial(cycle_type.n());
  if (nf % data.z_rho != 0) {
    throw InternalArithmeticError("z_rho does not divide n! for cycle type " +
                                  cycle_type.str());
  }
  data.class_size = nf / data.z_rho;
  return data;
}

}  // namespace liskron
