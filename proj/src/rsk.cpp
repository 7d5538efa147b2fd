#include "liskron/rsk.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "liskron/errors.hpp"
#include "liskron/parallel.hpp"

namespace liskron {

namespace {

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t s) : state(s) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

}  // namespace

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed + index * 0x9e3779b97f4a7c15ull);
  return g.next();
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size(), false);
  for (int v : word_) {
    if (v < 1 || v > static_cast<int>(word_.size()) ||
        seen[static_cast<std::size_t>(v - 1)]) {
      throw DomainError("not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::reversal(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  // Same comma-joined text form as partitions, without the ordering rule.
  std::vector<int> w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok(text.substr(pos, comma == std::string_view::npos
                                         ? std::string_view::npos
                                         : comma - pos));
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      w.push_back(v);
    } catch (const std::exception&) {
      throw DomainError("bad permutation text: '" + std::string(text) + "'");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (w.empty()) throw DomainError("empty permutation text");
  return Permutation(std::move(w));
}

Permutation Permutation::reversed() const {
  std::vector<int> w(word_.rbegin(), word_.rend());
  return Permutation(std::move(w));
}

std::string Permutation::str() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word_[i]);
  }
  return out;
}

namespace {

int lis_of_word(const std::vector<int>& w) {
  std::vector<int> tails;  // tails[i] = least tail of an increasing run of i+1
  tails.reserve(w.size());
  for (int x : w) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) {
      tails.push_back(x);
    } else {
      *it = x;
    }
  }
  return static_cast<int>(tails.size());
}

}  // namespace

int lis_length(const Permutation& pi) { return lis_of_word(pi.word()); }

int lds_length(const Permutation& pi) {
  std::vector<int> w(pi.word().rbegin(), pi.word().rend());
  return lis_of_word(w);
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

bool Tableau::is_standard() const {
  std::size_t cells = 0;
  for (const auto& row : rows) cells += row.size();
  std::vector<bool> seen(cells, false);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      int v = rows[r][c];
      if (v < 1 || v > static_cast<int>(cells) ||
          seen[static_cast<std::size_t>(v - 1)]) {
        return false;
      }
      seen[static_cast<std::size_t>(v - 1)] = true;
      if (c > 0 && rows[r][c - 1] >= v) return false;
      if (r > 0 && rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

TableauPair rsk(const Permutation& pi) {
  std::vector<std::vector<int>> p, q;
  for (int step = 0; step < pi.size(); ++step) {
    int carry = pi.word()[static_cast<std::size_t>(step)];
    std::size_t row = 0;
    for (;; ++row) {
      if (row == p.size()) {
        p.emplace_back();
        q.emplace_back();
      }
      auto it = std::upper_bound(p[row].begin(), p[row].end(), carry);
      if (it == p[row].end()) {
        p[row].push_back(carry);
        q[row].push_back(step + 1);
        break;
      }
      std::swap(*it, carry);
    }
  }
  TableauPair pair{Tableau{std::move(p)}, Tableau{std::move(q)}, Partition()};
  pair.shape = pair.p.shape();
  return pair;
}

CensusTable census_exhaustive(int n, unsigned threads) {
  if (n < 1 || n > kExhaustiveCensusMax) {
    throw BoundsError("census_exhaustive: n = " + std::to_string(n) +
                      " outside [1, " + std::to_string(kExhaustiveCensusMax) +
                      "]");
  }
  CensusTable table;
  table.n = n;
  table.method = CensusMethod::exhaustive;
  table.counts.assign(static_cast<std::size_t>(n), Int(0));

  // Block v enumerates the (n-1)!-sized lex range of words starting with v+1.
  std::vector<std::vector<std::uint64_t>> block_hist(
      static_cast<std::size_t>(n),
      std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t block) {
    const int first = static_cast<int>(block) + 1;
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(n - 1));
    for (int v = 1; v <= n; ++v) {
      if (v != first) rest.push_back(v);
    }
    std::vector<int> word(static_cast<std::size_t>(n));
    word[0] = first;
    auto& hist = block_hist[block];
    do {
      std::copy(rest.begin(), rest.end(), word.begin() + 1);
      ++hist[static_cast<std::size_t>(lis_of_word(word) - 1)];
    } while (std::next_permutation(rest.begin(), rest.end()));
  });
  for (const auto& hist : block_hist) {
    for (std::size_t k = 0; k < hist.size(); ++k) {
      table.counts[k] += hist[k];
    }
  }
  return table;
}

CensusTable census_hook(int n, int n_max) {
  if (n < 1 || n > n_max) {
    throw BoundsError("census_hook: n = " + std::to_string(n) +
                      " outside [1, " + std::to_string(n_max) + "]");
  }
  CensusTable table;
  table.n = n;
  table.method = CensusMethod::hook;
  table.counts.assign(static_cast<std::size_t>(n), Int(0));
  for (const auto& shape : partitions_of(n, std::nullopt, n_max)) {
    Int f = syt_count(shape);
    table.counts[static_cast<std::size_t>(shape.length() - 1)] += f * f;
  }
  return table;
}

namespace {

void place_syt(const Partition& shape, int next, int cells,
               std::vector<int>& fill, Tableau& partial,
               std::vector<Tableau>& out) {
  if (next > cells) {
    out.push_back(partial);
    return;
  }
  for (int r = 0; r < shape.length(); ++r) {
    std::size_t row = static_cast<std::size_t>(r);
    if (fill[row] >= shape.part(r)) continue;
    if (r > 0 && fill[row - 1] <= fill[row]) continue;
    partial.rows[row].push_back(next);
    ++fill[row];
    place_syt(shape, next + 1, cells, fill, partial, out);
    --fill[row];
    partial.rows[row].pop_back();
  }
}

}  // namespace

std::vector<Tableau> enumerate_syt(const Partition& shape) {
  if (shape.n() > kSytEnumerationMax) {
    throw BoundsError("enumerate_syt: |shape| = " + std::to_string(shape.n()) +
                      " exceeds " + std::to_string(kSytEnumerationMax));
  }
  std::vector<Tableau> out;
  Tableau partial;
  partial.rows.assign(static_cast<std::size_t>(shape.length()), {});
  std::vector<int> fill(static_cast<std::size_t>(shape.length()), 0);
  place_syt(shape, 1, shape.n(), fill, partial, out);
  return out;
}

VerificationReport erdos_szekeres_check(int k, int l) {
  auto start = std::chrono::steady_clock::now();
  if (k < 1 || l < 1) {
    throw BoundsError("erdos_szekeres_check: k and l must be positive");
  }
  const int threshold = (k - 1) * (l - 1);
  if (threshold + 1 > 9) {
    throw BoundsError(
        "erdos_szekeres_check: (k-1)(l-1)+1 = " + std::to_string(threshold + 1) +
        " exceeds the exhaustive limit 9");
  }

  VerificationReport report;
  report.target = VerifyTarget::es;
  report.n = threshold + 1;
  report.set_config("k", std::to_string(k));
  report.set_config("l", std::to_string(l));

  // Above the threshold: every permutation must comply.
  std::vector<int> word(static_cast<std::size_t>(threshold + 1));
  std::iota(word.begin(), word.end(), 1);
  do {
    if (lis_of_word(word) < k) {
      std::vector<int> rev(word.rbegin(), word.rend());
      if (lis_of_word(rev) < l) {
        Permutation bad(word);
        report.witnesses.push_back({threshold + 1, std::nullopt,
                                    std::to_string(lis_of_word(word)),
                                    std::to_string(k),
                                    "no long run in " + bad.str()});
      }
    }
  } while (std::next_permutation(word.begin(), word.end()));

  // At the threshold: find the lex-least permutation avoiding both runs.
  bool found = false;
  if (threshold >= 1) {
    std::vector<int> probe(static_cast<std::size_t>(threshold));
    std::iota(probe.begin(), probe.end(), 1);
    do {
      if (lis_of_word(probe) < k) {
        std::vector<int> rev(probe.rbegin(), probe.rend());
        if (lis_of_word(rev) < l) {
          report.set_config("witness_below_threshold", Permutation(probe).str());
          found = true;
          break;
        }
      }
    } while (std::next_permutation(probe.begin(), probe.end()));
  }
  if (!found) report.set_config("witness_below_threshold", "none");

  report.status = report.witnesses.empty() ? VerifyStatus::verified
                                           : VerifyStatus::counterexample;
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

LisSampleSummary sample_lis(int n, std::int64_t trials, std::uint64_t seed,
                            unsigned threads) {
  if (n < 1) throw BoundsError("sample_lis: n must be positive");
  if (trials < 1) throw BoundsError("sample_lis: trials must be positive");

  LisSampleSummary summary;
  summary.n = n;
  summary.trials = trials;
  summary.seed = seed;

  std::vector<int> lengths(static_cast<std::size_t>(trials));
  parallel_for(static_cast<std::size_t>(trials), threads, [&](std::size_t t) {
    SplitMix64 rng(splitmix64_at(seed, t + 1));
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    for (int i = n - 1; i >= 1; --i) {
      auto j = static_cast<std::size_t>(rng.next() %
                                        static_cast<std::uint64_t>(i + 1));
      std::swap(word[static_cast<std::size_t>(i)], word[j]);
    }
    lengths[t] = lis_of_word(word);
  });

  for (int len : lengths) ++summary.histogram[len];

  // Exact integer moments first; floating point only at the very end.
  Int s1 = 0, s2 = 0;
  for (const auto& [len, count] : summary.histogram) {
    s1 += Int(len) * count;
    s2 += Int(len) * len * count;
  }
  const double t = static_cast<double>(trials);
  summary.mean = static_cast<double>(s1) / t;
  double variance = static_cast<double>(s2) / t - summary.mean * summary.mean;
  summary.stddev = variance > 0 ? std::sqrt(variance) : 0.0;
  return summary;
}

}  // namespace liskron
