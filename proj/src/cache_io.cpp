#include "liskron/cache_io.hpp"

#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "liskron/errors.hpp"

namespace liskron {

namespace {

using nlohmann::ordered_json;

std::string quoted(const std::string& text) { return "\"" + text + "\""; }

// Splits one CSV line; double quotes delimit fields, "" escapes a quote.
std::vector<std::string> split_csv(const std::string& line, int line_no) {
  std::vector<std::string> fields;
  std::string current;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (in_quotes) {
    throw CacheCorruptError(line_no, "unterminated quoted field");
  }
  fields.push_back(std::move(current));
  return fields;
}

bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

Int parse_integer(const std::string& text, int line_no, bool allow_negative) {
  std::size_t i = 0;
  if (allow_negative && !text.empty() && text[0] == '-') i = 1;
  if (i == text.size()) {
    throw CacheCorruptError(line_no, "malformed integer '" + text + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw CacheCorruptError(line_no, "malformed integer '" + text + "'");
    }
  }
  return Int(text);
}

Partition parse_shape(const std::string& text, int n, int line_no) {
  try {
    Partition shape = Partition::parse(text);
    if (shape.n() != n) {
      throw CacheCorruptError(line_no, "partition '" + text +
                                           "' has size " +
                                           std::to_string(shape.n()) +
                                           ", expected " + std::to_string(n));
    }
    return shape;
  } catch (const DomainError& e) {
    throw CacheCorruptError(line_no, e.what());
  }
}

}  // namespace

void write_census_csv(std::ostream& out, const CensusTable& census) {
  out << "n,k,a_nk\n";
  for (int k = 1; k <= census.n; ++k) {
    out << census.n << ',' << k << ',' << census.a(k) << '\n';
  }
}

void write_character_csv(std::ostream& out, const CharacterTable& table) {
  out << "shape\\class";
  for (const auto& cls : table.classes()) {
    out << ',' << quoted(cls.cycle_type.str());
  }
  out << '\n';
  for (std::size_t row = 0; row < table.shapes().size(); ++row) {
    out << quoted(table.shapes()[row].str());
    for (std::size_t col = 0; col < table.classes().size(); ++col) {
      out << ',' << table.value(row, col);
    }
    out << '\n';
  }
}

CharacterTable read_character_csv(std::istream& in, int n, int n_max) {
  // Expected layout for n, independent of file contents.
  std::vector<Partition> shapes =
      partitions_of(n, std::nullopt, std::max(n, kDefaultPartitionMax));
  std::vector<Partition> classes(shapes.rbegin(), shapes.rend());

  std::string line;
  int line_no = 1;
  if (!next_line(in, line)) {
    throw CacheCorruptError(line_no, "missing header row");
  }
  std::vector<std::string> header = split_csv(line, line_no);
  if (header.size() != classes.size() + 1 || header[0] != "shape\\class") {
    throw CacheCorruptError(line_no, "bad header row");
  }
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (header[c + 1] != classes[c].str()) {
      throw CacheCorruptError(line_no, "class column " + std::to_string(c) +
                                           " is '" + header[c + 1] +
                                           "', expected '" + classes[c].str() +
                                           "'");
    }
  }

  std::vector<std::vector<Int>> values;
  values.reserve(shapes.size());
  for (std::size_t r = 0; r < shapes.size(); ++r) {
    ++line_no;
    if (!next_line(in, line)) {
      throw CacheCorruptError(line_no, "expected " +
                                           std::to_string(shapes.size()) +
                                           " shape rows, found " +
                                           std::to_string(r));
    }
    std::vector<std::string> fields = split_csv(line, line_no);
    if (fields.size() != classes.size() + 1) {
      throw CacheCorruptError(line_no, "expected " +
                                           std::to_string(classes.size() + 1) +
                                           " fields, found " +
                                           std::to_string(fields.size()));
    }
    if (fields[0] != shapes[r].str()) {
      throw CacheCorruptError(line_no, "shape row is '" + fields[0] +
                                           "', expected '" + shapes[r].str() +
                                           "'");
    }
    std::vector<Int> row;
    row.reserve(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
      row.push_back(parse_integer(fields[c + 1], line_no, true));
    }
    values.push_back(std::move(row));
  }
  ++line_no;
  if (next_line(in, line) && !line.empty()) {
    throw CacheCorruptError(line_no, "trailing content after table rows");
  }
  return CharacterTable::assemble(n, std::move(values), n_max);
}

void write_kronecker_ndjson(std::ostream& out, const KroneckerCache& cache) {
  ordered_json header;
  header["format"] = "liskron-kronecker";
  header["version"] = kCacheFormatVersion;
  header["n"] = cache.n();
  header["provenance"] = cache.provenance();
  header["entries"] = cache.size();
  out << header.dump() << '\n';
  for (const auto& [key, value] : cache.entries()) {
    ordered_json record;
    record["n"] = cache.n();
    record["lambda"] = cache.shapes()[key[0]].str();
    record["mu"] = cache.shapes()[key[1]].str();
    record["nu"] = cache.shapes()[key[2]].str();
    record["g"] = to_decimal(value);
    out << record.dump() << '\n';
  }
}

namespace {

// Shared by the plain reader and the spot-checking loader; `lines` (when
// given) records the file line of every entry for later error reports.
KroneckerCache parse_kronecker_ndjson(
    std::istream& in,
    std::vector<std::pair<KroneckerCache::TripleKey, int>>* lines) {
  std::string line;
  int line_no = 1;
  if (!next_line(in, line)) {
    throw CacheCorruptError(line_no, "missing header record");
  }
  ordered_json header;
  try {
    header = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw CacheCorruptError(line_no, e.what());
  }
  if (!header.is_object() || !header.contains("format") ||
      !header["format"].is_string() ||
      header["format"].get<std::string>() != "liskron-kronecker") {
    throw CacheCorruptError(line_no, "not a kronecker cache header");
  }
  if (!header.contains("version") || !header["version"].is_number_integer() ||
      header["version"].get<int>() != kCacheFormatVersion) {
    throw CacheVersionError(
        "kronecker cache has format version " +
        (header.contains("version") ? header["version"].dump()
                                    : std::string("?")) +
        ", this build reads version " + std::to_string(kCacheFormatVersion));
  }
  if (!header.contains("n") || !header["n"].is_number_integer()) {
    throw CacheCorruptError(line_no, "header record lacks n");
  }
  const int n = header["n"].get<int>();
  if (n < 1 || n > kDefaultPartitionMax) {
    throw CacheCorruptError(line_no, "header n out of range");
  }
  if (!header.contains("entries") || !header["entries"].is_number_integer()) {
    throw CacheCorruptError(line_no, "header record lacks entries");
  }
  const auto expected_entries = header["entries"].get<std::uint64_t>();
  std::string provenance;
  if (header.contains("provenance")) {
    if (!header["provenance"].is_string()) {
      throw CacheCorruptError(line_no, "header provenance is not a string");
    }
    provenance = header["provenance"].get<std::string>();
  }

  KroneckerCache cache(n,
                       partitions_of(n, std::nullopt,
                                     std::max(n, kDefaultPartitionMax)),
                       std::move(provenance));
  std::uint64_t seen = 0;
  while (next_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    ordered_json record;
    try {
      record = ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw CacheCorruptError(line_no, e.what());
    }
    for (const char* field : {"n", "lambda", "mu", "nu", "g"}) {
      if (!record.contains(field)) {
        throw CacheCorruptError(line_no,
                                std::string("record lacks '") + field + "'");
      }
    }
    if (!record["n"].is_number_integer() || record["n"].get<int>() != n) {
      throw CacheCorruptError(line_no, "record n differs from header n");
    }
    for (const char* field : {"lambda", "mu", "nu", "g"}) {
      if (!record[field].is_string()) {
        throw CacheCorruptError(line_no,
                                std::string("field '") + field +
                                    "' is not a string");
      }
    }
    const Partition lambda =
        parse_shape(record["lambda"].get<std::string>(), n, line_no);
    const Partition mu =
        parse_shape(record["mu"].get<std::string>(), n, line_no);
    const Partition nu =
        parse_shape(record["nu"].get<std::string>(), n, line_no);
    const Int g = parse_integer(record["g"].get<std::string>(), line_no,
                                /*allow_negative=*/false);
    const auto key = cache.canonical_key(lambda, mu, nu);
    if (cache.entries().contains(key)) {
      throw CacheCorruptError(line_no, "duplicate triple");
    }
    cache.insert(key, g);
    if (lines) lines->emplace_back(key, line_no);
    ++seen;
  }
  if (seen != expected_entries) {
    throw CacheCorruptError(line_no,
                            "header promised " +
                                std::to_string(expected_entries) +
                                " entries, file holds " + std::to_string(seen));
  }
  return cache;
}

}  // namespace

KroneckerCache read_kronecker_ndjson(std::istream& in) {
  return parse_kronecker_ndjson(in, nullptr);
}

void write_schur_json(std::ostream& out, const SchurVector& vec) {
  ordered_json doc;
  doc["n"] = vec.n();
  doc["terms"] = ordered_json::array();
  for (const auto& [shape, coeff] : vec.terms()) {
    ordered_json term;
    term["shape"] = shape.str();
    term["coeff"] = to_decimal(coeff);
    doc["terms"].push_back(std::move(term));
  }
  out << doc.dump() << '\n';
}

void write_sample_json(std::ostream& out, const LisSampleSummary& summary) {
  // Assembled by hand so that mean/stddev carry exactly six fractional
  // digits; shortest-round-trip double printing would vary the width.
  char mean_text[64];
  char stddev_text[64];
  std::snprintf(mean_text, sizeof mean_text, "%.6f", summary.mean);
  std::snprintf(stddev_text, sizeof stddev_text, "%.6f", summary.stddev);
  out << "{\"n\":" << summary.n << ",\"trials\":" << summary.trials
      << ",\"seed\":" << summary.seed << ",\"mean\":" << mean_text
      << ",\"stddev\":" << stddev_text << ",\"hist\":{";
  bool first = true;
  for (const auto& [length, count] : summary.histogram) {
    if (!first) out << ',';
    first = false;
    out << '"' << length << "\":" << count;
  }
  out << "}}\n";
}

std::string character_cache_filename(int n) {
  return "char-table-n" + std::to_string(n) + "-v" +
         std::to_string(kCacheFormatVersion) + ".csv";
}

std::string kronecker_cache_filename(int n) {
  return "kronecker-n" + std::to_string(n) + "-v" +
         std::to_string(kCacheFormatVersion) + ".ndjson";
}

namespace {

// Writes through a temp file in the same directory, then renames; readers
// only ever see complete files.
void atomic_write(const std::filesystem::path& dir, const std::string& name,
                  const std::string& content) {
  std::filesystem::create_directories(dir);
  static std::atomic<unsigned> counter{0};
  const auto stamp =
      std::chrono::steady_clock::now().time_since_epoch().count();
  const std::filesystem::path temp =
      dir / (name + ".tmp-" + std::to_string(stamp) + "-" +
             std::to_string(counter.fetch_add(1)));
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(temp, ignored);
      throw std::runtime_error("failed to write " + temp.string());
    }
  }
  std::filesystem::rename(temp, dir / name);
}

// Deterministic spot-check plan: the first entry, the last entry, and 30
// draws from a SplitMix64 stream seeded with n.
std::vector<std::size_t> spot_check_indices(int n, std::size_t count) {
  std::vector<std::size_t> picks;
  if (count == 0) return picks;
  picks.push_back(0);
  picks.push_back(count - 1);
  for (std::uint64_t i = 0; i < 30; ++i) {
    picks.push_back(static_cast<std::size_t>(
        splitmix64_at(static_cast<std::uint64_t>(n), i + 1) % count));
  }
  return picks;
}

}  // namespace

void save_cache(const CharacterTable& table,
                const std::filesystem::path& dir) {
  std::ostringstream buffer;
  write_character_csv(buffer, table);
  atomic_write(dir, character_cache_filename(table.n()), buffer.str());
}

void save_cache(const KroneckerCache& cache,
                const std::filesystem::path& dir) {
  std::ostringstream buffer;
  write_kronecker_ndjson(buffer, cache);
  atomic_write(dir, kronecker_cache_filename(cache.n()), buffer.str());
}

std::optional<CharacterTable> load_character_cache(
    int n, const std::filesystem::path& dir, int n_max) {
  const std::filesystem::path path = dir / character_cache_filename(n);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  CharacterTable table = read_character_csv(in, n, n_max);

  const std::size_t rows = table.shapes().size();
  MnEvaluator evaluator;
  for (std::size_t pick : spot_check_indices(n, rows * rows)) {
    const std::size_t row = pick / rows;
    const std::size_t col = pick % rows;
    const Int expected =
        evaluator.evaluate(table.shapes()[row],
                           table.classes()[col].cycle_type);
    if (table.value(row, col) != expected) {
      throw CacheCorruptError(
          static_cast<int>(row) + 2,
          "entry (" + table.shapes()[row].str() + "; " +
              table.classes()[col].cycle_type.str() +
              ") disagrees with recomputation");
    }
  }
  return table;
}

std::optional<KroneckerCache> load_kronecker_cache(
    int n, const std::filesystem::path& dir, const CharacterTable& table) {
  if (table.n() != n) {
    throw DomainError("load_kronecker_cache: table is for n = " +
                      std::to_string(table.n()) + ", requested n = " +
                      std::to_string(n));
  }
  const std::filesystem::path path = dir / kronecker_cache_filename(n);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;

  std::vector<std::pair<KroneckerCache::TripleKey, int>> lines;
  KroneckerCache cache = parse_kronecker_ndjson(in, &lines);

  for (std::size_t pick : spot_check_indices(n, lines.size())) {
    const auto& [key, line_no] = lines[pick];
    const Partition& lambda = cache.shapes()[key[0]];
    const Partition& mu = cache.shapes()[key[1]];
    const Partition& nu = cache.shapes()[key[2]];
    const Int expected = kronecker_coefficient(lambda, mu, nu, table);
    if (cache.coefficient(lambda, mu, nu) != expected) {
      throw CacheCorruptError(line_no,
                              "coefficient (" + lambda.str() + "; " +
                                  mu.str() + "; " + nu.str() +
                                  ") disagrees with recomputation");
    }
  }
  return cache;
}

}  // namespace liskron
