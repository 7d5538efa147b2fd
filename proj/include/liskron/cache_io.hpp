#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "liskron/characters.hpp"
#include "liskron/kronecker.hpp"
#include "liskron/rsk.hpp"
#include "liskron/schur.hpp"

namespace liskron {

inline constexpr int kCacheFormatVersion = 1;

// ---- stream formats ----------------------------------------------------
// Census rows: header `n,k,a_nk`, one row per k.
void write_census_csv(std::ostream& out, const CensusTable& census);

// Character table: header `shape\class` followed by the cycle types, then
// one row per shape. Partition cells are double-quoted because their text
// form contains commas.
void write_character_csv(std::ostream& out, const CharacterTable& table);

// Reads the format above back; the header and shape column must match the
// table layout for n exactly. Malformed input raises CacheCorruptError with
// the 1-based line number.
CharacterTable read_character_csv(std::istream& in, int n,
                                  int n_max = kDefaultCharacterMax);

// Kronecker tensor: one JSON record per line. The first line is a header
// {"format":"liskron-kronecker","version":1,"n":N,"provenance":...,
//  "entries":count}; each entry line is
// {"n":N,"lambda":"...","mu":"...","nu":"...","g":"<decimal>"} with the
// canonical (sorted) triple. `entries` lets the reader detect truncation.
void write_kronecker_ndjson(std::ostream& out, const KroneckerCache& cache);

// Reads the format above. A header version other than kCacheFormatVersion
// raises CacheVersionError; malformed or inconsistent records raise
// CacheCorruptError with the line number.
KroneckerCache read_kronecker_ndjson(std::istream& in);

// Schur vector: {"n":N,"terms":[{"shape":"...","coeff":"<decimal>"},...]}
// with terms in canonical shape order.
void write_schur_json(std::ostream& out, const SchurVector& vec);

// Sampling summary: {"n":..,"trials":..,"seed":..,"mean":..,"stddev":..,
// "hist":{"<k>":count,...}} with mean and stddev fixed to six fractional
// digits so repeated runs are byte-identical.
void write_sample_json(std::ostream& out, const LisSampleSummary& summary);

// ---- cache lifecycle ----------------------------------------------------
// Filenames embed n and the format version.
std::string character_cache_filename(int n);
std::string kronecker_cache_filename(int n);

// Atomic writes: temp file in `dir`, then rename; partial files are never
// visible under the cache name. Creates `dir` if needed.
void save_cache(const CharacterTable& table, const std::filesystem::path& dir);
void save_cache(const KroneckerCache& cache, const std::filesystem::path& dir);

// Missing file -> nullopt (caller recomputes). A loaded file is spot-checked
// by recomputing the first entry, the last entry, and 30 seeded-random
// entries; any disagreement raises CacheCorruptError naming the entry.
std::optional<CharacterTable> load_character_cache(
    int n, const std::filesystem::path& dir, int n_max = kDefaultCharacterMax);
std::optional<KroneckerCache> load_kronecker_cache(
    int n, const std::filesystem::path& dir, const CharacterTable& table);

}  // namespace liskron
