#pragma once

#include "ap5/number_field.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ap5 {

/// Every stored class must carry a_p for all primes p <= this bound with p not dividing the level.
inline constexpr std::uint64_t kRequiredPrimeBound = 199;

/// One Galois orbit of weight-2 newforms with trivial character.
struct NewformClass {
  std::uint64_t level = 0;
  std::string label;
  IntPoly field_poly;
  std::map<std::uint64_t, NumberFieldElem> ap;

  [[nodiscard]] std::size_t degree() const { return static_cast<std::size_t>(field_poly.degree()); }
  /// Throws DataGapError if a_p is not stored.
  [[nodiscard]] const NumberFieldElem& a(std::uint64_t p) const;
};

struct NewformStore {
  std::map<std::uint64_t, std::vector<NewformClass>> levels;
  /// One entry per loaded file: "<path> sha256:<hex>".
  std::vector<std::string> provenance;

  [[nodiscard]] std::size_t count(std::uint64_t level) const;
  [[nodiscard]] std::size_t total() const;
};

/// Parses one level file. `origin` only labels diagnostics.
[[nodiscard]] std::vector<NewformClass> parse_level_json(const std::string& text, const std::string& origin,
                                                         std::uint64_t* level_out = nullptr);

/// Loads a single level file, or every *.json file in a directory.
/// Throws SchemaError (including for empty input and duplicate labels) or
/// DataGapError (a required a_p missing).
[[nodiscard]] NewformStore load_store(const std::string& path);

/// Canonical serialization: compact JSON, keys sorted, classes sorted by
/// label, a_p sorted by p, trailing newline.
[[nodiscard]] std::string canonical_json(std::uint64_t level, std::vector<NewformClass> classes);

/// Writes canonical_json atomically.
void write_level_file(const std::string& path, std::uint64_t level, const std::vector<NewformClass>& classes);

struct LevelCheck {
  std::uint64_t level = 0;
  std::size_t expected = 0;
  std::size_t found = 0;
  bool present = false;
  [[nodiscard]] bool ok() const { return present && expected == found; }
};

struct ValidationReport {
  std::vector<LevelCheck> levels;
  /// "label p a_p" for rational classes breaking |a_p| <= 2 sqrt(p).
  std::vector<std::string> hasse_failures;
  std::size_t hasse_checked = 0;
  [[nodiscard]] bool ok() const;
};

/// Class counts at the four Frey levels.
[[nodiscard]] std::map<std::uint64_t, std::size_t> default_expected_counts();

[[nodiscard]] ValidationReport validate_store(const NewformStore& store,
                                              const std::map<std::uint64_t, std::size_t>& expected_counts);

struct FetchOptions {
  /// Empty means the adapter default.
  std::string base_url;
  unsigned retries = 3;
  unsigned timeout_seconds = 60;
};

/// Downloads every trivial-character weight-2 class at `level` and writes a
/// canonical level file to out_path. The output is replaced only after a
/// complete, validated download. Throws FetchError.
void fetch_remote(std::uint64_t level, const std::string& out_path, const FetchOptions& options = {});

}  // namespace ap5
