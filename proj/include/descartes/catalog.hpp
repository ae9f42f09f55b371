#pragma once

// Persistence and reporting: an append-only JSON Lines store of
// classification records, summaries per degree, and CSV export.

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "descartes/realize.hpp"

namespace descartes {

inline constexpr const char* kToolVersion = "1.0.0";

struct StoreMeta {
  std::uint64_t budget = 50000;
  std::uint64_t seed = 1;
  std::string version = kToolVersion;

  friend bool operator==(const StoreMeta&, const StoreMeta&) = default;
};

/// Coefficients (constant first) as "n/d" strings plus the verified counts.
nlohmann::json witness_to_json(const Witness& witness);
nlohmann::json record_to_json(const ClassificationRecord& record);
/// Throws Parse on malformed input and StoreCorruption when a stored witness
/// no longer verifies.
ClassificationRecord record_from_json(const nlohmann::json& object);

/// Lowercase hex CRC-32 of the payload.
std::string checksum_of(const std::string& payload);
/// Canonical single-line form of object with a "crc" field over the rest.
std::string encode_line(nlohmann::json object);
/// Inverse of encode_line; throws StoreCorruption on a checksum mismatch or
/// unparsable line.
nlohmann::json decode_line(const std::string& line);

/// Single-writer JSONL store. The first line holds the run metadata; every
/// further line is one record, keyed by its couple.
class CatalogStore {
 public:
  /// Opens (creating if needed) a store for writing. An existing store must
  /// have been written with the same budget and seed (InvalidArgument
  /// otherwise). A trailing partial line left by an interrupted append is
  /// dropped.
  static CatalogStore open(const std::filesystem::path& path, const StoreMeta& meta);
  /// Read-only view; metadata comes from the file.
  static CatalogStore load(const std::filesystem::path& path);

  const StoreMeta& meta() const noexcept { return meta_; }
  const std::map<Couple, ClassificationRecord>& records() const noexcept { return records_; }
  bool contains(const Couple& couple) const { return records_.count(couple) != 0; }
  const ClassificationRecord* find(const Couple& couple) const;

  /// Throws InvalidArgument for duplicate keys and for Realizable records
  /// without a witness.
  void append(const ClassificationRecord& record);

  /// Couples whose records fail reverify().
  std::vector<Couple> reverify_all() const;

 private:
  CatalogStore(std::filesystem::path path, StoreMeta meta, bool writable)
      : path_(std::move(path)), meta_(std::move(meta)), writable_(writable) {}

  void read_existing(bool repair);

  std::filesystem::path path_;
  StoreMeta meta_;
  bool writable_ = false;
  std::map<Couple, ClassificationRecord> records_;
};

struct ReportSummary {
  int degree = 0;
  std::uint64_t total_couples = 0;
  std::uint64_t realizable = 0;
  std::uint64_t nonrealizable_theorem = 0;
  std::uint64_t nonrealizable_criterion = 0;
  std::uint64_t conjectured = 0;
  std::uint64_t unknown = 0;
  /// Number of orbits per status name.
  std::map<std::string, std::uint64_t> orbit_counts;

  /// R(d)/A(d): realizable couples over admissible couples.
  double realizable_ratio() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Summary over the records of degree d (other degrees are ignored).
ReportSummary summarize(int d, const std::vector<ClassificationRecord>& records);

std::string csv_header();
std::string csv_row(const ClassificationRecord& record);

}  // namespace descartes
