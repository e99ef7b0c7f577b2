#pragma once
// Serialization (JSON, JSON-lines, CSV) and the golden-table comparison.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "circiso/enumerate.hpp"

namespace circiso {

using Json = nlohmann::ordered_json;

Json to_json(const IsoVerdict& v);
Json to_json(const Classification& c);
/// row is included when given (family tables number rows from 1).
Json to_json(const TupleRecord& r, std::optional<std::size_t> row = std::nullopt);
Json to_json(const ScanReport& r);
Json to_json(const std::vector<ProbeEntry>& entries);

/// "T1", "T2", "NI" (non-isomorphic) or "U" (unknown).
std::string verdict_cell(const Classification& c);

inline constexpr std::string_view kCsvHeader = "row,R,theta_t2,theta_t4,adam_orbit,verdict";

/// One line without the newline; row numbers start at 1.
std::string csv_row(std::size_t row, const TupleRecord& r);
std::string to_csv(const std::vector<TupleRecord>& records);
std::string to_jsonl(const std::vector<TupleRecord>& records);

/// Throws Io with the path in the message.
void write_file(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

/// Throws InvalidParams on an empty record list.
void export_csv(const std::vector<TupleRecord>& records, const std::filesystem::path& path);
void export_jsonl(const std::vector<TupleRecord>& records, const std::filesystem::path& path);

// ---------------------------------------------------------------- goldens

struct GoldenRow {
  int table_no = 0;
  int row_no = 0;
  char family = 'a';
  std::string r;  // printed cells, verbatim
  std::string theta_t2;
  std::string theta_t4;
  std::vector<std::string> adam_orbit;
  std::string expected_verdict;  // "T1" or "T2"
};

/// Tab-separated, '#' starts a comment line. Throws Parse with a line number.
std::vector<GoldenRow> parse_goldens(std::string_view text);
/// The transcription compiled into the library.
std::string_view embedded_goldens();

struct GoldenReport {
  std::size_t rows = 0;
  std::size_t matches = 0;
  std::vector<std::string> mismatches;  // verdict disagreements
  std::vector<std::string> warnings;    // printed cells that disagree with the computation

  bool ok() const { return mismatches.empty(); }
};

GoldenReport verify_goldens(const std::vector<GoldenRow>& rows, int workers = worker_count());

}  // namespace circiso
