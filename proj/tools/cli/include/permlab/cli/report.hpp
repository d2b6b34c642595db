#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace permlab::cli {

struct Counterexample {
  std::uint64_t index = 0;          // position in the tuple enumeration
  std::vector<std::uint32_t> tuple; // coefficient ids
  bool predicate = false;
  bool oracle = false;
};

struct ReportRecord {
  std::string campaign;
  std::string theorem;
  std::uint64_t q = 0;
  std::string mode;
  std::uint64_t seed = 0;
  std::uint64_t tested = 0;
  std::uint64_t agreements = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t positives = 0;  // tuples the oracle accepts
  std::optional<Counterexample> counterexample;
  double wall_seconds = 0;
};

nlohmann::ordered_json to_json(const ReportRecord& r);
ReportRecord record_from_json(const nlohmann::json& j);

/// Appends one line per record; an empty list leaves the file untouched.
/// Throws Error on I/O failure.
void write_report(const std::vector<ReportRecord>& records, const std::string& path);

/// Every parseable record in a JSON Lines file; missing file gives none.
std::vector<ReportRecord> read_report(const std::string& path);

}  // namespace permlab::cli
