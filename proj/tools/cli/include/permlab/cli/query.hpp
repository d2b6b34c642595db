#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "permlab/gf.hpp"

namespace permlab::cli {

/// Element syntax: a decimal id (polynomial-basis encoding, so 0 and 1 are
/// zero and one), "g^i" for a power of the field's generator, or "w" for g^1.
/// Throws DomainError on anything else.
Fe parse_element(const Field& f, const std::string& text);

struct QueryInput {
  std::string theorem;
  std::uint64_t q = 0;
  /// Comma-separated values, positional or name=value.
  std::string coeffs;
  std::optional<std::uint64_t> search_cap;
};

struct QueryResult {
  std::vector<std::string> lines;
  nlohmann::ordered_json row;
};

QueryResult run_query(const QueryInput& in);

}  // namespace permlab::cli
