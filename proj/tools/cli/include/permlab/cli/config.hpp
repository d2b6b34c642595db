#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permlab/error.hpp"

namespace permlab::cli {

class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class Mode { Exhaustive, Sample };

inline const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"thm11", "thm12", "thm13", "thm14", "thm15",
                                            "thm17", "prop43", "lemma51chain", "lemma55"};
  return ids;
}

struct CampaignConfig {
  std::string theorem;
  std::vector<std::uint64_t> qs;
  Mode mode = Mode::Exhaustive;
  std::uint64_t samples = 0;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  std::string out;
  std::optional<std::uint64_t> search_cap;
  bool resume = false;

  [[nodiscard]] std::uint64_t effective_seed() const;
};

/// "2,3,5", "2..16" or a mix; ranges keep only prime powers, a listed value
/// that is not a prime power is an error.
std::vector<std::uint64_t> parse_q_list(const std::string& text);

/// Flat key=value pairs; '#' starts a comment. Duplicate keys keep the last.
std::map<std::string, std::string> read_key_values(const std::string& path);

/// Applies one documented key. Throws ConfigError on an unknown key or a
/// malformed value.
void apply_key(CampaignConfig& cfg, const std::string& key, const std::string& value);

CampaignConfig load_config(const std::string& path);

/// Final checks; also folds in PERMLAB_SEARCH_CAP when no cap was given.
void finalize(CampaignConfig& cfg);

}  // namespace permlab::cli
