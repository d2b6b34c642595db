#include "permlab/cli/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>

#include "permlab/gf.hpp"
#include "permlab/sampling.hpp"

namespace permlab::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_uint(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ConfigError(key + ": expected a non-negative integer, got '" + text + "'");
  }
  try {
    return std::stoull(t);
  } catch (const std::exception&) {
    throw ConfigError(key + ": value out of range '" + text + "'");
  }
}

}  // namespace

std::uint64_t CampaignConfig::effective_seed() const { return seed.value_or(kDefaultSeed); }

std::vector<std::uint64_t> parse_q_list(const std::string& text) {
  std::set<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string item = trim(text.substr(pos, next - pos));
    pos = next + 1;
    if (item.empty()) continue;
    const auto dots = item.find("..");
    if (dots != std::string::npos) {
      const auto lo = parse_uint("q_list", item.substr(0, dots));
      const auto hi = parse_uint("q_list", item.substr(dots + 2));
      if (lo > hi) throw ConfigError("q_list: empty range '" + item + "'");
      if (hi > (std::uint64_t{1} << 16)) throw ConfigError("q_list: range bound too large '" + item + "'");
      for (std::uint64_t q = lo; q <= hi; ++q) {
        if (as_prime_power(q)) out.insert(q);
      }
    } else {
      const auto q = parse_uint("q_list", item);
      if (!as_prime_power(q)) throw ConfigError("q_list: " + std::to_string(q) + " is not a prime power");
      out.insert(q);
    }
  }
  if (out.empty()) throw ConfigError("q_list: no prime powers in '" + text + "'");
  return {out.begin(), out.end()};
}

std::map<std::string, std::string> read_key_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

void apply_key(CampaignConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "theorem") {
    const auto& ids = theorem_ids();
    if (std::find(ids.begin(), ids.end(), value) == ids.end()) {
      throw ConfigError("theorem: unknown id '" + value + "'");
    }
    cfg.theorem = value;
  } else if (key == "q_list") {
    cfg.qs = parse_q_list(value);
  } else if (key == "mode") {
    if (value == "exhaustive") {
      cfg.mode = Mode::Exhaustive;
    } else if (value == "sample") {
      cfg.mode = Mode::Sample;
    } else {
      throw ConfigError("mode: expected exhaustive or sample, got '" + value + "'");
    }
  } else if (key == "samples") {
    cfg.samples = parse_uint(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_uint(key, value);
  } else if (key == "jobs") {
    const auto j = parse_uint(key, value);
    if (j == 0 || j > 1024) throw ConfigError("jobs: must be between 1 and 1024");
    cfg.jobs = static_cast<unsigned>(j);
  } else if (key == "out") {
    if (value.empty()) throw ConfigError("out: empty path");
    cfg.out = value;
  } else if (key == "search_cap") {
    cfg.search_cap = parse_uint(key, value);
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

CampaignConfig load_config(const std::string& path) {
  CampaignConfig cfg;
  for (const auto& [k, v] : read_key_values(path)) apply_key(cfg, k, v);
  return cfg;
}

void finalize(CampaignConfig& cfg) {
  if (cfg.theorem.empty()) throw ConfigError("theorem is required");
  if (cfg.qs.empty()) throw ConfigError("q_list is required");
  if (cfg.mode == Mode::Sample && cfg.samples == 0) throw ConfigError("sample mode needs samples >= 1");
  if (!cfg.search_cap) {
    if (const char* env = std::getenv("PERMLAB_SEARCH_CAP"); env && *env) {
      cfg.search_cap = parse_uint("PERMLAB_SEARCH_CAP", env);
    }
  }
}

}  // namespace permlab::cli
