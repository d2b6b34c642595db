#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "permlab/cli/config.hpp"
#include "permlab/cli/report.hpp"

namespace permlab::cli {

/// One coefficient space: tuples are mixed-radix digits shifted by `offsets`
/// into element ids, judged as (predicate verdict, brute-force verdict).
struct Problem {
  std::vector<std::uint64_t> radices;
  std::vector<std::uint32_t> offsets;
  std::function<std::pair<bool, bool>(const std::vector<std::uint32_t>&)> judge;
};

/// Builds the contexts for one theorem at one q. Throws DomainError when the
/// theorem does not apply to q and CapExceeded for witness searches past the
/// cap.
Problem make_problem(const std::string& theorem, std::uint64_t q, const CampaignConfig& cfg);

/// Runs a single q with cfg.jobs striped workers.
ReportRecord run_q(const CampaignConfig& cfg, std::uint64_t q, const std::string& campaign);

/// "<theorem>-<config hash>-r<run>", the run number one past any earlier run
/// of the same configuration in `existing` (or the latest one when resuming).
std::string campaign_id(const CampaignConfig& cfg, const std::vector<ReportRecord>& existing);

/// Runs every q, appending each record to cfg.out (if set) as it completes.
std::vector<ReportRecord> run_campaign(const CampaignConfig& cfg);

/// 0 iff every record has zero disagreements.
int exit_code(const std::vector<ReportRecord>& records);

}  // namespace permlab::cli
