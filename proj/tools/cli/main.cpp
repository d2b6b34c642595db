#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "permlab/cli/campaign.hpp"
#include "permlab/cli/config.hpp"
#include "permlab/cli/query.hpp"
#include "permlab/gf.hpp"

using namespace permlab;

namespace {

std::string theorem_id(std::string t) {
  if (!t.empty() && t.find_first_not_of("0123456789") == std::string::npos) t = "thm" + t;
  return t;
}

void print_field(const Field& f, const std::string& title) {
  std::cout << title << ": p=" << f.characteristic() << " k=" << f.degree() << " modulus=";
  for (std::size_t i = f.modulus().size(); i-- > 0;) std::cout << f.modulus()[i] << (i ? " " : "");
  std::cout << " (high to low) generator=" << f.generator().id << "\n";
  std::cout << "  id  power  coords\n";
  for (std::uint64_t i = 0; i < f.order(); ++i) {
    const Fe x{static_cast<std::uint32_t>(i)};
    std::cout << "  " << i << "  " << f.format(x) << "  [";
    const auto c = f.coordinates(x);
    for (std::size_t j = 0; j < c.size(); ++j) std::cout << (j ? " " : "") << c[j];
    std::cout << "]\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permlab: permutation polynomial and complete mapping lab"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  std::string config_path, theorem, q_list, mode, out;
  std::optional<std::uint64_t> samples, seed, cap;
  std::optional<unsigned> jobs;
  bool resume = false;
  verify->add_option("-c,--config", config_path, "key=value config file")->check(CLI::ExistingFile);
  verify->add_option("-t,--theorem", theorem, "thm11 thm12 thm13 thm14 thm15 thm17 prop43 lemma51chain lemma55");
  verify->add_option("-q,--q", q_list, "q values, e.g. 2,3,5 or 2..16");
  verify->add_option("-m,--mode", mode, "exhaustive or sample");
  verify->add_option("-n,--samples", samples, "number of samples in sample mode");
  verify->add_option("-s,--seed", seed, "sampling seed (default 20231117)");
  verify->add_option("-j,--jobs", jobs, "worker threads");
  verify->add_option("-o,--out", out, "JSON Lines report to append to");
  verify->add_option("--search-cap", cap, "largest q for witness searches (env PERMLAB_SEARCH_CAP)");
  verify->add_flag("--resume", resume, "continue the latest run of this configuration, skipping finished q");

  auto* query = app.add_subcommand("query", "evaluate every applicable check for one instance");
  std::string qthm, coeffs;
  std::uint64_t qq = 0;
  std::optional<std::uint64_t> qcap;
  bool json_only = false;
  query->add_option("--thm", qthm, "theorem id (11 or thm11, ...)")->required();
  query->add_option("--q", qq, "q")->required();
  query->add_option("--coeffs", coeffs,
                    "comma list, positional or name=value; elements are ids, g^i, or w (= g^1)");
  query->add_option("--search-cap", qcap, "largest q for witness searches");
  query->add_flag("--json", json_only, "print only the JSON row");

  auto* fields = app.add_subcommand("fields", "print element tables of F_q and F_{q^2}");
  std::uint64_t fq = 0;
  fields->add_option("--q", fq, "q <= 16")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      cli::CampaignConfig cfg;
      if (!config_path.empty()) cfg = cli::load_config(config_path);
      if (!theorem.empty()) cli::apply_key(cfg, "theorem", theorem_id(theorem));
      if (!q_list.empty()) cli::apply_key(cfg, "q_list", q_list);
      if (!mode.empty()) cli::apply_key(cfg, "mode", mode);
      if (samples) cfg.samples = *samples;
      if (seed) cfg.seed = *seed;
      if (jobs) cli::apply_key(cfg, "jobs", std::to_string(*jobs));
      if (!out.empty()) cfg.out = out;
      if (cap) cfg.search_cap = *cap;
      cfg.resume = resume;
      cli::finalize(cfg);
      const auto records = cli::run_campaign(cfg);
      for (const auto& r : records) {
        std::cout << r.theorem << " q=" << r.q << " tested=" << r.tested << " agreements=" << r.agreements
                  << " disagreements=" << r.disagreements << " positives=" << r.positives << " ("
                  << r.wall_seconds << " s)\n";
        if (r.counterexample) std::cout << "  counterexample: " << cli::to_json(r).at("counterexample").dump() << "\n";
      }
      return cli::exit_code(records);
    }
    if (*query) {
      const auto res = cli::run_query(cli::QueryInput{theorem_id(qthm), qq, coeffs, qcap});
      if (!json_only) {
        for (const auto& l : res.lines) std::cout << l << "\n";
      }
      std::cout << res.row.dump() << "\n";
      return 0;
    }
    if (*fields) {
      if (fq > 16) throw DomainError("fields prints tables only for q <= 16");
      const auto ctx = QuadExt::build(fq);
      print_field(ctx->base(), "F_" + std::to_string(fq));
      print_field(ctx->ext(), "F_" + std::to_string(fq * fq));
      std::cout << "embedding of F_" << fq << ":";
      for (std::uint64_t i = 0; i < fq; ++i) std::cout << " " << i << "->" << ctx->embed(Fe{static_cast<std::uint32_t>(i)}).id;
      std::cout << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
