#include "permlab/cli/report.hpp"

#include <fstream>

#include "permlab/error.hpp"

namespace permlab::cli {

nlohmann::ordered_json to_json(const ReportRecord& r) {
  nlohmann::ordered_json j;
  j["campaign"] = r.campaign;
  j["theorem"] = r.theorem;
  j["q"] = r.q;
  j["mode"] = r.mode;
  j["seed"] = r.seed;
  j["tested"] = r.tested;
  j["agreements"] = r.agreements;
  j["disagreements"] = r.disagreements;
  j["positives"] = r.positives;
  if (r.counterexample) {
    nlohmann::ordered_json c;
    c["index"] = r.counterexample->index;
    c["tuple"] = r.counterexample->tuple;
    c["predicate"] = r.counterexample->predicate;
    c["oracle"] = r.counterexample->oracle;
    j["counterexample"] = c;
  } else {
    j["counterexample"] = nullptr;
  }
  j["wall_seconds"] = r.wall_seconds;
  return j;
}

ReportRecord record_from_json(const nlohmann::json& j) {
  ReportRecord r;
  r.campaign = j.at("campaign").get<std::string>();
  r.theorem = j.at("theorem").get<std::string>();
  r.q = j.at("q").get<std::uint64_t>();
  r.mode = j.at("mode").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.tested = j.at("tested").get<std::uint64_t>();
  r.agreements = j.at("agreements").get<std::uint64_t>();
  r.disagreements = j.at("disagreements").get<std::uint64_t>();
  r.positives = j.value("positives", std::uint64_t{0});
  if (const auto& c = j.at("counterexample"); !c.is_null()) {
    r.counterexample = Counterexample{c.at("index").get<std::uint64_t>(),
                                      c.at("tuple").get<std::vector<std::uint32_t>>(),
                                      c.at("predicate").get<bool>(), c.at("oracle").get<bool>()};
  }
  r.wall_seconds = j.at("wall_seconds").get<double>();
  return r;
}

void write_report(const std::vector<ReportRecord>& records, const std::string& path) {
  if (records.empty()) return;
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("cannot open report file '" + path + "' for appending");
  for (const auto& r : records) out << to_json(r).dump() << '\n';
  out.flush();
  if (!out) throw Error("failed writing report file '" + path + "'");
}

std::vector<ReportRecord> read_report(const std::string& path) {
  std::vector<ReportRecord> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      out.push_back(record_from_json(nlohmann::json::parse(line)));
    } catch (const std::exception&) {
      // foreign or truncated line
    }
  }
  return out;
}

}  // namespace permlab::cli
