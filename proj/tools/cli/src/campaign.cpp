#include "permlab/cli/campaign.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <set>
#include <thread>

#include "permlab/equivalence.hpp"
#include "permlab/mureduce.hpp"
#include "permlab/permcheck.hpp"
#include "permlab/sampling.hpp"
#include "permlab/theorems.hpp"

namespace permlab::cli {

namespace {

Fe fe(std::uint64_t id) { return Fe{static_cast<std::uint32_t>(id)}; }

QuarticCoeffs quartic(const std::vector<std::uint32_t>& t) { return {Fe{t[0]}, Fe{t[1]}, Fe{t[2]}, Fe{t[3]}}; }

Problem trinomial_problem(std::uint64_t q) {
  auto ctx = QuadExt::build(q);
  const std::uint64_t n = q * q;
  auto mono = std::make_shared<std::vector<std::array<Fe, 2>>>(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    (*mono)[i] = {ctx->ext().pow(fe(i), q + 2), ctx->ext().pow(fe(i), q)};
  }
  return {{n, n}, {0, 0}, [ctx, mono, n](const std::vector<std::uint32_t>& t) {
            const Field& F = ctx->ext();
            const Fe b{t[0]}, c{t[1]};
            const bool oracle = is_bijective_on(n, [&](std::uint64_t i) {
              const auto& m = (*mono)[i];
              return std::uint64_t{F.add(F.add(m[0], F.mul(b, m[1])), F.mul(c, fe(i))).id};
            });
            return std::pair{trinomial_predicate(*ctx, b, c), oracle};
          }};
}

Problem pair_problem(std::uint64_t q, bool twisted) {
  auto fq = Field::build(*as_prime_power(q));
  if (twisted && fq->characteristic() != 3) throw DomainError("thm15 needs 3 | q");
  Problem p;
  p.radices = {q, q, q, q};
  p.offsets = {0, 0, 0, 0};
  if (twisted) {
    p.radices.push_back(q - 1);
    p.offsets.push_back(1);
  }
  p.judge = [fq, twisted](const std::vector<std::uint32_t>& t) {
    const PairCoeffs co{Fe{t[0]}, Fe{t[1]}, Fe{t[2]}, Fe{t[3]}, twisted ? Fe{t[4]} : Fe{0}};
    const bool oracle = bivariate_is_bijection(*fq, [&](Fe x, Fe y) { return pair_map_apply(*fq, co, x, y); });
    const bool pred = twisted ? twisted_pair_predicate(*fq, co) : cubic_pair_predicate(*fq, co);
    return std::pair{pred, oracle};
  };
  return p;
}

Problem quartic_problem(const std::string& theorem, std::uint64_t q, const CampaignConfig& cfg) {
  auto ctx = QuadExt::build(q);
  auto ev = std::make_shared<const QuarticEvaluator>(ctx);
  const std::uint64_t n = q * q;
  Problem p{{n, n, n, n}, {0, 0, 0, 0}, {}};
  if (theorem == "thm11") {
    auto table = std::make_shared<const ConjugacyTable>(ctx, cfg.search_cap.value_or(kDefaultConjugacyCap));
    p.judge = [ev, table](const std::vector<std::uint32_t>& t) {
      const auto co = quartic(t);
      const auto v = complete_mapping_by_conjugacy(*table, co);
      const bool pred = v.holds && (!v.witness || verify_conjugacy(*ev, co, *v.witness));
      return std::pair{pred, ev->is_complete_mapping(co)};
    };
  } else if (theorem == "thm12") {
    p.judge = [ev](const std::vector<std::uint32_t>& t) {
      const auto co = quartic(t);
      return std::pair{complete_mapping_conditions(ev->ctx(), co), ev->is_complete_mapping(co)};
    };
  } else if (theorem == "thm17") {
    auto cls = std::make_shared<const EquivalenceClassifier>(ctx, cfg.search_cap.value_or(kDefaultEquivalenceCap));
    p.judge = [cls](const std::vector<std::uint32_t>& t) {
      const auto co = quartic(t);
      const auto r = cls->classify(co);
      const bool oracle = cls->evaluator().is_permutation(co);
      const bool tagged = r.tag != EquivClass::NotPermutation && r.tag != EquivClass::Unclassified;
      return std::pair{tagged && verify_equivalence(cls->ctx(), co, r), oracle};
    };
  } else {
    p.judge = [ev](const std::vector<std::uint32_t>& t) {
      const auto co = quartic(t);
      const QuadExt& c = ev->ctx();
      const XrBForm form = quartic_form(c, co);
      const bool oracle = ev->is_permutation(co);
      const bool mu = mu_criterion(form, c);
      const bool chain = c.q() % 3 != 1 && mu_rational_criterion(form, c);
      return std::pair{mu == chain ? mu : !oracle, oracle};
    };
  }
  return p;
}

Problem nonic_problem(std::uint64_t q) {
  auto fq = Field::build(*as_prime_power(q));
  if (fq->characteristic() != 3) throw DomainError("prop43 needs 3 | q");
  return {{q - 1, q, q - 1, q}, {1, 0, 1, 0}, [fq](const std::vector<std::uint32_t>& t) {
            return std::pair{false, is_permutation_poly(nonic_poly(fq, Fe{t[0]}, Fe{t[1]}, Fe{t[2]}, Fe{t[3]}))};
          }};
}

Problem cubic_problem(std::uint64_t q, const CampaignConfig& cfg) {
  auto fq = Field::build(*as_prime_power(q));
  const std::uint64_t cap = cfg.search_cap.value_or(kDefaultEquivalenceCap);
  if (q > cap) throw CapExceeded("lemma55 at q = " + std::to_string(q) + " exceeds the cap " + std::to_string(cap));
  QuadExtPtr ctx = q % 3 == 1 ? QuadExt::build(q, std::nullopt, fq->modulus()) : nullptr;
  return {{q - 1, q, q, q}, {1, 0, 0, 0}, [fq, ctx, cap](const std::vector<std::uint32_t>& t) {
            const RationalFn h = RationalFn::from_poly(Poly(fq, {Fe{t[3]}, Fe{t[2]}, Fe{t[1]}, Fe{t[0]}}));
            const bool oracle = rational_permutes_p1(h);
            bool pred = false;
            if (oracle) pred = normalize_cubic_rational(h, ctx, cap).cls != CubicClass::Unclassified;
            return std::pair{pred, oracle};
          }};
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct Stripe {
  std::uint64_t tested = 0, agreements = 0, positives = 0;
  std::optional<Counterexample> first;
};

}  // namespace

Problem make_problem(const std::string& theorem, std::uint64_t q, const CampaignConfig& cfg) {
  if (!as_prime_power(q)) throw DomainError(std::to_string(q) + " is not a prime power");
  if (theorem == "thm13") return trinomial_problem(q);
  if (theorem == "thm14") return pair_problem(q, false);
  if (theorem == "thm15") return pair_problem(q, true);
  if (theorem == "thm11" || theorem == "thm12" || theorem == "thm17" || theorem == "lemma51chain") {
    return quartic_problem(theorem, q, cfg);
  }
  if (theorem == "prop43") return nonic_problem(q);
  if (theorem == "lemma55") return cubic_problem(q, cfg);
  throw DomainError("unknown theorem id '" + theorem + "'");
}

ReportRecord run_q(const CampaignConfig& cfg, std::uint64_t q, const std::string& campaign) {
  const auto start = std::chrono::steady_clock::now();
  const Problem prob = make_problem(cfg.theorem, q, cfg);
  const MixedRadix space(prob.radices);
  const bool sampled = cfg.mode == Mode::Sample;
  const std::uint64_t total = sampled ? cfg.samples : space.count();
  const CounterRng rng(cfg.effective_seed());
  const unsigned jobs = std::max(1u, cfg.jobs);

  std::vector<Stripe> stripes(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](unsigned w) {
    try {
      Stripe& s = stripes[w];
      for (std::uint64_t i = w; i < total; i += jobs) {
        auto t = sampled ? space.sample(rng, i) : space.decode(i);
        for (std::size_t k = 0; k < t.size(); ++k) t[k] += prob.offsets[k];
        const auto [pred, oracle] = prob.judge(t);
        ++s.tested;
        if (oracle) ++s.positives;
        if (pred == oracle) {
          ++s.agreements;
        } else if (!s.first) {
          s.first = Counterexample{i, t, pred, oracle};
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ReportRecord r;
  r.campaign = campaign;
  r.theorem = cfg.theorem;
  r.q = q;
  r.mode = sampled ? "sample" : "exhaustive";
  r.seed = sampled ? cfg.effective_seed() : 0;
  for (const auto& s : stripes) {
    r.tested += s.tested;
    r.agreements += s.agreements;
    r.positives += s.positives;
    if (s.first && (!r.counterexample || s.first->index < r.counterexample->index)) r.counterexample = s.first;
  }
  r.disagreements = r.tested - r.agreements;
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string campaign_id(const CampaignConfig& cfg, const std::vector<ReportRecord>& existing) {
  std::string key = cfg.theorem + "|" + (cfg.mode == Mode::Sample ? "sample" : "exhaustive");
  for (auto q : cfg.qs) key += "," + std::to_string(q);
  if (cfg.mode == Mode::Sample) key += "|" + std::to_string(cfg.samples) + "|" + std::to_string(cfg.effective_seed());
  if (cfg.search_cap) key += "|cap" + std::to_string(*cfg.search_cap);
  char hex[17];
  std::snprintf(hex, sizeof hex, "%08llx", static_cast<unsigned long long>(fnv1a(key) & 0xffffffffull));
  const std::string prefix = cfg.theorem + "-" + hex + "-r";
  unsigned last = 0;
  for (const auto& r : existing) {
    if (r.campaign.rfind(prefix, 0) != 0) continue;
    try {
      last = std::max(last, static_cast<unsigned>(std::stoul(r.campaign.substr(prefix.size()))));
    } catch (const std::exception&) {
    }
  }
  const unsigned run = cfg.resume ? std::max(last, 1u) : last + 1;
  return prefix + std::to_string(run);
}

std::vector<ReportRecord> run_campaign(const CampaignConfig& cfg) {
  const auto existing = cfg.out.empty() ? std::vector<ReportRecord>{} : read_report(cfg.out);
  const std::string id = campaign_id(cfg, existing);
  std::set<std::uint64_t> done;
  if (cfg.resume) {
    for (const auto& r : existing) {
      if (r.campaign == id) done.insert(r.q);
    }
  }
  std::vector<ReportRecord> out;
  for (auto q : cfg.qs) {
    if (done.count(q)) continue;
    out.push_back(run_q(cfg, q, id));
    if (!cfg.out.empty()) write_report({out.back()}, cfg.out);
  }
  return out;
}

int exit_code(const std::vector<ReportRecord>& records) {
  for (const auto& r : records) {
    if (r.disagreements != 0) return 1;
  }
  return 0;
}

}  // namespace permlab::cli
