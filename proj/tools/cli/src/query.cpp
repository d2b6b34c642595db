#include "permlab/cli/query.hpp"

#include <algorithm>
#include <map>

#include "permlab/equivalence.hpp"
#include "permlab/mureduce.hpp"
#include "permlab/permcheck.hpp"
#include "permlab/theorems.hpp"

namespace permlab::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::vector<Fe> parse_coeffs(const Field& f, const std::string& text, const std::vector<std::string>& names) {
  std::vector<Fe> out(names.size(), f.zero());
  std::vector<bool> set(names.size(), false);
  std::size_t pos = 0, positional = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string item = trim(text.substr(pos, next - pos));
    pos = next + 1;
    if (item.empty()) continue;
    std::size_t slot;
    std::string value = item;
    if (const auto eq = item.find('='); eq != std::string::npos) {
      const std::string name = trim(item.substr(0, eq));
      const auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) throw DomainError("unknown coefficient '" + name + "'");
      slot = static_cast<std::size_t>(it - names.begin());
      value = trim(item.substr(eq + 1));
    } else {
      slot = positional++;
      if (slot >= names.size()) throw DomainError("too many coefficients");
    }
    if (set[slot]) throw DomainError("coefficient '" + names[slot] + "' given twice");
    set[slot] = true;
    out[slot] = parse_element(f, value);
  }
  return out;
}

std::string yn(bool b) { return b ? "true" : "false"; }

std::string fmt(const Field& f, Fe x) { return f.format(x) + " (id " + std::to_string(x.id) + ")"; }

nlohmann::ordered_json ids(const std::vector<Fe>& v) {
  auto j = nlohmann::ordered_json::array();
  for (Fe x : v) j.push_back(x.id);
  return j;
}

void quartic_query(const std::string& thm, const QuadExtPtr& ctx, const std::vector<Fe>& c,
                   std::optional<std::uint64_t> cap, QueryResult& r) {
  const std::uint64_t q = ctx->q();
  const Field& F = ctx->ext();
  const QuarticCoeffs co{c[0], c[1], c[2], c[3]};
  const QuarticEvaluator ev(ctx);
  const bool perm = ev.is_permutation(co);
  const bool cm = ev.is_complete_mapping(co);
  r.row["permutation"] = perm;
  r.row["complete_mapping"] = cm;
  r.lines.push_back("permutation (brute force): " + yn(perm));
  r.lines.push_back("complete-mapping (brute force): " + yn(cm));
  if (thm == "thm11") {
    const ConjugacyTable table(ctx, cap.value_or(kDefaultConjugacyCap));
    const auto v = complete_mapping_by_conjugacy(table, co);
    r.row["predicate"] = v.holds;
    r.row["additive"] = v.additive;
    r.lines.push_back("conjugacy predicate: " + yn(v.holds));
    r.lines.push_back("additive clause: " + yn(v.additive));
    if (v.witness) {
      const auto& w = *v.witness;
      r.row["witness"] = {{"lambda", w.lambda.id}, {"beta", w.beta.id}, {"gamma", w.gamma.id},
                          {"verified", verify_conjugacy(ev, co, w)}};
      r.lines.push_back("witness: lambda=" + fmt(F, w.lambda) + " beta=" + fmt(F, w.beta) +
                        " gamma=" + fmt(F, w.gamma) + " verified=" + yn(verify_conjugacy(ev, co, w)));
    } else {
      r.row["witness"] = nullptr;
    }
  } else if (thm == "thm12") {
    const bool p = complete_mapping_conditions(*ctx, co);
    const bool p2 = complete_mapping_conditions(*ctx, co, SquareClause::ASquared);
    r.row["predicate"] = p;
    r.row["predicate_a_squared"] = p2;
    r.lines.push_back("coefficient conditions: " + yn(p));
    r.lines.push_back("coefficient conditions (a^2 in the square clause): " + yn(p2));
  } else if (thm == "thm17") {
    const EquivalenceClassifier cls(ctx, cap.value_or(kDefaultEquivalenceCap));
    const auto res = cls.classify(co, true);
    r.row["class"] = to_string(res.tag);
    r.lines.push_back("class: " + std::string(to_string(res.tag)));
    std::vector<std::string> m;
    for (auto t : res.matches) m.emplace_back(to_string(t));
    r.row["matches"] = m;
    if (res.matches.size() > 1) r.lines.push_back("note: " + std::to_string(res.matches.size()) + " classes match");
    const Field& K = ctx->base();
    if (res.tag == EquivClass::MonomialQ2) {
      r.lines.push_back("rho = " + fmt(F, res.rho.a) + " X^q + " + fmt(F, res.rho.b) + " X");
      r.lines.push_back("eta^-1 = " + fmt(F, res.eta_inv.a) + " X^q + " + fmt(F, res.eta_inv.b) + " X");
    } else if (res.tag == EquivClass::CubePair || res.tag == EquivClass::TwistedCubePair) {
      r.lines.push_back("rho(x,y) = " + fmt(F, res.pair_rho.a) + " x + " + fmt(F, res.pair_rho.b) + " y");
      r.lines.push_back("eta^-1 parameters a=" + fmt(F, res.pair_eta_inv.a) + " b=" + fmt(F, res.pair_eta_inv.b));
      if (res.tag == EquivClass::TwistedCubePair) r.lines.push_back("e = " + fmt(K, res.e));
    }
    if (res.tag != EquivClass::NotPermutation && res.tag != EquivClass::Unclassified) {
      const bool ok = verify_equivalence(*ctx, co, res);
      r.row["verified"] = ok;
      r.lines.push_back("witness verified: " + yn(ok));
    }
  } else {
    const XrBForm form = quartic_form(*ctx, co);
    const bool mu = mu_criterion(form, *ctx);
    const bool chain = q % 3 != 1 && mu_rational_criterion(form, *ctx);
    r.row["mu_criterion"] = mu;
    r.row["rational_criterion"] = chain;
    r.lines.push_back("mu criterion: " + yn(mu));
    r.lines.push_back("rational-function criterion: " + yn(chain));
    if (!form.b.is_zero()) {
      const HatForm h = hat_chain(form, *ctx);
      r.row["g_degree"] = h.g_degree;
      r.lines.push_back("g = (" + h.g.num().to_string() + ") / (" + h.g.den().to_string() + "), degree " +
                        std::to_string(h.g_degree));
    }
  }
}

}  // namespace

Fe parse_element(const Field& f, const std::string& raw) {
  const std::string text = trim(raw);
  if (text == "w") return f.generator();
  if (text.rfind("g^", 0) == 0) {
    const std::string e = text.substr(2);
    if (!all_digits(e)) throw DomainError("bad exponent in '" + text + "'");
    return f.exp(std::stoull(e));
  }
  if (!all_digits(text)) throw DomainError("cannot parse element '" + text + "'");
  std::uint64_t id = 0;
  try {
    id = std::stoull(text);
  } catch (const std::exception&) {
    throw DomainError("element id out of range '" + text + "'");
  }
  if (id >= f.order()) throw DomainError("element id " + text + " outside a field of order " + std::to_string(f.order()));
  return Fe{static_cast<std::uint32_t>(id)};
}

QueryResult run_query(const QueryInput& in) {
  const auto spec = as_prime_power(in.q);
  if (!spec) throw DomainError(std::to_string(in.q) + " is not a prime power");
  QueryResult r;
  const std::string& thm = in.theorem;
  r.row["theorem"] = thm;
  r.row["q"] = in.q;

  if (thm == "thm11" || thm == "thm12" || thm == "thm17" || thm == "lemma51chain") {
    auto ctx = QuadExt::build(in.q);
    const auto c = parse_coeffs(ctx->ext(), in.coeffs, {"a", "b", "c", "d"});
    r.row["coeffs"] = ids(c);
    quartic_query(thm, ctx, c, in.search_cap, r);
  } else if (thm == "thm13") {
    auto ctx = QuadExt::build(in.q);
    const auto c = parse_coeffs(ctx->ext(), in.coeffs, {"b", "c"});
    r.row["coeffs"] = ids(c);
    const bool pred = trinomial_predicate(*ctx, c[0], c[1]);
    const bool perm = is_permutation_poly(trinomial_poly(*ctx, c[0], c[1]));
    r.row["predicate"] = pred;
    r.row["permutation"] = perm;
    r.lines.push_back("predicate: " + yn(pred));
    r.lines.push_back("permutation (brute force): " + yn(perm));
  } else if (thm == "thm14" || thm == "thm15") {
    auto fq = Field::build(*spec);
    const bool twisted = thm == "thm15";
    std::vector<std::string> names{"a", "b", "c", "d"};
    if (twisted) names.emplace_back("e");
    const auto c = parse_coeffs(*fq, in.coeffs, names);
    r.row["coeffs"] = ids(c);
    const PairCoeffs co{c[0], c[1], c[2], c[3], twisted ? c[4] : Fe{0}};
    const bool pred = twisted ? twisted_pair_predicate(*fq, co) : cubic_pair_predicate(*fq, co);
    const bool bij = bivariate_is_bijection(*fq, [&](Fe x, Fe y) { return pair_map_apply(*fq, co, x, y); });
    r.row["predicate"] = pred;
    r.lines.push_back("predicate: " + yn(pred));
    if (!twisted) {
      const bool loose = cubic_pair_predicate(*fq, co, NonsquareReading::ZeroOrNonsquare);
      r.row["predicate_zero_or_nonsquare"] = loose;
      r.lines.push_back("predicate (zero-or-nonsquare reading): " + yn(loose));
    }
    r.row["bijective"] = bij;
    r.lines.push_back("bijective (brute force): " + yn(bij));
  } else if (thm == "prop43") {
    auto fq = Field::build(*spec);
    const auto c = parse_coeffs(*fq, in.coeffs, {"a", "b", "c", "d"});
    r.row["coeffs"] = ids(c);
    const bool perm = is_permutation_poly(nonic_poly(fq, c[0], c[1], c[2], c[3]));
    r.row["permutation"] = perm;
    r.lines.push_back("permutation (brute force): " + yn(perm));
  } else if (thm == "lemma55") {
    auto fq = Field::build(*spec);
    const auto c = parse_coeffs(*fq, in.coeffs, {"c3", "c2", "c1", "c0"});
    r.row["coeffs"] = ids(c);
    const RationalFn h = RationalFn::from_poly(Poly(fq, {c[3], c[2], c[1], c[0]}));
    const bool perm = h.degree() == 3 && rational_permutes_p1(h);
    r.row["permutes_p1"] = perm;
    r.lines.push_back("permutes P^1 (brute force): " + yn(perm));
    if (perm) {
      const auto nf = normalize_cubic_rational(h, nullptr, in.search_cap.value_or(kDefaultEquivalenceCap));
      r.row["class"] = to_string(nf.cls);
      r.lines.push_back("class: " + std::string(to_string(nf.cls)));
      if (nf.cls != CubicClass::Unclassified) {
        const Field& F = *fq;
        auto mob = [&](const Mobius& m) {
          return "(" + fmt(F, m.a) + " X + " + fmt(F, m.b) + ") / (" + fmt(F, m.c) + " X + " + fmt(F, m.d) + ")";
        };
        r.lines.push_back("rho = " + mob(nf.rho));
        r.lines.push_back("eta = " + mob(nf.eta));
        if (nf.cls == CubicClass::DepressedCube) r.lines.push_back("alpha = " + fmt(F, nf.alpha));
      }
    }
  } else {
    throw DomainError("unknown theorem id '" + thm + "'");
  }
  return r;
}

}  // namespace permlab::cli
