#include "permlab/theorems.hpp"

#include <cmath>
#include <numeric>

#include "permlab/permcheck.hpp"

namespace permlab {

Poly quartic_poly(const QuadExt& ctx, const QuarticCoeffs& co) {
  const std::uint64_t q = ctx.q();
  std::vector<Fe> c(3 * q + 1, Fe{0});
  c[3 * q] = co.a;
  c[2 * q + 1] = ctx.ext().add(c[2 * q + 1], co.b);
  c[q + 2] = ctx.ext().add(c[q + 2], co.c);
  c[3] = ctx.ext().add(c[3], co.d);
  return Poly(ctx.ext_ptr(), std::move(c));
}

XrBForm quartic_form(const QuadExt& ctx, const QuarticCoeffs& co) {
  return XrBForm{3, Poly(ctx.ext_ptr(), {co.d, co.c, co.b, co.a})};
}

QuarticEvaluator::QuarticEvaluator(QuadExtPtr ctx) : ctx_(std::move(ctx)) {
  const Field& F = ctx_->ext();
  const std::uint64_t q = ctx_->q();
  mono_.resize(F.order());
  for (std::uint64_t i = 0; i < F.order(); ++i) {
    const Fe x{static_cast<std::uint32_t>(i)};
    mono_[i] = {F.pow(x, 3 * q), F.pow(x, 2 * q + 1), F.pow(x, q + 2), F.pow(x, 3)};
  }
}

Fe QuarticEvaluator::eval(const QuarticCoeffs& co, Fe x) const {
  const Field& F = ctx_->ext();
  const auto& m = mono_.at(x.id);
  return F.add(F.add(F.mul(co.a, m[0]), F.mul(co.b, m[1])), F.add(F.mul(co.c, m[2]), F.mul(co.d, m[3])));
}

std::vector<Fe> QuarticEvaluator::table(const QuarticCoeffs& co) const {
  std::vector<Fe> t(mono_.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = eval(co, Fe{static_cast<std::uint32_t>(i)});
  return t;
}

bool QuarticEvaluator::permutes(const QuarticCoeffs& co, bool plus_x, std::vector<std::uint8_t>& seen) const {
  const Field& F = ctx_->ext();
  seen.assign(mono_.size(), 0);
  for (std::size_t i = 0; i < mono_.size(); ++i) {
    const Fe x{static_cast<std::uint32_t>(i)};
    Fe y = eval(co, x);
    if (plus_x) y = F.add(y, x);
    if (seen[y.id]) return false;
    seen[y.id] = 1;
  }
  return true;
}

bool QuarticEvaluator::is_permutation(const QuarticCoeffs& co) const {
  std::vector<std::uint8_t> seen;
  return permutes(co, false, seen);
}

bool QuarticEvaluator::is_complete_mapping(const QuarticCoeffs& co) const {
  std::vector<std::uint8_t> seen;
  return permutes(co, false, seen) && permutes(co, true, seen);
}

Poly trinomial_poly(const QuadExt& ctx, Fe b, Fe c) {
  const std::uint64_t q = ctx.q();
  std::vector<Fe> v(q + 3, Fe{0});
  const Field& F = ctx.ext();
  v[q + 2] = F.one();
  v[q] = F.add(v[q], b);
  v[1] = F.add(v[1], c);
  return Poly(ctx.ext_ptr(), std::move(v));
}

bool trinomial_predicate(const QuadExt& ctx, Fe b, Fe c) {
  const Field& F = ctx.ext();
  const std::uint64_t q = ctx.q();
  if (q % 3 != 1 && b.id == 0) {
    const Fe t = F.pow(c, q - 1);
    const Fe t2 = F.mul(t, t);
    if (F.add(F.sub(F.mul(t2, t), t2), t).id == 0) return true;
  }
  return q == 2 && b.id != 0 && c == F.one();
}

std::pair<Fe, Fe> pair_map_apply(const Field& F, const PairCoeffs& co, Fe x, Fe y) {
  const Fe x3 = F.mul(F.mul(x, x), x);
  const Fe y3 = F.mul(F.mul(y, y), y);
  Fe u = F.sub(x3, F.add(F.mul(co.a, x), F.mul(co.b, y)));
  if (co.e.id != 0) u = F.sub(u, F.mul(co.e, F.mul(x, F.mul(y, y))));
  const Fe v = F.sub(y3, F.add(F.mul(co.c, x), F.mul(co.d, y)));
  return {u, v};
}

bool cubic_pair_predicate(const Field& F, const PairCoeffs& co, NonsquareReading reading) {
  if (co.e.id != 0) throw DomainError("cubic pair predicate needs e = 0");
  const std::uint64_t q = F.order();
  const bool bc_zero = F.mul(co.b, co.c).id == 0;
  if (q % 3 != 1 && co.a.id == 0 && co.d.id == 0 && bc_zero) return true;
  auto admissible = [&](Fe x) {
    return F.is_nonsquare(x) || (reading == NonsquareReading::ZeroOrNonsquare && x.id == 0);
  };
  if (q % 3 == 0 && bc_zero && admissible(co.a) && admissible(co.d)) return true;
  if (q % 3 == 0 && !bc_zero) {
    // X^4 - (a^3 + b^2 d) X + b^2 (ad - bc)
    const Fe b2 = F.mul(co.b, co.b);
    const Fe lin = F.add(F.pow(co.a, 3), F.mul(b2, co.d));
    const Fe cst = F.mul(b2, F.sub(F.mul(co.a, co.d), F.mul(co.b, co.c)));
    bool root = false;
    for (std::uint64_t i = 1; i < q && !root; ++i) {
      const Fe y{static_cast<std::uint32_t>(i)};
      const Fe s = F.mul(y, y);
      const Fe val = F.add(F.sub(F.pow(s, 4), F.mul(lin, s)), cst);
      root = val.id == 0;
    }
    if (!root) return true;
  }
  return q == 2 && co.b == F.one() && co.c == F.one() && (co.a == F.one() || co.d == F.one());
}

bool twisted_pair_predicate(const Field& F, const PairCoeffs& co) {
  if (co.e.id == 0) throw DomainError("twisted pair predicate needs e != 0");
  if (F.characteristic() != 3) throw DomainError("twisted pair predicate needs 3 | q");
  if (co.c.id != 0) return false;
  if (co.d.id != 0 && !F.is_nonsquare(co.d)) return false;
  if (co.a.id == 0 && F.is_nonsquare(co.e)) return true;
  return F.order() == 3 && co.a == F.neg(F.one()) && co.e == F.one();
}

bool additive_complete_clause(const QuadExt& ctx, const QuarticCoeffs& co) {
  const Field& F = ctx.ext();
  const std::uint64_t q = ctx.q();
  if (q % 3 != 0 || co.b.id != 0 || co.c.id != 0) return false;
  if (ctx.norm(co.a) == ctx.norm(co.d)) return false;
  for (std::uint64_t i = 1; i < F.order(); ++i) {
    const Fe x{static_cast<std::uint32_t>(i)};
    const Fe v = F.add(F.add(F.mul(co.a, F.pow(x, 3 * q - 1)), F.mul(co.d, F.mul(x, x))), F.one());
    if (v.id == 0) return false;
  }
  return true;
}

bool complete_mapping_conditions(const QuadExt& ctx, const QuarticCoeffs& co, SquareClause clause) {
  const Field& F = ctx.ext();
  const std::uint64_t q = ctx.q();
  if (q % 3 == 1) return false;
  if (additive_complete_clause(ctx, co)) return true;

  const Fe a = co.a, b = co.b, c = co.c, d = co.d;
  const Fe zero = F.zero(), one = F.one();
  auto n = [&](std::int64_t k) { return F.from_int(k); };
  auto P = [&](Fe x, std::uint64_t e) { return F.pow(x, e); };
  auto M = [&](Fe x, Fe y) { return F.mul(x, y); };
  const Fe minus_one = F.neg(one);

  // a = b = d = 0 and c^{2q-2} - c^{q-1} + 1 = 0
  if (a == zero && b == zero && d == zero) {
    if (F.add(F.sub(P(c, 2 * q - 2), P(c, q - 1)), one) == zero) return true;
  }

  {
    const Fe b2 = M(b, b);
    const Fe d2q = P(d, 2 * q);
    const Fe dq = P(d, q);
    const Fe s = F.add(b2, M(n(3), d2q));  // b^2 + 3 d^{2q}
    const bool c1 = M(n(3), M(a, c)) == b2 && b2 != M(n(9), d2q);
    const bool c2 = M(n(144), P(a, q + 3)) == F.neg(M(s, s));
    const Fe lhs3 = M(n(24), M(M(a, a), d));
    const bool c3 = lhs3 == M(F.add(b, dq), s) && lhs3 != zero;
    const bool c4 = M(n(24), M(M(a, a), P(b, q))) == F.neg(M(F.sub(b, M(n(3), dq)), s));
    if (c1 && c2 && c3 && c4) return true;
  }

  if (q % 3 == 0 && b == zero && d == zero && c != zero && P(c, q - 1) == minus_one) {
    const Fe t = F.neg(F.div(a, c));
    if (P(t, (q + 1) / 2) == minus_one) return true;
  }

  if (q % 3 == 0 && b == zero) {
    const bool c1 = M(P(a, q - 1), P(d, 2 * q - 2)) == minus_one;
    const Fe w = F.add(P(d, 4 * q + 4), M(P(a, clause == SquareClause::AFourth ? 4 : 2), P(d, q + 5)));
    bool c2 = false;
    if (w != zero) {
      const auto wb = ctx.restrict(w);
      c2 = wb && ctx.base().is_square(*wb);
    }
    const bool c3 = F.add(F.add(M(M(a, c), P(d, q)), M(M(a, a), d)), P(d, 3 * q)) == zero;
    if (c1 && c2 && c3) return true;
  }

  if (q % 2 == 0) {
    const bool c1 = P(a, q + 1) == F.add(F.add(P(c, 2 * q), P(c, q + 1)), M(c, c));
    const bool c2 = M(a, c) == M(b, b);
    const bool c3 = d == P(b, q);
    const bool c4 = !ctx.in_base(c);
    if (c1 && c2 && c3 && c4) return true;
  }

  return q == 2 && a == d && b == zero && !ctx.in_base(c);
}

ConjugacyTable::ConjugacyTable(QuadExtPtr ctx, std::uint64_t cap) : ctx_(std::move(ctx)) {
  const std::uint64_t q = ctx_->q();
  if (q > cap) {
    throw CapExceeded("conjugacy search at q = " + std::to_string(q) + " exceeds the cap " + std::to_string(cap));
  }
  if (q > 256) throw CapExceeded("conjugacy search supports q <= 256");
  const Field& F = ctx_->ext();
  for (std::uint64_t i = 1; i < F.order(); ++i) {
    const Fe g{static_cast<std::uint32_t>(i)};
    const Fe w = F.neg(F.pow(g, q - 1));
    if (F.add(F.add(F.mul(w, w), w), F.one()).id == 0) gammas_.push_back(g);
  }
  for (std::uint64_t l = 0; l < F.order(); ++l) {
    for (std::uint64_t bt = 0; bt < F.order(); ++bt) {
      for (Fe g : gammas_) {
        const ConjugacyWitness w{Fe{static_cast<std::uint32_t>(l)}, Fe{static_cast<std::uint32_t>(bt)}, g};
        const auto co = image(w);
        if (co) table_.emplace(key(*co), w);
      }
    }
  }
}

std::optional<QuarticCoeffs> ConjugacyTable::image(const ConjugacyWitness& w) const {
  const Field& F = ctx_->ext();
  const std::uint64_t q = ctx_->q();
  const Fe l = w.lambda, b = w.beta, g = w.gamma;
  const Fe delta = F.sub(ctx_->norm(l), ctx_->norm(b));
  if (delta.id == 0) return std::nullopt;
  auto P = [&](Fe x, std::uint64_t e) { return F.pow(x, e); };
  auto M = [&](Fe x, Fe y) { return F.mul(x, y); };
  const Fe two = F.from_int(2);
  const Fe gq = ctx_->frobenius_q(g);
  const Fe inv = F.inv(delta);

  const Fe a = M(M(M(l, l), P(b, 2 * q)), F.sub(gq, g));
  const Fe bb = F.add(M(M(l, P(b, 2 * q + 1)), F.sub(gq, M(two, g))),
                      M(M(P(l, q + 2), P(b, q)), F.sub(M(two, gq), g)));
  const Fe c = F.sub(F.add(M(M(two, M(P(l, q + 1), P(b, q + 1))), F.sub(gq, g)), M(P(l, 2 * q + 2), gq)),
                     M(P(b, 2 * q + 2), g));
  const Fe d = F.sub(M(M(P(l, 2 * q + 1), b), gq), M(M(P(l, q), P(b, q + 2)), g));
  return QuarticCoeffs{M(a, inv), M(bb, inv), M(c, inv), M(d, inv)};
}

std::uint64_t ConjugacyTable::key(const QuarticCoeffs& co) const {
  QuarticCoeffs k = co;
  if (ctx_->q() == 2) {
    // X^6, X^5, X^4 fold onto X^3, X^2, X on F_4.
    k.d = ctx_->ext().add(co.a, co.d);
    k.a = Fe{0};
  }
  return std::uint64_t{k.a.id} | std::uint64_t{k.b.id} << 16 | std::uint64_t{k.c.id} << 32 |
         std::uint64_t{k.d.id} << 48;
}

std::optional<ConjugacyWitness> ConjugacyTable::find(const QuarticCoeffs& co) const {
  auto it = table_.find(key(co));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

bool verify_conjugacy(const QuarticEvaluator& ev, const QuarticCoeffs& co, const ConjugacyWitness& w) {
  const QuadExt& ctx = ev.ctx();
  const Field& F = ctx.ext();
  const LinearQPoly L{w.lambda, w.beta};
  if (!is_invertible(ctx, L)) return false;
  const LinearQPoly inv = linear_q_inverse(ctx, L);
  for (std::uint64_t i = 0; i < F.order(); ++i) {
    const Fe x{static_cast<std::uint32_t>(i)};
    const Fe y = linear_q_apply(ctx, inv, F.mul(w.gamma, F.pow(linear_q_apply(ctx, L, x), ctx.q() + 2)));
    if (y != ev.eval(co, x)) return false;
  }
  return true;
}

CompleteMappingVerdict complete_mapping_by_conjugacy(const ConjugacyTable& table, const QuarticCoeffs& co) {
  CompleteMappingVerdict v;
  v.additive = additive_complete_clause(table.ctx(), co);
  v.witness = table.find(co);
  v.holds = v.additive || v.witness.has_value();
  return v;
}

Poly hu_poly(const FieldPtr& fq, const PairCoeffs& co, Fe u) {
  const Field& F = *fq;
  if (co.b.id == 0) throw DomainError("H_u needs b != 0");
  const Poly t = Poly(fq, {F.neg(u), F.neg(co.a), F.zero(), F.one()}).scale(F.inv(co.b));
  return pow(t, 3) - Poly::monomial(fq, co.c, 1) - t.scale(co.d);
}

Poly hv_poly(const FieldPtr& fq, const PairCoeffs& co, Fe v) {
  const Field& F = *fq;
  if (co.c.id == 0) throw DomainError("H_v needs c != 0");
  const Poly s(fq, {F.neg(v), F.neg(co.d), F.zero(), F.one()});
  const Fe c2 = F.mul(co.c, co.c);
  return pow(s, 3) - (s * Poly::monomial(fq, F.mul(co.e, c2), 2)) - s.scale(F.mul(co.a, c2)) -
         Poly::monomial(fq, F.mul(co.b, F.mul(c2, co.c)), 1);
}

Poly nonic_poly(const FieldPtr& fq, Fe a, Fe b, Fe c, Fe d) {
  std::vector<Fe> v(10, Fe{0});
  v[9] = Fe{1};
  v[5] = a;
  v[3] = b;
  v[2] = c;
  v[1] = d;
  return Poly(fq, std::move(v));
}

NonicScanReport nonic_scan(const FieldPtr& fq, std::optional<std::uint64_t> samples, std::uint64_t seed) {
  const Field& F = *fq;
  if (F.characteristic() != 3) throw DomainError("nonic scan needs 3 | q");
  const std::uint64_t q = F.order();
  std::vector<std::array<Fe, 4>> mono(q);
  for (std::uint64_t i = 0; i < q; ++i) {
    const Fe x{static_cast<std::uint32_t>(i)};
    mono[i] = {F.pow(x, 5), F.pow(x, 3), F.pow(x, 2), x};
  }
  NonicScanReport rep;
  std::vector<std::uint8_t> seen(q);
  auto test = [&](Fe a, Fe b, Fe c, Fe d) {
    ++rep.tested;
    std::fill(seen.begin(), seen.end(), 0);
    bool perm = true;
    for (std::uint64_t i = 0; i < q && perm; ++i) {
      const auto& m = mono[i];
      const Fe x9 = F.pow(Fe{static_cast<std::uint32_t>(i)}, 9);
      const Fe y = F.add(F.add(x9, F.mul(a, m[0])),
                         F.add(F.add(F.mul(b, m[1]), F.mul(c, m[2])), F.mul(d, m[3])));
      if (seen[y.id]) perm = false;
      seen[y.id] = 1;
    }
    if (perm) {
      ++rep.permutations;
      if (!rep.first) rep.first = std::array<Fe, 4>{a, b, c, d};
    }
  };
  const MixedRadix space({q - 1, q, q - 1, q});
  auto run = [&](const std::vector<std::uint32_t>& t) {
    test(Fe{t[0] + 1}, Fe{t[1]}, Fe{t[2] + 1}, Fe{t[3]});
  };
  if (samples) {
    const CounterRng rng(seed);
    for (std::uint64_t i = 0; i < *samples; ++i) run(space.sample(rng, i));
  } else {
    for (std::uint64_t i = 0; i < space.count(); ++i) run(space.decode(i));
  }
  return rep;
}

bool monomial_predicate(std::uint64_t n, std::uint64_t q) { return std::gcd(n, q - 1) == 1; }

bool depressed_cubic_predicate(const Field& fq, Fe a) {
  if (a.id == 0) throw DomainError("depressed cubic predicate needs a != 0");
  return fq.characteristic() == 3 && fq.is_nonsquare(a);
}

double weil_threshold(unsigned n) {
  if (n < 3) throw DomainError("threshold needs n >= 3");
  const double m = static_cast<double>(n - 2) * static_cast<double>(n - 3);
  const double root = std::sqrt(m * m + 8.0 * n - 12.0);
  const double half = (m + root) / 2.0;
  return half * half;
}

}  // namespace permlab
