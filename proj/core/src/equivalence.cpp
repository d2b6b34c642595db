#include "permlab/equivalence.hpp"

#include <array>

namespace permlab {

const char* to_string(EquivClass c) {
  switch (c) {
    case EquivClass::MonomialQ2: return "monomial_q2";
    case EquivClass::CubePair: return "cube_pair";
    case EquivClass::TwistedCubePair: return "twisted_cube_pair";
    case EquivClass::NotPermutation: return "not_permutation";
    case EquivClass::Unclassified: return "unclassified";
  }
  return "?";
}

const char* to_string(CubicClass c) {
  switch (c) {
    case CubicClass::Cube: return "cube";
    case CubicClass::NuConjugatedCube: return "nu_conjugated_cube";
    case CubicClass::DepressedCube: return "depressed_cube";
    case CubicClass::Unclassified: return "unclassified";
  }
  return "?";
}

namespace {

Fe fe(std::uint64_t id) { return Fe{static_cast<std::uint32_t>(id)}; }

std::pair<Fe, Fe> pair_canonical(const Field& F, std::optional<Fe> e, Fe u, Fe v) {
  Fe x = F.pow(u, 3);
  if (e) x = F.sub(x, F.mul(*e, F.mul(u, F.mul(v, v))));
  return {x, F.pow(v, 3)};
}

}  // namespace

EquivalenceClassifier::EquivalenceClassifier(QuadExtPtr ctx, std::uint64_t cap) : ev_(ctx) {
  const std::uint64_t q = ctx->q();
  if (q > cap) {
    throw CapExceeded("equivalence search at q = " + std::to_string(q) + " exceeds the cap " + std::to_string(cap));
  }
  if (q % 3 == 1) return;
  const Field& F = ctx->ext();
  const Field& K = ctx->base();
  const std::uint64_t n = F.order();

  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      const LinearQPoly L{fe(a), fe(b)};
      if (!is_invertible(*ctx, L)) continue;
      LinearChart ch{L, std::vector<Fe>(n), 0, 0};
      for (std::uint64_t x = 0; x < n; ++x) ch.image[x] = F.pow(linear_q_apply(*ctx, L, fe(x)), q + 2);
      bool have1 = false, have2 = false;
      for (std::uint64_t x = 0; x < n && !have2; ++x) {
        if (ch.image[x].id == 0) continue;
        if (!have1) {
          ch.x1 = static_cast<std::uint32_t>(x);
          have1 = true;
        } else if (!ctx->in_base(F.div(ch.image[x], ch.image[ch.x1]))) {
          ch.x2 = static_cast<std::uint32_t>(x);
          have2 = true;
        }
      }
      if (have2) linear_.push_back(std::move(ch));
    }
  }

  for (std::uint64_t a = 1; a < n; ++a) {
    for (std::uint64_t b = 1; b < n; ++b) {
      const VecIsoForward iso{fe(a), fe(b)};
      if (!is_valid_iso_pair(*ctx, iso.a, iso.b)) continue;
      PairChart ch{iso, std::vector<std::pair<Fe, Fe>>(n), 0, 0};
      for (std::uint64_t x = 0; x < n; ++x) {
        ch.coords[x] = vec_iso_apply(*ctx, iso, fe(x));
        if (ch.coords[x] == std::pair{K.one(), K.zero()}) ch.x1 = static_cast<std::uint32_t>(x);
        if (ch.coords[x] == std::pair{K.zero(), K.one()}) ch.x2 = static_cast<std::uint32_t>(x);
      }
      pair_.push_back(std::move(ch));
    }
  }

  if (q % 3 == 0) {
    for (std::uint64_t i = 1; i < K.order(); ++i) {
      if (K.is_nonsquare(fe(i))) nonsquares_.push_back(fe(i));
    }
  }
}

bool EquivalenceClassifier::try_monomial(const std::vector<Fe>& f, EquivalenceResult& out) const {
  const QuadExt& ctx = ev_.ctx();
  const Field& F = ctx.ext();
  for (const auto& ch : linear_) {
    const Fe c1 = ch.image[ch.x1], c2 = ch.image[ch.x2];
    const Fe y1 = f[ch.x1], y2 = f[ch.x2];
    const Fe c1q = ctx.frobenius_q(c1), c2q = ctx.frobenius_q(c2);
    const Fe det = F.sub(F.mul(c1q, c2), F.mul(c2q, c1));
    const LinearQPoly rho{F.div(F.sub(F.mul(y1, c2), F.mul(y2, c1)), det),
                          F.div(F.sub(F.mul(c1q, y2), F.mul(c2q, y1)), det)};
    if (!is_invertible(ctx, rho)) continue;
    bool ok = true;
    for (std::size_t x = 0; x < f.size() && ok; ++x) ok = linear_q_apply(ctx, rho, ch.image[x]) == f[x];
    if (ok) {
      out.rho = rho;
      out.eta_inv = ch.eta_inv;
      return true;
    }
  }
  return false;
}

bool EquivalenceClassifier::try_pair(const std::vector<Fe>& f, std::optional<Fe> e, EquivalenceResult& out) const {
  const QuadExt& ctx = ev_.ctx();
  const Field& F = ctx.ext();
  const Field& K = ctx.base();
  for (const auto& ch : pair_) {
    const VecIsoBackward rho{f[ch.x1], f[ch.x2]};
    if (!is_valid_iso_pair(ctx, rho.a, rho.b)) continue;
    bool ok = true;
    for (std::size_t x = 0; x < f.size() && ok; ++x) {
      const auto [u, v] = pair_canonical(K, e, ch.coords[x].first, ch.coords[x].second);
      ok = F.add(F.mul(rho.a, ctx.embed(u)), F.mul(rho.b, ctx.embed(v))) == f[x];
    }
    if (ok) {
      out.pair_rho = rho;
      out.pair_eta_inv = ch.eta_inv;
      if (e) out.e = *e;
      return true;
    }
  }
  return false;
}

EquivalenceResult EquivalenceClassifier::classify(const QuarticCoeffs& co, bool all_classes) const {
  EquivalenceResult res;
  const std::vector<Fe> f = ev_.table(co);
  if (!is_bijective_on(f.size(), [&](std::uint64_t i) { return std::uint64_t{f[i].id}; })) {
    res.tag = EquivClass::NotPermutation;
    return res;
  }
  auto record = [&](EquivClass c, bool hit, const EquivalenceResult& w) {
    if (!hit) return false;
    res.matches.push_back(c);
    if (res.tag == EquivClass::Unclassified) {
      const auto m = std::move(res.matches);
      res = w;
      res.tag = c;
      res.matches = m;
    }
    return !all_classes;
  };
  const std::uint64_t q = ctx().q();
  if (q % 3 != 1) {
    EquivalenceResult w;
    if (record(EquivClass::MonomialQ2, try_monomial(f, w), w)) return res;
    w = {};
    if (record(EquivClass::CubePair, try_pair(f, std::nullopt, w), w)) return res;
  }
  if (q % 3 == 0) {
    for (Fe e : nonsquares_) {
      EquivalenceResult w;
      if (try_pair(f, e, w)) {
        if (record(EquivClass::TwistedCubePair, true, w)) return res;
        break;
      }
    }
  }
  return res;
}

bool verify_equivalence(const QuadExt& ctx, const QuarticCoeffs& co, const EquivalenceResult& r) {
  const Field& F = ctx.ext();
  const Field& K = ctx.base();
  const Poly f = quartic_poly(ctx, co);
  for (std::uint64_t i = 0; i < F.order(); ++i) {
    const Fe x = fe(i);
    Fe y;
    switch (r.tag) {
      case EquivClass::MonomialQ2: {
        if (!is_invertible(ctx, r.rho) || !is_invertible(ctx, r.eta_inv)) return false;
        y = linear_q_apply(ctx, r.rho, F.pow(linear_q_apply(ctx, r.eta_inv, x), ctx.q() + 2));
        break;
      }
      case EquivClass::CubePair:
      case EquivClass::TwistedCubePair: {
        if (!is_valid_iso_pair(ctx, r.pair_rho.a, r.pair_rho.b)) return false;
        if (!is_valid_iso_pair(ctx, r.pair_eta_inv.a, r.pair_eta_inv.b)) return false;
        std::optional<Fe> e;
        if (r.tag == EquivClass::TwistedCubePair) {
          if (!K.is_nonsquare(r.e)) return false;
          e = r.e;
        }
        const auto [u, v] = vec_iso_apply(ctx, r.pair_eta_inv, x);
        const auto [s, t] = pair_canonical(K, e, u, v);
        y = vec_iso_apply(ctx, r.pair_rho, s, t);
        break;
      }
      default:
        return false;
    }
    if (y != f.eval(x)) return false;
  }
  return true;
}

PointP1 mobius_apply(const Field& f, const Mobius& m, PointP1 x) {
  if (x.infinite) return m.c.id == 0 ? PointP1::inf() : PointP1::at(f.div(m.a, m.c));
  const Fe den = f.add(f.mul(m.c, x.value), m.d);
  if (den.id == 0) return PointP1::inf();
  return PointP1::at(f.div(f.add(f.mul(m.a, x.value), m.b), den));
}

Mobius mobius_compose(const Field& f, const Mobius& o, const Mobius& i) {
  return Mobius{f.add(f.mul(o.a, i.a), f.mul(o.b, i.c)), f.add(f.mul(o.a, i.b), f.mul(o.b, i.d)),
                f.add(f.mul(o.c, i.a), f.mul(o.d, i.c)), f.add(f.mul(o.c, i.b), f.mul(o.d, i.d))};
}

Mobius mobius_inverse(const Field& f, const Mobius& m) { return Mobius{m.d, f.neg(m.b), f.neg(m.c), m.a}; }

std::vector<Mobius> pgl2(const Field& f) {
  const std::uint64_t q = f.order();
  std::vector<Mobius> out;
  out.reserve(q * q * q - q);
  for (std::uint64_t a = 1; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) out.push_back(Mobius{fe(a), fe(b), f.zero(), f.one()});
  }
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      for (std::uint64_t d = 0; d < q; ++d) {
        if (f.mul(fe(a), fe(d)) == fe(b)) continue;
        out.push_back(Mobius{fe(a), fe(b), f.one(), fe(d)});
      }
    }
  }
  return out;
}

RationalFn compose_mobius(const Mobius& rho, const RationalFn& h, const Mobius& eta) {
  const FieldPtr& fp = h.num().field_ptr();
  const long n = h.degree();
  const Poly top(fp, {eta.b, eta.a});
  const Poly bot(fp, {eta.d, eta.c});
  auto homogenize = [&](const Poly& p) {
    Poly acc(fp);
    for (long i = 0; i <= p.degree(); ++i) {
      acc = acc + (pow(top, i) * pow(bot, n - i)).scale(p.coeff(i));
    }
    return acc;
  };
  const Poly P = homogenize(h.num());
  const Poly Q = homogenize(h.den());
  return RationalFn(P.scale(rho.a) + Q.scale(rho.b), P.scale(rho.c) + Q.scale(rho.d));
}

RationalFn nu_conjugated_cube(const QuadExt& ctx, Fe delta) {
  if (ctx.in_base(delta)) throw DomainError("delta must lie outside F_q");
  const Field& F = ctx.ext();
  const FieldPtr& fp = ctx.ext_ptr();
  const Fe dq = ctx.frobenius_q(delta);
  const Poly u = pow(Poly(fp, {F.neg(dq), F.one()}), 3);
  const Poly w = pow(Poly(fp, {F.neg(delta), F.one()}), 3);
  const RationalFn r(u.scale(delta) - w.scale(dq), u - w);
  auto down = [&](const Poly& p) {
    std::vector<Fe> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto v = ctx.restrict(p.coeffs()[i]);
      if (!v) throw Error("internal: conjugated cube has coefficients outside F_q");
      c[i] = *v;
    }
    return Poly(ctx.base_ptr(), std::move(c));
  };
  return RationalFn(down(r.num()), down(r.den()));
}

namespace {

Poly rehome(const Poly& p, const FieldPtr& to) {
  return Poly(to, std::vector<Fe>(p.coeffs().begin(), p.coeffs().end()));
}

// Matrix sending z1, z2, z3 to 0, 1, infinity.
Mobius cross_ratio(const Field& f, PointP1 z1, PointP1 z2, PointP1 z3) {
  if (z1.infinite) return Mobius{f.zero(), f.sub(z2.value, z3.value), f.one(), f.neg(z3.value)};
  if (z2.infinite) return Mobius{f.one(), f.neg(z1.value), f.one(), f.neg(z3.value)};
  if (z3.infinite) return Mobius{f.one(), f.neg(z1.value), f.zero(), f.sub(z2.value, z1.value)};
  const Fe s = f.sub(z2.value, z3.value);
  const Fe t = f.sub(z2.value, z1.value);
  return Mobius{s, f.neg(f.mul(z1.value, s)), t, f.neg(f.mul(z3.value, t))};
}

struct Candidate {
  CubicClass cls;
  RationalFn k;
  Fe alpha{}, delta{};
};

}  // namespace

CubicNormalForm normalize_cubic_rational(const RationalFn& h, QuadExtPtr ctx, std::uint64_t cap) {
  const Field& F = h.field();
  const FieldPtr& fp = h.num().field_ptr();
  const std::uint64_t q = F.order();
  if (h.degree() != 3) throw DomainError("normal form needs a degree-3 rational function");
  if (q > cap) {
    throw CapExceeded("normal form search at q = " + std::to_string(q) + " exceeds the cap " + std::to_string(cap));
  }
  if (!rational_permutes_p1(h)) throw DomainError("h does not permute the projective line");

  std::vector<Candidate> cands;
  const Poly x = Poly::x(fp);
  const Poly one = Poly::constant(fp, F.one());
  if (q % 3 != 1) cands.push_back({CubicClass::Cube, RationalFn(pow(x, 3), one)});
  if (q % 3 == 1) {
    if (!ctx) ctx = QuadExt::build(q, std::nullopt, F.modulus());
    if (ctx->q() != q || ctx->base().modulus() != F.modulus()) {
      throw ContextMismatch("quadratic extension does not match the field of h");
    }
    Fe delta{};
    for (std::uint64_t i = 0; i < ctx->ext().order(); ++i) {
      if (!ctx->in_base(fe(i))) {
        delta = fe(i);
        break;
      }
    }
    const RationalFn k = nu_conjugated_cube(*ctx, delta);
    cands.push_back({CubicClass::NuConjugatedCube, RationalFn(rehome(k.num(), fp), rehome(k.den(), fp)), Fe{}, delta});
  }
  if (F.characteristic() == 3) {
    for (std::uint64_t i = 1; i < q; ++i) {
      if (!F.is_nonsquare(fe(i))) continue;
      cands.push_back({CubicClass::DepressedCube,
                       RationalFn(pow(x, 3) - Poly::monomial(fp, fe(i), 1), one), fe(i), Fe{}});
    }
  }

  std::vector<PointP1> pts;
  for (std::uint64_t i = 0; i < q; ++i) pts.push_back(PointP1::at(fe(i)));
  pts.push_back(PointP1::inf());
  const std::array<std::size_t, 3> probe{0, 1, q};
  const std::vector<Mobius> group = pgl2(F);

  for (const auto& cand : cands) {
    std::vector<PointP1> kv;
    for (const auto& t : pts) kv.push_back(cand.k.eval(t));
    const Mobius sw = cross_ratio(F, kv[probe[0]], kv[probe[1]], kv[probe[2]]);
    const Mobius sw_inv = mobius_inverse(F, sw);
    for (const auto& eta : group) {
      std::array<PointP1, 3> z;
      for (std::size_t j = 0; j < 3; ++j) z[j] = h.eval(mobius_apply(F, eta, pts[probe[j]]));
      const Mobius rho = mobius_compose(F, sw_inv, cross_ratio(F, z[0], z[1], z[2]));
      bool ok = true;
      for (std::size_t i = 0; i < pts.size() && ok; ++i) {
        ok = mobius_apply(F, rho, h.eval(mobius_apply(F, eta, pts[i]))) == kv[i];
      }
      if (!ok) continue;
      const RationalFn got = compose_mobius(rho, h, eta);
      if (!(got.num() == cand.k.num() && got.den() == cand.k.den())) continue;
      CubicNormalForm out;
      out.cls = cand.cls;
      out.rho = rho;
      out.eta = eta;
      out.alpha = cand.alpha;
      out.delta = cand.delta;
      out.canonical = cand.k;
      return out;
    }
  }
  return CubicNormalForm{};
}

}  // namespace permlab
