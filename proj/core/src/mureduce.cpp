#include "permlab/mureduce.hpp"

#include <algorithm>
#include <numeric>

namespace permlab {

XrBForm split_xr_form(const Poly& f, std::uint64_t q, std::optional<std::uint64_t> r) {
  if (q < 2) throw DomainError("q must be at least 2");
  if (f.is_zero()) throw DomainError("cannot split the zero polynomial");
  const std::uint64_t step = q - 1;
  const auto low = static_cast<std::uint64_t>(f.low_degree());
  if (low == 0) throw DomainError("polynomial with a constant term has no X^r B(X^{q-1}) form");
  const auto& c = f.coeffs();
  for (std::size_t e = low; e < c.size(); ++e) {
    if (c[e].id != 0 && (e - low) % step != 0) {
      throw DomainError("exponents " + std::to_string(low) + " and " + std::to_string(e) + " differ mod q-1");
    }
  }
  const std::uint64_t rr = r ? *r : (low - 1) % step + 1;
  if (rr == 0 || rr > low || (low - rr) % step != 0) {
    throw DomainError("r = " + std::to_string(rr) + " is incompatible with the lowest exponent " + std::to_string(low));
  }
  std::vector<Fe> b((c.size() - 1 - rr) / step + 1, Fe{0});
  for (std::size_t e = low; e < c.size(); ++e) {
    if (c[e].id != 0) b[(e - rr) / step] = c[e];
  }
  return XrBForm{rr, Poly(f.field_ptr(), std::move(b))};
}

Fe eval_xr_form(const XrBForm& form, const QuadExt& ctx, Fe x) {
  const Field& F = ctx.ext();
  return F.mul(F.pow(x, form.r), form.b.eval(F.pow(x, ctx.q() - 1)));
}

bool mu_criterion(const XrBForm& form, const QuadExt& ctx) {
  const std::uint64_t q = ctx.q();
  if (std::gcd(form.r, q - 1) != 1) return false;
  const Field& F = ctx.ext();
  const auto& mu = ctx.mu();
  return is_bijective_on(mu.size(), [&](std::uint64_t i) -> std::uint64_t {
    const Fe x = mu[i];
    const Fe y = F.mul(F.pow(x, form.r), F.pow(form.b.eval(x), q - 1));
    auto it = std::lower_bound(mu.begin(), mu.end(), y);
    if (it == mu.end() || *it != y) return mu.size();
    return static_cast<std::uint64_t>(it - mu.begin());
  });
}

Poly hat_twist(const Poly& b, const QuadExt& ctx, std::uint64_t n) {
  if (b.degree() > static_cast<long>(n)) throw DomainError("reversal length below the degree");
  std::vector<Fe> out(n + 1, Fe{0});
  for (std::uint64_t i = 0; i <= n; ++i) out[i] = ctx.frobenius_q(b.coeff(n - i));
  return Poly(b.field_ptr(), std::move(out));
}

HatForm hat_chain(const XrBForm& form, const QuadExt& ctx, std::optional<std::uint64_t> n) {
  if (form.b.is_zero()) throw DomainError("B is zero");
  const std::uint64_t nn = n ? *n : static_cast<std::uint64_t>(form.b.degree());
  Poly b_hat = hat_twist(form.b, ctx, nn);
  Poly c = gcd(form.b, b_hat);
  // X^r B^{(q)}(1/X) = X^{r-n} b_hat
  Poly num = form.r >= nn ? b_hat.shift(form.r - nn) : b_hat;
  Poly den = form.r >= nn ? form.b : form.b.shift(nn - form.r);
  RationalFn g(num, den);
  const long deg = g.degree();
  return HatForm{std::move(b_hat), std::move(c), std::move(num), std::move(den), std::move(g), deg};
}

bool mu_rational_criterion(const XrBForm& form, const QuadExt& ctx) {
  for (Fe x : ctx.mu()) {
    if (form.b.eval(x).id == 0) return false;
  }
  const HatForm h = hat_chain(form, ctx);
  if (h.g.is_constant()) return false;
  return rational_permutes_mu(h.g, ctx);
}

namespace {

Poly lin(const QuadExt& ctx, Fe slope, Fe constant) {
  return Poly(ctx.ext_ptr(), {constant, slope});
}

bool ratio_outside_base(const QuadExt& ctx, Fe num, Fe den) {
  return !ctx.in_base(ctx.ext().div(num, den));
}

}  // namespace

RationalFn deg1_mu_map(const QuadExt& ctx, Fe alpha, Fe beta) {
  if (ctx.norm(alpha) == ctx.norm(beta)) throw DomainError("need alpha^{q+1} != beta^{q+1}");
  return RationalFn(lin(ctx, ctx.frobenius_q(beta), ctx.frobenius_q(alpha)), lin(ctx, alpha, beta));
}

RationalFn p1_to_mu_map(const QuadExt& ctx, Fe alpha, Fe beta) {
  if (beta.id == 0 || !ratio_outside_base(ctx, alpha, beta)) {
    throw DomainError("need beta != 0 and alpha/beta outside F_q");
  }
  return RationalFn(lin(ctx, ctx.frobenius_q(beta), ctx.frobenius_q(alpha)), lin(ctx, beta, alpha));
}

RationalFn mu_to_p1_map(const QuadExt& ctx, Fe gamma, Fe delta) {
  if (delta.id == 0 || !ratio_outside_base(ctx, gamma, delta)) {
    throw DomainError("need delta != 0 and gamma/delta outside F_q");
  }
  return RationalFn(lin(ctx, gamma, ctx.frobenius_q(gamma)), lin(ctx, delta, ctx.frobenius_q(delta)));
}

RationalFn theta_map(const QuadExt& ctx, Fe z) {
  if (ctx.in_base(z)) throw DomainError("z must lie outside F_q");
  const Field& F = ctx.ext();
  return RationalFn(lin(ctx, z, F.neg(ctx.frobenius_q(z))), lin(ctx, F.one(), F.neg(F.one())));
}

RationalFn theta_inverse_map(const QuadExt& ctx, Fe z) {
  if (ctx.in_base(z)) throw DomainError("z must lie outside F_q");
  const Field& F = ctx.ext();
  return RationalFn(lin(ctx, F.one(), F.neg(ctx.frobenius_q(z))), lin(ctx, F.one(), F.neg(z)));
}

bool maps_mu_onto_p1(const RationalFn& fn, const QuadExt& ctx) {
  const std::uint64_t q = ctx.q();
  std::vector<bool> seen(q + 1, false);
  for (Fe x : ctx.mu()) {
    const PointP1 y = fn.eval(x);
    std::uint64_t slot = q;
    if (!y.infinite) {
      const auto r = ctx.restrict(y.value);
      if (!r) return false;
      slot = r->id;
    }
    if (seen[slot]) return false;
    seen[slot] = true;
  }
  return true;
}

bool maps_p1_onto_mu(const RationalFn& fn, const QuadExt& ctx) {
  const auto& mu = ctx.mu();
  std::vector<bool> seen(mu.size(), false);
  for (std::uint64_t i = 0; i <= ctx.q(); ++i) {
    const PointP1 x = i == ctx.q() ? PointP1::inf() : PointP1::at(ctx.embed(Fe{static_cast<std::uint32_t>(i)}));
    const PointP1 y = fn.eval(x);
    if (y.infinite) return false;
    auto it = std::lower_bound(mu.begin(), mu.end(), y.value);
    if (it == mu.end() || *it != y.value) return false;
    const auto slot = static_cast<std::size_t>(it - mu.begin());
    if (seen[slot]) return false;
    seen[slot] = true;
  }
  return true;
}

}  // namespace permlab
