#include "permlab/permcheck.hpp"

#include <algorithm>

namespace permlab {

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.field_ptr() != den_.field_ptr()) throw ContextMismatch("rational function over two fields");
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  const Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const Fe s = num_.field().inv(den_.lead());
  num_ = num_.scale(s);
  den_ = den_.scale(s);
}

RationalFn RationalFn::from_poly(Poly p) {
  FieldPtr f = p.field_ptr();
  return RationalFn(std::move(p), Poly::constant(std::move(f), Fe{1}));
}

long RationalFn::degree() const { return std::max(num_.degree(), den_.degree()); }

PointP1 RationalFn::eval(PointP1 x) const {
  const Field& f = field();
  if (x.infinite) {
    if (num_.degree() > den_.degree()) return PointP1::inf();
    if (num_.degree() < den_.degree()) return PointP1::at(f.zero());
    return PointP1::at(f.div(num_.lead(), den_.lead()));
  }
  const Fe d = den_.eval(x.value);
  if (d.id == 0) return PointP1::inf();
  return PointP1::at(f.div(num_.eval(x.value), d));
}

bool is_bijective_on(std::uint64_t size, const std::function<std::uint64_t(std::uint64_t)>& fn) {
  std::vector<bool> seen(size, false);
  for (std::uint64_t i = 0; i < size; ++i) {
    const std::uint64_t v = fn(i);
    if (v >= size || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool is_permutation_poly(const Poly& f) {
  const Field& F = f.field();
  return is_bijective_on(F.order(), [&](std::uint64_t i) {
    return std::uint64_t{f.eval(Fe{static_cast<std::uint32_t>(i)}).id};
  });
}

bool is_complete_mapping(const Poly& f) {
  return is_permutation_poly(f) && is_permutation_poly(f + Poly::x(f.field_ptr()));
}

bool hermite_is_permutation(const Poly& f) {
  const Field& F = f.field();
  const std::uint64_t n = F.order();
  const Poly g = reduce_mod_xq_minus_x(f, n);

  std::uint64_t roots = 0;
  for (std::uint64_t i = 0; i < n && roots < 2; ++i) {
    if (g.eval(Fe{static_cast<std::uint32_t>(i)}).id == 0) ++roots;
  }
  if (roots != 1) return false;

  Poly power = g;
  for (std::uint64_t m = 1; m + 1 < n; ++m) {
    if (m > 1) power = reduce_mod_xq_minus_x(power * g, n);
    if (m % F.characteristic() == 0) continue;
    if (power.degree() >= static_cast<long>(n - 1)) return false;
  }
  return true;
}

Fe coeff_profile(const Poly& f, std::uint64_t m) {
  const std::uint64_t n = f.field().order();
  return pow_reduce(f, m, n).coeff(n - 1);
}

bool bivariate_is_bijection(const Field& field, const PairMap& phi) {
  const std::uint64_t q = field.order();
  return is_bijective_on(q * q, [&](std::uint64_t i) {
    const auto [u, v] = phi(Fe{static_cast<std::uint32_t>(i % q)}, Fe{static_cast<std::uint32_t>(i / q)});
    return std::uint64_t{u.id} + q * v.id;
  });
}

bool rational_permutes_mu(const RationalFn& fn, const QuadExt& ctx) {
  if (&fn.field() != &ctx.ext()) throw ContextMismatch("rational function is not over F_{q^2}");
  if (fn.is_constant()) throw DomainError("constant rational function");
  const auto& mu = ctx.mu();
  return is_bijective_on(mu.size(), [&](std::uint64_t i) -> std::uint64_t {
    const PointP1 y = fn.eval(mu[i]);
    if (y.infinite) return mu.size();
    auto it = std::lower_bound(mu.begin(), mu.end(), y.value);
    if (it == mu.end() || *it != y.value) return mu.size();
    return static_cast<std::uint64_t>(it - mu.begin());
  });
}

bool rational_permutes_p1(const RationalFn& fn) {
  if (fn.is_constant()) throw DomainError("constant rational function");
  const std::uint64_t n = fn.field().order();
  return is_bijective_on(n + 1, [&](std::uint64_t i) -> std::uint64_t {
    const PointP1 x = i == n ? PointP1::inf() : PointP1::at(Fe{static_cast<std::uint32_t>(i)});
    const PointP1 y = fn.eval(x);
    return y.infinite ? n : y.value.id;
  });
}

}  // namespace permlab
