#include "permlab/gf.hpp"

#include <algorithm>
#include <numeric>

namespace permlab {

namespace {

// Dense polynomials over the prime field F_p, coefficients low-to-high.
using PrimePoly = std::vector<std::uint32_t>;

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e != 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PrimePoly pp_rem(PrimePoly a, const PrimePoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = mod_pow(m.back(), p - 2, p);
  while (a.size() >= m.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      const std::uint64_t sub = c * m[j] % p;
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

PrimePoly pp_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return pp_rem(std::move(prod), m, p);
}

PrimePoly pp_powmod(PrimePoly base, std::uint64_t e, const PrimePoly& m, std::uint32_t p) {
  PrimePoly r{1};
  base = pp_rem(std::move(base), m, p);
  while (e != 0) {
    if (e & 1) r = pp_mulmod(r, base, m, p);
    e >>= 1;
    if (e != 0) base = pp_mulmod(base, base, m, p);
  }
  return r;
}

PrimePoly pp_gcd(PrimePoly a, PrimePoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = pp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: X^{p^k} = X mod m and gcd(X^{p^{k/r}} - X, m) = 1 for prime r | k.
bool pp_is_irreducible(const PrimePoly& m, std::uint32_t p) {
  const std::size_t k = m.size() - 1;
  if (k == 1) return true;
  if (m[0] == 0) return false;
  std::vector<PrimePoly> frob(k + 1);
  frob[0] = {0, 1};
  for (std::size_t i = 1; i <= k; ++i) frob[i] = pp_powmod(frob[i - 1], p, m, p);
  PrimePoly x{0, 1};
  PrimePoly top = frob[k];
  trim(top);
  if (top != x) return false;
  for (std::uint64_t r : prime_factors(k)) {
    PrimePoly h = frob[k / r];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (h.empty()) return false;
    if (pp_gcd(h, m, p).size() != 1) return false;
  }
  return true;
}

PrimePoly poly_from_index(std::uint64_t index, std::uint32_t p, std::uint32_t k) {
  PrimePoly m(k + 1, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    m[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  m[k] = 1;
  return m;
}

}  // namespace

std::uint64_t FieldSpec::order() const {
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (n > UINT64_MAX / p) return 0;
    n *= p;
  }
  return n;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<FieldSpec> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  FieldSpec spec{static_cast<std::uint32_t>(factors[0]), 0};
  while (q > 1) {
    q /= factors[0];
    ++spec.k;
  }
  return spec;
}

std::vector<std::vector<std::uint32_t>> irreducible_polynomials(std::uint32_t p, std::uint32_t k,
                                                                 std::size_t limit) {
  std::vector<std::vector<std::uint32_t>> out;
  const std::uint64_t count = FieldSpec{p, k}.order();
  for (std::uint64_t i = 0; i < count && out.size() < limit; ++i) {
    auto m = poly_from_index(i, p, k);
    if (pp_is_irreducible(m, p)) out.push_back(std::move(m));
  }
  return out;
}

FieldPtr Field::build(FieldSpec spec, std::optional<std::vector<std::uint32_t>> modulus,
                      std::uint64_t max_order) {
  if (!is_prime(spec.p)) throw DomainError("characteristic " + std::to_string(spec.p) + " is not prime");
  if (spec.k == 0) throw DomainError("extension degree must be positive");
  const std::uint64_t order = spec.order();
  if (order == 0 || order > max_order || order > kMaxFieldOrder) {
    throw CapExceeded("field of order " + std::to_string(spec.p) + "^" + std::to_string(spec.k) +
                      " exceeds the size cap");
  }

  std::shared_ptr<Field> f(new Field());
  f->p_ = spec.p;
  f->k_ = spec.k;
  f->order_ = order;

  if (modulus) {
    const auto& m = *modulus;
    if (m.size() != spec.k + 1 || m.back() != 1) throw DomainError("modulus must be monic of degree k");
    if (std::any_of(m.begin(), m.end(), [&](std::uint32_t c) { return c >= spec.p; })) {
      throw DomainError("modulus coefficient outside F_p");
    }
    if (!pp_is_irreducible(m, spec.p)) throw DomainError("modulus is reducible over F_p");
    f->modulus_ = m;
  } else {
    auto found = irreducible_polynomials(spec.p, spec.k, 1);
    f->modulus_ = std::move(found.at(0));
  }

  // Smallest-id primitive element.
  const std::uint64_t n1 = order - 1;
  if (n1 > 1) {
    const auto factors = prime_factors(n1);
    for (std::uint64_t cand = 2; cand < order; ++cand) {
      const Fe g{static_cast<std::uint32_t>(cand)};
      bool primitive = true;
      for (std::uint64_t r : factors) {
        Fe acc{1};
        Fe base = g;
        for (std::uint64_t e = n1 / r; e != 0; e >>= 1) {
          if (e & 1) acc = f->slow_mul(acc, base);
          base = f->slow_mul(base, base);
        }
        if (acc.id == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        f->generator_ = g.id;
        break;
      }
    }
  }

  if (order <= kMaxTableOrder) f->build_tables();
  return f;
}

void Field::build_tables() {
  const std::uint64_t n1 = order_ - 1;
  exp_.assign(n1 == 0 ? 1 : n1, 0);
  log_.assign(order_, kNoLog);

  // Multiplication by the generator is F_p-linear; tabulate basis images.
  std::vector<std::uint32_t> basis_img(k_);
  std::uint32_t pk = 1;
  for (std::uint32_t j = 0; j < k_; ++j) {
    basis_img[j] = slow_mul(Fe{pk}, Fe{generator_}).id;
    if (j + 1 < k_) pk *= p_;
  }
  std::vector<std::vector<std::uint32_t>> img_coords(k_);
  for (std::uint32_t j = 0; j < k_; ++j) img_coords[j] = coordinates(Fe{basis_img[j]});

  auto times_g = [&](std::uint32_t x) -> std::uint32_t {
    if (p_ == 2) {
      std::uint32_t r = 0;
      for (std::uint32_t j = 0; x != 0; ++j, x >>= 1) {
        if (x & 1) r ^= basis_img[j];
      }
      return r;
    }
    std::vector<std::uint64_t> acc(k_, 0);
    for (std::uint32_t j = 0; j < k_; ++j) {
      const std::uint32_t c = x % p_;
      x /= p_;
      if (c == 0) continue;
      for (std::uint32_t t = 0; t < k_; ++t) acc[t] += std::uint64_t{c} * img_coords[j][t];
    }
    std::uint64_t id = 0;
    for (std::uint32_t t = k_; t-- > 0;) id = id * p_ + acc[t] % p_;
    return static_cast<std::uint32_t>(id);
  };

  std::uint32_t cur = 1;
  for (std::uint64_t i = 0; i < n1; ++i) {
    exp_[i] = cur;
    if (log_[cur] != kNoLog) throw Error("internal: generator is not primitive");
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = times_g(cur);
  }
  if (n1 == 0) {
    exp_[0] = 1;
    log_[1] = 0;
  }
  if (cur != 1) throw Error("internal: generator order mismatch");

  // Zech logarithms: 1 + g^i only touches the constant coordinate.
  zech_.assign(exp_.size(), kNoLog);
  for (std::uint64_t i = 0; i < exp_.size(); ++i) {
    const std::uint32_t x = exp_[i];
    const std::uint32_t c0 = x % p_;
    const std::uint32_t s = x - c0 + (c0 + 1) % p_;
    zech_[i] = s == 0 ? kNoLog : log_[s];
  }

  // Cross-check table arithmetic against polynomial arithmetic on a sample.
  const Fe g{generator_};
  const Fe g1 = add(g, one());
  if (mul(g1, g1) != slow_mul(g1, g1) || frobenius(g1) != add(frobenius(g), one())) {
    throw Error("internal: field table validation failed");
  }
}

Fe Field::slow_mul(Fe x, Fe y) const {
  if (x.id == 0 || y.id == 0) return Fe{0};
  const auto a = coordinates(x);
  const auto b = coordinates(y);
  PrimePoly prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_);
    }
  }
  for (std::size_t i = prod.size(); i-- > k_;) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::uint32_t j = 0; j < k_; ++j) {
      const std::uint64_t sub = c * modulus_[j] % p_;
      prod[i - k_ + j] = static_cast<std::uint32_t>((prod[i - k_ + j] + p_ - sub) % p_);
    }
  }
  prod.resize(k_);
  return from_coordinates(prod);
}

Fe Field::slow_add(Fe x, Fe y) const {
  auto a = coordinates(x);
  const auto b = coordinates(y);
  for (std::uint32_t i = 0; i < k_; ++i) a[i] = (a[i] + b[i]) % p_;
  return from_coordinates(a);
}

Fe Field::slow_neg(Fe x) const {
  auto a = coordinates(x);
  for (auto& c : a) c = (p_ - c) % p_;
  return from_coordinates(a);
}

Fe Field::element(std::uint64_t id) const {
  if (id >= order_) throw DomainError("element id " + std::to_string(id) + " not below field order " + std::to_string(order_));
  return Fe{static_cast<std::uint32_t>(id)};
}

Fe Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Fe{static_cast<std::uint32_t>(r)};
}

Fe Field::inv(Fe x) const {
  check(x);
  if (x.id == 0) throw ZeroDivision("inverse of zero");
  if (has_tables()) {
    const std::uint32_t n1 = static_cast<std::uint32_t>(exp_.size());
    const std::uint32_t l = log_[x.id];
    return Fe{exp_[l == 0 ? 0 : n1 - l]};
  }
  return pow(x, order_ - 2);
}

Fe Field::pow(Fe x, std::uint64_t n) const {
  check(x);
  if (n == 0) return one();
  if (x.id == 0) return zero();
  if (has_tables()) {
    const std::uint64_t n1 = exp_.size();
    return Fe{exp_[std::uint64_t{log_[x.id]} * (n % n1) % n1]};
  }
  Fe acc = one();
  Fe base = x;
  for (std::uint64_t e = n % (order_ - 1); e != 0; e >>= 1) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
  }
  return acc;
}

Fe Field::pow_signed(Fe x, std::int64_t n) const {
  if (n >= 0) return pow(x, static_cast<std::uint64_t>(n));
  return pow(inv(x), static_cast<std::uint64_t>(-(n + 1)) + 1);
}

bool Field::is_square(Fe x) const {
  check(x);
  if (p_ == 2 || x.id == 0) return true;
  if (has_tables()) return log_[x.id] % 2 == 0;
  return pow(x, (order_ - 1) / 2) == one();
}

std::uint32_t Field::log(Fe x) const {
  check(x);
  if (!has_tables()) throw DomainError("discrete log requires table-backed field");
  if (x.id == 0) throw DomainError("log of zero");
  return log_[x.id];
}

Fe Field::exp(std::uint64_t i) const {
  if (has_tables()) return Fe{exp_[i % exp_.size()]};
  return pow(generator(), i);
}

std::vector<std::uint32_t> Field::coordinates(Fe x) const {
  std::vector<std::uint32_t> c(k_);
  std::uint64_t v = x.id;
  for (std::uint32_t i = 0; i < k_; ++i) {
    c[i] = static_cast<std::uint32_t>(v % p_);
    v /= p_;
  }
  return c;
}

Fe Field::from_coordinates(const std::vector<std::uint32_t>& c) const {
  std::uint64_t id = 0;
  for (std::size_t i = c.size(); i-- > 0;) id = id * p_ + c[i] % p_;
  return Fe{static_cast<std::uint32_t>(id)};
}

std::string Field::format(Fe x) const {
  if (x.id == 0) return "0";
  if (has_tables()) return "g^" + std::to_string(log(x));
  return "#" + std::to_string(x.id);
}

// ---------------------------------------------------------------------------

Element::Element(FieldPtr field, Fe value) : field_(std::move(field)), value_(value) {
  if (!field_) throw DomainError("element without field");
  if (!field_->contains(value_)) throw ContextMismatch("element id outside its field");
}

namespace {
const Field& common(const Element& x, const Element& y) {
  if (x.field() != y.field()) throw ContextMismatch("arithmetic between different field contexts");
  return *x.field();
}
}  // namespace

Element operator+(const Element& x, const Element& y) {
  return Element(x.field(), common(x, y).add(x.value(), y.value()));
}
Element operator-(const Element& x, const Element& y) {
  return Element(x.field(), common(x, y).sub(x.value(), y.value()));
}
Element operator*(const Element& x, const Element& y) {
  return Element(x.field(), common(x, y).mul(x.value(), y.value()));
}
Element operator/(const Element& x, const Element& y) {
  return Element(x.field(), common(x, y).div(x.value(), y.value()));
}
Element Element::operator-() const { return Element(field_, field_->neg(value_)); }
Element Element::inv() const { return Element(field_, field_->inv(value_)); }
Element Element::pow(std::uint64_t n) const { return Element(field_, field_->pow(value_, n)); }
bool operator==(const Element& x, const Element& y) {
  return x.field() == y.field() && x.value() == y.value();
}

// ---------------------------------------------------------------------------

QuadExtPtr QuadExt::build(std::uint64_t q, std::optional<std::vector<std::uint32_t>> ext_modulus,
                          std::optional<std::vector<std::uint32_t>> base_modulus) {
  const auto spec = as_prime_power(q);
  if (!spec) throw DomainError("q = " + std::to_string(q) + " is not a prime power");
  if (q > (std::uint64_t{1} << 16)) throw CapExceeded("q^2 exceeds the 2^32 size cap");

  std::shared_ptr<QuadExt> ctx(new QuadExt());
  ctx->q_ = q;
  ctx->base_ = Field::build(*spec, std::move(base_modulus));
  ctx->ext_ = Field::build(FieldSpec{spec->p, 2 * spec->k}, std::move(ext_modulus));
  const Field& base = *ctx->base_;
  const Field& ext = *ctx->ext_;

  // Candidates: the fixed field of x -> x^q, i.e. 0 and g^{i(q+1)}.
  std::vector<Fe> fixed{ext.zero()};
  for (std::uint64_t i = 0; i + 1 < q; ++i) fixed.push_back(ext.exp(i * (q + 1)));
  std::sort(fixed.begin(), fixed.end());

  const auto& m = base.modulus();
  std::optional<Fe> root;
  for (Fe x : fixed) {
    Fe acc = ext.zero();
    for (std::size_t i = m.size(); i-- > 0;) acc = ext.add(ext.mul(acc, x), Fe{m[i]});
    if (acc == ext.zero()) {
      root = x;
      break;
    }
  }
  if (!root) throw Error("internal: base modulus has no root in the fixed field");

  ctx->embed_.resize(q);
  for (std::uint64_t id = 0; id < q; ++id) {
    const auto c = base.coordinates(Fe{static_cast<std::uint32_t>(id)});
    Fe acc = ext.zero();
    for (std::size_t i = c.size(); i-- > 0;) acc = ext.add(ext.mul(acc, *root), Fe{c[i]});
    ctx->embed_[id] = acc;
    ctx->restrict_.emplace_back(acc.id, static_cast<std::uint32_t>(id));
  }
  std::sort(ctx->restrict_.begin(), ctx->restrict_.end());

  for (std::uint64_t i = 0; i <= q; ++i) ctx->mu_.push_back(ext.exp(i * (q - 1)));
  std::sort(ctx->mu_.begin(), ctx->mu_.end());
  ctx->mu_.erase(std::unique(ctx->mu_.begin(), ctx->mu_.end()), ctx->mu_.end());
  return ctx;
}

Fe QuadExt::embed(Fe x) const {
  if (!base_->contains(x)) throw ContextMismatch("embedding an element outside F_q");
  return embed_[x.id];
}

std::optional<Fe> QuadExt::restrict(Fe x) const {
  auto it = std::lower_bound(restrict_.begin(), restrict_.end(), std::make_pair(x.id, std::uint32_t{0}));
  if (it == restrict_.end() || it->first != x.id) return std::nullopt;
  return Fe{it->second};
}

bool QuadExt::is_square_in_base(Fe x) const {
  const auto r = restrict(x);
  if (!r) throw DomainError("element is not in the base field");
  return base_->is_square(*r);
}

bool is_invertible(const QuadExt& ctx, const LinearQPoly& l) {
  return ctx.norm(l.a) != ctx.norm(l.b);
}

Fe linear_q_apply(const QuadExt& ctx, const LinearQPoly& l, Fe x) {
  const Field& f = ctx.ext();
  return f.add(f.mul(l.a, ctx.frobenius_q(x)), f.mul(l.b, x));
}

LinearQPoly linear_q_inverse(const QuadExt& ctx, const LinearQPoly& l) {
  const Field& f = ctx.ext();
  const Fe delta = f.sub(ctx.norm(l.a), ctx.norm(l.b));
  if (delta == f.zero()) throw DomainError("linear map aX^q + bX is singular (a^{q+1} = b^{q+1})");
  return LinearQPoly{f.div(l.a, delta), f.neg(f.div(ctx.frobenius_q(l.b), delta))};
}

Fe linear_q_invert(const QuadExt& ctx, const LinearQPoly& l, Fe y) {
  return linear_q_apply(ctx, linear_q_inverse(ctx, l), y);
}

bool is_valid_iso_pair(const QuadExt& ctx, Fe a, Fe b) {
  const Field& f = ctx.ext();
  if (a == f.zero() || b == f.zero()) return false;
  return f.pow(a, ctx.q() - 1) != f.pow(b, ctx.q() - 1);
}

std::pair<Fe, Fe> vec_iso_apply(const QuadExt& ctx, const VecIsoForward& iso, Fe x) {
  if (!is_valid_iso_pair(ctx, iso.a, iso.b)) throw DomainError("isomorphism parameters need a, b != 0 and a^{q-1} != b^{q-1}");
  const Field& f = ctx.ext();
  const Fe ax = f.mul(iso.a, x);
  const Fe bx = f.mul(iso.b, x);
  const auto u = ctx.restrict(f.add(ax, ctx.frobenius_q(ax)));
  const auto v = ctx.restrict(f.add(bx, ctx.frobenius_q(bx)));
  if (!u || !v) throw Error("internal: trace left the base field");
  return {*u, *v};
}

Fe vec_iso_apply(const QuadExt& ctx, const VecIsoBackward& iso, Fe x, Fe y) {
  if (!is_valid_iso_pair(ctx, iso.a, iso.b)) throw DomainError("isomorphism parameters need a, b != 0 and a^{q-1} != b^{q-1}");
  const Field& f = ctx.ext();
  return f.add(f.mul(iso.a, ctx.embed(x)), f.mul(iso.b, ctx.embed(y)));
}

std::vector<std::vector<Fe>> field_isomorphisms(const Field& from, const Field& to) {
  if (from.characteristic() != to.characteristic() || from.degree() != to.degree()) {
    throw DomainError("isomorphisms need fields of equal order");
  }
  const auto& m = from.modulus();
  std::vector<std::vector<Fe>> out;
  for (std::uint64_t id = 0; id < to.order(); ++id) {
    const Fe x{static_cast<std::uint32_t>(id)};
    Fe acc = to.zero();
    for (std::size_t i = m.size(); i-- > 0;) acc = to.add(to.mul(acc, x), Fe{m[i]});
    if (acc != to.zero()) continue;
    std::vector<Fe> table(from.order());
    for (std::uint64_t e = 0; e < from.order(); ++e) {
      const auto c = from.coordinates(Fe{static_cast<std::uint32_t>(e)});
      Fe v = to.zero();
      for (std::size_t i = c.size(); i-- > 0;) v = to.add(to.mul(v, x), Fe{c[i]});
      table[e] = v;
    }
    out.push_back(std::move(table));
  }
  return out;
}

}  // namespace permlab
