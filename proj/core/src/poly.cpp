#include "permlab/poly.hpp"

#include <sstream>

namespace permlab {

namespace {

const Field& common(const Poly& f, const Poly& g) {
  if (f.field_ptr() != g.field_ptr()) throw ContextMismatch("polynomials over different fields");
  return f.field();
}

}  // namespace

Poly::Poly(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw DomainError("polynomial without field");
}

Poly::Poly(FieldPtr field, std::vector<Fe> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_) throw DomainError("polynomial without field");
  for (Fe c : c_) {
    if (!field_->contains(c)) throw ContextMismatch("coefficient outside the polynomial's field");
  }
  normalize();
}

Poly Poly::constant(FieldPtr field, Fe c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, Fe c, std::size_t e) {
  std::vector<Fe> v(e + 1, Fe{0});
  v[e] = c;
  return Poly(std::move(field), std::move(v));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().id == 0) c_.pop_back();
}

long Poly::low_degree() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].id != 0) return static_cast<long>(i);
  }
  return -1;
}

Fe Poly::eval(Fe x) const {
  const Field& f = *field_;
  Fe acc{0};
  for (std::size_t i = c_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c_[i]);
  return acc;
}

Poly Poly::scale(Fe s) const {
  Poly r(field_);
  r.c_.reserve(c_.size());
  for (Fe c : c_) r.c_.push_back(field_->mul(c, s));
  r.normalize();
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(field_->inv(lead()));
}

Poly Poly::shift(std::size_t e) const {
  if (is_zero()) return *this;
  Poly r(field_);
  r.c_.assign(e, Fe{0});
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::map_coeffs(const std::function<Fe(Fe)>& fn) const {
  std::vector<Fe> v;
  v.reserve(c_.size());
  for (Fe c : c_) v.push_back(fn(c));
  return Poly(field_, std::move(v));
}

Poly operator+(const Poly& f, const Poly& g) {
  const Field& F = common(f, g);
  Poly r(f.field_ptr());
  r.c_.resize(std::max(f.c_.size(), g.c_.size()), Fe{0});
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F.add(f.coeff(i), g.coeff(i));
  r.normalize();
  return r;
}

Poly operator-(const Poly& f, const Poly& g) {
  const Field& F = common(f, g);
  Poly r(f.field_ptr());
  r.c_.resize(std::max(f.c_.size(), g.c_.size()), Fe{0});
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F.sub(f.coeff(i), g.coeff(i));
  r.normalize();
  return r;
}

Poly operator*(const Poly& f, const Poly& g) {
  const Field& F = common(f, g);
  Poly r(f.field_ptr());
  if (f.is_zero() || g.is_zero()) return r;
  r.c_.assign(f.c_.size() + g.c_.size() - 1, Fe{0});
  for (std::size_t i = 0; i < f.c_.size(); ++i) {
    if (f.c_[i].id == 0) continue;
    for (std::size_t j = 0; j < g.c_.size(); ++j) {
      if (g.c_[j].id == 0) continue;
      r.c_[i + j] = F.add(r.c_[i + j], F.mul(f.c_[i], g.c_[j]));
    }
  }
  r.normalize();
  return r;
}

bool operator==(const Poly& f, const Poly& g) { return f.field_ == g.field_ && f.c_ == g.c_; }

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].id == 0) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c_[i].id == 1;
    if (!unit || i == 0) os << field_->format(c_[i]);
    if (i > 0) {
      if (!unit) os << "*";
      os << "X";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly reduce_mod_xq_minus_x(const Poly& f, std::uint64_t n) {
  if (n < 2) throw DomainError("field size must be at least 2");
  if (static_cast<std::uint64_t>(f.degree() + 1) <= n) return f;
  const Field& F = f.field();
  std::vector<Fe> out(n, Fe{0});
  const auto& c = f.coeffs();
  out[0] = c[0];
  for (std::size_t e = 1; e < c.size(); ++e) {
    if (c[e].id == 0) continue;
    const std::size_t t = (e - 1) % (n - 1) + 1;
    out[t] = F.add(out[t], c[e]);
  }
  return Poly(f.field_ptr(), std::move(out));
}

Poly pow_reduce(const Poly& f, std::uint64_t m, std::uint64_t n) {
  if (m == 0) throw DomainError("pow_reduce needs m >= 1");
  Poly base = reduce_mod_xq_minus_x(f, n);
  Poly acc = Poly::constant(f.field_ptr(), Fe{1});
  bool have = false;
  for (std::uint64_t e = m; e != 0; e >>= 1) {
    if (e & 1) {
      acc = have ? reduce_mod_xq_minus_x(acc * base, n) : base;
      have = true;
    }
    if (e > 1) base = reduce_mod_xq_minus_x(base * base, n);
  }
  return acc;
}

Poly pow(const Poly& f, std::uint64_t m) {
  Poly acc = Poly::constant(f.field_ptr(), Fe{1});
  Poly base = f;
  for (std::uint64_t e = m; e != 0; e >>= 1) {
    if (e & 1) acc = acc * base;
    if (e > 1) base = base * base;
  }
  return acc;
}

Poly compose(const Poly& f, const Poly& g) {
  common(f, g);
  Poly acc(f.field_ptr());
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * g + Poly::constant(f.field_ptr(), c[i]);
  return acc;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  const Field& F = common(a, b);
  if (b.is_zero()) throw ZeroDivision("polynomial division by zero");
  std::vector<Fe> rem = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {Poly(a.field_ptr()), a};
  std::vector<Fe> quo(static_cast<std::size_t>(a.degree() - db + 1), Fe{0});
  const Fe lead_inv = F.inv(b.lead());
  const auto& bc = b.coeffs();
  for (long i = a.degree(); i >= db; --i) {
    const Fe t = F.mul(rem[static_cast<std::size_t>(i)], lead_inv);
    if (t.id == 0) continue;
    const std::size_t shift = static_cast<std::size_t>(i - db);
    quo[shift] = t;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[shift + j] = F.sub(rem[shift + j], F.mul(t, bc[j]));
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(a.field_ptr(), std::move(quo)), Poly(a.field_ptr(), std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  common(a, b);
  Poly x = a.monic();
  Poly y = b.monic();
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

}  // namespace permlab
