#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permlab/error.hpp"

namespace permlab {

/// An element of a concrete finite field F_{p^k}.
///
/// The id is the polynomial-basis encoding: the residue c_0 + c_1 X + ... +
/// c_{k-1} X^{k-1} modulo the field's modulus is stored as sum c_i p^i. In
/// particular the prime subfield occupies ids 0..p-1 and 0/1 are zero/one.
struct Fe {
  std::uint32_t id = 0;

  friend constexpr bool operator==(Fe, Fe) = default;
  friend constexpr auto operator<=>(Fe, Fe) = default;
};

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t k = 1;

  /// p^k, or 0 if it does not fit in 64 bits.
  [[nodiscard]] std::uint64_t order() const;
};

/// Hard cap on the number of elements of any field (ids are 32-bit).
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 32;
/// Exp/log/Zech tables are only built up to this order.
inline constexpr std::uint64_t kMaxTableOrder = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n);

/// Splits q = p^k; nullopt when q is not a prime power.
std::optional<FieldSpec> as_prime_power(std::uint64_t q);

std::vector<std::uint64_t> prime_factors(std::uint64_t n);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A concrete finite field with dense element ids.
///
/// Immutable after construction; share it through FieldPtr. For orders up to
/// kMaxTableOrder arithmetic goes through exp/log/Zech tables, above that it
/// falls back to polynomial arithmetic modulo the defining polynomial.
class Field {
 public:
  /// Builds F_{p^k}. Without an explicit modulus the lexicographically
  /// smallest monic irreducible of degree k is used, where lower coefficients
  /// are compared as the base-p integer sum c_i p^i.
  ///
  /// Throws DomainError for non-prime p, k == 0, a malformed or reducible
  /// modulus; CapExceeded when p^k > max_order.
  static FieldPtr build(FieldSpec spec,
                        std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                        std::uint64_t max_order = kMaxFieldOrder);

  [[nodiscard]] std::uint32_t characteristic() const { return p_; }
  [[nodiscard]] std::uint32_t degree() const { return k_; }
  [[nodiscard]] std::uint64_t order() const { return order_; }
  /// Monic modulus, coefficients low-to-high (length k+1).
  [[nodiscard]] const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  [[nodiscard]] bool has_tables() const { return !exp_.empty(); }

  [[nodiscard]] Fe zero() const { return Fe{0}; }
  [[nodiscard]] Fe one() const { return Fe{1}; }
  /// Smallest-id primitive element.
  [[nodiscard]] Fe generator() const { return Fe{generator_}; }

  [[nodiscard]] bool contains(Fe x) const { return x.id < order_; }
  /// Checked conversion from a raw id.
  [[nodiscard]] Fe element(std::uint64_t id) const;
  /// Image of an integer in the prime subfield.
  [[nodiscard]] Fe from_int(std::int64_t n) const;

  [[nodiscard]] Fe add(Fe x, Fe y) const;
  [[nodiscard]] Fe sub(Fe x, Fe y) const { return add(x, neg(y)); }
  [[nodiscard]] Fe neg(Fe x) const;
  [[nodiscard]] Fe mul(Fe x, Fe y) const;
  /// Throws ZeroDivision when y is zero.
  [[nodiscard]] Fe div(Fe x, Fe y) const { return mul(x, inv(y)); }
  /// Throws ZeroDivision for zero.
  [[nodiscard]] Fe inv(Fe x) const;
  /// x^n with 0^0 = 1.
  [[nodiscard]] Fe pow(Fe x, std::uint64_t n) const;
  /// x^n for signed n; negative exponents of zero throw ZeroDivision.
  [[nodiscard]] Fe pow_signed(Fe x, std::int64_t n) const;
  /// The absolute Frobenius x -> x^p.
  [[nodiscard]] Fe frobenius(Fe x) const { return pow(x, p_); }

  /// True iff x = y^2 for some y. Always true in characteristic 2.
  [[nodiscard]] bool is_square(Fe x) const;
  /// Nonzero and not a square.
  [[nodiscard]] bool is_nonsquare(Fe x) const { return x.id != 0 && !is_square(x); }

  /// Discrete log to the generator base; requires tables and x != 0.
  [[nodiscard]] std::uint32_t log(Fe x) const;
  /// generator^i (works with or without tables).
  [[nodiscard]] Fe exp(std::uint64_t i) const;

  /// Polynomial-basis coordinates of x, low-to-high, length k.
  [[nodiscard]] std::vector<std::uint32_t> coordinates(Fe x) const;
  [[nodiscard]] Fe from_coordinates(const std::vector<std::uint32_t>& c) const;

  /// "0", or "g^i" when tables exist, else the raw id.
  [[nodiscard]] std::string format(Fe x) const;

 private:
  Field() = default;

  void build_tables();
  [[nodiscard]] Fe slow_mul(Fe x, Fe y) const;
  [[nodiscard]] Fe slow_add(Fe x, Fe y) const;
  [[nodiscard]] Fe slow_neg(Fe x) const;
  void check(Fe x) const {
    if (x.id >= order_) throw ContextMismatch("element id " + std::to_string(x.id) + " outside field of order " + std::to_string(order_));
  }

  std::uint32_t p_ = 2;
  std::uint32_t k_ = 1;
  std::uint64_t order_ = 2;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t generator_ = 1;

  std::vector<std::uint32_t> exp_;   // exp_[i] = generator^i, i < order-1
  std::vector<std::uint32_t> log_;   // log_[id], id != 0
  std::vector<std::uint32_t> zech_;  // zech_[i] = log(1 + g^i), kNoLog if zero
  static constexpr std::uint32_t kNoLog = 0xffffffffu;
};

/// A field element carrying its context, for call sites that want operator
/// syntax and context checking (mixing contexts throws ContextMismatch).
class Element {
 public:
  Element(FieldPtr field, Fe value);

  [[nodiscard]] const FieldPtr& field() const { return field_; }
  [[nodiscard]] Fe value() const { return value_; }

  friend Element operator+(const Element& x, const Element& y);
  friend Element operator-(const Element& x, const Element& y);
  friend Element operator*(const Element& x, const Element& y);
  friend Element operator/(const Element& x, const Element& y);
  Element operator-() const;
  [[nodiscard]] Element inv() const;
  [[nodiscard]] Element pow(std::uint64_t n) const;
  friend bool operator==(const Element& x, const Element& y);

 private:
  FieldPtr field_;
  Fe value_;
};

/// A quadratic extension F_{q^2} / F_q.
///
/// F_{q^2} is built directly as F_{p^{2k}}; F_q is built on its own modulus
/// and embedded by sending its defining root to the smallest-id root inside
/// the fixed field of x -> x^q.
class QuadExt {
 public:
  static std::shared_ptr<const QuadExt> build(
      std::uint64_t q,
      std::optional<std::vector<std::uint32_t>> ext_modulus = std::nullopt,
      std::optional<std::vector<std::uint32_t>> base_modulus = std::nullopt);

  [[nodiscard]] std::uint64_t q() const { return q_; }
  [[nodiscard]] const Field& base() const { return *base_; }
  [[nodiscard]] const Field& ext() const { return *ext_; }
  [[nodiscard]] const FieldPtr& base_ptr() const { return base_; }
  [[nodiscard]] const FieldPtr& ext_ptr() const { return ext_; }

  /// F_q -> F_{q^2} ring embedding.
  [[nodiscard]] Fe embed(Fe x) const;
  /// Inverse of embed; nullopt when x is not in the image.
  [[nodiscard]] std::optional<Fe> restrict(Fe x) const;
  [[nodiscard]] bool in_base(Fe x) const { return frobenius_q(x) == x; }

  /// x -> x^q on F_{q^2}.
  [[nodiscard]] Fe frobenius_q(Fe x) const { return ext_->pow(x, q_); }
  /// x^{q+1}, which lies in F_q.
  [[nodiscard]] Fe norm(Fe x) const { return ext_->pow(x, q_ + 1); }
  /// Squareness of an element of F_{q^2} that lies in F_q, judged in F_q.
  /// Throws DomainError if x is not in F_q.
  [[nodiscard]] bool is_square_in_base(Fe x) const;

  /// The subgroup mu_{q+1} of (q+1)-th roots of unity, ascending ids.
  [[nodiscard]] const std::vector<Fe>& mu() const { return mu_; }

 private:
  QuadExt() = default;

  std::uint64_t q_ = 0;
  FieldPtr base_;
  FieldPtr ext_;
  std::vector<Fe> embed_;                                  // indexed by base id
  std::vector<std::pair<std::uint32_t, std::uint32_t>> restrict_;  // sorted (ext id, base id)
  std::vector<Fe> mu_;
};

using QuadExtPtr = std::shared_ptr<const QuadExt>;

/// L(X) = a X^q + b X on F_{q^2}.
struct LinearQPoly {
  Fe a;
  Fe b;
};

[[nodiscard]] bool is_invertible(const QuadExt& ctx, const LinearQPoly& l);
[[nodiscard]] Fe linear_q_apply(const QuadExt& ctx, const LinearQPoly& l, Fe x);
/// (a X^q - b^q X) / (a^{q+1} - b^{q+1}); throws DomainError when singular.
[[nodiscard]] LinearQPoly linear_q_inverse(const QuadExt& ctx, const LinearQPoly& l);
[[nodiscard]] Fe linear_q_invert(const QuadExt& ctx, const LinearQPoly& l, Fe y);

/// Isomorphism F_{q^2} -> F_q x F_q, x -> (ax + (ax)^q, bx + (bx)^q).
struct VecIsoForward {
  Fe a;
  Fe b;
};

/// Isomorphism F_q x F_q -> F_{q^2}, (x, y) -> ax + by.
struct VecIsoBackward {
  Fe a;
  Fe b;
};

/// a, b nonzero with a^{q-1} != b^{q-1}.
[[nodiscard]] bool is_valid_iso_pair(const QuadExt& ctx, Fe a, Fe b);

/// Throws DomainError when the parameter constraint fails.
[[nodiscard]] std::pair<Fe, Fe> vec_iso_apply(const QuadExt& ctx, const VecIsoForward& iso, Fe x);
[[nodiscard]] Fe vec_iso_apply(const QuadExt& ctx, const VecIsoBackward& iso, Fe x, Fe y);

/// All field isomorphisms from one field to another of the same order, each
/// given as a table indexed by source id.
std::vector<std::vector<Fe>> field_isomorphisms(const Field& from, const Field& to);

/// Monic irreducibles of degree k over F_p in the default-modulus order;
/// stops after `limit` results.
std::vector<std::vector<std::uint32_t>> irreducible_polynomials(std::uint32_t p, std::uint32_t k,
                                                                 std::size_t limit);

// ---------------------------------------------------------------------------
// Inline hot paths.

inline Fe Field::add(Fe x, Fe y) const {
  check(x);
  check(y);
  if (p_ == 2) return Fe{x.id ^ y.id};
  if (k_ == 1) {
    const std::uint64_t s = std::uint64_t{x.id} + y.id;
    return Fe{static_cast<std::uint32_t>(s >= p_ ? s - p_ : s)};
  }
  if (!has_tables()) return slow_add(x, y);
  if (x.id == 0) return y;
  if (y.id == 0) return x;
  const std::uint32_t n1 = static_cast<std::uint32_t>(order_ - 1);
  const std::uint32_t lx = log_[x.id];
  std::uint32_t d = log_[y.id] + (n1 - lx);
  if (d >= n1) d -= n1;
  const std::uint32_t z = zech_[d];
  if (z == kNoLog) return Fe{0};
  std::uint32_t e = lx + z;
  if (e >= n1) e -= n1;
  return Fe{exp_[e]};
}

inline Fe Field::neg(Fe x) const {
  check(x);
  if (p_ == 2 || x.id == 0) return x;
  if (k_ == 1) return Fe{p_ - x.id};
  if (!has_tables()) return slow_neg(x);
  const std::uint32_t n1 = static_cast<std::uint32_t>(order_ - 1);
  std::uint32_t e = log_[x.id] + n1 / 2;
  if (e >= n1) e -= n1;
  return Fe{exp_[e]};
}

inline Fe Field::mul(Fe x, Fe y) const {
  check(x);
  check(y);
  if (x.id == 0 || y.id == 0) return Fe{0};
  if (k_ == 1) return Fe{static_cast<std::uint32_t>(std::uint64_t{x.id} * y.id % p_)};
  if (!has_tables()) return slow_mul(x, y);
  const std::uint32_t n1 = static_cast<std::uint32_t>(order_ - 1);
  std::uint32_t e = log_[x.id] + log_[y.id];
  if (e >= n1) e -= n1;
  return Fe{exp_[e]};
}

}  // namespace permlab
