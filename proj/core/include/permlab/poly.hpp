#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "permlab/gf.hpp"

namespace permlab {

/// Degree reported for the zero polynomial.
inline constexpr long kZeroDegree = -1;

/// Dense univariate polynomial over one field, coeffs[i] multiplies X^i.
/// Always normalized: no trailing zero coefficients.
class Poly {
 public:
  explicit Poly(FieldPtr field);
  Poly(FieldPtr field, std::vector<Fe> coeffs);

  static Poly constant(FieldPtr field, Fe c);
  /// c X^e
  static Poly monomial(FieldPtr field, Fe c, std::size_t e);
  static Poly x(FieldPtr field) { return monomial(field, Fe{1}, 1); }

  [[nodiscard]] const FieldPtr& field_ptr() const { return field_; }
  [[nodiscard]] const Field& field() const { return *field_; }
  [[nodiscard]] const std::vector<Fe>& coeffs() const { return c_; }

  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] long degree() const { return static_cast<long>(c_.size()) - 1; }
  /// Coefficient of X^e; zero past the degree.
  [[nodiscard]] Fe coeff(std::size_t e) const { return e < c_.size() ? c_[e] : Fe{0}; }
  [[nodiscard]] Fe lead() const { return c_.empty() ? Fe{0} : c_.back(); }
  /// Smallest exponent with a nonzero coefficient; -1 for zero.
  [[nodiscard]] long low_degree() const;

  /// Horner evaluation.
  [[nodiscard]] Fe eval(Fe x) const;

  [[nodiscard]] Poly scale(Fe s) const;
  [[nodiscard]] Poly monic() const;
  [[nodiscard]] Poly shift(std::size_t e) const;  // * X^e
  [[nodiscard]] Poly map_coeffs(const std::function<Fe(Fe)>& fn) const;

  friend Poly operator+(const Poly& f, const Poly& g);
  friend Poly operator-(const Poly& f, const Poly& g);
  friend Poly operator*(const Poly& f, const Poly& g);
  friend bool operator==(const Poly& f, const Poly& g);

  [[nodiscard]] std::string to_string() const;

 private:
  void normalize();

  FieldPtr field_;
  std::vector<Fe> c_;
};

/// Fold exponents X^e -> X^{((e-1) mod (N-1)) + 1} for e >= 1, which leaves
/// the induced function on a field of size N unchanged.
Poly reduce_mod_xq_minus_x(const Poly& f, std::uint64_t n);

/// f^m with every intermediate product folded as above. m >= 1.
Poly pow_reduce(const Poly& f, std::uint64_t m, std::uint64_t n);

/// f^m without any reduction.
Poly pow(const Poly& f, std::uint64_t m);

/// f(g(X)).
Poly compose(const Poly& f, const Poly& g);

/// Quotient and remainder; throws ZeroDivision for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd, zero iff both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace permlab
