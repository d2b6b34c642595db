#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "permlab/gf.hpp"
#include "permlab/poly.hpp"

namespace permlab {

/// A point of the projective line over some field: an element or infinity.
struct PointP1 {
  bool infinite = false;
  Fe value{};

  static PointP1 at(Fe x) { return PointP1{false, x}; }
  static PointP1 inf() { return PointP1{true, Fe{}}; }

  friend bool operator==(const PointP1& a, const PointP1& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

/// num / den over one field, stored in lowest terms with a monic denominator.
class RationalFn {
 public:
  /// Throws DomainError for a zero denominator.
  RationalFn(Poly num, Poly den);
  static RationalFn from_poly(Poly p);

  [[nodiscard]] const Poly& num() const { return num_; }
  [[nodiscard]] const Poly& den() const { return den_; }
  [[nodiscard]] const Field& field() const { return num_.field(); }
  /// max(deg num, deg den) after cancellation.
  [[nodiscard]] long degree() const;
  [[nodiscard]] bool is_constant() const { return degree() <= 0; }

  /// Projective evaluation: a pole maps to infinity; at infinity the result
  /// is infinity, zero or the ratio of leading coefficients according to the
  /// degree comparison.
  [[nodiscard]] PointP1 eval(PointP1 x) const;
  [[nodiscard]] PointP1 eval(Fe x) const { return eval(PointP1::at(x)); }

 private:
  Poly num_;
  Poly den_;
};

/// True iff the bitmap of values fills exactly once.
bool is_bijective_on(std::uint64_t size, const std::function<std::uint64_t(std::uint64_t)>& fn);

/// Brute force over all field elements.
bool is_permutation_poly(const Poly& f);
/// f and f + X both permute.
bool is_complete_mapping(const Poly& f);

/// Hermite's criterion: for every 0 < m < N-1 prime to the characteristic
/// the folded f^m has degree below N-1, and f has exactly one root.
bool hermite_is_permutation(const Poly& f);

/// Coefficient of X^{N-1} in the folded f^m, N the field size.
Fe coeff_profile(const Poly& f, std::uint64_t m);

using PairMap = std::function<std::pair<Fe, Fe>(Fe, Fe)>;

/// Whether (x, y) -> phi(x, y) permutes F x F.
bool bivariate_is_bijection(const Field& field, const PairMap& phi);

/// Whether fn (coefficients in F_{q^2}) permutes mu_{q+1}.
bool rational_permutes_mu(const RationalFn& fn, const QuadExt& ctx);
/// Whether fn permutes the projective line over its own coefficient field.
bool rational_permutes_p1(const RationalFn& fn);

}  // namespace permlab
