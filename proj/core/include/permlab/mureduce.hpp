#pragma once

#include <cstdint>
#include <optional>

#include "permlab/gf.hpp"
#include "permlab/permcheck.hpp"
#include "permlab/poly.hpp"

namespace permlab {

/// f(X) = X^r B(X^{q-1}).
struct XrBForm {
  std::uint64_t r = 1;
  Poly b;
};

/// Splits f over F_{q^2}. Every exponent of f must be congruent mod q-1.
///
/// Without an explicit r the smallest positive r congruent to the lowest
/// exponent is used, so X^{q+2} gives r = 3 (q > 3). An explicit r must be
/// positive, at most the lowest exponent, and in the same class.
/// Throws DomainError for a zero f, a constant term, or mixed classes.
XrBForm split_xr_form(const Poly& f, std::uint64_t q, std::optional<std::uint64_t> r = std::nullopt);

/// x^r B(x^{q-1}).
Fe eval_xr_form(const XrBForm& form, const QuadExt& ctx, Fe x);

/// gcd(r, q-1) = 1 and X^r B(X)^{q-1} permutes mu_{q+1}.
bool mu_criterion(const XrBForm& form, const QuadExt& ctx);

struct HatForm {
  Poly b_hat;        // X^n B^{(q)}(1/X)
  Poly c;            // monic gcd(B, b_hat)
  Poly g_num;        // unreduced X^r B^{(q)}(1/X) / B(X), cleared of 1/X
  Poly g_den;
  RationalFn g;      // the same in lowest terms
  long g_degree = 0;
};

/// X^n B^{(q)}(1/X): reversed coefficients raised to the q-th power.
/// Requires n >= deg B.
Poly hat_twist(const Poly& b, const QuadExt& ctx, std::uint64_t n);

/// Builds the reversal, the gcd and the reduced g. n defaults to deg B.
/// Throws DomainError for B = 0.
HatForm hat_chain(const XrBForm& form, const QuadExt& ctx, std::optional<std::uint64_t> n = std::nullopt);

/// B has no root in mu_{q+1} and g permutes mu_{q+1}.
bool mu_rational_criterion(const XrBForm& form, const QuadExt& ctx);

/// (beta^q X + alpha^q) / (alpha X + beta); needs alpha^{q+1} != beta^{q+1}.
RationalFn deg1_mu_map(const QuadExt& ctx, Fe alpha, Fe beta);

/// (beta^q X + alpha^q) / (beta X + alpha), mapping P^1(F_q) onto mu_{q+1};
/// needs beta != 0 and alpha/beta outside F_q.
RationalFn p1_to_mu_map(const QuadExt& ctx, Fe alpha, Fe beta);

/// (gamma X + gamma^q) / (delta X + delta^q), mapping mu_{q+1} onto P^1(F_q);
/// needs delta != 0 and gamma/delta outside F_q.
RationalFn mu_to_p1_map(const QuadExt& ctx, Fe gamma, Fe delta);

/// (z X - z^q) / (X - 1) and its inverse (X - z^q) / (X - z), z outside F_q.
RationalFn theta_map(const QuadExt& ctx, Fe z);
RationalFn theta_inverse_map(const QuadExt& ctx, Fe z);

/// Pointwise checks of the two bridge directions, with P^1(F_q) taken inside
/// P^1(F_{q^2}).
bool maps_mu_onto_p1(const RationalFn& fn, const QuadExt& ctx);
bool maps_p1_onto_mu(const RationalFn& fn, const QuadExt& ctx);

}  // namespace permlab
