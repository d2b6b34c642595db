#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "permlab/gf.hpp"
#include "permlab/mureduce.hpp"
#include "permlab/poly.hpp"
#include "permlab/sampling.hpp"

namespace permlab {

/// Largest q for which the conjugacy witness table is built by default.
inline constexpr std::uint64_t kDefaultConjugacyCap = 8;

/// f = a X^{3q} + b X^{2q+1} + c X^{q+2} + d X^3 over F_{q^2}.
struct QuarticCoeffs {
  Fe a, b, c, d;
  friend bool operator==(const QuarticCoeffs&, const QuarticCoeffs&) = default;
};

/// The polynomial itself, unreduced.
Poly quartic_poly(const QuadExt& ctx, const QuarticCoeffs& co);
/// r = 3, B = a X^3 + b X^2 + c X + d.
XrBForm quartic_form(const QuadExt& ctx, const QuarticCoeffs& co);

/// Evaluates the quartic family through precomputed monomial tables.
class QuarticEvaluator {
 public:
  explicit QuarticEvaluator(QuadExtPtr ctx);

  [[nodiscard]] const QuadExt& ctx() const { return *ctx_; }
  [[nodiscard]] Fe eval(const QuarticCoeffs& co, Fe x) const;
  /// Values at every element, indexed by id.
  [[nodiscard]] std::vector<Fe> table(const QuarticCoeffs& co) const;
  [[nodiscard]] bool is_permutation(const QuarticCoeffs& co) const;
  /// f and f + X both permute.
  [[nodiscard]] bool is_complete_mapping(const QuarticCoeffs& co) const;

 private:
  bool permutes(const QuarticCoeffs& co, bool plus_x, std::vector<std::uint8_t>& seen) const;

  QuadExtPtr ctx_;
  std::vector<std::array<Fe, 4>> mono_;  // x^{3q}, x^{2q+1}, x^{q+2}, x^3
};

/// X^{q+2} + b X^q + c X.
Poly trinomial_poly(const QuadExt& ctx, Fe b, Fe c);

/// Permutation criterion for X^{q+2} + b X^q + c X:
/// (q != 1 mod 3, b = 0, c^{q-1} a root of X^3 - X^2 + X) or (q = 2, b != 0, c = 1).
bool trinomial_predicate(const QuadExt& ctx, Fe b, Fe c);

/// Coefficients of (x^3 - e x y^2 - a x - b y, y^3 - c x - d y) over F_q.
struct PairCoeffs {
  Fe a, b, c, d, e;
};

std::pair<Fe, Fe> pair_map_apply(const Field& fq, const PairCoeffs& co, Fe x, Fe y);

/// How "a and d are nonsquares" is read in the bc = 0, 3 | q alternative.
/// ZeroOrNonsquare also admits a zero entry, for which X^3 still permutes.
enum class NonsquareReading { Strict, ZeroOrNonsquare };

/// Bijectivity criterion for the e = 0 maps. Throws DomainError if e != 0.
bool cubic_pair_predicate(const Field& fq, const PairCoeffs& co,
                          NonsquareReading reading = NonsquareReading::Strict);

/// Bijectivity criterion for e != 0 and 3 | q: c = 0, d zero or a nonsquare,
/// and (a = 0, e nonsquare) or (q = 3, a = -1, e = 1).
/// Throws DomainError for e = 0 or 3 not dividing q.
bool twisted_pair_predicate(const Field& fq, const PairCoeffs& co);

/// 3 | q, b = c = 0, a^{q+1} != d^{q+1} and a X^{3q-1} + d X^2 + 1 has no
/// root in F_{q^2}^*.
bool additive_complete_clause(const QuadExt& ctx, const QuarticCoeffs& co);

/// Which power of a enters the 3 | q, b = 0 clause's square condition
/// d^{4q+4} + a^k d^{q+5}.
enum class SquareClause { AFourth, ASquared };

/// Explicit coefficient conditions for f to be a complete mapping. Integer
/// literals are read in the field's characteristic.
bool complete_mapping_conditions(const QuadExt& ctx, const QuarticCoeffs& co,
                                 SquareClause clause = SquareClause::AFourth);

/// f = L^{-1} o gamma X^{q+2} o L with L = lambda X^q + beta X.
struct ConjugacyWitness {
  Fe lambda, beta, gamma;
};

/// Table of every quartic that is F_q-linearly conjugate to some gamma X^{q+2}
/// with gamma^{2q-2} - gamma^{q-1} + 1 = 0, built by running (lambda, beta,
/// gamma) over F_{q^2} in id order and keeping the first witness per tuple.
class ConjugacyTable {
 public:
  /// Throws CapExceeded for q > cap.
  ConjugacyTable(QuadExtPtr ctx, std::uint64_t cap = kDefaultConjugacyCap);

  [[nodiscard]] const QuadExt& ctx() const { return *ctx_; }
  [[nodiscard]] std::optional<ConjugacyWitness> find(const QuarticCoeffs& co) const;
  [[nodiscard]] std::size_t size() const { return table_.size(); }
  /// The admissible gamma values, ascending.
  [[nodiscard]] const std::vector<Fe>& gammas() const { return gammas_; }

  /// The coefficient tuple produced by a witness, or nullopt when
  /// lambda^{q+1} = beta^{q+1}.
  [[nodiscard]] std::optional<QuarticCoeffs> image(const ConjugacyWitness& w) const;

 private:
  [[nodiscard]] std::uint64_t key(const QuarticCoeffs& co) const;

  QuadExtPtr ctx_;
  std::vector<Fe> gammas_;
  std::unordered_map<std::uint64_t, ConjugacyWitness> table_;
};

/// Checks L^{-1}(gamma L(x)^{q+2}) = f(x) at every x.
bool verify_conjugacy(const QuarticEvaluator& ev, const QuarticCoeffs& co, const ConjugacyWitness& w);

struct CompleteMappingVerdict {
  bool holds = false;
  bool additive = false;
  std::optional<ConjugacyWitness> witness;
};

/// Complete-mapping classification: conjugate to gamma X^{q+2}, or the
/// additive clause.
CompleteMappingVerdict complete_mapping_by_conjugacy(const ConjugacyTable& table, const QuarticCoeffs& co);

/// H_u(X) = ((X^3 - aX - u)/b)^3 - cX - d (X^3 - aX - u)/b. Needs b != 0.
Poly hu_poly(const FieldPtr& fq, const PairCoeffs& co, Fe u);
/// H_v(Y) = (Y^3 - dY - v)^3 - e c^2 (Y^3 - dY - v) Y^2 - a c^2 (Y^3 - dY - v) - b c^3 Y.
/// Needs c != 0.
Poly hv_poly(const FieldPtr& fq, const PairCoeffs& co, Fe v);

/// X^9 + a X^5 + b X^3 + c X^2 + d X.
Poly nonic_poly(const FieldPtr& fq, Fe a, Fe b, Fe c, Fe d);

struct NonicScanReport {
  std::uint64_t tested = 0;
  std::uint64_t permutations = 0;
  std::optional<std::array<Fe, 4>> first;  // (a, b, c, d)
};

/// Runs over (a, b, c, d) with ac != 0, exhaustively or with `samples` seeded
/// draws, counting permutations of F_q. Requires 3 | q.
NonicScanReport nonic_scan(const FieldPtr& fq, std::optional<std::uint64_t> samples = std::nullopt,
                           std::uint64_t seed = kDefaultSeed);

/// X^n permutes F_q iff gcd(n, q-1) = 1.
bool monomial_predicate(std::uint64_t n, std::uint64_t q);
/// X^3 - aX permutes F_q (a != 0) iff 3 | q and a is a nonsquare.
bool depressed_cubic_predicate(const Field& fq, Fe a);

/// ((n-2)(n-3) + sqrt((n-2)^2 (n-3)^2 + 8n - 12))^2 / 4 for n >= 3.
double weil_threshold(unsigned n);

}  // namespace permlab
