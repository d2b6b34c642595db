#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permlab/gf.hpp"
#include "permlab/permcheck.hpp"
#include "permlab/theorems.hpp"

namespace permlab {

inline constexpr std::uint64_t kDefaultEquivalenceCap = 9;

enum class EquivClass { MonomialQ2, CubePair, TwistedCubePair, NotPermutation, Unclassified };

const char* to_string(EquivClass c);

/// f = rho o K o eta^{-1} for one of the canonical maps K:
/// X^{q+2} on F_{q^2}, (X^3, Y^3) or (X^3 - e X Y^2, Y^3) on F_q x F_q.
struct EquivalenceResult {
  EquivClass tag = EquivClass::Unclassified;
  LinearQPoly rho{};            // MonomialQ2
  LinearQPoly eta_inv{};        // MonomialQ2
  VecIsoBackward pair_rho{};    // pair classes
  VecIsoForward pair_eta_inv{}; // pair classes
  Fe e{};                       // TwistedCubePair, an element of F_q
  /// Every class that matched when all classes were searched.
  std::vector<EquivClass> matches;
};

/// Enumerates every F_q-linear isomorphism eta^{-1} in id order and solves
/// for rho from two sample points.
class EquivalenceClassifier {
 public:
  /// Throws CapExceeded for q > cap.
  explicit EquivalenceClassifier(QuadExtPtr ctx, std::uint64_t cap = kDefaultEquivalenceCap);

  [[nodiscard]] const QuadExt& ctx() const { return ev_.ctx(); }
  [[nodiscard]] const QuarticEvaluator& evaluator() const { return ev_; }
  /// With all_classes the search continues after the first hit and fills
  /// `matches`; the reported witness is still the first one.
  [[nodiscard]] EquivalenceResult classify(const QuarticCoeffs& co, bool all_classes = false) const;

 private:
  struct LinearChart {
    LinearQPoly eta_inv;
    std::vector<Fe> image;  // (eta^{-1} x)^{q+2}
    std::uint32_t x1, x2;   // image values F_q-independent
  };
  struct PairChart {
    VecIsoForward eta_inv;
    std::vector<std::pair<Fe, Fe>> coords;  // eta^{-1} x in F_q x F_q
    std::uint32_t x1, x2;                   // preimages of (1,0), (0,1)
  };

  bool try_monomial(const std::vector<Fe>& f, EquivalenceResult& out) const;
  bool try_pair(const std::vector<Fe>& f, std::optional<Fe> e, EquivalenceResult& out) const;

  QuarticEvaluator ev_;
  std::vector<LinearChart> linear_;
  std::vector<PairChart> pair_;
  std::vector<Fe> nonsquares_;
};

/// Recomputes rho o K o eta^{-1} at every point from the stored maps.
bool verify_equivalence(const QuadExt& ctx, const QuarticCoeffs& co, const EquivalenceResult& r);

/// x -> (a x + b) / (c x + d) with ad - bc != 0.
struct Mobius {
  Fe a, b, c, d;
};

[[nodiscard]] PointP1 mobius_apply(const Field& f, const Mobius& m, PointP1 x);
[[nodiscard]] Mobius mobius_compose(const Field& f, const Mobius& outer, const Mobius& inner);
[[nodiscard]] Mobius mobius_inverse(const Field& f, const Mobius& m);
/// All of PGL_2 over f, one normalized representative each, in id order.
std::vector<Mobius> pgl2(const Field& f);

/// rho o h o eta as a reduced rational function.
RationalFn compose_mobius(const Mobius& rho, const RationalFn& h, const Mobius& eta);

enum class CubicClass { Cube, NuConjugatedCube, DepressedCube, Unclassified };

const char* to_string(CubicClass c);

struct CubicNormalForm {
  CubicClass cls = CubicClass::Unclassified;
  Mobius rho{}, eta{};
  Fe alpha{};  // DepressedCube, in the field of h
  Fe delta{};  // NuConjugatedCube, in F_{q^2}
  std::optional<RationalFn> canonical;
};

/// nu^{-1} o X^3 o nu with nu = (X - delta^q)/(X - delta), restricted to F_q.
RationalFn nu_conjugated_cube(const QuadExt& ctx, Fe delta);

/// Finds degree-one rho, eta over F_q with rho o h o eta canonical.
/// `ctx` must share the base modulus of h's field; one is built when absent.
/// Throws DomainError if h is not a degree-3 permutation of P^1, CapExceeded
/// for q > cap.
CubicNormalForm normalize_cubic_rational(const RationalFn& h, QuadExtPtr ctx = nullptr,
                                         std::uint64_t cap = kDefaultEquivalenceCap);

}  // namespace permlab
