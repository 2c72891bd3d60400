#pragma once
// 𝕂[A]⋈𝕂[H]: the weak Hopf quasigroup carried by the composable pure
// tensors a⊗h (s_A(a) = t_H(h)) inside 𝕂[A]⊗𝕂[H], with its product twisted
// through the linearized actions.
//
// Ambient tensors use index a * |H1| + h.

#include <cstdint>
#include <utility>
#include <vector>

#include "qgkit/linalg.hpp"
#include "qgkit/matched_pair.hpp"
#include "qgkit/report.hpp"
#include "qgkit/whq.hpp"

namespace qgkit {

template <class F>
struct LinearizedActions {
  using T = typename F::value_type;
  linalg::LinearMap<T> phi_a;  // 𝕂[H]⊗𝕂[A] -> 𝕂[A]
  linalg::LinearMap<T> phi_h;  // 𝕂[H]⊗𝕂[A] -> 𝕂[H]
};

template <class F>
LinearizedActions<F> linearized_actions(const MatchedPair& mp, const F& field);

// left-unit, left-module, right-unit, right-module.
template <class F>
StructureReport module_law_report(const MatchedPair& mp, const F& field);

// Φ = (φ_𝕂[A] ⊗ φ_𝕂[H])(id⊗c⊗id)(δ_H⊗δ_A): 𝕂[H]⊗𝕂[A] -> 𝕂[A]⊗𝕂[H].
template <class F>
linalg::LinearMap<typename F::value_type> phi_map(const MatchedPair& mp, const F& field);

// ∇_Φ = (μ_A⊗id)(id⊗Φ(id⊗1_A)) on 𝕂[A]⊗𝕂[H].
template <class F>
linalg::LinearMap<typename F::value_type> nabla_phi(const MatchedPair& mp, const F& field);

template <class F>
struct BowtieMagma {
  MatchedPair mp;
  std::vector<std::uint64_t> basis;     // ambient index of each basis vector
  std::vector<std::uint64_t> position;  // ambient index -> basis position, or kNoPosition
  MagmaCoalgebra<F> whq;

  static constexpr std::uint64_t kNoPosition = ~std::uint64_t{0};
};

// The basis is read off from the pure tensors fixed by ∇_Φ. Throws
// Error(InvalidMatchedPair) if a product or antipode value leaves the span
// of that basis.
template <class F>
BowtieMagma<F> bowtie_whq(const MatchedPair& mp, const F& field);

// Π^L(a⊗h) = id_A(t_A a)⊗id_H(t_A a) and Π^R(a⊗h) = id_A(s_H h)⊗id_H(s_H h).
template <class F>
StructureReport bowtie_projection_report(const BowtieMagma<F>& bm);

// f(a, g) = a⊗g from 𝕂[A⋈H] to 𝕂[A]⋈𝕂[H].
template <class F>
linalg::LinearMap<typename F::value_type> canonical_iso(const MatchedPair& mp, const DoubleCrossProduct& dcp,
                                                        const BowtieMagma<F>& bm);

template <class F>
struct IsoVerification {
  linalg::LinearMap<typename F::value_type> f;
  bool bijective = false;
  StructureReport morphism;   // counit, coproduct, mkl1 .. mkl4
  StructureReport transport;  // structure constants pulled back along f
};

// Builds both sides and compares them. Throws Error(InvalidMatchedPair).
template <class F>
IsoVerification<F> verify_canonical_iso(const MatchedPair& mp, const F& field);

// Instantiated for linalg::RationalField and linalg::PrimeField.

}  // namespace qgkit
