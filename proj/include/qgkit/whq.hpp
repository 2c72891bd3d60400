#pragma once
// Finite-dimensional weak Hopf quasigroups given by structure constants.
//
// Every check compares two linear maps on basis vectors (or basis tuples),
// so a pass is a proof for the finite structure at hand.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgkit/linalg.hpp"
#include "qgkit/morphism.hpp"
#include "qgkit/quasigroupoid.hpp"
#include "qgkit/report.hpp"

namespace qgkit {

template <class F>
struct MagmaCoalgebra {
  using T = typename F::value_type;

  F field;
  std::uint64_t n = 0;
  linalg::SparseVector<T> unit;
  linalg::LinearMap<T> product;    // n² -> n
  linalg::LinearMap<T> counit;     // n -> 1
  linalg::LinearMap<T> coproduct;  // n -> n²
  linalg::LinearMap<T> antipode;   // n -> n
};

template <class T>
struct Projections {
  linalg::LinearMap<T> pi_l;       // id ∗ λ
  linalg::LinearMap<T> pi_r;       // λ ∗ id
  linalg::LinearMap<T> pi_l_unit;  // ε(1₍₁₎h)1₍₂₎
  linalg::LinearMap<T> pi_r_unit;  // 1₍₁₎ε(h1₍₂₎)
  linalg::LinearMap<T> bar_pi_l;   // ε(1₍₂₎h)1₍₁₎
  linalg::LinearMap<T> bar_pi_r;   // ε(h1₍₁₎)1₍₂₎
};

template <class T>
struct WhqReport {
  StructureReport report;
  Projections<T> projections;
};

// Shape checks only. Throws Error(DimensionMismatch).
template <class F>
void require_shapes(const MagmaCoalgebra<F>& d);

// Unit, coassociativity and counit laws.
template <class F>
StructureReport magma_coalgebra_laws(const MagmaCoalgebra<F>& d);

// d1, d2, d3, d4-1 .. d4-7, always all of them and in that order. Throws
// Error(PreconditionFailed) with the law report if d is not a unital magma
// and a coalgebra.
template <class F>
WhqReport<typename F::value_type> check_whq(const MagmaCoalgebra<F>& d);

// Throws Error(NotWhq) carrying the axiom report when check_whq fails.
template <class F>
Projections<typename F::value_type> projections(const MagmaCoalgebra<F>& d);

// Consequences of the axioms, on basis elements. Throws Error(NotWhq).
template <class F>
StructureReport derived_property_suite(const MagmaCoalgebra<F>& d);

template <class F>
MagmaCoalgebra<F> magma_of_quasigroupoid(const Quasigroupoid& b, const F& field);

// ∇(h⊗k) = h₍₁₎ ⊗ Π^R(h₍₂₎)k.
template <class F>
linalg::LinearMap<typename F::value_type> nabla(const MagmaCoalgebra<F>& d,
                                                const linalg::LinearMap<typename F::value_type>& pi_r);
// Throws Error(NotWhq).
template <class F>
linalg::LinearMap<typename F::value_type> nabla(const MagmaCoalgebra<F>& d);

// counit, coproduct, mkl1 .. mkl4. Both structures are assumed valid.
// Throws Error(DimensionMismatch).
template <class F>
StructureReport check_whq_morphism(const linalg::LinearMap<typename F::value_type>& f, const MagmaCoalgebra<F>& d,
                                   const MagmaCoalgebra<F>& d2);

// Linear extension of the arrow map. Throws Error(InvalidMorphism).
template <class F>
linalg::LinearMap<typename F::value_type> magma_functor(const QgpdMorphism& g, const F& field);

// counit-unit, counit-multiplicative, coproduct-unit, coproduct-multiplicative.
template <class F>
StructureReport hopf_report(const MagmaCoalgebra<F>& d);
template <class F>
bool is_hopf_quasigroup(const MagmaCoalgebra<F>& d) {
  return hopf_report(d).passed();
}
template <class F>
std::optional<std::uint64_t> cocommutativity_witness(const MagmaCoalgebra<F>& d);
template <class F>
bool is_cocommutative(const MagmaCoalgebra<F>& d) {
  return !cocommutativity_witness(d);
}
// A basis pair (i, j) with e_i e_j != e_j e_i.
template <class F>
std::optional<std::pair<std::uint64_t, std::uint64_t>> commutativity_witness(const MagmaCoalgebra<F>& d);
template <class F>
bool is_commutative(const MagmaCoalgebra<F>& d) {
  return !commutativity_witness(d);
}

// Product of two vectors.
template <class F>
linalg::SparseVector<typename F::value_type> multiply(const MagmaCoalgebra<F>& d,
                                                      const linalg::SparseVector<typename F::value_type>& x,
                                                      const linalg::SparseVector<typename F::value_type>& y);

// "{i:c, ...}" with coefficients in the field's text form.
template <class F>
std::string format_vector(const F& field, const linalg::SparseVector<typename F::value_type>& v);

// Instantiated for linalg::RationalField and linalg::PrimeField.

}  // namespace qgkit
