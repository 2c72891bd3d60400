#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgkit/morphism.hpp"
#include "qgkit/quasigroupoid.hpp"
#include "qgkit/report.hpp"

namespace qgkit {

// A map on {(h, a) : s_H(h) = t_A(a)}, stored densely over H1 × A1 with
// kUndefined outside the domain.
struct ActionTable {
  std::uint32_t h_arrows = 0;
  std::uint32_t a_arrows = 0;
  std::vector<Arrow> values;

  std::optional<Arrow> at(Arrow h, Arrow a) const {
    if (h >= h_arrows || a >= a_arrows) return std::nullopt;
    const Arrow v = values[std::size_t{h} * a_arrows + a];
    if (v == kUndefined) return std::nullopt;
    return v;
  }
  bool operator==(const ActionTable&) const = default;
};

// Tabulates fn over the composable domain of (H, A).
ActionTable tabulate_action(const Quasigroupoid& h, const Quasigroupoid& a,
                            const std::function<Arrow(Arrow, Arrow)>& fn);

// c1..c3 for φ_A. Throws Error(BaseMismatch) when the object sets differ and
// Error(DomainMismatch) when the table is not defined exactly on the domain.
StructureReport check_left_action(const Quasigroupoid& h, const Quasigroupoid& a, const ActionTable& phi_a);
// d1..d3 for φ_H.
StructureReport check_right_action(const Quasigroupoid& a, const Quasigroupoid& h, const ActionTable& phi_h);

struct MatchedPairData {
  Quasigroupoid a;
  Quasigroupoid h;
  ActionTable left;   // φ_A
  ActionTable right;  // φ_H
};

// e1..e3. Throws Error(ActionInvalid) carrying the action report when either
// action fails its own axioms.
StructureReport check_matched_pair(const MatchedPairData& mp);

// A validated matched pair.
class MatchedPair {
 public:
  // Throws Error(InvalidMatchedPair) carrying the report on failure.
  static MatchedPair create(MatchedPairData data);

  const Quasigroupoid& a() const { return data_.a; }
  const Quasigroupoid& h() const { return data_.h; }
  std::optional<Arrow> phi_a(Arrow h, Arrow a) const { return data_.left.at(h, a); }
  std::optional<Arrow> phi_h(Arrow h, Arrow a) const { return data_.right.at(h, a); }
  const MatchedPairData& data() const { return data_; }

 private:
  explicit MatchedPair(MatchedPairData d) : data_(std::move(d)) {}
  MatchedPairData data_;
};

// A⋈H together with its arrow enumeration: arrow i is pairs[i] = (a, h),
// in lexicographic order.
struct DoubleCrossProduct {
  Quasigroupoid quasigroupoid;
  std::vector<std::pair<Arrow, Arrow>> pairs;
  std::vector<Arrow> index;  // a * |H1| + h -> arrow, or kUndefined
  std::uint32_t h_arrows = 0;

  std::optional<Arrow> arrow(Arrow a, Arrow h) const {
    const Arrow v = index[std::size_t{a} * h_arrows + h];
    if (v == kUndefined) return std::nullopt;
    return v;
  }
};

// Throws Error(InvalidMatchedPair) if the construction is inconsistent.
DoubleCrossProduct double_cross_product(const MatchedPair& mp);

QgpdMorphism inclusion_a(const MatchedPair& mp, const DoubleCrossProduct& d);
QgpdMorphism inclusion_h(const MatchedPair& mp, const DoubleCrossProduct& d);

// P-1 .. P-10 over every assignment on which all operations are defined.
StructureReport matched_pair_identity_suite(const MatchedPair& mp);

// The six mixed associativity laws for products inside B of images of A and H
// under arrow maps ia, ih. The sixth law is checked in its order-matching
// form i(a)(i(g)i(h)) = (i(a)i(g))i(h); the printed variant
// i(a)(i(g)i(h)) = (i(a)i(h))i(g) is evaluated into `printed`.
struct MixedAssociativity {
  StructureReport report;
  StructureReport printed;
};
MixedAssociativity mixed_associativity(const Quasigroupoid& a, const Quasigroupoid& h, const Quasigroupoid& b,
                                       const std::vector<Arrow>& ia, const std::vector<Arrow>& ih,
                                       const std::array<std::string, 6>& tags, const std::string& name);

// HAA, HHA, HAH, AHA, AAH, AHH in A⋈H.
MixedAssociativity mixed_associativity_suite(const MatchedPair& mp);

// θ(a, h) = i^A(a)·i^H(h) compared with (a, h) on every arrow of A⋈H.
StructureReport theta_suite(const MatchedPair& mp);

// (A, X^d) with φ_A(x, a) = a and φ_H(x, a) = s_A(a).
MatchedPair mp_discrete_right(const Quasigroupoid& a);
// (X^d, B) for B the action quasigroupoid of ψ, with φ_A((a,x), x) = ψ(a, x)
// and φ_H((a,x), x) = (a, x). Throws Error(InvalidAction).
MatchedPair mp_action_left(const FiniteQuasigroup& q, std::uint32_t points, const std::vector<std::uint32_t>& psi);
// φ_A(h, a) = a and φ_H(h, a) = h; a matched pair for one-object inputs.
MatchedPair mp_trivial(const Quasigroupoid& a, const Quasigroupoid& h);

struct MpMorphism {
  MatchedPair source;
  MatchedPair target;
  QgpdMorphism gamma;  // A -> A'
  QgpdMorphism omega;  // H -> H'
};

// Γ₁∘φ_A = φ_A'∘(Ω₁×Γ₁) and Ω₁∘φ_H = φ_H'∘(Ω₁×Γ₁). Throws
// Error(BaseMismatch) when the component maps do not connect the pairs.
StructureReport check_mp_morphism(const MpMorphism& m);
MpMorphism identity_mp_morphism(const MatchedPair& mp);
// g after f.
MpMorphism compose(const MpMorphism& g, const MpMorphism& f);

}  // namespace qgkit
