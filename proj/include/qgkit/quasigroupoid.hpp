#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qgkit/quasigroup.hpp"
#include "qgkit/report.hpp"

namespace qgkit {

using Object = std::uint32_t;
using Arrow = std::uint32_t;

inline constexpr std::uint32_t kUndefined = 0xffffffffu;

struct ProductEntry {
  Arrow left, right, value;
  bool operator==(const ProductEntry&) const = default;
};

// Unvalidated quasigroupoid data, as read from a document or assembled by a
// builder. The product lists one entry per composable pair.
struct QuasigroupoidData {
  std::uint32_t objects = 0;
  std::vector<Object> source;   // per arrow
  std::vector<Object> target;   // per arrow
  std::vector<Arrow> identity;  // per object
  std::vector<Arrow> inverse;   // per arrow
  std::vector<ProductEntry> product;

  std::uint32_t arrows() const { return static_cast<std::uint32_t>(source.size()); }
  bool operator==(const QuasigroupoidData&) const = default;
};

// Axioms a1, a2-1, a2-2 and a2-3. Throws Error(IndexOutOfRange) on malformed
// index data and Error(ProductDomainMismatch) when the product is listed on a
// non-composable pair, listed twice, or missing on a composable pair.
StructureReport check_quasigroupoid(const QuasigroupoidData& data);

// Immutable validated quasigroupoid. Copies share the underlying tables.
class Quasigroupoid {
 public:
  // Throws Error(InvalidStructure) carrying the report when an axiom fails.
  static Quasigroupoid create(QuasigroupoidData data);

  std::uint32_t objects() const { return impl_->data.objects; }
  std::uint32_t arrows() const { return impl_->data.arrows(); }
  Object source(Arrow a) const { return impl_->data.source[a]; }
  Object target(Arrow a) const { return impl_->data.target[a]; }
  Arrow identity(Object x) const { return impl_->data.identity[x]; }
  Arrow inverse(Arrow a) const { return impl_->data.inverse[a]; }

  bool composable(Arrow a, Arrow b) const { return source(a) == target(b); }
  // a•b, or nullopt when (a, b) is not composable.
  std::optional<Arrow> product(Arrow a, Arrow b) const {
    const Arrow r = impl_->table[std::size_t{a} * arrows() + b];
    if (r == kUndefined) return std::nullopt;
    return r;
  }
  // Caller guarantees composability.
  Arrow mul(Arrow a, Arrow b) const { return impl_->table[std::size_t{a} * arrows() + b]; }

  bool is_identity(Arrow a) const { return identity(source(a)) == a; }

  const QuasigroupoidData& data() const { return impl_->data; }

  // Structural equality of the defining tables.
  bool operator==(const Quasigroupoid& other) const {
    return impl_ == other.impl_ || impl_->data == other.impl_->data;
  }

 private:
  struct Impl {
    QuasigroupoidData data;
    std::vector<Arrow> table;
  };
  explicit Quasigroupoid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

// E-1 .. E-6 checked exhaustively. Failures indicate a checker bug.
StructureReport derived_identity_suite(const Quasigroupoid& q);

// Lexicographically smallest (a, b, c) with both bracketings defined and
// different, or with exactly one bracketing defined.
std::optional<std::array<Arrow, 3>> associativity_witness(const Quasigroupoid& q);
inline bool is_associative(const Quasigroupoid& q) { return !associativity_witness(q); }

// The unique arrow w with w•(a•b) = b on every composable b, found by search
// rather than read from the inverse table.
std::optional<Arrow> recover_inverse(const Quasigroupoid& q, Arrow a);

// ---- constructions --------------------------------------------------------

// One object, arrows are the elements.
Quasigroupoid quasigroup_as_quasigroupoid(const FiniteQuasigroup& q);

// ψ is stored row-major, psi[a * points + x] = ψ(a, x).
StructureReport check_action_on_set(const FiniteQuasigroup& q, std::uint32_t points,
                                    const std::vector<std::uint32_t>& psi);

// Arrow (a, x) has index a * points + x. Throws Error(InvalidAction).
Quasigroupoid from_quasigroup_action(const FiniteQuasigroup& q, std::uint32_t points,
                                     const std::vector<std::uint32_t>& psi);

// Arrow (a, x, y) has index (a * points + x) * points + y and object x stands
// for (e, x, x).
Quasigroupoid pair_quasigroupoid(const FiniteQuasigroup& q, std::uint32_t points);

// Objects are P = {0..pi.size()-1}; arrows are the triples (p, a, q) with
// π(p) = t(a), π(q) = s(a), enumerated lexicographically. Throws
// Error(NotSurjective).
Quasigroupoid pullback_quasigroupoid(const Quasigroupoid& a, const std::vector<Object>& pi);

// Arrow (x, y) has index x * points + y, source y and target x.
Quasigroupoid coarse_groupoid(std::uint32_t points);
// Arrows are the objects themselves.
Quasigroupoid discrete_groupoid(std::uint32_t points);

// Standard actions used as test stock; each returns the ψ table.
std::vector<std::uint32_t> left_translation(const FiniteQuasigroup& q);
std::vector<std::uint32_t> trivial_action(const FiniteQuasigroup& q, std::uint32_t points);
// ψ(a, x) = x + hom(a) mod points, with hom given per element.
std::vector<std::uint32_t> cyclic_shift_action(const FiniteQuasigroup& q, std::uint32_t points,
                                               const std::vector<std::uint32_t>& hom);

}  // namespace qgkit
