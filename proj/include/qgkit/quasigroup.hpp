#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgkit/kernels.hpp"
#include "qgkit/report.hpp"

namespace qgkit {

using Element = std::uint32_t;

// A finite IP loop given by its Cayley table. Elements are dense indices
// 0..order-1; names are an optional side table. Instances only exist in
// validated form, with the inverse array computed during validation.
class FiniteQuasigroup {
 public:
  // Validates and builds; throws Error(InvalidStructure) carrying the report.
  static FiniteQuasigroup create(std::uint32_t order, std::vector<Element> table, Element identity,
                                 std::vector<std::string> names = {});

  std::uint32_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element u, Element v) const { return table_[u * order_ + v]; }
  Element inverse(Element u) const { return inverse_[u]; }

  std::span<const Element> table() const { return table_; }
  std::span<const Element> inverses() const { return inverse_; }
  const std::vector<std::string>& names() const { return names_; }

  bool operator==(const FiniteQuasigroup& other) const {
    return order_ == other.order_ && identity_ == other.identity_ && table_ == other.table_;
  }

 private:
  FiniteQuasigroup() = default;

  std::uint32_t order_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> names_;
};

struct QuasigroupCheck {
  StructureReport report;
  // Present iff the report passed.
  std::optional<std::vector<Element>> inverse;
};

// Checks the identity law and the inverse property. Throws
// Error(IndexOutOfRange) when the table is malformed.
QuasigroupCheck check_quasigroup(std::uint32_t order, std::span<const Element> table, Element identity,
                                 kernels::Isa isa = kernels::detected_isa());

// Lexicographically smallest failing triple, or nullopt when associative.
std::optional<kernels::Triple> associativity_witness(const FiniteQuasigroup& q,
                                                     kernels::Isa isa = kernels::detected_isa());
inline bool is_associative(const FiniteQuasigroup& q) { return !associativity_witness(q); }
bool is_commutative(const FiniteQuasigroup& q);

// Derived identities (u⁻¹)⁻¹ = u and (uv)⁻¹ = v⁻¹u⁻¹, plus uniqueness of
// the inverse-property inverse, checked exhaustively.
StructureReport derived_inverse_identities(const FiniteQuasigroup& q);

// Test stock.
FiniteQuasigroup cyclic_group(std::uint32_t n);
FiniteQuasigroup symmetric_group(std::uint32_t k);
FiniteQuasigroup dihedral_group(std::uint32_t n);  // order 2n
FiniteQuasigroup quaternion_group();
FiniteQuasigroup direct_product(const FiniteQuasigroup& a, const FiniteQuasigroup& b);

// Chein's doubling M(G, 2) on G ∪ Gu with
//   g·h = gh, g·(hu) = (hg)u, (gu)·h = (gh⁻¹)u, (gu)·(hu) = h⁻¹g.
// Element g keeps index g and gu gets index |G| + g. Throws Error(NotAGroup)
// unless g is associative.
FiniteQuasigroup chein_double(const FiniteQuasigroup& g);

// Every group of order at most 8, one per isomorphism class.
std::vector<FiniteQuasigroup> small_groups();

}  // namespace qgkit
