#pragma once
// Structure documents: JSON with sorted keys and a fixed line layout, so
// that emitting a parsed canonical document reproduces it byte for byte.
// The schema lives in docs/document-schema.json.

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qgkit/exact_factorization.hpp"
#include "qgkit/matched_pair.hpp"
#include "qgkit/quasigroup.hpp"
#include "qgkit/quasigroupoid.hpp"
#include "qgkit/whq.hpp"

namespace qgkit::io {

inline constexpr int kVersion = 1;

struct QuasigroupDoc {
  std::uint32_t order = 0;
  Element identity = 0;
  std::vector<Element> table;  // row-major
  std::vector<std::string> names;
  bool operator==(const QuasigroupDoc&) const = default;
};

struct ActionDoc {
  QuasigroupDoc quasigroup;
  std::uint32_t points = 0;
  std::vector<std::uint32_t> psi;  // psi[a * points + x]
  bool operator==(const ActionDoc&) const = default;
};

using Triple = std::array<std::uint32_t, 3>;

struct MatchedPairDoc {
  QuasigroupoidData a;
  QuasigroupoidData h;
  std::vector<Triple> left;   // (h, a, φ_A(h, a))
  std::vector<Triple> right;  // (h, a, φ_H(h, a))
  bool operator==(const MatchedPairDoc&) const = default;
};

struct FactorizationDoc {
  QuasigroupoidData b;
  QuasigroupoidData a;
  QuasigroupoidData h;
  std::vector<Arrow> ia;
  std::vector<Arrow> ih;
  bool operator==(const FactorizationDoc&) const = default;
};

// Coefficients are kept as text and read into a field on demand.
struct WhqDoc {
  struct Coef {
    std::vector<std::uint64_t> index;
    std::string value;
    bool operator==(const Coef&) const = default;
  };
  std::uint64_t dimension = 0;
  std::vector<Coef> unit;       // (i, c)
  std::vector<Coef> product;    // (i, j, k, c): e_i e_j has c at e_k
  std::vector<Coef> counit;     // (i, c)
  std::vector<Coef> coproduct;  // (i, j, k, c): δ(e_i) has c at e_j⊗e_k
  std::vector<Coef> antipode;   // (i, j, c): λ(e_i) has c at e_j
  bool operator==(const WhqDoc&) const = default;
};

using Document = std::variant<QuasigroupDoc, QuasigroupoidData, ActionDoc, MatchedPairDoc, FactorizationDoc, WhqDoc>;

std::string kind_name(const Document& d);

// Throws Error(SchemaError) naming the line or field, and Error(RangeError)
// for indices out of range or a product entry on a non-composable pair.
Document parse(const std::string& text);
Document read_file(const std::string& path);
std::string emit(const Document& d);

// ---- conversions ----------------------------------------------------------

QuasigroupDoc to_doc(const FiniteQuasigroup& q);
// Throws Error(InvalidStructure) with the report.
FiniteQuasigroup to_quasigroup(const QuasigroupDoc& d);

QuasigroupoidData to_doc(const Quasigroupoid& q);

ActionDoc to_doc(const FiniteQuasigroup& q, std::uint32_t points, const std::vector<std::uint32_t>& psi);

MatchedPairDoc to_doc(const MatchedPairData& mp);
// Validates both quasigroupoids (Error(InvalidStructure)) and tabulates the
// actions; Error(DomainMismatch) if an entry lies off the composable domain
// or one is missing.
MatchedPairData to_matched_pair_data(const MatchedPairDoc& d);

FactorizationDoc to_doc(const FactorizationCandidate& c);
FactorizationCandidate to_candidate(const FactorizationDoc& d);

template <class F>
WhqDoc to_doc(const MagmaCoalgebra<F>& d);
// Throws Error(RangeError) for indices outside the dimension.
template <class F>
MagmaCoalgebra<F> to_magma(const WhqDoc& d, const F& field);

}  // namespace qgkit::io
