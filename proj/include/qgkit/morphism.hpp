#pragma once

#include <vector>

#include "qgkit/quasigroupoid.hpp"
#include "qgkit/report.hpp"

namespace qgkit {

struct QgpdMorphism {
  Quasigroupoid source;
  Quasigroupoid target;
  std::vector<Object> object_map;
  std::vector<Arrow> arrow_map;
};

QgpdMorphism identity_morphism(const Quasigroupoid& q);

// Axioms b1..b4. Throws Error(IndexOutOfRange) on malformed maps.
StructureReport check_morphism(const QgpdMorphism& f);

// g after f. Throws Error(CompositionMismatch) unless f.target == g.source.
QgpdMorphism compose(const QgpdMorphism& g, const QgpdMorphism& f);

bool is_injective(const QgpdMorphism& f);
bool is_surjective(const QgpdMorphism& f);
// Both maps bijective.
bool is_isomorphism(const QgpdMorphism& f);

}  // namespace qgkit
