#pragma once

#include <cstdint>
#include <vector>

#include "qgkit/matched_pair.hpp"
#include "qgkit/morphism.hpp"

namespace qgkit {

struct FactorizationCandidate {
  Quasigroupoid b;
  QgpdMorphism ia;  // A -> B
  QgpdMorphism ih;  // H -> B
};

struct FactorizationCheck {
  // Tags i..vii, plus "intersection" (A1 ∩ H1 is the identities of B), which
  // is implied by vii and kept as a derived check.
  StructureReport report;
  // The sixth law with g and h swapped on the right.
  StructureReport printed;
};

// Throws Error(ObjectMapNotIdentity) if either object map is not the
// identity and Error(InvalidMorphism) if either inclusion fails b1..b4 or is
// not injective on arrows.
FactorizationCheck check_exact_factorization(const FactorizationCandidate& c);

// [A, H] inside A⋈H with the canonical inclusions.
FactorizationCandidate canonical_factorization(const MatchedPair& mp);

struct Reconstruction {
  MatchedPair mp;
  QgpdMorphism gamma;  // A⋈H -> B, arrows mapped by θ_B
  DoubleCrossProduct dcp;
};

// Throws Error(NotExact) if the candidate fails the check and
// Error(InternalInconsistency) if a θ_B fiber is not a singleton.
Reconstruction reconstruct_matched_pair(const FactorizationCandidate& c);

// Arrow subset containing every identity, closed under λ and under products
// of composable members, turned into a quasigroupoid with its inclusion.
// Members are relabelled in increasing order.
QgpdMorphism sub_quasigroupoid(const Quasigroupoid& b, const std::vector<Arrow>& arrows);

// Every exact factorization by pairs of such subsets, ordered by the subset
// bitmasks of A then H. Throws Error(BoundExceeded) when |B1| > max_arrows.
std::vector<FactorizationCandidate> enumerate_factorizations(const Quasigroupoid& b, std::uint32_t max_arrows);

// Arrow subsets of B that are closed in the above sense, as sorted lists.
std::vector<std::vector<Arrow>> closed_subsets(const Quasigroupoid& b, std::uint32_t max_arrows);

}  // namespace qgkit
