#pragma once
// Named instances and corrupted fixtures used by the test suites, the
// acceptance runner and the fixture generator.

#include <string>
#include <vector>

#include "qgkit/linalg.hpp"
#include "qgkit/matched_pair.hpp"
#include "qgkit/quasigroup.hpp"
#include "qgkit/quasigroupoid.hpp"
#include "qgkit/whq.hpp"

namespace qgkit::stock {

using RationalMagma = MagmaCoalgebra<linalg::RationalField>;
using RationalMap = linalg::LinearMap<mpq_class>;

// M(S3, 2), the smallest nonassociative Moufang loop.
FiniteQuasigroup ms3();
// g -> 0, gu -> 1 as a shift of two points.
std::vector<std::uint32_t> ms3_parity_action();
// (sign, parity) into Z2×Z2, acting on four points by xor.
std::vector<std::uint32_t> ms3_sign_parity_action();

struct NamedQuasigroupoid {
  std::string name;
  Quasigroupoid q;
};
// Every builder over small quasigroups and bases of at most four points.
std::vector<NamedQuasigroupoid> builder_instances();

struct NamedMatchedPair {
  std::string name;
  MatchedPair mp;
};
std::vector<NamedMatchedPair> acceptance_matched_pairs();
// Z2 and M(S3, 2) with trivial actions.
NamedMatchedPair quasigroup_case_pair();

// A fixture that the named checker must reject under `tag`, with
// `witness` among the reported violations when it is non-empty.
template <class Data>
struct Mutant {
  std::string name;
  std::string tag;
  std::vector<std::uint64_t> witness;
  Data data;
};

std::vector<Mutant<QuasigroupoidData>> quasigroupoid_mutants();
// c*, d* and e* tags. Action failures surface through the report carried by
// Error(ActionInvalid).
std::vector<Mutant<MatchedPairData>> matched_pair_mutants();

std::vector<Mutant<RationalMagma>> whq_mutants();

struct MorphismFixture {
  RationalMap f;
  RationalMagma source;
  RationalMagma target;
};
std::vector<Mutant<MorphismFixture>> whq_morphism_mutants();

}  // namespace qgkit::stock
