#include <doctest.h>

#include <algorithm>
#include <set>

#include "qgkit/error.hpp"
#include "qgkit/exact_factorization.hpp"
#include "qgkit/matched_pair.hpp"
#include "qgkit/stock.hpp"

using namespace qgkit;

namespace {

bool has_tag_witness(const StructureReport& r, const std::string& tag, const std::vector<std::uint64_t>& w) {
  const auto* c = r.find(tag);
  if (!c) return false;
  for (const auto& v : c->violations) {
    if (v.witness == w) return true;
  }
  return false;
}

std::vector<Arrow> sorted(std::vector<Arrow> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("matched-pair") {
  TEST_CASE("acceptance pairs pass every suite") {
    for (const auto& [name, mp] : stock::acceptance_matched_pairs()) {
      CAPTURE(name);
      CHECK(check_matched_pair(mp.data()).passed());
      CHECK(matched_pair_identity_suite(mp).passed());
      CHECK(mixed_associativity_suite(mp).report.passed());
      CHECK(theta_suite(mp).passed());
      const auto d = double_cross_product(mp);
      CHECK(d.quasigroupoid.arrows() == d.pairs.size());
      CHECK(check_quasigroupoid(d.quasigroupoid.data()).passed());
      CHECK(derived_identity_suite(d.quasigroupoid).passed());
      for (Arrow i = 0; i < d.pairs.size(); ++i) {
        const auto [a, h] = d.pairs[i];
        CHECK(mp.a().source(a) == mp.h().target(h));
        CHECK(d.arrow(a, h) == i);
      }
    }
  }

  TEST_CASE("printed sixth law is order sensitive") {
    // Holds when H is discrete and fails once H carries nontrivial arrows.
    const auto right = mp_discrete_right(coarse_groupoid(2));
    CHECK(mixed_associativity_suite(right).printed.passed());
    const auto q = stock::quasigroup_case_pair();
    CHECK_FALSE(mixed_associativity_suite(q.mp).printed.passed());
  }

  TEST_CASE("double cross product of a discrete right pair is the input") {
    const auto a = coarse_groupoid(3);
    const auto d = double_cross_product(mp_discrete_right(a));
    CHECK(d.quasigroupoid.arrows() == a.arrows());
    CHECK(is_associative(d.quasigroupoid));
  }

  TEST_CASE("action mutants surface through ActionInvalid") {
    std::set<std::string> tags;
    for (const auto& m : stock::matched_pair_mutants()) {
      CAPTURE(m.name);
      CAPTURE(m.tag);
      StructureReport r;
      if (m.tag[0] == 'e') {
        r = check_matched_pair(m.data);
      } else {
        try {
          check_matched_pair(m.data);
          FAIL("action mutant accepted");
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::ActionInvalid);
          REQUIRE(e.report().has_value());
          r = *e.report();
        }
      }
      CHECK(r.failed(m.tag));
      CHECK(has_tag_witness(r, m.tag, m.witness));
      CHECK_THROWS_AS(MatchedPair::create(m.data), Error);
      tags.insert(m.tag);
    }
    CHECK(tags.size() == 9);
  }

  TEST_CASE("domain and base mismatches raise") {
    const auto mp = mp_discrete_right(coarse_groupoid(2));
    auto d = mp.data();
    d.left.values[0] = kUndefined;
    CHECK_THROWS_AS(check_matched_pair(d), Error);
    auto base = mp.data();
    base.h = discrete_groupoid(3);
    CHECK_THROWS_AS(check_matched_pair(base), Error);
  }

  TEST_CASE("matched pair morphisms") {
    const auto mp = mp_discrete_right(coarse_groupoid(2));
    const auto id = identity_mp_morphism(mp);
    CHECK(check_mp_morphism(id).passed());
    CHECK(check_mp_morphism(compose(id, id)).passed());
    // Swapping both points is an automorphism of the whole pair.
    MpMorphism swap{mp, mp, {mp.a(), mp.a(), {1, 0}, {3, 2, 1, 0}}, {mp.h(), mp.h(), {1, 0}, {1, 0}}};
    CHECK(check_morphism(swap.gamma).passed());
    CHECK(check_mp_morphism(swap).passed());
    const auto twice = compose(swap, swap);
    CHECK(twice.gamma.arrow_map == id.gamma.arrow_map);
    CHECK(twice.omega.arrow_map == id.omega.arrow_map);
  }
}

TEST_SUITE("exact-factorization") {
  TEST_CASE("canonical factorizations round trip") {
    for (const auto& [name, mp] : stock::acceptance_matched_pairs()) {
      CAPTURE(name);
      const auto c = canonical_factorization(mp);
      CHECK(check_exact_factorization(c).report.passed());
      const auto rec = reconstruct_matched_pair(c);
      CHECK(rec.mp.data().left == mp.data().left);
      CHECK(rec.mp.data().right == mp.data().right);
      CHECK(check_morphism(rec.gamma).passed());
      CHECK(is_isomorphism(rec.gamma));
    }
  }

  TEST_CASE("enumeration on two-point groupoids") {
    const auto d = enumerate_factorizations(discrete_groupoid(2), 16);
    REQUIRE(d.size() == 1);
    CHECK(sorted(d[0].ia.arrow_map) == std::vector<Arrow>{0, 1});
    CHECK(sorted(d[0].ih.arrow_map) == std::vector<Arrow>{0, 1});

    const auto c = enumerate_factorizations(coarse_groupoid(2), 16);
    REQUIRE(c.size() == 2);
    std::set<std::pair<std::vector<Arrow>, std::vector<Arrow>>> got;
    for (const auto& f : c) got.insert({sorted(f.ia.arrow_map), sorted(f.ih.arrow_map)});
    const std::set<std::pair<std::vector<Arrow>, std::vector<Arrow>>> want{{{0, 3}, {0, 1, 2, 3}},
                                                                           {{0, 1, 2, 3}, {0, 3}}};
    CHECK(got == want);
    for (const auto& f : c) CHECK(check_exact_factorization(f).report.passed());
  }

  TEST_CASE("closed subsets and bounds") {
    const auto subsets = closed_subsets(coarse_groupoid(2), 16);
    CHECK(std::find(subsets.begin(), subsets.end(), std::vector<Arrow>{0, 3}) != subsets.end());
    CHECK(std::find(subsets.begin(), subsets.end(), std::vector<Arrow>{0, 1, 3}) == subsets.end());
    CHECK_THROWS_AS(enumerate_factorizations(coarse_groupoid(5), 16), Error);
    const auto sub = sub_quasigroupoid(coarse_groupoid(2), {0, 3});
    CHECK(sub.source.arrows() == 2);
    CHECK(check_morphism(sub).passed());
  }

  TEST_CASE("non-exact candidates are rejected") {
    // [D, D] inside coarse{0,1} misses the off-diagonal arrows.
    const auto b = coarse_groupoid(2);
    const auto dd = sub_quasigroupoid(b, {0, 3});
    const FactorizationCandidate c{b, dd, dd};
    CHECK(check_exact_factorization(c).report.failed("vii"));
    CHECK_THROWS_AS(reconstruct_matched_pair(c), Error);
    const FactorizationCandidate bb{b, identity_morphism(b), identity_morphism(b)};
    CHECK_FALSE(check_exact_factorization(bb).report.passed());
  }
}
