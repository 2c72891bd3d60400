#include "qgkit/stock.hpp"

#include <array>

namespace qgkit::stock {

namespace {

using linalg::RationalField;

const std::array<const char*, 14> kSmallGroupNames{"Z1", "Z2", "Z3", "Z4",    "Z2xZ2",    "Z5", "Z6",
                                                   "S3", "Z7", "Z8", "Z2xZ4", "Z2xZ2xZ2", "D4", "Q8"};

// Sign of the permutations of {0,1,2} in lexicographic order.
constexpr std::array<std::uint32_t, 6> kS3Sign{0, 1, 1, 0, 0, 1};

MatchedPairData raw_pair(const Quasigroupoid& a, const Quasigroupoid& h,
                         const std::function<Arrow(Arrow, Arrow)>& left,
                         const std::function<Arrow(Arrow, Arrow)>& right) {
  return {a, h, tabulate_action(h, a, left), tabulate_action(h, a, right)};
}

// A = H = coarse({0,1}), both actions by the groupoid product.
MatchedPairData coarse_translation() {
  const Quasigroupoid c = coarse_groupoid(2);
  auto prod = [c](Arrow h, Arrow a) { return c.mul(h, a); };
  return raw_pair(c, c, prod, prod);
}

Quasigroupoid zn(std::uint32_t n) { return quasigroup_as_quasigroupoid(cyclic_group(n)); }

QuasigroupoidData& set_product(QuasigroupoidData& d, Arrow a, Arrow b, Arrow v) {
  for (auto& e : d.product) {
    if (e.left == a && e.right == b) e.value = v;
  }
  return d;
}

RationalMagma k_of(const Quasigroupoid& b) { return magma_of_quasigroupoid(b, RationalField{}); }

}  // namespace

FiniteQuasigroup ms3() { return chein_double(symmetric_group(3)); }

std::vector<std::uint32_t> ms3_parity_action() {
  std::vector<std::uint32_t> hom(12);
  for (std::uint32_t g = 0; g < 12; ++g) hom[g] = g < 6 ? 0 : 1;
  return cyclic_shift_action(ms3(), 2, hom);
}

std::vector<std::uint32_t> ms3_sign_parity_action() {
  std::vector<std::uint32_t> psi(12 * 4);
  for (std::uint32_t g = 0; g < 12; ++g) {
    const std::uint32_t shift = 2 * kS3Sign[g % 6] + (g < 6 ? 0 : 1);
    for (std::uint32_t x = 0; x < 4; ++x) psi[g * 4 + x] = x ^ shift;
  }
  return psi;
}

std::vector<NamedQuasigroupoid> builder_instances() {
  std::vector<NamedQuasigroupoid> out;
  const auto groups = small_groups();
  for (std::size_t i = 0; i < groups.size(); ++i) {
    out.push_back({std::string("one-object/") + kSmallGroupNames[i], quasigroup_as_quasigroupoid(groups[i])});
  }
  const auto m = ms3();
  out.push_back({"one-object/M(S3,2)", quasigroup_as_quasigroupoid(m)});
  out.push_back({"one-object/M(Z3,2)", quasigroup_as_quasigroupoid(chein_double(cyclic_group(3)))});

  const auto z2 = cyclic_group(2), z3 = cyclic_group(3), z4 = cyclic_group(4), s3 = symmetric_group(3);
  const auto klein = direct_product(z2, z2);
  out.push_back({"action/Z2-flip-2", from_quasigroup_action(z2, 2, left_translation(z2))});
  out.push_back({"action/Z3-translation-3", from_quasigroup_action(z3, 3, left_translation(z3))});
  out.push_back({"action/Z4-translation-4", from_quasigroup_action(z4, 4, left_translation(z4))});
  out.push_back({"action/Z2xZ2-translation-4", from_quasigroup_action(klein, 4, left_translation(klein))});
  out.push_back({"action/S3-trivial-3", from_quasigroup_action(s3, 3, trivial_action(s3, 3))});
  out.push_back({"action/M(S3,2)-parity-2", from_quasigroup_action(m, 2, ms3_parity_action())});
  out.push_back({"action/M(S3,2)-sign-parity-4", from_quasigroup_action(m, 4, ms3_sign_parity_action())});

  for (std::uint32_t p = 1; p <= 4; ++p) {
    out.push_back({"pair/Z2-" + std::to_string(p), pair_quasigroupoid(z2, p)});
  }
  out.push_back({"pair/Z3-3", pair_quasigroupoid(z3, 3)});
  out.push_back({"pair/M(S3,2)-2", pair_quasigroupoid(m, 2)});
  out.push_back({"pair/M(S3,2)-4", pair_quasigroupoid(m, 4)});

  out.push_back({"pullback/coarse2-011", pullback_quasigroupoid(coarse_groupoid(2), {0, 1, 1})});
  out.push_back({"pullback/Z3-000", pullback_quasigroupoid(zn(3), {0, 0, 0})});
  out.push_back({"pullback/M(S3,2)-00", pullback_quasigroupoid(quasigroup_as_quasigroupoid(m), {0, 0})});
  out.push_back({"pullback/Z2-flip-0101",
                 pullback_quasigroupoid(from_quasigroup_action(z2, 2, left_translation(z2)), {0, 1, 0, 1})});

  for (std::uint32_t p = 1; p <= 4; ++p) {
    out.push_back({"coarse/" + std::to_string(p), coarse_groupoid(p)});
    out.push_back({"discrete/" + std::to_string(p), discrete_groupoid(p)});
  }
  return out;
}

std::vector<NamedMatchedPair> acceptance_matched_pairs() {
  const auto m = ms3();
  const auto z2 = cyclic_group(2), z3 = cyclic_group(3);
  return {
      {"discrete-right/coarse2", mp_discrete_right(coarse_groupoid(2))},
      {"discrete-right/pair-Z2-2", mp_discrete_right(pair_quasigroupoid(z2, 2))},
      {"discrete-right/pair-M(S3,2)-2", mp_discrete_right(pair_quasigroupoid(m, 2))},
      {"action-left/Z2-flip-2", mp_action_left(z2, 2, left_translation(z2))},
      {"action-left/Z3-translation-3", mp_action_left(z3, 3, left_translation(z3))},
      {"action-left/M(S3,2)-parity-2", mp_action_left(m, 2, ms3_parity_action())},
      {"action-left/M(S3,2)-sign-parity-4", mp_action_left(m, 4, ms3_sign_parity_action())},
      quasigroup_case_pair(),
  };
}

NamedMatchedPair quasigroup_case_pair() {
  return {"trivial/Z2-M(S3,2)", mp_trivial(zn(2), quasigroup_as_quasigroupoid(ms3()))};
}

std::vector<Mutant<QuasigroupoidData>> quasigroupoid_mutants() {
  std::vector<Mutant<QuasigroupoidData>> out;
  // coarse({0,1}): 0 = id0, 1 = (0,1), 2 = (1,0), 3 = id1.
  {
    auto d = coarse_groupoid(2).data();
    d.identity[0] = 1;
    out.push_back({"coarse2-identity-not-loop", "a1", {0}, d});
  }
  {
    auto d = zn(3).data();
    out.push_back({"Z3-identity-row-broken", "a2-1", {1}, set_product(d, 0, 1, 2)});
  }
  {
    auto d = coarse_groupoid(2).data();
    out.push_back({"coarse2-product-wrong-object", "a2-2", {1, 2}, set_product(d, 1, 2, 3)});
  }
  {
    auto d = coarse_groupoid(2).data();
    d.inverse[1] = 1;
    out.push_back({"coarse2-inverse-redefined", "a2-3", {1, 3}, d});
  }
  return out;
}

std::vector<Mutant<MatchedPairData>> matched_pair_mutants() {
  std::vector<Mutant<MatchedPairData>> out;
  const Quasigroupoid z2 = zn(2), z3 = zn(3);
  auto first = [](Arrow, Arrow a) { return a; };
  auto second = [](Arrow h, Arrow) { return h; };
  auto swap01 = [](Arrow x) -> Arrow { return x < 2 ? 1 - x : x; };

  {
    auto d = coarse_translation();
    d.left.values[0 * 4 + 1] = 3;
    out.push_back({"coarse-translation-left-target", "c1", {0, 1}, d});
  }
  out.push_back({"Z2-on-Z3-not-an-action", "c2", {1, 1, 0},
                 raw_pair(z3, z2, [](Arrow h, Arrow a) { return h == 1 ? (a + 1) % 3 : a; }, second)});
  out.push_back({"Z2-on-Z3-identity-moves", "c3", {0},
                 raw_pair(z3, z2, [](Arrow h, Arrow a) { return h == 0 ? (a + 1) % 3 : a; }, second)});
  {
    auto d = coarse_translation();
    d.right.values[0 * 4 + 1] = 0;
    out.push_back({"coarse-translation-right-source", "d1", {0, 1}, d});
  }
  out.push_back({"Z3-on-Z2-not-an-action", "d2", {0, 1, 2},
                 raw_pair(z3, z2, first, [](Arrow h, Arrow a) { return a == 1 ? 1 - h : h; })});
  out.push_back({"Z3-on-Z2-identity-moves", "d3", {0},
                 raw_pair(z3, z2, first, [](Arrow h, Arrow a) { return a == 0 ? 1 - h : h; })});
  out.push_back({"coarse-translation", "e1", {0, 1}, coarse_translation()});
  out.push_back({"Z2-permutes-Z3-non-automorphically", "e2", {1, 0, 2},
                 raw_pair(z3, z2, [&](Arrow h, Arrow a) { return h == 1 ? swap01(a) : a; }, second)});
  out.push_back({"Z2-permutes-Z3-on-the-right", "e3", {0, 0, 1},
                 raw_pair(z2, z3, first, [&](Arrow h, Arrow a) { return a == 1 ? swap01(h) : h; })});
  return out;
}

std::vector<Mutant<RationalMagma>> whq_mutants() {
  std::vector<Mutant<RationalMagma>> out;
  const Quasigroupoid c2 = coarse_groupoid(2);
  {
    auto d = k_of(c2);
    d.product.cols[1 * 4 + 2] = linalg::basis_vector<mpq_class>(0, 2);
    out.push_back({"coarse2-product-doubled", "d1", {1, 2}, d});
  }
  {
    auto d = k_of(c2);
    d.product.cols[1 * 4 + 2] = {};
    out.push_back({"coarse2-product-dropped", "d2", {1, 2, 1}, d});
  }
  {
    // g0, g1 group-like, 1 = g0 + g1, g0g0 = 0, g0g1 = g1g0 = g0,
    // g1g1 = g1 - g0, λ = id.
    RationalMagma d{RationalField{}, 2, linalg::make_vector<mpq_class>({{0, 1}, {1, 1}}),
                    linalg::zero_map<mpq_class>(4, 2), {}, {}, linalg::identity_map<mpq_class>(2, 1)};
    d.product.cols[1] = linalg::basis_vector<mpq_class>(0, 1);
    d.product.cols[2] = linalg::basis_vector<mpq_class>(0, 1);
    d.product.cols[3] = linalg::make_vector<mpq_class>({{1, 1}, {0, -1}});
    auto co = linalg::free_coalgebra<mpq_class>(2, 1);
    d.coproduct = co.coproduct;
    d.counit = co.counit;
    out.push_back({"two-dim-unit-coproduct", "d3", {0, 0, 0}, d});
  }
  {
    auto d = k_of(quasigroup_as_quasigroupoid(ms3()));
    d.antipode.cols[1] = linalg::basis_vector<mpq_class>(2, 1);
    for (const char* tag : {"d4-1", "d4-2", "d4-3", "d4-4", "d4-5", "d4-6", "d4-7"}) {
      out.push_back({"M(S3,2)-antipode-moved", tag, {}, d});
    }
  }
  return out;
}

std::vector<Mutant<MorphismFixture>> whq_morphism_mutants() {
  std::vector<Mutant<MorphismFixture>> out;
  const auto d = k_of(coarse_groupoid(2));
  const auto doubled = linalg::scale(mpq_class(2), linalg::identity_map<mpq_class>(4, 1));
  out.push_back({"coarse2-doubled", "counit", {0}, {doubled, d, d}});
  out.push_back({"coarse2-doubled", "coproduct", {0}, {doubled, d, d}});
  const auto swap = linalg::basis_map<mpq_class>(4, {0, 2, 1, 3}, 1);
  out.push_back({"coarse2-swap-directions", "mkl1", {1}, {swap, d, d}});
  out.push_back({"coarse2-swap-directions", "mkl2", {1}, {swap, d, d}});
  out.push_back({"coarse2-swap-directions", "mkl3", {1}, {swap, d, d}});
  out.push_back({"coarse2-swap-directions", "mkl4", {1, 2}, {swap, d, d}});
  return out;
}

}  // namespace qgkit::stock
