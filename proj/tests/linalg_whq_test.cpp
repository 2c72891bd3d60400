#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "qgkit/bowtie.hpp"
#include "qgkit/error.hpp"
#include "qgkit/linalg.hpp"
#include "qgkit/stock.hpp"
#include "qgkit/whq.hpp"

using namespace qgkit;
using namespace qgkit::linalg;

namespace {

const RationalField kQ;
using Map = LinearMap<mpq_class>;
using Vec = SparseVector<mpq_class>;

Vec e(std::uint64_t i) { return basis_vector<mpq_class>(i, 1); }

std::size_t composable_pairs(const Quasigroupoid& b) {
  std::size_t n = 0;
  for (Arrow x = 0; x < b.arrows(); ++x)
    for (Arrow y = 0; y < b.arrows(); ++y) n += b.composable(x, y);
  return n;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("fraction text") {
    CHECK(kQ.parse("3/6") == mpq_class(1, 2));
    CHECK(kQ.parse("-4") == -4);
    CHECK(RationalField::format(kQ.parse("-2/4")) == "-1/2");
    CHECK_THROWS_AS(kQ.parse("1/0"), Error);
    CHECK_THROWS_AS(kQ.parse("x"), Error);
    const PrimeField f7{7};
    CHECK(f7.parse("1/2").v == 4);
    CHECK(f7.parse("-1").v == 6);
    CHECK_THROWS_AS(f7.parse("1/7"), Error);
    for (std::uint32_t x = 1; x < 7; ++x) CHECK((f7.inverse(f7.from_int(x)) * f7.from_int(x)).v == 1);
    CHECK(is_prime(2147483647u));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
  }

  TEST_CASE("vectors normalize") {
    const auto v = make_vector<mpq_class>({{3, 1}, {1, 2}, {3, -1}, {0, 0}});
    REQUIRE(v.entries.size() == 1);
    CHECK(v.entries[0].first == 1);
    CHECK(add(v, scale<mpq_class>(-1, v)).empty());
    CHECK(tensor(e(1), e(2), 3) == e(5));
    CHECK(tensor_index(1, 2, 3) == 5);
    const std::array<std::uint64_t, 3> dims{2, 3, 4};
    CHECK(decode_index(1 * 12 + 2 * 4 + 3, dims) == std::vector<std::uint64_t>{1, 2, 3});
  }

  TEST_CASE("twist is an involution swapping factors") {
    for (std::uint64_t m : {1u, 2u, 3u, 5u}) {
      for (std::uint64_t n : {1u, 2u, 4u}) {
        const auto t = twist<mpq_class>(m, n, 1);
        const auto back = twist<mpq_class>(n, m, 1);
        CHECK(map_equal(compose(back, t), identity_map<mpq_class>(m * n, 1)));
        for (std::uint64_t i = 0; i < m; ++i)
          for (std::uint64_t j = 0; j < n; ++j) CHECK(apply(t, e(i * n + j)) == e(j * m + i));
      }
    }
    CHECK_THROWS_AS(twist<mpq_class>(0, 3, 1), Error);
  }

  TEST_CASE("free coalgebra laws") {
    for (std::uint64_t n = 1; n <= 64; n = n < 8 ? n + 1 : n * 2) {
      CAPTURE(n);
      const auto c = free_coalgebra<mpq_class>(n, 1);
      for (std::uint64_t s = 0; s < n; ++s) {
        const auto d = c.coproduct.cols[s];
        const auto left = apply_tensor<mpq_class>({map_factor(c.coproduct), id_factor<mpq_class>(n)}, d);
        const auto right = apply_tensor<mpq_class>({id_factor<mpq_class>(n), map_factor(c.coproduct)}, d);
        CHECK(left == right);
        CHECK(apply_tensor<mpq_class>({map_factor(c.counit), id_factor<mpq_class>(n)}, d) == e(s));
        CHECK(apply_tensor<mpq_class>({id_factor<mpq_class>(n), map_factor(c.counit)}, d) == e(s));
      }
    }
  }

  TEST_CASE("map algebra identities") {
    Map f{3, 2, {make_vector<mpq_class>({{0, 1}, {1, 2}}), e(1), {}}};
    Map g{2, 2, {e(1), make_vector<mpq_class>({{0, mpq_class(1, 3)}})}};
    const auto id2 = identity_map<mpq_class>(2, 1);
    const auto id3 = identity_map<mpq_class>(3, 1);
    CHECK(map_equal(compose(id2, f), f));
    CHECK(map_equal(compose(f, id3), f));
    CHECK(map_equal(add(f, zero_map<mpq_class>(3, 2)), f));
    CHECK(map_equal(add(f, scale<mpq_class>(-1, f)), zero_map<mpq_class>(3, 2)));
    CHECK(map_equal(compose(g, add(f, f)), scale<mpq_class>(2, compose(g, f))));
    const auto ff = tensor_of_maps(f, g);
    for (std::uint64_t i = 0; i < 3; ++i)
      for (std::uint64_t j = 0; j < 2; ++j)
        CHECK(apply(ff, e(i * 2 + j)) == apply_tensor<mpq_class>({map_factor(f), map_factor(g)}, e(i * 2 + j)));
    CHECK_THROWS_AS(compose(f, g), Error);
    CHECK_THROWS_AS(add(f, g), Error);
  }

  TEST_CASE("rank over both fields") {
    std::vector<Vec> cols{make_vector<mpq_class>({{0, 1}, {1, 1}}), make_vector<mpq_class>({{0, 2}, {1, 2}}), e(2)};
    CHECK(rank(kQ, cols, 3) == 2);
    CHECK(rank(kQ, identity_map<mpq_class>(5, 1).cols, 5) == 5);
    const PrimeField f3{3};
    std::vector<SparseVector<ModP>> m{make_vector<ModP>({{0, f3.one()}, {1, f3.from_int(2)}}),
                                      make_vector<ModP>({{0, f3.from_int(2)}, {1, f3.one()}})};
    CHECK(rank(f3, m, 2) == 1);  // second column is twice the first mod 3
    const PrimeField f5{5};
    std::vector<SparseVector<ModP>> m5{make_vector<ModP>({{0, f5.one()}, {1, f5.from_int(2)}}),
                                       make_vector<ModP>({{0, f5.from_int(2)}, {1, f5.one()}})};
    CHECK(rank(f5, m5, 2) == 2);
    const Map a{2, 3, cols};
    const Map b{1, 3, {make_vector<mpq_class>({{0, 1}, {1, 1}})}};
    CHECK_FALSE(same_column_space(kQ, Map{3, 3, cols}, b));
    CHECK(same_column_space(kQ, Map{1, 3, {cols[0]}}, b));
    (void)a;
  }

  TEST_CASE("nabla of a quasigroupoid magma projects onto composable pairs") {
    for (const auto& [name, b] : stock::builder_instances()) {
      if (b.arrows() > 12) continue;
      CAPTURE(name);
      const auto d = magma_of_quasigroupoid(b, kQ);
      const auto n = nabla(d);
      CHECK(map_equal(compose(n, n), n));
      CHECK(rank(kQ, n.cols, n.cod) == composable_pairs(b));
    }
  }
}

TEST_SUITE("whq") {
  TEST_CASE("small magmas") {
    const auto d2 = magma_of_quasigroupoid(discrete_groupoid(2), kQ);
    CHECK(d2.unit == make_vector<mpq_class>({{0, 1}, {1, 1}}));
    CHECK(check_whq(d2).report.passed());
    CHECK_FALSE(is_hopf_quasigroup(d2));

    const auto z2 = magma_of_quasigroupoid(quasigroup_as_quasigroupoid(cyclic_group(2)), kQ);
    CHECK(is_hopf_quasigroup(z2));
    CHECK(is_commutative(z2));

    const auto m = magma_of_quasigroupoid(quasigroup_as_quasigroupoid(stock::ms3()), kQ);
    CHECK(check_whq(m).report.passed());
    CHECK(derived_property_suite(m).passed());
    CHECK(is_hopf_quasigroup(m));
    CHECK_FALSE(is_commutative(m));
    CHECK(is_cocommutative(m));

    const auto c = magma_of_quasigroupoid(coarse_groupoid(2), kQ);
    CHECK_FALSE(is_hopf_quasigroup(c));
    CHECK(hopf_report(c).failed("coproduct-unit"));
    CHECK(format_vector(kQ, c.unit) == "{0:1,3:1}");
  }

  TEST_CASE("projections are target and source identities") {
    const auto b = pair_quasigroupoid(cyclic_group(3), 2);
    const auto p = projections(magma_of_quasigroupoid(b, kQ));
    for (Arrow a = 0; a < b.arrows(); ++a) {
      CHECK(p.pi_l.cols[a] == e(b.identity(b.target(a))));
      CHECK(p.pi_r.cols[a] == e(b.identity(b.source(a))));
      CHECK(p.bar_pi_l.cols[a] == p.pi_l.cols[a]);
      CHECK(p.bar_pi_r.cols[a] == p.pi_r.cols[a]);
    }
  }

  TEST_CASE("the antipode is the only basis permutation that works") {
    for (const auto& [name, b] : stock::builder_instances()) {
      if (b.arrows() > 6) continue;
      CAPTURE(name);
      auto d = magma_of_quasigroupoid(b, kQ);
      std::vector<std::uint64_t> perm(b.arrows());
      std::iota(perm.begin(), perm.end(), 0);
      std::size_t accepted = 0;
      do {
        d.antipode = basis_map<mpq_class>(b.arrows(), perm, 1);
        if (check_whq(d).report.passed()) {
          ++accepted;
          for (Arrow a = 0; a < b.arrows(); ++a) CHECK(perm[a] == b.inverse(a));
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      CHECK(accepted == 1);
    }
  }

  TEST_CASE("fields other than the rationals") {
    const PrimeField f7{7};
    const auto d = magma_of_quasigroupoid(coarse_groupoid(2), f7);
    CHECK(check_whq(d).report.passed());
    CHECK(derived_property_suite(d).passed());
  }

  TEST_CASE("whq mutants fail their tag") {
    for (const auto& m : stock::whq_mutants()) {
      CAPTURE(m.name);
      CAPTURE(m.tag);
      const auto r = check_whq(m.data).report;
      CHECK(r.failed(m.tag));
      if (!m.witness.empty()) {
        const auto* c = r.find(m.tag);
        REQUIRE(c != nullptr);
        CHECK(std::any_of(c->violations.begin(), c->violations.end(),
                          [&](const Violation& v) { return v.witness == m.witness; }));
      }
      CHECK_THROWS_AS(projections(m.data), Error);
    }
  }

  TEST_CASE("broken magma laws are a precondition failure") {
    auto d = magma_of_quasigroupoid(coarse_groupoid(2), kQ);
    d.unit = e(0);
    try {
      check_whq(d);
      FAIL("accepted a magma without unit");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::PreconditionFailed);
      REQUIRE(err.report().has_value());
      CHECK_FALSE(err.report()->passed());
    }
    auto shape = magma_of_quasigroupoid(coarse_groupoid(2), kQ);
    shape.counit.cod = 2;
    CHECK_THROWS_AS(require_shapes(shape), Error);
  }

  TEST_CASE("magma functor is functorial and gives whq morphisms") {
    const auto pair = pair_quasigroupoid(cyclic_group(2), 2);
    const auto c2 = coarse_groupoid(2);
    QgpdMorphism proj{pair, c2, {0, 1}, {}};
    for (Arrow a = 0; a < pair.arrows(); ++a) proj.arrow_map.push_back(a % 4);
    const auto id = identity_morphism(c2);
    const auto k_proj = magma_functor(proj, kQ);
    CHECK(map_equal(magma_functor(id, kQ), identity_map<mpq_class>(4, 1)));
    CHECK(map_equal(magma_functor(compose(id, proj), kQ), compose(magma_functor(id, kQ), k_proj)));
    CHECK(check_whq_morphism(k_proj, magma_of_quasigroupoid(pair, kQ), magma_of_quasigroupoid(c2, kQ)).passed());
    QgpdMorphism bad{c2, c2, {0, 1}, {0, 2, 1, 3}};
    CHECK_THROWS_AS(magma_functor(bad, kQ), Error);
  }

  TEST_CASE("mkl4 holds where plain multiplicativity fails") {
    // Both points of discrete{0,1} to the single point.
    const auto two = discrete_groupoid(2);
    const auto one = discrete_groupoid(1);
    const auto f = magma_functor(QgpdMorphism{two, one, {0, 0}, {0, 0}}, kQ);
    const auto d = magma_of_quasigroupoid(two, kQ);
    const auto d1 = magma_of_quasigroupoid(one, kQ);
    CHECK(check_whq_morphism(f, d, d1).passed());
    const auto lhs = apply(f, multiply(d, e(0), e(1)));
    const auto rhs = multiply(d1, apply(f, e(0)), apply(f, e(1)));
    CHECK(lhs != rhs);
  }

  TEST_CASE("whq morphism mutants fail their tag") {
    for (const auto& m : stock::whq_morphism_mutants()) {
      CAPTURE(m.name);
      CAPTURE(m.tag);
      const auto r = check_whq_morphism(m.data.f, m.data.source, m.data.target);
      CHECK(r.failed(m.tag));
    }
  }
}

TEST_SUITE("bowtie") {
  TEST_CASE("bowtie structures on the acceptance pairs") {
    for (const auto& [name, mp] : stock::acceptance_matched_pairs()) {
      CAPTURE(name);
      const auto dcp = double_cross_product(mp);
      CHECK(module_law_report(mp, kQ).passed());
      const auto np = nabla_phi(mp, kQ);
      CHECK(map_equal(compose(np, np), np));
      CHECK(rank(kQ, np.cols, np.cod) == dcp.quasigroupoid.arrows());
      const auto bm = bowtie_whq(mp, kQ);
      CHECK(bm.whq.n == dcp.quasigroupoid.arrows());
      CHECK(check_whq(bm.whq).report.passed());
      CHECK(bowtie_projection_report(bm).passed());
      for (std::uint64_t i = 0; i < bm.basis.size(); ++i) CHECK(bm.position[bm.basis[i]] == i);
      const auto v = verify_canonical_iso(mp, kQ);
      CHECK(v.bijective);
      CHECK(v.morphism.passed());
      CHECK(v.transport.passed());
    }
  }

  TEST_CASE("transport over a prime field") {
    const auto [name, mp] = stock::quasigroup_case_pair();
    const auto v = verify_canonical_iso(mp, PrimeField{5});
    CHECK(v.bijective);
    CHECK(v.morphism.passed());
    CHECK(v.transport.passed());
  }

  TEST_CASE("canonical iso sends (a, h) to a⊗h") {
    const auto mp = mp_discrete_right(coarse_groupoid(2));
    const auto dcp = double_cross_product(mp);
    const auto bm = bowtie_whq(mp, kQ);
    const auto f = canonical_iso(mp, dcp, bm);
    for (Arrow i = 0; i < dcp.pairs.size(); ++i) {
      const auto [a, h] = dcp.pairs[i];
      CHECK(f.cols[i] == e(bm.position[std::uint64_t{a} * mp.h().arrows() + h]));
    }
  }
}
