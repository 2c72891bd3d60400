#include "qgkit/bowtie.hpp"

#include "qgkit/error.hpp"

namespace qgkit {

using linalg::LinearMap;
using linalg::SparseVector;

namespace {

template <class T>
using Entries = std::vector<std::pair<std::uint64_t, T>>;

template <class F>
LinearMap<typename F::value_type> action_map(const Quasigroupoid& h, const Quasigroupoid& a, const ActionTable& t,
                                             std::uint64_t cod, const F& field) {
  const std::uint64_t na = a.arrows();
  std::vector<std::uint64_t> images(std::uint64_t{h.arrows()} * na, ~std::uint64_t{0});
  for (Arrow x = 0; x < h.arrows(); ++x) {
    for (Arrow y = 0; y < na; ++y) {
      if (auto v = t.at(x, y)) images[x * na + y] = *v;
    }
  }
  return linalg::basis_map(cod, images, field.one());
}

// Unit of 𝕂[Q]: the sum of identity arrows.
template <class T>
SparseVector<T> unit_of(const Quasigroupoid& q, const T& one) {
  Entries<T> e;
  for (Object x = 0; x < q.objects(); ++x) e.emplace_back(q.identity(x), one);
  return linalg::make_vector(std::move(e));
}

template <class T>
LinearMap<T> product_map(const Quasigroupoid& q, const T& one) {
  const std::uint64_t n = q.arrows();
  std::vector<std::uint64_t> images(n * n, ~std::uint64_t{0});
  for (Arrow a = 0; a < n; ++a) {
    for (Arrow b = 0; b < n; ++b) {
      if (auto v = q.product(a, b)) images[a * n + b] = *v;
    }
  }
  return linalg::basis_map(n, images, one);
}

}  // namespace

template <class F>
LinearizedActions<F> linearized_actions(const MatchedPair& mp, const F& field) {
  return {action_map(mp.h(), mp.a(), mp.data().left, mp.a().arrows(), field),
          action_map(mp.h(), mp.a(), mp.data().right, mp.h().arrows(), field)};
}

template <class F>
StructureReport module_law_report(const MatchedPair& mp, const F& field) {
  using T = typename F::value_type;
  const T one = field.one();
  const auto act = linearized_actions(mp, field);
  const std::uint64_t na = mp.a().arrows(), nh = mp.h().arrows();
  const auto mu_a = product_map(mp.a(), one);
  const auto mu_h = product_map(mp.h(), one);
  const auto unit_a = unit_of(mp.a(), one);
  const auto unit_h = unit_of(mp.h(), one);
  StructureReport rep("module-laws");
  auto expect = [&](CheckResult& r, std::vector<std::uint64_t> w, const SparseVector<T>& x, const SparseVector<T>& y) {
    r.expect(x == y, std::move(w), "lhs=" + format_vector(field, x) + " rhs=" + format_vector(field, y));
  };
  auto& lu = rep.check("left-unit");
  auto& lm = rep.check("left-module");
  auto& ru = rep.check("right-unit");
  auto& rm = rep.check("right-module");
  for (std::uint64_t a = 0; a < na; ++a) {
    const auto ea = linalg::basis_vector(a, one);
    expect(lu, {a}, linalg::apply(act.phi_a, linalg::tensor(unit_h, ea, na)), ea);
  }
  for (std::uint64_t h = 0; h < nh; ++h) {
    const auto eh = linalg::basis_vector(h, one);
    expect(ru, {h}, linalg::apply(act.phi_h, linalg::tensor(eh, unit_a, na)), eh);
  }
  // φ(h ⊗ φ(g ⊗ a)) = φ(hg ⊗ a)
  for (std::uint64_t h = 0; h < nh; ++h) {
    for (std::uint64_t g = 0; g < nh; ++g) {
      for (std::uint64_t a = 0; a < na; ++a) {
        const auto e = linalg::basis_vector((h * nh + g) * na + a, one);
        const auto lhs = linalg::apply(
            act.phi_a, linalg::apply_tensor<T>({linalg::id_factor<T>(nh), linalg::map_factor(act.phi_a)}, e));
        const auto rhs =
            linalg::apply(act.phi_a, linalg::apply_tensor<T>({linalg::map_factor(mu_h), linalg::id_factor<T>(na)}, e));
        expect(lm, {h, g, a}, lhs, rhs);
      }
    }
  }
  // φ(φ(h ⊗ a) ⊗ b) = φ(h ⊗ ab)
  for (std::uint64_t h = 0; h < nh; ++h) {
    for (std::uint64_t a = 0; a < na; ++a) {
      for (std::uint64_t b = 0; b < na; ++b) {
        const auto e = linalg::basis_vector((h * na + a) * na + b, one);
        const auto lhs = linalg::apply(
            act.phi_h, linalg::apply_tensor<T>({linalg::map_factor(act.phi_h), linalg::id_factor<T>(na)}, e));
        const auto rhs =
            linalg::apply(act.phi_h, linalg::apply_tensor<T>({linalg::id_factor<T>(nh), linalg::map_factor(mu_a)}, e));
        expect(rm, {h, a, b}, lhs, rhs);
      }
    }
  }
  return rep;
}

template <class F>
LinearMap<typename F::value_type> phi_map(const MatchedPair& mp, const F& field) {
  using T = typename F::value_type;
  const T one = field.one();
  const std::uint64_t na = mp.a().arrows(), nh = mp.h().arrows();
  const auto act = linearized_actions(mp, field);
  const auto ca = linalg::free_coalgebra(na, one);
  const auto ch = linalg::free_coalgebra(nh, one);
  const auto tw = linalg::twist(nh, na, one);
  return linalg::materialize(nh * na, na * nh, one, [&](const SparseVector<T>& e) {
    const auto v = linalg::apply_tensor<T>({linalg::map_factor(ch.coproduct), linalg::map_factor(ca.coproduct)}, e);
    const auto w = linalg::apply_tensor<T>(
        {linalg::id_factor<T>(nh), linalg::map_factor(tw), linalg::id_factor<T>(na)}, v);
    return linalg::apply_tensor<T>({linalg::map_factor(act.phi_a), linalg::map_factor(act.phi_h)}, w);
  });
}

template <class F>
LinearMap<typename F::value_type> nabla_phi(const MatchedPair& mp, const F& field) {
  using T = typename F::value_type;
  const T one = field.one();
  const std::uint64_t na = mp.a().arrows(), nh = mp.h().arrows();
  const auto phi = phi_map(mp, field);
  const auto mu_a = product_map(mp.a(), one);
  const auto unit_a = unit_of(mp.a(), one);
  return linalg::materialize(na * nh, na * nh, one, [&](const SparseVector<T>& e) {
    const std::uint64_t a = e.entries.front().first / nh, h = e.entries.front().first % nh;
    const auto inner = linalg::apply(phi, linalg::tensor(linalg::basis_vector(h, one), unit_a, na));
    const auto v = linalg::tensor(linalg::basis_vector(a, one), inner, na * nh);
    return linalg::apply_tensor<T>({linalg::map_factor(mu_a), linalg::id_factor<T>(nh)}, v);
  });
}

template <class F>
BowtieMagma<F> bowtie_whq(const MatchedPair& mp, const F& field) {
  using T = typename F::value_type;
  const T one = field.one();
  const Quasigroupoid& A = mp.a();
  const Quasigroupoid& H = mp.h();
  const std::uint64_t na = A.arrows(), nh = H.arrows();
  const auto phi = phi_map(mp, field);
  const auto nab = nabla_phi(mp, field);
  const auto mu_a = product_map(A, one);
  const auto mu_h = product_map(H, one);

  BowtieMagma<F> bm{mp, {}, std::vector<std::uint64_t>(na * nh, BowtieMagma<F>::kNoPosition), {}};
  for (std::uint64_t i = 0; i < na * nh; ++i) {
    if (nab.cols[i] == linalg::basis_vector(i, one)) {
      bm.position[i] = bm.basis.size();
      bm.basis.push_back(i);
    }
  }
  const std::uint64_t n = bm.basis.size();
  // Rewrites an ambient vector in the basis.
  auto restrict = [&](const SparseVector<T>& v, const char* what) {
    Entries<T> e;
    for (const auto& [i, c] : v.entries) {
      if (bm.position[i] == BowtieMagma<F>::kNoPosition) {
        throw Error(ErrorCode::InvalidMatchedPair, std::string(what) + " leaves the composable tensors at a=" +
                                                       std::to_string(i / nh) + ", h=" + std::to_string(i % nh));
      }
      e.emplace_back(bm.position[i], c);
    }
    return linalg::make_vector(std::move(e));
  };

  MagmaCoalgebra<F> d{field, n, {}, linalg::zero_map<T>(n * n, n), {}, {}, {}};
  Entries<T> unit;
  for (Object x = 0; x < A.objects(); ++x) unit.emplace_back(A.identity(x) * nh + H.identity(x), one);
  d.unit = restrict(linalg::make_vector(std::move(unit)), "unit");

  // (μ_A⊗μ_H)(id⊗Φ⊗id) on (a⊗h)⊗(b⊗g).
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t a = bm.basis[i] / nh, h = bm.basis[i] % nh;
    for (std::uint64_t j = 0; j < n; ++j) {
      const std::uint64_t b = bm.basis[j] / nh, g = bm.basis[j] % nh;
      const auto e = linalg::basis_vector(((a * nh + h) * na + b) * nh + g, one);
      const auto mid = linalg::apply_tensor<T>(
          {linalg::id_factor<T>(na), linalg::map_factor(phi), linalg::id_factor<T>(nh)}, e);
      const auto out = linalg::apply_tensor<T>({linalg::map_factor(mu_a), linalg::map_factor(mu_h)}, mid);
      d.product.cols[i * n + j] = restrict(out, "product");
    }
  }
  auto co = linalg::free_coalgebra(n, one);
  d.coproduct = std::move(co.coproduct);
  d.counit = std::move(co.counit);
  // λ(a⊗h) = Φ(λ_H(h) ⊗ λ_A(a)).
  d.antipode = LinearMap<T>{n, n, {}};
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t a = bm.basis[i] / nh, h = bm.basis[i] % nh;
    d.antipode.cols.push_back(restrict(phi.cols[std::uint64_t{H.inverse(h)} * na + A.inverse(a)], "antipode"));
  }
  bm.whq = std::move(d);
  return bm;
}

template <class F>
StructureReport bowtie_projection_report(const BowtieMagma<F>& bm) {
  using T = typename F::value_type;
  const auto p = projections(bm.whq);
  const Quasigroupoid& A = bm.mp.a();
  const Quasigroupoid& H = bm.mp.h();
  const std::uint64_t nh = H.arrows();
  const T one = bm.whq.field.one();
  StructureReport rep("bowtie-projections");
  auto& l = rep.check("PiL-formula");
  auto& r = rep.check("PiR-formula");
  auto at = [&](Object x) {
    const std::uint64_t pos = bm.position[std::uint64_t{A.identity(x)} * nh + H.identity(x)];
    return pos == BowtieMagma<F>::kNoPosition ? SparseVector<T>{} : linalg::basis_vector(pos, one);
  };
  for (std::uint64_t i = 0; i < bm.whq.n; ++i) {
    const Arrow a = static_cast<Arrow>(bm.basis[i] / nh), h = static_cast<Arrow>(bm.basis[i] % nh);
    const auto el = at(A.target(a));
    const auto er = at(H.source(h));
    l.expect(p.pi_l.cols[i] == el, {i}, "Π^L=" + format_vector(bm.whq.field, p.pi_l.cols[i]));
    r.expect(p.pi_r.cols[i] == er, {i}, "Π^R=" + format_vector(bm.whq.field, p.pi_r.cols[i]));
  }
  return rep;
}

template <class F>
LinearMap<typename F::value_type> canonical_iso(const MatchedPair& mp, const DoubleCrossProduct& dcp,
                                                const BowtieMagma<F>& bm) {
  const std::uint64_t nh = mp.h().arrows();
  std::vector<std::uint64_t> images;
  images.reserve(dcp.pairs.size());
  for (const auto& [a, g] : dcp.pairs) {
    const std::uint64_t pos = bm.position[std::uint64_t{a} * nh + g];
    if (pos == BowtieMagma<F>::kNoPosition) {
      throw Error(ErrorCode::InvalidMatchedPair,
                  "arrow (" + std::to_string(a) + "," + std::to_string(g) + ") is not a composable tensor");
    }
    images.push_back(pos);
  }
  return linalg::basis_map(bm.whq.n, images, bm.whq.field.one());
}

template <class F>
IsoVerification<F> verify_canonical_iso(const MatchedPair& mp, const F& field) {
  using T = typename F::value_type;
  const T one = field.one();
  const auto dcp = double_cross_product(mp);
  const auto src = magma_of_quasigroupoid(dcp.quasigroupoid, field);
  const auto bm = bowtie_whq(mp, field);
  const auto& dst = bm.whq;
  IsoVerification<F> out{canonical_iso(mp, dcp, bm), false, {}, StructureReport("transport")};

  // f sends basis vectors to basis vectors; invert it as a permutation.
  const std::uint64_t n = src.n;
  std::vector<std::uint64_t> inv(dst.n, ~std::uint64_t{0});
  bool bij = dst.n == n;
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto& col = out.f.cols[i];
    if (col.entries.size() != 1 || !(col.entries.front().second == one) ||
        inv[col.entries.front().first] != ~std::uint64_t{0}) {
      bij = false;
      continue;
    }
    inv[col.entries.front().first] = i;
  }
  for (auto x : inv) bij = bij && x != ~std::uint64_t{0};
  out.bijective = bij;
  out.morphism = check_whq_morphism(out.f, src, dst);
  if (!bij) {
    out.transport.check("bijective").fail({}, "f is not a basis bijection");
    return out;
  }
  const auto finv = linalg::basis_map(n, inv, one);
  auto pull = [&](const SparseVector<T>& v) { return linalg::apply(finv, v); };
  auto expect = [&](CheckResult& r, std::vector<std::uint64_t> w, const SparseVector<T>& x, const SparseVector<T>& y) {
    r.expect(x == y, std::move(w), "transported=" + format_vector(field, x) + " direct=" + format_vector(field, y));
  };
  out.transport.check("bijective").pass();
  expect(out.transport.check("unit"), {}, pull(dst.unit), src.unit);
  auto& prod = out.transport.check("product");
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j = 0; j < n; ++j) {
      const auto fi = out.f.cols[i].entries.front().first, fj = out.f.cols[j].entries.front().first;
      expect(prod, {i, j}, pull(dst.product.cols[fi * dst.n + fj]), src.product.cols[i * n + j]);
    }
  }
  auto& cu = out.transport.check("counit");
  auto& cp = out.transport.check("coproduct");
  auto& an = out.transport.check("antipode");
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto fi = out.f.cols[i].entries.front().first;
    expect(cu, {i}, dst.counit.cols[fi], src.counit.cols[i]);
    expect(cp, {i}, linalg::apply_tensor<T>({linalg::map_factor(finv), linalg::map_factor(finv)}, dst.coproduct.cols[fi]),
           src.coproduct.cols[i]);
    expect(an, {i}, pull(dst.antipode.cols[fi]), src.antipode.cols[i]);
  }
  return out;
}

#define QGKIT_BOWTIE_INSTANTIATE(F)                                                                        \
  template LinearizedActions<F> linearized_actions(const MatchedPair&, const F&);                         \
  template StructureReport module_law_report(const MatchedPair&, const F&);                               \
  template LinearMap<F::value_type> phi_map(const MatchedPair&, const F&);                                \
  template LinearMap<F::value_type> nabla_phi(const MatchedPair&, const F&);                              \
  template BowtieMagma<F> bowtie_whq(const MatchedPair&, const F&);                                       \
  template StructureReport bowtie_projection_report(const BowtieMagma<F>&);                               \
  template LinearMap<F::value_type> canonical_iso(const MatchedPair&, const DoubleCrossProduct&,          \
                                                  const BowtieMagma<F>&);                                 \
  template IsoVerification<F> verify_canonical_iso(const MatchedPair&, const F&);

QGKIT_BOWTIE_INSTANTIATE(linalg::RationalField)
QGKIT_BOWTIE_INSTANTIATE(linalg::PrimeField)

}  // namespace qgkit
