#include "qgkit/whq.hpp"

#include <array>
#include <sstream>

#include "qgkit/error.hpp"

namespace qgkit {

using linalg::LinearMap;
using linalg::SparseVector;

namespace {

template <class T>
using Entries = std::vector<std::pair<std::uint64_t, T>>;

template <class F>
struct Ctx {
  using T = typename F::value_type;
  const MagmaCoalgebra<F>& d;
  std::uint64_t n;
  T one;

  explicit Ctx(const MagmaCoalgebra<F>& dd) : d(dd), n(dd.n), one(dd.field.one()) {}

  SparseVector<T> e(std::uint64_t i) const { return linalg::basis_vector(i, one); }

  SparseVector<T> mul(const SparseVector<T>& x, const SparseVector<T>& y) const { return multiply(d, x, y); }

  T eps(const SparseVector<T>& x) const {
    T s = d.field.zero();
    for (const auto& [i, c] : x.entries) {
      if (const T* v = linalg::coefficient(d.counit.cols[i], 0)) s += c * *v;
    }
    return s;
  }

  SparseVector<T> lambda(const SparseVector<T>& x) const { return linalg::apply(d.antipode, x); }

  // Splits a vector of V⊗V into (i, j, c) triples.
  template <class Fn>
  void each_pair(const SparseVector<T>& t, Fn&& fn) const {
    for (const auto& [idx, c] : t.entries) fn(idx / n, idx % n, c);
  }

  SparseVector<T> tensor(const SparseVector<T>& x, const SparseVector<T>& y) const {
    return linalg::make_vector(linalg::tensor(x, y, n).entries);
  }

  std::string fmt(const SparseVector<T>& v) const { return format_vector(d.field, v); }
  std::string fmt(const T& x) const { return F::format(x); }
};

template <class F>
void expect_equal(const Ctx<F>& c, CheckResult& r, std::vector<std::uint64_t> witness,
                  const SparseVector<typename F::value_type>& lhs, const SparseVector<typename F::value_type>& rhs,
                  const std::string& label = {}) {
  if (lhs == rhs) {
    r.pass();
    return;
  }
  std::string detail = label.empty() ? "" : label + ": ";
  r.fail(std::move(witness), detail + "lhs=" + c.fmt(lhs) + " rhs=" + c.fmt(rhs));
}

template <class T>
SparseVector<T> sum(Entries<T> e) {
  return linalg::make_vector(std::move(e));
}

template <class T>
void accumulate(Entries<T>& acc, const SparseVector<T>& v, const T& c) {
  for (const auto& [i, x] : v.entries) acc.emplace_back(i, c * x);
}

template <class F>
LinearMap<typename F::value_type> convolve(const MagmaCoalgebra<F>& d, const LinearMap<typename F::value_type>& f,
                                           const LinearMap<typename F::value_type>& g) {
  return linalg::convolution(f, g, d.coproduct, d.product);
}

template <class F>
Projections<typename F::value_type> compute_projections(const MagmaCoalgebra<F>& d) {
  using T = typename F::value_type;
  Ctx<F> c(d);
  const auto id = linalg::identity_map(d.n, c.one);
  const auto delta_one = linalg::apply(d.coproduct, d.unit);
  auto unit_form = [&](bool left, bool bar) {
    return linalg::materialize(d.n, d.n, c.one, [&](const SparseVector<T>& h) {
      Entries<T> acc;
      c.each_pair(delta_one, [&](std::uint64_t i, std::uint64_t j, const T& coef) {
        // Π^L: ε(1₍₁₎h)1₍₂₎   Π̄^L: ε(1₍₂₎h)1₍₁₎
        // Π^R: 1₍₁₎ε(h1₍₂₎)   Π̄^R: ε(h1₍₁₎)1₍₂₎
        std::uint64_t inner, outer;
        if (left) {
          inner = bar ? j : i;
          outer = bar ? i : j;
        } else {
          inner = bar ? i : j;
          outer = bar ? j : i;
        }
        const T s = left ? c.eps(c.mul(c.e(inner), h)) : c.eps(c.mul(h, c.e(inner)));
        if (!linalg::is_zero(s)) acc.emplace_back(outer, coef * s);
      });
      return sum(std::move(acc));
    });
  };
  return {convolve(d, id, d.antipode), convolve(d, d.antipode, id), unit_form(true, false),
          unit_form(false, false),     unit_form(true, true),          unit_form(false, true)};
}

// Compares two maps column by column.
template <class F>
void expect_maps(const Ctx<F>& c, CheckResult& r, const LinearMap<typename F::value_type>& lhs,
                 const LinearMap<typename F::value_type>& rhs, const std::string& label = {}) {
  for (std::uint64_t i = 0; i < lhs.dom; ++i) expect_equal(c, r, {i}, lhs.cols[i], rhs.cols[i], label);
}

}  // namespace

template <class F>
std::string format_vector(const F&, const SparseVector<typename F::value_type>& v) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [i, x] : v.entries) {
    if (!first) os << ',';
    first = false;
    os << i << ':' << F::format(x);
  }
  os << '}';
  return os.str();
}

template <class F>
SparseVector<typename F::value_type> multiply(const MagmaCoalgebra<F>& d, const SparseVector<typename F::value_type>& x,
                                              const SparseVector<typename F::value_type>& y) {
  using T = typename F::value_type;
  Entries<T> acc;
  for (const auto& [i, a] : x.entries) {
    for (const auto& [j, b] : y.entries) {
      const auto& col = d.product.cols[i * d.n + j];
      if (col.empty()) continue;
      accumulate(acc, col, T(a * b));
    }
  }
  return sum(std::move(acc));
}

template <class F>
void require_shapes(const MagmaCoalgebra<F>& d) {
  const std::uint64_t n = d.n;
  auto bad = [](const std::string& what) { throw Error(ErrorCode::DimensionMismatch, what); };
  if (n == 0) bad("zero-dimensional structure");
  if (d.product.dom != n * n || d.product.cod != n || d.product.cols.size() != n * n) bad("product must be n²→n");
  if (d.counit.dom != n || d.counit.cod != 1 || d.counit.cols.size() != n) bad("counit must be n→1");
  if (d.coproduct.dom != n || d.coproduct.cod != n * n || d.coproduct.cols.size() != n) bad("coproduct must be n→n²");
  if (d.antipode.dom != n || d.antipode.cod != n || d.antipode.cols.size() != n) bad("antipode must be n→n");
  if (!d.unit.entries.empty() && d.unit.entries.back().first >= n) bad("unit outside the space");
}

template <class F>
StructureReport magma_coalgebra_laws(const MagmaCoalgebra<F>& d) {
  using T = typename F::value_type;
  require_shapes(d);
  Ctx<F> c(d);
  const std::uint64_t n = d.n;
  StructureReport rep("magma-coalgebra");
  auto& ul = rep.check("unit-left");
  auto& ur = rep.check("unit-right");
  auto& ca = rep.check("coassociativity");
  auto& cl = rep.check("counit-left");
  auto& cr = rep.check("counit-right");
  const auto id = linalg::identity_map(n, c.one);
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto ei = c.e(i);
    expect_equal(c, ul, {i}, c.mul(d.unit, ei), ei);
    expect_equal(c, ur, {i}, c.mul(ei, d.unit), ei);
    const auto& di = d.coproduct.cols[i];
    const auto lhs = linalg::apply_tensor<T>({linalg::map_factor(d.coproduct), linalg::id_factor<T>(n)}, di);
    const auto rhs = linalg::apply_tensor<T>({linalg::id_factor<T>(n), linalg::map_factor(d.coproduct)}, di);
    expect_equal(c, ca, {i}, lhs, rhs);
    // (ε⊗id)δ and (id⊗ε)δ land in 𝕂⊗V ≅ V and V⊗𝕂 ≅ V.
    const auto left = linalg::apply_tensor<T>({linalg::map_factor(d.counit), linalg::id_factor<T>(n)}, di);
    const auto right = linalg::apply_tensor<T>({linalg::id_factor<T>(n), linalg::map_factor(d.counit)}, di);
    expect_equal(c, cl, {i}, left, ei);
    expect_equal(c, cr, {i}, right, ei);
  }
  return rep;
}

template <class F>
WhqReport<typename F::value_type> check_whq(const MagmaCoalgebra<F>& d) {
  using T = typename F::value_type;
  {
    auto laws = magma_coalgebra_laws(d);
    if (!laws.passed()) {
      throw Error(ErrorCode::PreconditionFailed, "not a unital magma and coalgebra", std::move(laws));
    }
  }
  Ctx<F> c(d);
  const std::uint64_t n = d.n;
  const F& k = d.field;
  StructureReport rep("whq");

  // d1: δμ = (μ⊗μ)(id⊗c⊗id)(δ⊗δ).
  {
    auto& r = rep.check("d1");
    for (std::uint64_t i = 0; i < n; ++i) {
      for (std::uint64_t j = 0; j < n; ++j) {
        const auto lhs = linalg::apply(d.coproduct, d.product.cols[i * n + j]);
        Entries<T> acc;
        c.each_pair(d.coproduct.cols[i], [&](std::uint64_t a, std::uint64_t b, const T& x) {
          c.each_pair(d.coproduct.cols[j], [&](std::uint64_t p, std::uint64_t q, const T& y) {
            const auto& u = d.product.cols[a * n + p];
            const auto& v = d.product.cols[b * n + q];
            if (u.empty() || v.empty()) return;
            accumulate(acc, c.tensor(u, v), T(x * y));
          });
        });
        expect_equal(c, r, {i, j}, lhs, sum(std::move(acc)));
      }
    }
  }

  // d2: four scalar identities per basis triple, through the table
  // em[i][j] = ε(e_i e_j).
  {
    auto& r = rep.check("d2");
    std::vector<T> em(n * n, k.zero());
    for (std::uint64_t i = 0; i < n * n; ++i) em[i] = c.eps(d.product.cols[i]);
    auto dot_left = [&](const SparseVector<T>& v, std::uint64_t l) {  // ε(v e_l)
      T s = k.zero();
      for (const auto& [m, x] : v.entries) s += x * em[m * n + l];
      return s;
    };
    auto dot_right = [&](std::uint64_t h, const SparseVector<T>& v) {  // ε(e_h v)
      T s = k.zero();
      for (const auto& [m, x] : v.entries) s += x * em[h * n + m];
      return s;
    };
    for (std::uint64_t h = 0; h < n; ++h) {
      for (std::uint64_t g = 0; g < n; ++g) {
        const auto& hg = d.product.cols[h * n + g];
        const auto& dg = d.coproduct.cols[g];
        for (std::uint64_t l = 0; l < n; ++l) {
          const T a = dot_left(hg, l);
          const T b = dot_right(h, d.product.cols[g * n + l]);
          T x = k.zero(), y = k.zero();
          c.each_pair(dg, [&](std::uint64_t p, std::uint64_t q, const T& coef) {
            x += coef * em[h * n + p] * em[q * n + l];
            y += coef * em[h * n + q] * em[p * n + l];
          });
          if (a == b && b == x && x == y) {
            r.pass();
          } else {
            r.fail({h, g, l}, "ε((hg)l)=" + c.fmt(a) + " ε(h(gl))=" + c.fmt(b) + " ε(hg₁)ε(g₂l)=" + c.fmt(x) +
                                  " ε(hg₂)ε(g₁l)=" + c.fmt(y));
          }
        }
      }
    }
  }

  // d3: (δ⊗id)δ(1) = (id⊗μ⊗id)(δ(1)⊗δ(1)) = (id⊗μc⊗id)(δ(1)⊗δ(1)).
  {
    auto& r = rep.check("d3");
    const auto d1 = linalg::apply(d.coproduct, d.unit);
    const auto lhs = linalg::apply_tensor<T>({linalg::map_factor(d.coproduct), linalg::id_factor<T>(n)}, d1);
    Entries<T> straight, twisted;
    c.each_pair(d1, [&](std::uint64_t a, std::uint64_t b, const T& x) {
      c.each_pair(d1, [&](std::uint64_t p, std::uint64_t q, const T& y) {
        const T xy = x * y;
        for (const auto& [m, z] : d.product.cols[b * n + p].entries) straight.emplace_back((a * n + m) * n + q, xy * z);
        for (const auto& [m, z] : d.product.cols[p * n + b].entries) twisted.emplace_back((a * n + m) * n + q, xy * z);
      });
    });
    const auto mid = sum(std::move(straight));
    const auto tw = sum(std::move(twisted));
    auto compare = [&](const SparseVector<T>& rhs, const std::string& label) {
      // Reports the first differing coefficient as a basis triple.
      if (lhs == rhs) {
        r.pass();
        return;
      }
      const auto diff = linalg::add(lhs, linalg::scale(T(-c.one), rhs));
      const std::array<std::uint64_t, 3> dims{n, n, n};
      auto w = linalg::decode_index(diff.entries.front().first, dims);
      const T* a = linalg::coefficient(lhs, diff.entries.front().first);
      const T* b = linalg::coefficient(rhs, diff.entries.front().first);
      r.fail(std::move(w), label + ": lhs=" + (a ? c.fmt(*a) : "0") + " rhs=" + (b ? c.fmt(*b) : "0"));
    };
    compare(mid, "(id⊗μ⊗id)");
    compare(tw, "(id⊗μc⊗id)");
  }

  auto proj = compute_projections(d);

  expect_maps(c, rep.check("d4-1"), proj.pi_l, proj.pi_l_unit);
  expect_maps(c, rep.check("d4-2"), proj.pi_r, proj.pi_r_unit);
  {
    auto& r = rep.check("d4-3");
    const auto left = convolve(d, d.antipode, proj.pi_l);
    const auto right = convolve(d, proj.pi_r, d.antipode);
    for (std::uint64_t i = 0; i < n; ++i) {
      if (left.cols[i] != d.antipode.cols[i]) {
        expect_equal(c, r, {i}, d.antipode.cols[i], left.cols[i], "λ∗Π^L");
      } else {
        expect_equal(c, r, {i}, d.antipode.cols[i], right.cols[i], "Π^R∗λ");
      }
    }
  }
  auto& r4 = rep.check("d4-4");
  auto& r5 = rep.check("d4-5");
  auto& r6 = rep.check("d4-6");
  auto& r7 = rep.check("d4-7");
  for (std::uint64_t h = 0; h < n; ++h) {
    const auto eh = c.e(h);
    const auto& dh = d.coproduct.cols[h];
    for (std::uint64_t g = 0; g < n; ++g) {
      const auto eg = c.e(g);
      const auto& dg = d.coproduct.cols[g];
      Entries<T> a4, a5, a6, a7;
      c.each_pair(dh, [&](std::uint64_t p, std::uint64_t q, const T& x) {
        accumulate(a4, c.mul(c.lambda(c.e(p)), d.product.cols[q * n + g]), x);  // λ(h₁)(h₂g)
        accumulate(a5, c.mul(c.e(p), c.mul(d.antipode.cols[q], eg)), x);       // h₁(λ(h₂)g)
      });
      c.each_pair(dg, [&](std::uint64_t p, std::uint64_t q, const T& x) {
        accumulate(a6, c.mul(d.product.cols[h * n + p], d.antipode.cols[q]), x);  // (hg₁)λ(g₂)
        accumulate(a7, c.mul(c.mul(eh, d.antipode.cols[p]), c.e(q)), x);        // (hλ(g₁))g₂
      });
      expect_equal(c, r4, {h, g}, sum(std::move(a4)), c.mul(proj.pi_r.cols[h], eg));
      expect_equal(c, r5, {h, g}, sum(std::move(a5)), c.mul(proj.pi_l.cols[h], eg));
      expect_equal(c, r6, {h, g}, sum(std::move(a6)), c.mul(eh, proj.pi_l.cols[g]));
      expect_equal(c, r7, {h, g}, sum(std::move(a7)), c.mul(eh, proj.pi_r.cols[g]));
    }
  }
  return {std::move(rep), std::move(proj)};
}

template <class F>
Projections<typename F::value_type> projections(const MagmaCoalgebra<F>& d) {
  auto w = check_whq(d);
  if (!w.report.passed()) throw Error(ErrorCode::NotWhq, "weak Hopf quasigroup axioms fail", std::move(w.report));
  return std::move(w.projections);
}

template <class F>
StructureReport derived_property_suite(const MagmaCoalgebra<F>& d) {
  using T = typename F::value_type;
  const auto p = projections(d);
  Ctx<F> c(d);
  const std::uint64_t n = d.n;
  const auto id = linalg::identity_map(n, c.one);
  StructureReport rep("derived-properties");

  expect_maps(c, rep.check("PiL*id"), convolve(d, p.pi_l, id), id);
  expect_maps(c, rep.check("id*PiR"), convolve(d, id, p.pi_r), id);

  auto unit_fixed = [&](const std::string& tag, const LinearMap<T>& m) {
    expect_equal(c, rep.check(tag), {}, linalg::apply(m, d.unit), d.unit);
  };
  unit_fixed("PiL-unit", p.pi_l);
  unit_fixed("PiR-unit", p.pi_r);
  unit_fixed("barPiL-unit", p.bar_pi_l);
  unit_fixed("barPiR-unit", p.bar_pi_r);
  unit_fixed("antipode-unit", d.antipode);

  auto counit_fixed = [&](const std::string& tag, const LinearMap<T>& m) {
    auto& r = rep.check(tag);
    for (std::uint64_t i = 0; i < n; ++i) {
      const T a = c.eps(m.cols[i]);
      const T b = c.eps(c.e(i));
      r.expect(a == b, {i}, "ε(f(e))=" + c.fmt(a) + " ε(e)=" + c.fmt(b));
    }
  };
  counit_fixed("counit-PiL", p.pi_l);
  counit_fixed("counit-PiR", p.pi_r);
  counit_fixed("counit-barPiL", p.bar_pi_l);
  counit_fixed("counit-barPiR", p.bar_pi_r);
  counit_fixed("counit-antipode", d.antipode);

  {
    auto& r = rep.check("antipode-antimultiplicative");
    for (std::uint64_t h = 0; h < n; ++h) {
      for (std::uint64_t g = 0; g < n; ++g) {
        expect_equal(c, r, {h, g}, c.lambda(d.product.cols[h * n + g]),
                     c.mul(d.antipode.cols[g], d.antipode.cols[h]));
      }
    }
  }
  {
    auto& r = rep.check("antipode-anticomultiplicative");
    const auto tw = linalg::twist(n, n, c.one);
    for (std::uint64_t h = 0; h < n; ++h) {
      const auto lhs = linalg::apply(d.coproduct, d.antipode.cols[h]);
      const auto rhs = linalg::apply_tensor<T>({linalg::map_factor(d.antipode), linalg::map_factor(d.antipode)},
                                               linalg::apply(tw, d.coproduct.cols[h]));
      expect_equal(c, r, {h}, lhs, rhs);
    }
  }
  expect_maps(c, rep.check("PiL*PiL"), convolve(d, p.pi_l, p.pi_l), p.pi_l);
  expect_maps(c, rep.check("PiR*PiR"), convolve(d, p.pi_r, p.pi_r), p.pi_r);
  auto idempotent = [&](const std::string& tag, const LinearMap<T>& m) {
    expect_maps(c, rep.check(tag), linalg::compose(m, m), m);
  };
  idempotent("idempotent-PiL", p.pi_l);
  idempotent("idempotent-PiR", p.pi_r);
  idempotent("idempotent-barPiL", p.bar_pi_l);
  idempotent("idempotent-barPiR", p.bar_pi_r);

  rep.check("image-barPiL").expect(linalg::same_column_space(d.field, p.bar_pi_l, p.pi_r), {},
                                   "column spaces of Π̄^L and Π^R differ");
  rep.check("image-barPiR").expect(linalg::same_column_space(d.field, p.bar_pi_r, p.pi_l), {},
                                   "column spaces of Π̄^R and Π^L differ");

  // Associativity with elements of D_L = im Π^L and D_R = im Π^R, tested on
  // a spanning set of each image.
  auto base_assoc = [&](const std::string& tag, const LinearMap<T>& m) {
    auto& r = rep.check(tag);
    std::vector<std::uint64_t> reps;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (m.cols[i].empty()) continue;
      bool seen = false;
      for (auto j : reps) seen = seen || m.cols[j] == m.cols[i];
      if (!seen) reps.push_back(i);
    }
    for (auto i : reps) {
      const auto& h = m.cols[i];
      for (std::uint64_t k = 0; k < n; ++k) {
        const auto ek = c.e(k);
        for (std::uint64_t l = 0; l < n; ++l) {
          const auto el = c.e(l);
          expect_equal(c, r, {i, k, l}, c.mul(c.mul(h, ek), el), c.mul(h, d.product.cols[k * n + l]), "(hk)l=h(kl)");
          expect_equal(c, r, {i, k, l}, c.mul(ek, c.mul(h, el)), c.mul(c.mul(ek, h), el), "k(hl)=(kh)l");
          expect_equal(c, r, {i, k, l}, c.mul(ek, c.mul(el, h)), c.mul(d.product.cols[k * n + l], h), "k(lh)=(kl)h");
        }
      }
    }
  };
  base_assoc("DL-assoc", p.pi_l);
  base_assoc("DR-assoc", p.pi_r);

  if (is_cocommutative(d)) {
    expect_maps(c, rep.check("cocommutative-barPiL"), p.bar_pi_l, p.pi_l);
    expect_maps(c, rep.check("cocommutative-barPiR"), p.bar_pi_r, p.pi_r);
  }
  return rep;
}

template <class F>
MagmaCoalgebra<F> magma_of_quasigroupoid(const Quasigroupoid& b, const F& field) {
  using T = typename F::value_type;
  const std::uint64_t n = b.arrows();
  const T one = field.one();
  MagmaCoalgebra<F> d{field, n, {}, linalg::zero_map<T>(n * n, n), {}, {}, {}};
  Entries<T> unit;
  for (Object x = 0; x < b.objects(); ++x) unit.emplace_back(b.identity(x), one);
  d.unit = linalg::make_vector(std::move(unit));
  for (Arrow a = 0; a < n; ++a) {
    for (Arrow g = 0; g < n; ++g) {
      if (auto v = b.product(a, g)) d.product.cols[a * n + g] = linalg::basis_vector<T>(*v, one);
    }
  }
  auto co = linalg::free_coalgebra(n, one);
  d.coproduct = std::move(co.coproduct);
  d.counit = std::move(co.counit);
  std::vector<std::uint64_t> inv(n);
  for (Arrow a = 0; a < n; ++a) inv[a] = b.inverse(a);
  d.antipode = linalg::basis_map(n, inv, one);
  return d;
}

template <class F>
LinearMap<typename F::value_type> nabla(const MagmaCoalgebra<F>& d, const LinearMap<typename F::value_type>& pi_r) {
  using T = typename F::value_type;
  Ctx<F> c(d);
  const std::uint64_t n = d.n;
  LinearMap<T> m{n * n, n * n, {}};
  m.cols.reserve(n * n);
  for (std::uint64_t h = 0; h < n; ++h) {
    for (std::uint64_t k = 0; k < n; ++k) {
      Entries<T> acc;
      c.each_pair(d.coproduct.cols[h], [&](std::uint64_t p, std::uint64_t q, const T& x) {
        accumulate(acc, c.tensor(c.e(p), c.mul(pi_r.cols[q], c.e(k))), x);
      });
      m.cols.push_back(sum(std::move(acc)));
    }
  }
  return m;
}

template <class F>
LinearMap<typename F::value_type> nabla(const MagmaCoalgebra<F>& d) {
  return nabla(d, projections(d).pi_r);
}

template <class F>
StructureReport check_whq_morphism(const LinearMap<typename F::value_type>& f, const MagmaCoalgebra<F>& d,
                                   const MagmaCoalgebra<F>& d2) {
  using T = typename F::value_type;
  require_shapes(d);
  require_shapes(d2);
  if (f.dom != d.n || f.cod != d2.n || f.cols.size() != d.n) {
    throw Error(ErrorCode::DimensionMismatch, "morphism shape does not match the structures");
  }
  Ctx<F> c(d2);
  const std::uint64_t n = d.n;
  const auto p = compute_projections(d);
  const auto p2 = compute_projections(d2);
  StructureReport rep("whq-morphism");
  {
    auto& r = rep.check("counit");
    for (std::uint64_t i = 0; i < n; ++i) expect_equal(c, r, {i}, linalg::apply(d2.counit, f.cols[i]), d.counit.cols[i]);
  }
  {
    auto& r = rep.check("coproduct");
    for (std::uint64_t i = 0; i < n; ++i) {
      expect_equal(c, r, {i}, linalg::apply(d2.coproduct, f.cols[i]),
                   linalg::apply_tensor<T>({linalg::map_factor(f), linalg::map_factor(f)}, d.coproduct.cols[i]));
    }
  }
  expect_maps(c, rep.check("mkl1"), linalg::compose(p2.pi_r, f), linalg::compose(f, p.pi_r));
  expect_maps(c, rep.check("mkl2"), linalg::compose(p2.bar_pi_l, f), linalg::compose(f, p.bar_pi_l));
  expect_maps(c, rep.check("mkl3"), linalg::compose(p2.pi_r, linalg::compose(p2.pi_l, f)),
              linalg::compose(f, linalg::compose(p.pi_r, p.pi_l)));
  {
    auto& r = rep.check("mkl4");
    const auto nab = nabla(d, p.pi_r);
    for (std::uint64_t h = 0; h < n; ++h) {
      for (std::uint64_t k = 0; k < n; ++k) {
        const auto lhs = linalg::apply(f, d.product.cols[h * n + k]);
        const auto img = linalg::apply_tensor<T>({linalg::map_factor(f), linalg::map_factor(f)}, nab.cols[h * n + k]);
        expect_equal(c, r, {h, k}, lhs, linalg::apply(d2.product, img));
      }
    }
  }
  return rep;
}

template <class F>
LinearMap<typename F::value_type> magma_functor(const QgpdMorphism& g, const F& field) {
  auto rep = check_morphism(g);
  if (!rep.passed()) throw Error(ErrorCode::InvalidMorphism, "not a quasigroupoid morphism", std::move(rep));
  std::vector<std::uint64_t> images(g.arrow_map.begin(), g.arrow_map.end());
  return linalg::basis_map(g.target.arrows(), images, field.one());
}

template <class F>
StructureReport hopf_report(const MagmaCoalgebra<F>& d) {
  using T = typename F::value_type;
  require_shapes(d);
  Ctx<F> c(d);
  const std::uint64_t n = d.n;
  StructureReport rep("hopf");
  {
    const T e1 = c.eps(d.unit);
    rep.check("counit-unit").expect(e1 == c.one, {}, "ε(1)=" + c.fmt(e1));
  }
  {
    auto& r = rep.check("counit-multiplicative");
    for (std::uint64_t h = 0; h < n; ++h) {
      for (std::uint64_t g = 0; g < n; ++g) {
        const T a = c.eps(d.product.cols[h * n + g]);
        const T b = c.eps(c.e(h)) * c.eps(c.e(g));
        r.expect(a == b, {h, g}, "ε(hg)=" + c.fmt(a) + " ε(h)ε(g)=" + c.fmt(b));
      }
    }
  }
  expect_equal(c, rep.check("coproduct-unit"), {}, linalg::apply(d.coproduct, d.unit), c.tensor(d.unit, d.unit));
  {
    auto& r = rep.check("coproduct-multiplicative");
    for (std::uint64_t h = 0; h < n; ++h) {
      for (std::uint64_t g = 0; g < n; ++g) {
        const auto lhs = linalg::apply(d.coproduct, d.product.cols[h * n + g]);
        Entries<T> acc;
        c.each_pair(d.coproduct.cols[h], [&](std::uint64_t a, std::uint64_t b, const T& x) {
          c.each_pair(d.coproduct.cols[g], [&](std::uint64_t p, std::uint64_t q, const T& y) {
            accumulate(acc, c.tensor(d.product.cols[a * n + p], d.product.cols[b * n + q]), T(x * y));
          });
        });
        expect_equal(c, r, {h, g}, lhs, sum(std::move(acc)));
      }
    }
  }
  return rep;
}

template <class F>
std::optional<std::uint64_t> cocommutativity_witness(const MagmaCoalgebra<F>& d) {
  require_shapes(d);
  const auto tw = linalg::twist(d.n, d.n, d.field.one());
  for (std::uint64_t i = 0; i < d.n; ++i) {
    if (linalg::apply(tw, d.coproduct.cols[i]) != d.coproduct.cols[i]) return i;
  }
  return std::nullopt;
}

template <class F>
std::optional<std::pair<std::uint64_t, std::uint64_t>> commutativity_witness(const MagmaCoalgebra<F>& d) {
  require_shapes(d);
  for (std::uint64_t i = 0; i < d.n; ++i) {
    for (std::uint64_t j = i + 1; j < d.n; ++j) {
      if (d.product.cols[i * d.n + j] != d.product.cols[j * d.n + i]) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

#define QGKIT_WHQ_INSTANTIATE(F)                                                                                 \
  template std::string format_vector(const F&, const SparseVector<F::value_type>&);                            \
  template SparseVector<F::value_type> multiply(const MagmaCoalgebra<F>&, const SparseVector<F::value_type>&,   \
                                                const SparseVector<F::value_type>&);                           \
  template void require_shapes(const MagmaCoalgebra<F>&);                                                      \
  template StructureReport magma_coalgebra_laws(const MagmaCoalgebra<F>&);                                     \
  template WhqReport<F::value_type> check_whq(const MagmaCoalgebra<F>&);                                       \
  template Projections<F::value_type> projections(const MagmaCoalgebra<F>&);                                   \
  template StructureReport derived_property_suite(const MagmaCoalgebra<F>&);                                   \
  template MagmaCoalgebra<F> magma_of_quasigroupoid(const Quasigroupoid&, const F&);                          \
  template LinearMap<F::value_type> nabla(const MagmaCoalgebra<F>&, const LinearMap<F::value_type>&);          \
  template LinearMap<F::value_type> nabla(const MagmaCoalgebra<F>&);                                           \
  template StructureReport check_whq_morphism(const LinearMap<F::value_type>&, const MagmaCoalgebra<F>&,       \
                                              const MagmaCoalgebra<F>&);                                       \
  template LinearMap<F::value_type> magma_functor(const QgpdMorphism&, const F&);                              \
  template StructureReport hopf_report(const MagmaCoalgebra<F>&);                                              \
  template std::optional<std::uint64_t> cocommutativity_witness(const MagmaCoalgebra<F>&);                     \
  template std::optional<std::pair<std::uint64_t, std::uint64_t>> commutativity_witness(const MagmaCoalgebra<F>&);

QGKIT_WHQ_INSTANTIATE(linalg::RationalField)
QGKIT_WHQ_INSTANTIATE(linalg::PrimeField)

}  // namespace qgkit
