#include "qgkit/matched_pair.hpp"

#include "qgkit/error.hpp"

namespace qgkit {
namespace {

using Opt = std::optional<Arrow>;

Opt mul(const Quasigroupoid& q, Opt x, Opt y) {
  if (!x || !y) return std::nullopt;
  return q.product(*x, *y);
}

Opt lam(const Quasigroupoid& q, Opt x) {
  if (!x) return std::nullopt;
  return q.inverse(*x);
}

Opt act(const ActionTable& t, Opt h, Opt a) {
  if (!h || !a) return std::nullopt;
  return t.at(*h, *a);
}

std::string show(Opt x) { return x ? std::to_string(*x) : std::string("undefined"); }

void require_domain(const Quasigroupoid& h, const Quasigroupoid& a, const ActionTable& t,
                    std::uint32_t value_range, const char* which) {
  if (h.objects() != a.objects()) {
    throw Error(ErrorCode::BaseMismatch, std::string(which) + ": the two quasigroupoids have different bases");
  }
  if (t.h_arrows != h.arrows() || t.a_arrows != a.arrows() ||
      t.values.size() != std::size_t{t.h_arrows} * t.a_arrows) {
    throw Error(ErrorCode::DomainMismatch, std::string(which) + ": table shape does not match the arrow sets");
  }
  for (Arrow x = 0; x < h.arrows(); ++x) {
    for (Arrow y = 0; y < a.arrows(); ++y) {
      const Arrow v = t.values[std::size_t{x} * t.a_arrows + y];
      const bool in_domain = h.source(x) == a.target(y);
      const std::string where = " at (" + std::to_string(x) + "," + std::to_string(y) + ")";
      if (in_domain && v == kUndefined) {
        throw Error(ErrorCode::DomainMismatch, std::string(which) + ": undefined on the domain" + where);
      }
      if (!in_domain && v != kUndefined) {
        throw Error(ErrorCode::DomainMismatch, std::string(which) + ": defined off the domain" + where);
      }
      if (in_domain && v >= value_range) {
        throw Error(ErrorCode::DomainMismatch, std::string(which) + ": value out of range" + where);
      }
    }
  }
}

template <class F>
void for_domain(const Quasigroupoid& h, const Quasigroupoid& a, F&& f) {
  for (Arrow x = 0; x < h.arrows(); ++x) {
    for (Arrow y = 0; y < a.arrows(); ++y) {
      if (h.source(x) == a.target(y)) f(x, y);
    }
  }
}

// Compares two optional sides; a missing side counts as a violation.
void compare(CheckResult& c, Opt lhs, Opt rhs, std::vector<std::uint64_t> witness) {
  if (lhs && rhs && *lhs == *rhs) {
    c.pass();
  } else {
    c.fail(std::move(witness), "lhs=" + show(lhs) + " rhs=" + show(rhs));
  }
}

// Compares only when both sides are defined.
void compare_defined(CheckResult& c, Opt lhs, Opt rhs, std::vector<std::uint64_t> witness) {
  if (!lhs || !rhs) return;
  compare(c, lhs, rhs, std::move(witness));
}

}  // namespace

ActionTable tabulate_action(const Quasigroupoid& h, const Quasigroupoid& a,
                            const std::function<Arrow(Arrow, Arrow)>& fn) {
  ActionTable t{h.arrows(), a.arrows(), std::vector<Arrow>(std::size_t{h.arrows()} * a.arrows(), kUndefined)};
  for_domain(h, a, [&](Arrow x, Arrow y) { t.values[std::size_t{x} * t.a_arrows + y] = fn(x, y); });
  return t;
}

StructureReport check_left_action(const Quasigroupoid& h, const Quasigroupoid& a, const ActionTable& phi) {
  require_domain(h, a, phi, a.arrows(), "left action");
  StructureReport r("left-action");
  auto& c1 = r.check("c1");
  auto& c2 = r.check("c2");
  auto& c3 = r.check("c3");
  for_domain(h, a, [&](Arrow x, Arrow y) {
    const Arrow v = *phi.at(x, y);
    c1.expect(a.target(v) == h.target(x), {x, y}, "t_A(φ_A(h,a)) = " + std::to_string(a.target(v)));
  });
  for (Arrow g = 0; g < h.arrows(); ++g) {
    for (Arrow x = 0; x < h.arrows(); ++x) {
      const Opt gx = h.product(g, x);
      if (!gx) continue;
      for (Arrow y = 0; y < a.arrows(); ++y) {
        if (h.source(x) != a.target(y)) continue;
        compare(c2, act(phi, gx, y), act(phi, g, phi.at(x, y)), {g, x, y});
      }
    }
  }
  for (Arrow y = 0; y < a.arrows(); ++y) compare(c3, phi.at(h.identity(a.target(y)), y), y, {y});
  return r;
}

StructureReport check_right_action(const Quasigroupoid& a, const Quasigroupoid& h, const ActionTable& phi) {
  require_domain(h, a, phi, h.arrows(), "right action");
  StructureReport r("right-action");
  auto& d1 = r.check("d1");
  auto& d2 = r.check("d2");
  auto& d3 = r.check("d3");
  for_domain(h, a, [&](Arrow x, Arrow y) {
    const Arrow v = *phi.at(x, y);
    d1.expect(h.source(v) == a.source(y), {x, y}, "s_H(φ_H(h,a)) = " + std::to_string(h.source(v)));
  });
  for_domain(h, a, [&](Arrow x, Arrow y) {
    for (Arrow b = 0; b < a.arrows(); ++b) {
      const Opt yb = a.product(y, b);
      if (!yb) continue;
      compare(d2, act(phi, x, yb), act(phi, phi.at(x, y), b), {x, y, b});
    }
  });
  for (Arrow x = 0; x < h.arrows(); ++x) compare(d3, phi.at(x, a.identity(h.source(x))), x, {x});
  return r;
}

StructureReport check_matched_pair(const MatchedPairData& mp) {
  const auto& A = mp.a;
  const auto& H = mp.h;
  StructureReport left = check_left_action(H, A, mp.left);
  StructureReport right = check_right_action(A, H, mp.right);
  if (!left.passed() || !right.passed()) {
    left.merge(right);
    left.set_name("actions");
    throw Error(ErrorCode::ActionInvalid, "action axioms fail", std::move(left));
  }
  StructureReport r("matched-pair");
  auto& e1 = r.check("e1");
  auto& e2 = r.check("e2");
  auto& e3 = r.check("e3");
  for_domain(H, A, [&](Arrow x, Arrow y) {
    const Arrow pa = *mp.left.at(x, y);
    const Arrow ph = *mp.right.at(x, y);
    e1.expect(A.source(pa) == H.target(ph), {x, y},
              "s_A(φ_A(h,a)) = " + std::to_string(A.source(pa)) + ", t_H(φ_H(h,a)) = " + std::to_string(H.target(ph)));
    for (Arrow b = 0; b < A.arrows(); ++b) {
      const Opt yb = A.product(y, b);
      if (!yb) continue;
      compare(e2, act(mp.left, x, yb), mul(A, pa, act(mp.left, ph, b)), {x, y, b});
    }
  });
  for (Arrow g = 0; g < H.arrows(); ++g) {
    for (Arrow x = 0; x < H.arrows(); ++x) {
      const Opt gx = H.product(g, x);
      if (!gx) continue;
      for (Arrow y = 0; y < A.arrows(); ++y) {
        if (H.source(x) != A.target(y)) continue;
        compare(e3, act(mp.right, gx, y),
                mul(H, act(mp.right, g, mp.left.at(x, y)), mp.right.at(x, y)), {g, x, y});
      }
    }
  }
  return r;
}

MatchedPair MatchedPair::create(MatchedPairData data) {
  StructureReport r = check_matched_pair(data);
  if (!r.passed()) throw Error(ErrorCode::InvalidMatchedPair, "matched pair axioms fail", std::move(r));
  return MatchedPair(std::move(data));
}

DoubleCrossProduct double_cross_product(const MatchedPair& mp) {
  const auto& A = mp.a();
  const auto& H = mp.h();
  struct {
    std::vector<std::pair<Arrow, Arrow>> pairs;
    std::vector<Arrow> index;
    std::uint32_t h_arrows;
    Opt arrow(Arrow a, Arrow h) const {
      const Arrow v = index[std::size_t{a} * h_arrows + h];
      if (v == kUndefined) return std::nullopt;
      return v;
    }
  } out{{}, std::vector<Arrow>(std::size_t{A.arrows()} * H.arrows(), kUndefined), H.arrows()};
  for (Arrow a = 0; a < A.arrows(); ++a) {
    for (Arrow h = 0; h < H.arrows(); ++h) {
      if (A.source(a) != H.target(h)) continue;
      out.index[std::size_t{a} * H.arrows() + h] = static_cast<Arrow>(out.pairs.size());
      out.pairs.emplace_back(a, h);
    }
  }
  auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidMatchedPair, what); };
  QuasigroupoidData d;
  d.objects = A.objects();
  for (Object x = 0; x < d.objects; ++x) {
    const Opt i = out.arrow(A.identity(x), H.identity(x));
    if (!i) fail("identity pair missing");
    d.identity.push_back(*i);
  }
  for (const auto& [a, h] : out.pairs) {
    d.source.push_back(H.source(h));
    d.target.push_back(A.target(a));
    const Arrow lh = H.inverse(h), la = A.inverse(a);
    const Opt pa = mp.phi_a(lh, la), ph = mp.phi_h(lh, la);
    if (!pa || !ph) fail("inverse undefined");
    const Opt inv = out.arrow(*pa, *ph);
    if (!inv) fail("inverse not an arrow");
    d.inverse.push_back(*inv);
  }
  const auto n = static_cast<Arrow>(out.pairs.size());
  for (Arrow u = 0; u < n; ++u) {
    const auto [a, g] = out.pairs[u];
    for (Arrow v = 0; v < n; ++v) {
      const auto [b, h] = out.pairs[v];
      if (H.source(g) != A.target(b)) continue;
      const Opt left = mul(A, a, mp.phi_a(g, b));
      const Opt right = mul(H, mp.phi_h(g, b), h);
      if (!left || !right) fail("product undefined on a composable pair");
      const Opt w = out.arrow(*left, *right);
      if (!w) fail("product leaves the arrow set");
      d.product.push_back({u, v, *w});
    }
  }
  try {
    return DoubleCrossProduct{Quasigroupoid::create(std::move(d)), std::move(out.pairs), std::move(out.index),
                              out.h_arrows};
  } catch (const Error& e) {
    if (e.report()) throw Error(ErrorCode::InvalidMatchedPair, e.what(), *e.report());
    throw Error(ErrorCode::InvalidMatchedPair, e.what());
  }
}

QgpdMorphism inclusion_a(const MatchedPair& mp, const DoubleCrossProduct& d) {
  const auto& A = mp.a();
  QgpdMorphism f{A, d.quasigroupoid, {}, {}};
  for (Object x = 0; x < A.objects(); ++x) f.object_map.push_back(x);
  for (Arrow a = 0; a < A.arrows(); ++a) f.arrow_map.push_back(*d.arrow(a, mp.h().identity(A.source(a))));
  return f;
}

QgpdMorphism inclusion_h(const MatchedPair& mp, const DoubleCrossProduct& d) {
  const auto& H = mp.h();
  QgpdMorphism f{H, d.quasigroupoid, {}, {}};
  for (Object x = 0; x < H.objects(); ++x) f.object_map.push_back(x);
  for (Arrow g = 0; g < H.arrows(); ++g) f.arrow_map.push_back(*d.arrow(mp.a().identity(H.target(g)), g));
  return f;
}

StructureReport matched_pair_identity_suite(const MatchedPair& mp) {
  const auto& A = mp.a();
  const auto& H = mp.h();
  const auto& L = mp.data().left;
  const auto& R = mp.data().right;
  StructureReport r("matched-pair-identities");
  std::array<CheckResult*, 10> p{};
  for (int i = 0; i < 10; ++i) p[i] = &r.check("P-" + std::to_string(i + 1));

  for (Arrow h = 0; h < H.arrows(); ++h) {
    compare_defined(*p[0], L.at(h, A.identity(H.source(h))), A.identity(H.target(h)), {h});
  }
  for (Arrow a = 0; a < A.arrows(); ++a) {
    compare_defined(*p[1], R.at(H.identity(A.target(a)), a), H.identity(A.source(a)), {a});
  }
  for_domain(H, A, [&](Arrow h, Arrow a) {
    const Opt pa = L.at(h, a), ph = R.at(h, a);
    const Opt la = A.inverse(a), lh = H.inverse(h);
    compare_defined(*p[2], lam(A, pa), act(L, ph, la), {h, a});
    compare_defined(*p[3], lam(H, ph), act(R, lh, pa), {h, a});
    compare_defined(*p[6], act(L, lam(H, ph), lam(A, pa)), la, {h, a});
    compare_defined(*p[7], act(R, lam(H, ph), lam(A, pa)), lh, {h, a});
    for (Arrow b = 0; b < A.arrows(); ++b) {
      compare_defined(*p[4], mul(A, mul(A, b, pa), act(L, ph, la)), b, {h, a, b});
      compare_defined(*p[8], mul(A, la, act(L, lh, b)), act(L, lam(H, ph), mul(A, lam(A, pa), b)), {h, a, b});
    }
    for (Arrow g = 0; g < H.arrows(); ++g) {
      compare_defined(*p[5], mul(H, act(R, lh, pa), mul(H, ph, g)), g, {h, a, g});
      compare_defined(*p[9], mul(H, act(R, g, la), lh), act(R, mul(H, g, lam(H, ph)), lam(A, pa)), {h, a, g});
    }
  });
  return r;
}

MixedAssociativity mixed_associativity(const Quasigroupoid& A, const Quasigroupoid& H, const Quasigroupoid& B,
                                       const std::vector<Arrow>& ia, const std::vector<Arrow>& ih,
                                       const std::array<std::string, 6>& tags, const std::string& name) {
  MixedAssociativity out{StructureReport(name), StructureReport(name + "-printed")};
  auto& haa = out.report.check(tags[0]);
  auto& hha = out.report.check(tags[1]);
  auto& hah = out.report.check(tags[2]);
  auto& aha = out.report.check(tags[3]);
  auto& aah = out.report.check(tags[4]);
  auto& ahh = out.report.check(tags[5]);
  auto& printed = out.printed.check(tags[5]);
  auto m = [&](Opt x, Opt y) { return mul(B, x, y); };

  // (i) h·(a·b) over (h, a) in H×A and (a, b) composable.
  for_domain(H, A, [&](Arrow g, Arrow a) {
    for (Arrow b = 0; b < A.arrows(); ++b) {
      if (!A.composable(a, b)) continue;
      compare(haa, m(ih[g], m(ia[a], ia[b])), m(m(ih[g], ia[a]), ia[b]), {g, a, b});
    }
  });
  for (Arrow g = 0; g < H.arrows(); ++g) {
    for (Arrow h = 0; h < H.arrows(); ++h) {
      if (!H.composable(g, h)) continue;
      for (Arrow a = 0; a < A.arrows(); ++a) {
        if (H.source(h) != A.target(a)) continue;
        compare(hha, m(ih[g], m(ih[h], ia[a])), m(m(ih[g], ih[h]), ia[a]), {g, h, a});
      }
    }
  }
  for_domain(H, A, [&](Arrow h, Arrow a) {
    for (Arrow f = 0; f < H.arrows(); ++f) {
      if (A.source(a) != H.target(f)) continue;
      compare(hah, m(ih[h], m(ia[a], ih[f])), m(m(ih[h], ia[a]), ih[f]), {h, a, f});
    }
  });
  for (Arrow c = 0; c < A.arrows(); ++c) {
    for (Arrow h = 0; h < H.arrows(); ++h) {
      if (A.source(c) != H.target(h)) continue;
      for (Arrow a = 0; a < A.arrows(); ++a) {
        if (H.source(h) != A.target(a)) continue;
        compare(aha, m(ia[c], m(ih[h], ia[a])), m(m(ia[c], ih[h]), ia[a]), {c, h, a});
      }
    }
  }
  for (Arrow a = 0; a < A.arrows(); ++a) {
    for (Arrow b = 0; b < A.arrows(); ++b) {
      if (!A.composable(a, b)) continue;
      for (Arrow g = 0; g < H.arrows(); ++g) {
        if (A.source(b) != H.target(g)) continue;
        compare(aah, m(ia[a], m(ia[b], ih[g])), m(m(ia[a], ia[b]), ih[g]), {a, b, g});
      }
    }
  }
  for (Arrow a = 0; a < A.arrows(); ++a) {
    for (Arrow g = 0; g < H.arrows(); ++g) {
      if (A.source(a) != H.target(g)) continue;
      for (Arrow h = 0; h < H.arrows(); ++h) {
        if (!H.composable(g, h)) continue;
        const Opt lhs = m(ia[a], m(ih[g], ih[h]));
        compare(ahh, lhs, m(m(ia[a], ih[g]), ih[h]), {a, g, h});
        compare(printed, lhs, m(m(ia[a], ih[h]), ih[g]), {a, g, h});
      }
    }
  }
  return out;
}

MixedAssociativity mixed_associativity_suite(const MatchedPair& mp) {
  const DoubleCrossProduct d = double_cross_product(mp);
  return mixed_associativity(mp.a(), mp.h(), d.quasigroupoid, inclusion_a(mp, d).arrow_map,
                             inclusion_h(mp, d).arrow_map, {"HAA", "HHA", "HAH", "AHA", "AAH", "AHH"},
                             "mixed-associativity");
}

StructureReport theta_suite(const MatchedPair& mp) {
  const DoubleCrossProduct d = double_cross_product(mp);
  const auto ia = inclusion_a(mp, d).arrow_map;
  const auto ih = inclusion_h(mp, d).arrow_map;
  StructureReport r("theta");
  auto& c = r.check("theta-identity");
  for (Arrow i = 0; i < d.pairs.size(); ++i) {
    const auto [a, h] = d.pairs[i];
    compare(c, d.quasigroupoid.product(ia[a], ih[h]), i, {a, h});
  }
  return r;
}

MatchedPair mp_discrete_right(const Quasigroupoid& a) {
  const Quasigroupoid xd = discrete_groupoid(a.objects());
  MatchedPairData d{a, xd, {}, {}};
  d.left = tabulate_action(xd, a, [](Arrow, Arrow y) { return y; });
  d.right = tabulate_action(xd, a, [&](Arrow, Arrow y) { return a.source(y); });
  return MatchedPair::create(std::move(d));
}

MatchedPair mp_action_left(const FiniteQuasigroup& q, std::uint32_t points, const std::vector<std::uint32_t>& psi) {
  const Quasigroupoid b = from_quasigroup_action(q, points, psi);
  const Quasigroupoid xd = discrete_groupoid(points);
  MatchedPairData d{xd, b, {}, {}};
  d.left = tabulate_action(b, xd, [&](Arrow h, Arrow) { return b.target(h); });
  d.right = tabulate_action(b, xd, [](Arrow h, Arrow) { return h; });
  return MatchedPair::create(std::move(d));
}

MatchedPair mp_trivial(const Quasigroupoid& a, const Quasigroupoid& h) {
  MatchedPairData d{a, h, {}, {}};
  d.left = tabulate_action(h, a, [](Arrow, Arrow y) { return y; });
  d.right = tabulate_action(h, a, [](Arrow x, Arrow) { return x; });
  return MatchedPair::create(std::move(d));
}

StructureReport check_mp_morphism(const MpMorphism& m) {
  if (!(m.gamma.source == m.source.a()) || !(m.gamma.target == m.target.a()) ||
      !(m.omega.source == m.source.h()) || !(m.omega.target == m.target.h())) {
    throw Error(ErrorCode::BaseMismatch, "component morphisms do not connect the matched pairs");
  }
  const auto& G = m.gamma.arrow_map;
  const auto& W = m.omega.arrow_map;
  StructureReport r("mp-morphism");
  auto& left = r.check("intertwine-A");
  auto& right = r.check("intertwine-H");
  for_domain(m.source.h(), m.source.a(), [&](Arrow h, Arrow a) {
    const Opt pa = m.source.phi_a(h, a), ph = m.source.phi_h(h, a);
    compare(left, pa ? Opt(G[*pa]) : std::nullopt, m.target.phi_a(W[h], G[a]), {h, a});
    compare(right, ph ? Opt(W[*ph]) : std::nullopt, m.target.phi_h(W[h], G[a]), {h, a});
  });
  return r;
}

MpMorphism identity_mp_morphism(const MatchedPair& mp) {
  return {mp, mp, identity_morphism(mp.a()), identity_morphism(mp.h())};
}

MpMorphism compose(const MpMorphism& g, const MpMorphism& f) {
  return {f.source, g.target, compose(g.gamma, f.gamma), compose(g.omega, f.omega)};
}

}  // namespace qgkit
