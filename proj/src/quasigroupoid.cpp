#include "qgkit/quasigroupoid.hpp"

#include <map>
#include <tuple>

#include "qgkit/error.hpp"

namespace qgkit {
namespace {

std::string pair_text(Arrow a, Arrow b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void require_ranges(const QuasigroupoidData& d) {
  const std::uint32_t k = d.arrows();
  if (d.objects == 0) throw Error(ErrorCode::IndexOutOfRange, "no objects");
  if (d.target.size() != k || d.inverse.size() != k) {
    throw Error(ErrorCode::IndexOutOfRange, "per-arrow tables differ in length");
  }
  if (d.identity.size() != d.objects) {
    throw Error(ErrorCode::IndexOutOfRange, "identity table length differs from object count");
  }
  for (Arrow a = 0; a < k; ++a) {
    if (d.source[a] >= d.objects || d.target[a] >= d.objects) {
      throw Error(ErrorCode::IndexOutOfRange, "arrow " + std::to_string(a) + " has an endpoint out of range");
    }
    if (d.inverse[a] >= k) {
      throw Error(ErrorCode::IndexOutOfRange, "inverse of arrow " + std::to_string(a) + " out of range");
    }
  }
  for (Object x = 0; x < d.objects; ++x) {
    if (d.identity[x] >= k) {
      throw Error(ErrorCode::IndexOutOfRange, "identity of object " + std::to_string(x) + " out of range");
    }
  }
  for (const auto& e : d.product) {
    if (e.left >= k || e.right >= k || e.value >= k) {
      throw Error(ErrorCode::IndexOutOfRange, "product entry " + pair_text(e.left, e.right) + " out of range");
    }
  }
}

std::vector<Arrow> product_table(const QuasigroupoidData& d) {
  const std::size_t k = d.arrows();
  std::vector<Arrow> table(k * k, kUndefined);
  for (const auto& e : d.product) {
    if (d.source[e.left] != d.target[e.right]) {
      throw Error(ErrorCode::ProductDomainMismatch,
                  "product given on non-composable pair " + pair_text(e.left, e.right));
    }
    Arrow& slot = table[e.left * k + e.right];
    if (slot != kUndefined) {
      throw Error(ErrorCode::ProductDomainMismatch, "product given twice on " + pair_text(e.left, e.right));
    }
    slot = e.value;
  }
  for (Arrow a = 0; a < k; ++a) {
    for (Arrow b = 0; b < k; ++b) {
      if (d.source[a] == d.target[b] && table[a * k + b] == kUndefined) {
        throw Error(ErrorCode::ProductDomainMismatch, "product missing on composable pair " + pair_text(a, b));
      }
    }
  }
  return table;
}

StructureReport check_with_table(const QuasigroupoidData& d, const std::vector<Arrow>& table) {
  const std::uint32_t k = d.arrows();
  auto mul = [&](Arrow a, Arrow b) -> std::optional<Arrow> {
    if (d.source[a] != d.target[b]) return std::nullopt;
    return table[std::size_t{a} * k + b];
  };

  StructureReport r("quasigroupoid");
  auto& a1 = r.check("a1");
  auto& a21 = r.check("a2-1");
  auto& a22 = r.check("a2-2");
  auto& a23 = r.check("a2-3");

  for (Object x = 0; x < d.objects; ++x) {
    const Arrow i = d.identity[x];
    a1.expect(d.source[i] == x && d.target[i] == x, {x},
              "id has source " + std::to_string(d.source[i]) + " and target " + std::to_string(d.target[i]));
  }
  for (Arrow a = 0; a < k; ++a) {
    const auto left = mul(d.identity[d.target[a]], a);
    const auto right = mul(a, d.identity[d.source[a]]);
    if (!left || *left != a) {
      a21.fail({a}, left ? "id(t a)•a = " + std::to_string(*left) : "id(t a)•a undefined");
    } else if (!right || *right != a) {
      a21.fail({a}, right ? "a•id(s a) = " + std::to_string(*right) : "a•id(s a) undefined");
    } else {
      a21.pass();
    }
  }
  for (Arrow a = 0; a < k; ++a) {
    for (Arrow b = 0; b < k; ++b) {
      const auto ab = mul(a, b);
      if (!ab) continue;
      const Arrow c = *ab;
      a22.expect(d.source[c] == d.source[b] && d.target[c] == d.target[a], {a, b},
                 "a•b = " + std::to_string(c));
      const auto back = mul(d.inverse[a], c);
      const auto fwd = mul(c, d.inverse[b]);
      if (!back) {
        a23.fail({a, b}, "(λa, a•b) not composable");
      } else if (*back != b) {
        a23.fail({a, b}, "λa•(a•b) = " + std::to_string(*back));
      } else if (!fwd) {
        a23.fail({a, b}, "(a•b, λb) not composable");
      } else if (*fwd != a) {
        a23.fail({a, b}, "(a•b)•λb = " + std::to_string(*fwd));
      } else {
        a23.pass();
      }
    }
  }
  return r;
}

}  // namespace

StructureReport check_quasigroupoid(const QuasigroupoidData& data) {
  require_ranges(data);
  return check_with_table(data, product_table(data));
}

Quasigroupoid Quasigroupoid::create(QuasigroupoidData data) {
  require_ranges(data);
  auto table = product_table(data);
  StructureReport report = check_with_table(data, table);
  if (!report.passed()) {
    throw Error(ErrorCode::InvalidStructure, "quasigroupoid axioms fail", std::move(report));
  }
  auto impl = std::make_shared<Impl>();
  impl->data = std::move(data);
  impl->table = std::move(table);
  return Quasigroupoid(std::move(impl));
}

StructureReport derived_identity_suite(const Quasigroupoid& q) {
  StructureReport r("quasigroupoid-derived");
  auto& e1 = r.check("E-1");
  auto& e2 = r.check("E-2");
  auto& e3 = r.check("E-3");
  auto& e4 = r.check("E-4");
  auto& e5 = r.check("E-5");
  auto& e6 = r.check("E-6");
  const std::uint32_t k = q.arrows();
  for (Arrow a = 0; a < k; ++a) {
    const Arrow l = q.inverse(a);
    e1.expect(q.source(l) == q.target(a), {a});
    e2.expect(q.target(l) == q.source(a), {a});
    e3.expect(q.product(l, a) == q.identity(q.source(a)), {a});
    e4.expect(q.product(a, l) == q.identity(q.target(a)), {a});
    e5.expect(q.inverse(l) == a, {a});
  }
  for (Arrow a = 0; a < k; ++a) {
    for (Arrow b = 0; b < k; ++b) {
      const auto ab = q.product(a, b);
      if (!ab) continue;
      e6.expect(q.product(q.inverse(b), q.inverse(a)) == q.inverse(*ab), {a, b});
    }
  }
  return r;
}

std::optional<std::array<Arrow, 3>> associativity_witness(const Quasigroupoid& q) {
  const std::uint32_t k = q.arrows();
  for (Arrow a = 0; a < k; ++a) {
    for (Arrow b = 0; b < k; ++b) {
      const auto ab = q.product(a, b);
      if (!ab) continue;
      for (Arrow c = 0; c < k; ++c) {
        const auto bc = q.product(b, c);
        if (!bc) continue;
        const auto lhs = q.product(*ab, c);
        const auto rhs = q.product(a, *bc);
        if (lhs != rhs) return std::array<Arrow, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

std::optional<Arrow> recover_inverse(const Quasigroupoid& q, Arrow a) {
  const std::uint32_t k = q.arrows();
  for (Arrow w = 0; w < k; ++w) {
    bool ok = true;
    for (Arrow b = 0; b < k && ok; ++b) {
      if (const auto ab = q.product(a, b)) ok = q.product(w, *ab) == b;
      if (!ok) break;
      if (const auto ba = q.product(b, a)) ok = q.product(*ba, w) == b;
    }
    if (ok) return w;
  }
  return std::nullopt;
}

Quasigroupoid quasigroup_as_quasigroupoid(const FiniteQuasigroup& q) {
  QuasigroupoidData d;
  const std::uint32_t n = q.order();
  d.objects = 1;
  d.source.assign(n, 0);
  d.target.assign(n, 0);
  d.identity = {q.identity()};
  d.inverse.assign(q.inverses().begin(), q.inverses().end());
  d.product.reserve(std::size_t{n} * n);
  for (Element u = 0; u < n; ++u) {
    for (Element v = 0; v < n; ++v) d.product.push_back({u, v, q.mul(u, v)});
  }
  return Quasigroupoid::create(std::move(d));
}

StructureReport check_action_on_set(const FiniteQuasigroup& q, std::uint32_t points,
                                    const std::vector<std::uint32_t>& psi) {
  if (points == 0) throw Error(ErrorCode::EmptyBase, "action on the empty set");
  if (psi.size() != std::size_t{q.order()} * points) {
    throw Error(ErrorCode::IndexOutOfRange, "action table has the wrong size");
  }
  for (std::uint32_t v : psi) {
    if (v >= points) throw Error(ErrorCode::IndexOutOfRange, "action value out of range");
  }
  auto act = [&](Element a, std::uint32_t x) { return psi[std::size_t{a} * points + x]; };
  StructureReport r("action-on-set");
  auto& unit = r.check("action-identity");
  auto& comp = r.check("action-compatibility");
  for (std::uint32_t x = 0; x < points; ++x) unit.expect(act(q.identity(), x) == x, {x});
  for (Element a = 0; a < q.order(); ++a) {
    for (Element b = 0; b < q.order(); ++b) {
      for (std::uint32_t x = 0; x < points; ++x) {
        comp.expect(act(q.mul(a, b), x) == act(a, act(b, x)), {a, b, x});
      }
    }
  }
  return r;
}

Quasigroupoid from_quasigroup_action(const FiniteQuasigroup& q, std::uint32_t points,
                                     const std::vector<std::uint32_t>& psi) {
  StructureReport report = check_action_on_set(q, points, psi);
  if (!report.passed()) throw Error(ErrorCode::InvalidAction, "not an action", std::move(report));
  const std::uint32_t n = q.order();
  auto idx = [points](Element a, std::uint32_t x) { return a * points + x; };
  QuasigroupoidData d;
  d.objects = points;
  d.identity.resize(points);
  for (std::uint32_t x = 0; x < points; ++x) d.identity[x] = idx(q.identity(), x);
  for (Element a = 0; a < n; ++a) {
    for (std::uint32_t x = 0; x < points; ++x) {
      const std::uint32_t y = psi[idx(a, x)];
      d.source.push_back(x);
      d.target.push_back(y);
      d.inverse.push_back(idx(q.inverse(a), y));
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (std::uint32_t x = 0; x < points; ++x) {
      for (Element b = 0; b < n; ++b) {
        for (std::uint32_t y = 0; y < points; ++y) {
          if (psi[idx(b, y)] == x) d.product.push_back({idx(a, x), idx(b, y), idx(q.mul(a, b), y)});
        }
      }
    }
  }
  return Quasigroupoid::create(std::move(d));
}

Quasigroupoid pair_quasigroupoid(const FiniteQuasigroup& q, std::uint32_t points) {
  if (points == 0) throw Error(ErrorCode::EmptyBase, "pair quasigroupoid over the empty set");
  const std::uint32_t n = q.order();
  auto idx = [points](Element a, std::uint32_t x, std::uint32_t y) { return (a * points + x) * points + y; };
  QuasigroupoidData d;
  d.objects = points;
  for (std::uint32_t x = 0; x < points; ++x) d.identity.push_back(idx(q.identity(), x, x));
  for (Element a = 0; a < n; ++a) {
    for (std::uint32_t x = 0; x < points; ++x) {
      for (std::uint32_t y = 0; y < points; ++y) {
        d.source.push_back(y);
        d.target.push_back(x);
        d.inverse.push_back(idx(q.inverse(a), y, x));
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (std::uint32_t x = 0; x < points; ++x) {
      for (std::uint32_t y = 0; y < points; ++y) {
        for (Element b = 0; b < n; ++b) {
          for (std::uint32_t r = 0; r < points; ++r) {
            d.product.push_back({idx(a, x, y), idx(b, y, r), idx(q.mul(a, b), x, r)});
          }
        }
      }
    }
  }
  return Quasigroupoid::create(std::move(d));
}

Quasigroupoid pullback_quasigroupoid(const Quasigroupoid& a, const std::vector<Object>& pi) {
  const auto np = static_cast<std::uint32_t>(pi.size());
  if (np == 0) throw Error(ErrorCode::EmptyBase, "pullback along an empty set");
  std::vector<bool> hit(a.objects(), false);
  for (Object p : pi) {
    if (p >= a.objects()) throw Error(ErrorCode::IndexOutOfRange, "π value out of range");
    hit[p] = true;
  }
  for (Object x = 0; x < a.objects(); ++x) {
    if (!hit[x]) throw Error(ErrorCode::NotSurjective, "object " + std::to_string(x) + " is not in the image of π");
  }
  const std::uint32_t k = a.arrows();
  std::vector<Arrow> index(std::size_t{np} * k * np, kUndefined);
  auto slot = [&](Object p, Arrow al, Object q) -> Arrow& { return index[(std::size_t{p} * k + al) * np + q]; };
  struct Triple {
    Object p;
    Arrow a;
    Object q;
  };
  std::vector<Triple> arrows;
  for (Object p = 0; p < np; ++p) {
    for (Arrow al = 0; al < k; ++al) {
      for (Object q = 0; q < np; ++q) {
        if (pi[p] == a.target(al) && pi[q] == a.source(al)) {
          slot(p, al, q) = static_cast<Arrow>(arrows.size());
          arrows.push_back({p, al, q});
        }
      }
    }
  }
  QuasigroupoidData d;
  d.objects = np;
  for (Object p = 0; p < np; ++p) d.identity.push_back(slot(p, a.identity(pi[p]), p));
  for (const auto& t : arrows) {
    d.source.push_back(t.q);
    d.target.push_back(t.p);
    d.inverse.push_back(slot(t.q, a.inverse(t.a), t.p));
  }
  for (Arrow u = 0; u < arrows.size(); ++u) {
    for (Arrow v = 0; v < arrows.size(); ++v) {
      const auto& x = arrows[u];
      const auto& y = arrows[v];
      if (x.q != y.p) continue;
      d.product.push_back({u, v, slot(x.p, a.mul(x.a, y.a), y.q)});
    }
  }
  return Quasigroupoid::create(std::move(d));
}

Quasigroupoid coarse_groupoid(std::uint32_t points) {
  if (points == 0) throw Error(ErrorCode::EmptyBase, "coarse groupoid over the empty set");
  QuasigroupoidData d;
  d.objects = points;
  for (Object x = 0; x < points; ++x) d.identity.push_back(x * points + x);
  for (Object x = 0; x < points; ++x) {
    for (Object y = 0; y < points; ++y) {
      d.source.push_back(y);
      d.target.push_back(x);
      d.inverse.push_back(y * points + x);
    }
  }
  for (Object z = 0; z < points; ++z) {
    for (Object x = 0; x < points; ++x) {
      for (Object y = 0; y < points; ++y) d.product.push_back({z * points + x, x * points + y, z * points + y});
    }
  }
  return Quasigroupoid::create(std::move(d));
}

Quasigroupoid discrete_groupoid(std::uint32_t points) {
  if (points == 0) throw Error(ErrorCode::EmptyBase, "discrete groupoid over the empty set");
  QuasigroupoidData d;
  d.objects = points;
  for (Object x = 0; x < points; ++x) {
    d.source.push_back(x);
    d.target.push_back(x);
    d.identity.push_back(x);
    d.inverse.push_back(x);
    d.product.push_back({x, x, x});
  }
  return Quasigroupoid::create(std::move(d));
}

std::vector<std::uint32_t> left_translation(const FiniteQuasigroup& q) {
  return {q.table().begin(), q.table().end()};
}

std::vector<std::uint32_t> trivial_action(const FiniteQuasigroup& q, std::uint32_t points) {
  std::vector<std::uint32_t> psi(std::size_t{q.order()} * points);
  for (Element a = 0; a < q.order(); ++a) {
    for (std::uint32_t x = 0; x < points; ++x) psi[std::size_t{a} * points + x] = x;
  }
  return psi;
}

std::vector<std::uint32_t> cyclic_shift_action(const FiniteQuasigroup& q, std::uint32_t points,
                                               const std::vector<std::uint32_t>& hom) {
  if (hom.size() != q.order()) throw Error(ErrorCode::IndexOutOfRange, "hom table has the wrong size");
  std::vector<std::uint32_t> psi(std::size_t{q.order()} * points);
  for (Element a = 0; a < q.order(); ++a) {
    for (std::uint32_t x = 0; x < points; ++x) psi[std::size_t{a} * points + x] = (x + hom[a]) % points;
  }
  return psi;
}

}  // namespace qgkit
