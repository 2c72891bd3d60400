#include "qgkit/quasigroup.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "qgkit/error.hpp"

namespace qgkit {

QuasigroupCheck check_quasigroup(std::uint32_t order, std::span<const Element> table, Element identity,
                                 kernels::Isa isa) {
  if (order == 0) throw Error(ErrorCode::IndexOutOfRange, "quasigroup order must be positive");
  if (table.size() != std::size_t{order} * order) {
    throw Error(ErrorCode::IndexOutOfRange, "table has " + std::to_string(table.size()) +
                                                " entries, expected " + std::to_string(order * order));
  }
  if (identity >= order) throw Error(ErrorCode::IndexOutOfRange, "identity out of range");
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= order) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "entry (" + std::to_string(i / order) + "," + std::to_string(i % order) +
                      ") = " + std::to_string(table[i]) + " out of range");
    }
  }

  QuasigroupCheck out;
  out.report.set_name("quasigroup");
  auto& id_law = out.report.check("identity-law");
  auto& ip_law = out.report.check("inverse-property");

  for (Element u = 0; u < order; ++u) {
    const Element eu = table[identity * order + u];
    const Element ue = table[u * order + identity];
    if (eu != u) {
      id_law.fail({u}, "e·u = " + std::to_string(eu));
    } else if (ue != u) {
      id_law.fail({u}, "u·e = " + std::to_string(ue));
    } else {
      id_law.pass();
    }
  }

  std::vector<Element> inverse(order, 0);
  for (Element u = 0; u < order; ++u) {
    std::optional<Element> found;
    for (Element w = 0; w < order && !found; ++w) {
      if (kernels::left_inverse_failure(table, order, u, w, isa)) continue;
      if (kernels::right_inverse_failure(table, order, u, w, isa)) continue;
      found = w;
    }
    if (found) {
      inverse[u] = *found;
      ip_law.pass();
    } else {
      ip_law.fail({u}, "no two-sided inverse-property inverse");
    }
  }

  if (out.report.passed()) out.inverse = std::move(inverse);
  return out;
}

FiniteQuasigroup FiniteQuasigroup::create(std::uint32_t order, std::vector<Element> table,
                                          Element identity, std::vector<std::string> names) {
  QuasigroupCheck check = check_quasigroup(order, table, identity);
  if (!check.inverse) {
    throw Error(ErrorCode::InvalidStructure, "table is not an IP loop", std::move(check.report));
  }
  if (!names.empty() && names.size() != order) {
    throw Error(ErrorCode::IndexOutOfRange, "names table size does not match the order");
  }
  FiniteQuasigroup q;
  q.order_ = order;
  q.identity_ = identity;
  q.table_ = std::move(table);
  q.inverse_ = std::move(*check.inverse);
  q.names_ = std::move(names);
  return q;
}

std::optional<kernels::Triple> associativity_witness(const FiniteQuasigroup& q, kernels::Isa isa) {
  return kernels::associativity_witness(q.table(), q.order(), isa);
}

bool is_commutative(const FiniteQuasigroup& q) {
  for (Element u = 0; u < q.order(); ++u) {
    for (Element v = u + 1; v < q.order(); ++v) {
      if (q.mul(u, v) != q.mul(v, u)) return false;
    }
  }
  return true;
}

StructureReport derived_inverse_identities(const FiniteQuasigroup& q) {
  StructureReport r("quasigroup-derived");
  auto& uniq = r.check("inverse-unique");
  auto& invol = r.check("inverse-involution");
  auto& anti = r.check("inverse-antimultiplicative");
  const std::uint32_t n = q.order();
  for (Element u = 0; u < n; ++u) {
    std::uint32_t count = 0;
    for (Element w = 0; w < n; ++w) {
      bool ok = true;
      for (Element v = 0; v < n && ok; ++v) ok = q.mul(w, q.mul(u, v)) == v;
      if (ok) ++count;
    }
    uniq.expect(count == 1, {u}, std::to_string(count) + " left inverses");
    invol.expect(q.inverse(q.inverse(u)) == u, {u});
    for (Element v = 0; v < n; ++v) {
      anti.expect(q.inverse(q.mul(u, v)) == q.mul(q.inverse(v), q.inverse(u)), {u, v});
    }
  }
  return r;
}

namespace {

template <class Mul>
FiniteQuasigroup from_function(std::uint32_t n, Element identity, Mul mul) {
  std::vector<Element> table(std::size_t{n} * n);
  for (Element u = 0; u < n; ++u) {
    for (Element v = 0; v < n; ++v) table[u * n + v] = mul(u, v);
  }
  return FiniteQuasigroup::create(n, std::move(table), identity);
}

}  // namespace

FiniteQuasigroup cyclic_group(std::uint32_t n) {
  if (n == 0) throw Error(ErrorCode::IndexOutOfRange, "cyclic group of order 0");
  return from_function(n, 0, [n](Element u, Element v) { return (u + v) % n; });
}

FiniteQuasigroup symmetric_group(std::uint32_t k) {
  if (k == 0) throw Error(ErrorCode::IndexOutOfRange, "symmetric group on 0 points");
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> p(k);
  std::iota(p.begin(), p.end(), 0u);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::uint32_t>, Element> index;
  for (Element i = 0; i < perms.size(); ++i) index.emplace(perms[i], i);
  const auto n = static_cast<std::uint32_t>(perms.size());
  // (σ·τ)(i) = σ(τ(i))
  return from_function(n, 0, [&](Element s, Element t) {
    std::vector<std::uint32_t> c(k);
    for (std::uint32_t i = 0; i < k; ++i) c[i] = perms[s][perms[t][i]];
    return index.at(c);
  });
}

FiniteQuasigroup dihedral_group(std::uint32_t n) {
  if (n == 0) throw Error(ErrorCode::IndexOutOfRange, "dihedral group D_0");
  // r^a s^b has index a + n·b.
  return from_function(2 * n, 0, [n](Element x, Element y) {
    const std::uint32_t a = x % n, b = x / n, c = y % n, d = y / n;
    const std::uint32_t rot = b == 0 ? (a + c) % n : (a + n - c) % n;
    return rot + n * ((b + d) % 2);
  });
}

FiniteQuasigroup quaternion_group() {
  // 0..3 = 1, i, j, k and 4..7 their negatives.
  static constexpr std::array<std::array<std::uint32_t, 4>, 4> unit = {{
      {0, 1, 2, 3},
      {1, 4, 3, 6},
      {2, 7, 4, 1},
      {3, 2, 5, 4},
  }};
  return from_function(8, 0, [](Element x, Element y) {
    const std::uint32_t r = unit[x % 4][y % 4];
    const std::uint32_t sign = (x / 4 + y / 4 + r / 4) % 2;
    return (r % 4) + 4 * sign;
  });
}

FiniteQuasigroup direct_product(const FiniteQuasigroup& a, const FiniteQuasigroup& b) {
  const std::uint32_t nb = b.order();
  return from_function(a.order() * nb, a.identity() * nb + b.identity(), [&](Element x, Element y) {
    return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  });
}

FiniteQuasigroup chein_double(const FiniteQuasigroup& g) {
  if (auto w = associativity_witness(g)) {
    throw Error(ErrorCode::NotAGroup, "input is not associative at (" + std::to_string(w->u) + "," +
                                          std::to_string(w->v) + "," + std::to_string(w->w) + ")");
  }
  const std::uint32_t n = g.order();
  std::vector<std::string> names;
  if (!g.names().empty()) {
    names = g.names();
    for (Element x = 0; x < n; ++x) names.push_back(g.names()[x] + "u");
  }
  std::vector<Element> table(std::size_t{4} * n * n);
  for (Element x = 0; x < 2 * n; ++x) {
    for (Element y = 0; y < 2 * n; ++y) {
      const Element a = x % n, b = y % n;
      Element r;
      if (x < n && y < n) {
        r = g.mul(a, b);
      } else if (x < n) {
        r = n + g.mul(b, a);
      } else if (y < n) {
        r = n + g.mul(a, g.inverse(b));
      } else {
        r = g.mul(g.inverse(b), a);
      }
      table[x * 2 * n + y] = r;
    }
  }
  return FiniteQuasigroup::create(2 * n, std::move(table), g.identity(), std::move(names));
}

std::vector<FiniteQuasigroup> small_groups() {
  std::vector<FiniteQuasigroup> out;
  out.push_back(cyclic_group(1));
  out.push_back(cyclic_group(2));
  out.push_back(cyclic_group(3));
  out.push_back(cyclic_group(4));
  out.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
  out.push_back(cyclic_group(5));
  out.push_back(cyclic_group(6));
  out.push_back(symmetric_group(3));
  out.push_back(cyclic_group(7));
  out.push_back(cyclic_group(8));
  out.push_back(direct_product(cyclic_group(2), cyclic_group(4)));
  out.push_back(direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2))));
  out.push_back(dihedral_group(4));
  out.push_back(quaternion_group());
  return out;
}

}  // namespace qgkit
