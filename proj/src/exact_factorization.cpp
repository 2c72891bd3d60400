#include "qgkit/exact_factorization.hpp"

#include <algorithm>
#include <map>

#include "qgkit/error.hpp"

namespace qgkit {
namespace {

void require_candidate(const FactorizationCandidate& c) {
  for (const QgpdMorphism* f : {&c.ia, &c.ih}) {
    if (!(f->target == c.b)) throw Error(ErrorCode::InvalidMorphism, "inclusion does not land in B");
    if (f->object_map.size() != c.b.objects()) {
      throw Error(ErrorCode::ObjectMapNotIdentity, "object sets differ");
    }
    for (Object x = 0; x < f->object_map.size(); ++x) {
      if (f->object_map[x] != x) throw Error(ErrorCode::ObjectMapNotIdentity, "object map is not the identity");
    }
    StructureReport r = check_morphism(*f);
    if (!r.passed()) throw Error(ErrorCode::InvalidMorphism, "inclusion is not a morphism", std::move(r));
    if (!is_injective(*f)) throw Error(ErrorCode::InvalidMorphism, "inclusion is not injective");
  }
}

struct Theta {
  std::vector<std::pair<Arrow, Arrow>> domain;
  std::vector<Arrow> values;
};

Theta theta_b(const FactorizationCandidate& c) {
  const auto& A = c.ia.source;
  const auto& H = c.ih.source;
  Theta t;
  for (Arrow a = 0; a < A.arrows(); ++a) {
    for (Arrow h = 0; h < H.arrows(); ++h) {
      if (A.source(a) != H.target(h)) continue;
      const auto v = c.b.product(c.ia.arrow_map[a], c.ih.arrow_map[h]);
      if (!v) throw Error(ErrorCode::InternalInconsistency, "θ_B undefined on its domain");
      t.domain.emplace_back(a, h);
      t.values.push_back(*v);
    }
  }
  return t;
}

}  // namespace

FactorizationCheck check_exact_factorization(const FactorizationCandidate& c) {
  require_candidate(c);
  const auto& A = c.ia.source;
  const auto& H = c.ih.source;
  auto mixed = mixed_associativity(A, H, c.b, c.ia.arrow_map, c.ih.arrow_map, {"i", "ii", "iii", "iv", "v", "vi"},
                                   "exact-factorization");
  FactorizationCheck out{std::move(mixed.report), std::move(mixed.printed)};

  auto& vii = out.report.check("vii");
  const Theta t = theta_b(c);
  std::vector<std::uint32_t> first(c.b.arrows(), kUndefined);
  bool bijective = true;
  for (std::uint32_t i = 0; i < t.values.size(); ++i) {
    const Arrow v = t.values[i];
    if (first[v] == kUndefined) {
      first[v] = i;
      continue;
    }
    const auto [a0, h0] = t.domain[first[v]];
    const auto [a1, h1] = t.domain[i];
    vii.fail({a0, h0, a1, h1}, "θ_B collides on arrow " + std::to_string(v));
    bijective = false;
  }
  for (Arrow b = 0; b < c.b.arrows(); ++b) {
    if (first[b] == kUndefined) {
      vii.fail({b}, "arrow not in the image of θ_B");
      bijective = false;
    }
  }
  if (bijective) vii.pass();

  auto& meet = out.report.check("intersection");
  std::vector<bool> in_h(c.b.arrows(), false);
  for (Arrow h : c.ih.arrow_map) in_h[h] = true;
  for (Arrow a = 0; a < A.arrows(); ++a) {
    const Arrow b = c.ia.arrow_map[a];
    if (!in_h[b]) continue;
    meet.expect(c.b.is_identity(b), {b}, "shared arrow is not an identity");
  }
  return out;
}

FactorizationCandidate canonical_factorization(const MatchedPair& mp) {
  DoubleCrossProduct d = double_cross_product(mp);
  return {d.quasigroupoid, inclusion_a(mp, d), inclusion_h(mp, d)};
}

Reconstruction reconstruct_matched_pair(const FactorizationCandidate& c) {
  FactorizationCheck check = check_exact_factorization(c);
  if (!check.report.passed()) {
    throw Error(ErrorCode::NotExact, "candidate is not an exact factorization", std::move(check.report));
  }
  const auto& A = c.ia.source;
  const auto& H = c.ih.source;
  const Theta t = theta_b(c);
  std::vector<std::uint32_t> inverse(c.b.arrows(), kUndefined);
  for (std::uint32_t i = 0; i < t.values.size(); ++i) {
    if (inverse[t.values[i]] != kUndefined) throw Error(ErrorCode::InternalInconsistency, "θ_B fiber not a singleton");
    inverse[t.values[i]] = i;
  }
  MatchedPairData d{A, H, {}, {}};
  auto fiber = [&](Arrow h, Arrow a) {
    const auto v = c.b.product(c.ih.arrow_map[h], c.ia.arrow_map[a]);
    if (!v || inverse[*v] == kUndefined) throw Error(ErrorCode::InternalInconsistency, "θ_B fiber is empty");
    return t.domain[inverse[*v]];
  };
  d.left = tabulate_action(H, A, [&](Arrow h, Arrow a) { return fiber(h, a).first; });
  d.right = tabulate_action(H, A, [&](Arrow h, Arrow a) { return fiber(h, a).second; });
  MatchedPair mp = MatchedPair::create(std::move(d));
  DoubleCrossProduct dcp = double_cross_product(mp);
  QgpdMorphism gamma{dcp.quasigroupoid, c.b, {}, {}};
  for (Object x = 0; x < c.b.objects(); ++x) gamma.object_map.push_back(x);
  for (const auto& [a, h] : dcp.pairs) {
    gamma.arrow_map.push_back(*c.b.product(c.ia.arrow_map[a], c.ih.arrow_map[h]));
  }
  return {std::move(mp), std::move(gamma), std::move(dcp)};
}

QgpdMorphism sub_quasigroupoid(const Quasigroupoid& b, const std::vector<Arrow>& arrows) {
  std::vector<Arrow> members = arrows;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<Arrow> local(b.arrows(), kUndefined);
  for (Arrow i = 0; i < members.size(); ++i) {
    if (members[i] >= b.arrows()) throw Error(ErrorCode::IndexOutOfRange, "arrow out of range");
    local[members[i]] = i;
  }
  auto require = [&](Arrow a, const char* what) {
    if (local[a] == kUndefined) throw Error(ErrorCode::InvalidStructure, std::string("subset not closed under ") + what);
    return local[a];
  };
  QuasigroupoidData d;
  d.objects = b.objects();
  for (Object x = 0; x < b.objects(); ++x) d.identity.push_back(require(b.identity(x), "identities"));
  for (Arrow a : members) {
    d.source.push_back(b.source(a));
    d.target.push_back(b.target(a));
    d.inverse.push_back(require(b.inverse(a), "inverses"));
  }
  for (Arrow x : members) {
    for (Arrow y : members) {
      if (const auto v = b.product(x, y)) d.product.push_back({local[x], local[y], require(*v, "products")});
    }
  }
  QgpdMorphism f{Quasigroupoid::create(std::move(d)), b, {}, members};
  for (Object x = 0; x < b.objects(); ++x) f.object_map.push_back(x);
  return f;
}

std::vector<std::vector<Arrow>> closed_subsets(const Quasigroupoid& b, std::uint32_t max_arrows) {
  if (b.arrows() > max_arrows) {
    throw Error(ErrorCode::BoundExceeded, std::to_string(b.arrows()) + " arrows exceed the bound " +
                                              std::to_string(max_arrows));
  }
  std::vector<Arrow> free;
  std::vector<bool> is_id(b.arrows(), false);
  for (Object x = 0; x < b.objects(); ++x) is_id[b.identity(x)] = true;
  for (Arrow a = 0; a < b.arrows(); ++a) {
    if (!is_id[a]) free.push_back(a);
  }
  if (free.size() >= 63) throw Error(ErrorCode::BoundExceeded, "too many non-identity arrows");
  std::vector<std::vector<Arrow>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    std::vector<bool> in = is_id;
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (mask >> i & 1) in[free[i]] = true;
    }
    bool closed = true;
    for (Arrow a = 0; a < b.arrows() && closed; ++a) {
      if (!in[a]) continue;
      if (!in[b.inverse(a)]) closed = false;
      for (Arrow c = 0; c < b.arrows() && closed; ++c) {
        if (!in[c]) continue;
        if (const auto v = b.product(a, c); v && !in[*v]) closed = false;
      }
    }
    if (!closed) continue;
    std::vector<Arrow> members;
    for (Arrow a = 0; a < b.arrows(); ++a) {
      if (in[a]) members.push_back(a);
    }
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<FactorizationCandidate> enumerate_factorizations(const Quasigroupoid& b, std::uint32_t max_arrows) {
  const auto subsets = closed_subsets(b, max_arrows);
  std::vector<QgpdMorphism> subs;
  subs.reserve(subsets.size());
  for (const auto& s : subsets) subs.push_back(sub_quasigroupoid(b, s));
  std::vector<FactorizationCandidate> out;
  for (const auto& ia : subs) {
    for (const auto& ih : subs) {
      std::uint64_t pairs = 0;
      for (Arrow a : ia.arrow_map) {
        for (Arrow h : ih.arrow_map) pairs += b.source(a) == b.target(h);
      }
      if (pairs != b.arrows()) continue;
      FactorizationCandidate c{b, ia, ih};
      if (check_exact_factorization(c).report.passed()) out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace qgkit
