#include "qgkit/morphism.hpp"

#include <algorithm>
#include <numeric>

#include "qgkit/error.hpp"

namespace qgkit {
namespace {

template <class T>
bool injective(const std::vector<T>& map, std::uint32_t range) {
  std::vector<bool> seen(range, false);
  for (T v : map) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

template <class T>
bool surjective(const std::vector<T>& map, std::uint32_t range) {
  std::vector<bool> seen(range, false);
  for (T v : map) seen[v] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

void require_shape(const QgpdMorphism& f) {
  if (f.object_map.size() != f.source.objects() || f.arrow_map.size() != f.source.arrows()) {
    throw Error(ErrorCode::IndexOutOfRange, "morphism tables do not match the source sizes");
  }
  for (Object x : f.object_map) {
    if (x >= f.target.objects()) throw Error(ErrorCode::IndexOutOfRange, "object image out of range");
  }
  for (Arrow a : f.arrow_map) {
    if (a >= f.target.arrows()) throw Error(ErrorCode::IndexOutOfRange, "arrow image out of range");
  }
}

}  // namespace

QgpdMorphism identity_morphism(const Quasigroupoid& q) {
  QgpdMorphism f{q, q, std::vector<Object>(q.objects()), std::vector<Arrow>(q.arrows())};
  std::iota(f.object_map.begin(), f.object_map.end(), 0u);
  std::iota(f.arrow_map.begin(), f.arrow_map.end(), 0u);
  return f;
}

StructureReport check_morphism(const QgpdMorphism& f) {
  require_shape(f);
  const auto& s = f.source;
  const auto& t = f.target;
  StructureReport r("morphism");
  auto& b1 = r.check("b1");
  auto& b2 = r.check("b2");
  auto& b3 = r.check("b3");
  auto& b4 = r.check("b4");
  for (Arrow a = 0; a < s.arrows(); ++a) {
    const Arrow fa = f.arrow_map[a];
    b1.expect(f.object_map[s.source(a)] == t.source(fa), {a});
    b2.expect(f.object_map[s.target(a)] == t.target(fa), {a});
  }
  for (Object x = 0; x < s.objects(); ++x) {
    b3.expect(f.arrow_map[s.identity(x)] == t.identity(f.object_map[x]), {x});
  }
  for (Arrow a = 0; a < s.arrows(); ++a) {
    for (Arrow b = 0; b < s.arrows(); ++b) {
      const auto ab = s.product(a, b);
      if (!ab) continue;
      const auto image = t.product(f.arrow_map[a], f.arrow_map[b]);
      b4.expect(image && *image == f.arrow_map[*ab], {a, b},
                image ? "images multiply to " + std::to_string(*image) : "images not composable");
    }
  }
  return r;
}

QgpdMorphism compose(const QgpdMorphism& g, const QgpdMorphism& f) {
  if (!(f.target == g.source)) {
    throw Error(ErrorCode::CompositionMismatch, "codomain of the first map is not the domain of the second");
  }
  require_shape(f);
  require_shape(g);
  QgpdMorphism h{f.source, g.target, {}, {}};
  for (Object x : f.object_map) h.object_map.push_back(g.object_map[x]);
  for (Arrow a : f.arrow_map) h.arrow_map.push_back(g.arrow_map[a]);
  return h;
}

bool is_injective(const QgpdMorphism& f) {
  return injective(f.object_map, f.target.objects()) && injective(f.arrow_map, f.target.arrows());
}

bool is_surjective(const QgpdMorphism& f) {
  return surjective(f.object_map, f.target.objects()) && surjective(f.arrow_map, f.target.arrows());
}

bool is_isomorphism(const QgpdMorphism& f) { return is_injective(f) && is_surjective(f); }

}  // namespace qgkit
