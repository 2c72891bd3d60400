#include "qgkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qgkit/error.hpp"

namespace qgkit::io {

using json = nlohmann::json;

namespace {

// ---- layout -----------------------------------------------------------------

bool is_scalar(const json& j) { return !j.is_array() && !j.is_object(); }

void layout(const json& j, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + "  " + json(k).dump() + ": ";
      layout(v, indent + 2, out);
    }
    out += "\n" + pad + "}";
    return;
  }
  if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    if (std::all_of(j.begin(), j.end(), is_scalar)) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad + "  ";
      layout(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
    return;
  }
  out += j.dump();
}

// ---- reading ----------------------------------------------------------------

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::SchemaError, "field " + path + ": " + what);
}
[[noreturn]] void range(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::RangeError, "field " + path + ": " + what);
}

const json& field(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) schema(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema(path + "." + key, "missing");
  return *it;
}

void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : obj.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* x) { return k == x; })) {
      schema(path + "." + k, "unknown field");
    }
  }
}

std::uint64_t as_uint(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) schema(path, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

std::uint32_t as_u32(const json& j, const std::string& path) {
  const auto v = as_uint(j, path);
  if (v > 0xfffffffeull) range(path, "value too large");
  return static_cast<std::uint32_t>(v);
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array");
  return j;
}

std::vector<std::uint32_t> u32_list(const json& j, const std::string& path) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i) out.push_back(as_u32(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

void below(std::uint64_t v, std::uint64_t bound, const std::string& path, const char* what) {
  if (v >= bound) range(path, std::to_string(v) + " is not a valid " + what + " (bound " + std::to_string(bound) + ")");
}

std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

QuasigroupDoc read_quasigroup(const json& j, const std::string& path, bool top) {
  if (top) {
    only_keys(j, path, {"kind", "version", "order", "identity", "table", "names"});
  } else {
    only_keys(j, path, {"order", "identity", "table", "names"});
  }
  QuasigroupDoc d;
  d.order = as_u32(field(j, path, "order"), path + ".order");
  if (d.order == 0) range(path + ".order", "must be positive");
  d.identity = as_u32(field(j, path, "identity"), path + ".identity");
  below(d.identity, d.order, path + ".identity", "element");
  const auto& rows = as_array(field(j, path, "table"), path + ".table");
  if (rows.size() != d.order) schema(path + ".table", "expected " + std::to_string(d.order) + " rows");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto row = u32_list(rows[r], idx(path + ".table", r));
    if (row.size() != d.order) schema(idx(path + ".table", r), "expected " + std::to_string(d.order) + " entries");
    for (std::size_t c = 0; c < row.size(); ++c) below(row[c], d.order, idx(idx(path + ".table", r), c), "element");
    d.table.insert(d.table.end(), row.begin(), row.end());
  }
  if (auto it = j.find("names"); it != j.end()) {
    as_array(*it, path + ".names");
    if (it->size() != d.order) schema(path + ".names", "expected " + std::to_string(d.order) + " names");
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) schema(idx(path + ".names", i), "expected a string");
      d.names.push_back((*it)[i].get<std::string>());
    }
  }
  return d;
}

QuasigroupoidData read_quasigroupoid(const json& j, const std::string& path, bool top) {
  if (top) {
    only_keys(j, path, {"kind", "version", "objects", "source", "target", "identity", "inverse", "product"});
  } else {
    only_keys(j, path, {"objects", "source", "target", "identity", "inverse", "product"});
  }
  QuasigroupoidData d;
  d.objects = as_u32(field(j, path, "objects"), path + ".objects");
  d.source = u32_list(field(j, path, "source"), path + ".source");
  d.target = u32_list(field(j, path, "target"), path + ".target");
  d.identity = u32_list(field(j, path, "identity"), path + ".identity");
  d.inverse = u32_list(field(j, path, "inverse"), path + ".inverse");
  const std::size_t k = d.source.size();
  if (d.target.size() != k) schema(path + ".target", "length differs from source");
  if (d.inverse.size() != k) schema(path + ".inverse", "length differs from source");
  if (d.identity.size() != d.objects) schema(path + ".identity", "expected one entry per object");
  for (std::size_t a = 0; a < k; ++a) {
    below(d.source[a], d.objects, idx(path + ".source", a), "object");
    below(d.target[a], d.objects, idx(path + ".target", a), "object");
    below(d.inverse[a], k, idx(path + ".inverse", a), "arrow");
  }
  for (std::size_t x = 0; x < d.objects; ++x) below(d.identity[x], k, idx(path + ".identity", x), "arrow");
  const auto& prod = as_array(field(j, path, "product"), path + ".product");
  for (std::size_t i = 0; i < prod.size(); ++i) {
    const auto p = idx(path + ".product", i);
    const auto t = u32_list(prod[i], p);
    if (t.size() != 3) schema(p, "expected [left, right, value]");
    for (std::size_t c = 0; c < 3; ++c) below(t[c], k, idx(p, c), "arrow");
    if (d.source[t[0]] != d.target[t[1]]) {
      range(p, "product entry on non-composable pair (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + ")");
    }
    d.product.push_back({t[0], t[1], t[2]});
  }
  return d;
}

std::vector<Triple> read_triples(const json& j, const std::string& path, std::uint64_t h_bound, std::uint64_t a_bound,
                                 std::uint64_t v_bound) {
  std::vector<Triple> out;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i) {
    const auto p = idx(path, i);
    const auto t = u32_list(j[i], p);
    if (t.size() != 3) schema(p, "expected [h, a, value]");
    below(t[0], h_bound, idx(p, 0), "arrow of H");
    below(t[1], a_bound, idx(p, 1), "arrow of A");
    below(t[2], v_bound, idx(p, 2), "arrow");
    out.push_back({t[0], t[1], t[2]});
  }
  return out;
}

std::vector<WhqDoc::Coef> read_coefs(const json& j, const std::string& path, std::size_t arity, std::uint64_t dim) {
  std::vector<WhqDoc::Coef> out;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i) {
    const auto p = idx(path, i);
    const json& e = as_array(j[i], p);
    if (e.size() != arity + 1 || !e[arity].is_string()) {
      schema(p, "expected " + std::to_string(arity) + " indices and a \"num/den\" string");
    }
    WhqDoc::Coef c;
    for (std::size_t t = 0; t < arity; ++t) {
      c.index.push_back(as_uint(e[t], idx(p, t)));
      below(c.index.back(), dim, idx(p, t), "basis index");
    }
    c.value = e[arity].get<std::string>();
    try {
      (void)linalg::RationalField{}.parse(c.value);
    } catch (const Error& err) {
      throw Error(err.code(), "field " + idx(p, arity) + ": " + err.what());
    }
    out.push_back(std::move(c));
  }
  return out;
}

// ---- writing ----------------------------------------------------------------

json write_quasigroup(const QuasigroupDoc& d) {
  json j = json::object();
  j["order"] = d.order;
  j["identity"] = d.identity;
  json rows = json::array();
  for (std::uint32_t r = 0; r < d.order; ++r) {
    rows.push_back(std::vector<std::uint32_t>(d.table.begin() + r * d.order, d.table.begin() + (r + 1) * d.order));
  }
  j["table"] = rows;
  if (!d.names.empty()) j["names"] = d.names;
  return j;
}

json write_quasigroupoid(const QuasigroupoidData& d) {
  json j = json::object();
  j["objects"] = d.objects;
  j["source"] = d.source;
  j["target"] = d.target;
  j["identity"] = d.identity;
  j["inverse"] = d.inverse;
  auto prod = d.product;
  std::sort(prod.begin(), prod.end(),
            [](const ProductEntry& x, const ProductEntry& y) { return std::pair(x.left, x.right) < std::pair(y.left, y.right); });
  json p = json::array();
  for (const auto& e : prod) p.push_back({e.left, e.right, e.value});
  j["product"] = p;
  return j;
}

json write_triples(std::vector<Triple> t) {
  std::sort(t.begin(), t.end());
  json out = json::array();
  for (const auto& x : t) out.push_back({x[0], x[1], x[2]});
  return out;
}

json write_coefs(std::vector<WhqDoc::Coef> cs) {
  std::sort(cs.begin(), cs.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
  json out = json::array();
  for (const auto& c : cs) {
    json e = json::array();
    for (auto i : c.index) e.push_back(i);
    e.push_back(c.value);
    out.push_back(e);
  }
  return out;
}

struct Writer {
  json operator()(const QuasigroupDoc& d) const { return write_quasigroup(d); }
  json operator()(const QuasigroupoidData& d) const { return write_quasigroupoid(d); }
  json operator()(const ActionDoc& d) const {
    json j = json::object();
    j["quasigroup"] = write_quasigroup(d.quasigroup);
    j["points"] = d.points;
    json rows = json::array();
    for (std::uint32_t a = 0; a < d.quasigroup.order; ++a) {
      rows.push_back(std::vector<std::uint32_t>(d.psi.begin() + a * d.points, d.psi.begin() + (a + 1) * d.points));
    }
    j["psi"] = rows;
    return j;
  }
  json operator()(const MatchedPairDoc& d) const {
    json j = json::object();
    j["A"] = write_quasigroupoid(d.a);
    j["H"] = write_quasigroupoid(d.h);
    j["left"] = write_triples(d.left);
    j["right"] = write_triples(d.right);
    return j;
  }
  json operator()(const FactorizationDoc& d) const {
    json j = json::object();
    j["B"] = write_quasigroupoid(d.b);
    j["A"] = write_quasigroupoid(d.a);
    j["H"] = write_quasigroupoid(d.h);
    j["iA"] = d.ia;
    j["iH"] = d.ih;
    return j;
  }
  json operator()(const WhqDoc& d) const {
    json j = json::object();
    j["dimension"] = d.dimension;
    j["unit"] = write_coefs(d.unit);
    j["product"] = write_coefs(d.product);
    j["counit"] = write_coefs(d.counit);
    j["coproduct"] = write_coefs(d.coproduct);
    j["antipode"] = write_coefs(d.antipode);
    return j;
  }
};

}  // namespace

std::string kind_name(const Document& d) {
  static const char* names[] = {"quasigroup", "quasigroupoid", "action", "matched-pair", "factorization", "whq"};
  return names[d.index()];
}

Document parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw Error(ErrorCode::SchemaError, "line " + std::to_string(line) + ": malformed document");
  }
  if (!j.is_object()) schema("$", "expected an object");
  const json& kind = field(j, "$", "kind");
  if (!kind.is_string()) schema("$.kind", "expected a string");
  const json& version = field(j, "$", "version");
  if (!version.is_number_integer() || version.get<int>() != kVersion) {
    schema("$.version", "unsupported version (expected " + std::to_string(kVersion) + ")");
  }
  const std::string k = kind.get<std::string>();
  if (k == "quasigroup") return read_quasigroup(j, "$", true);
  if (k == "quasigroupoid") return read_quasigroupoid(j, "$", true);
  if (k == "action") {
    only_keys(j, "$", {"kind", "version", "quasigroup", "points", "psi"});
    ActionDoc d;
    d.quasigroup = read_quasigroup(field(j, "$", "quasigroup"), "$.quasigroup", false);
    d.points = as_u32(field(j, "$", "points"), "$.points");
    const auto& rows = as_array(field(j, "$", "psi"), "$.psi");
    if (rows.size() != d.quasigroup.order) schema("$.psi", "expected one row per element");
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto row = u32_list(rows[r], idx("$.psi", r));
      if (row.size() != d.points) schema(idx("$.psi", r), "expected one entry per point");
      for (std::size_t c = 0; c < row.size(); ++c) below(row[c], d.points, idx(idx("$.psi", r), c), "point");
      d.psi.insert(d.psi.end(), row.begin(), row.end());
    }
    return d;
  }
  if (k == "matched-pair") {
    only_keys(j, "$", {"kind", "version", "A", "H", "left", "right"});
    MatchedPairDoc d;
    d.a = read_quasigroupoid(field(j, "$", "A"), "$.A", false);
    d.h = read_quasigroupoid(field(j, "$", "H"), "$.H", false);
    const auto na = d.a.arrows(), nh = d.h.arrows();
    d.left = read_triples(field(j, "$", "left"), "$.left", nh, na, na);
    d.right = read_triples(field(j, "$", "right"), "$.right", nh, na, nh);
    return d;
  }
  if (k == "factorization") {
    only_keys(j, "$", {"kind", "version", "A", "B", "H", "iA", "iH"});
    FactorizationDoc d;
    d.b = read_quasigroupoid(field(j, "$", "B"), "$.B", false);
    d.a = read_quasigroupoid(field(j, "$", "A"), "$.A", false);
    d.h = read_quasigroupoid(field(j, "$", "H"), "$.H", false);
    d.ia = u32_list(field(j, "$", "iA"), "$.iA");
    d.ih = u32_list(field(j, "$", "iH"), "$.iH");
    if (d.ia.size() != d.a.arrows()) schema("$.iA", "expected one entry per arrow of A");
    if (d.ih.size() != d.h.arrows()) schema("$.iH", "expected one entry per arrow of H");
    for (std::size_t i = 0; i < d.ia.size(); ++i) below(d.ia[i], d.b.arrows(), idx("$.iA", i), "arrow of B");
    for (std::size_t i = 0; i < d.ih.size(); ++i) below(d.ih[i], d.b.arrows(), idx("$.iH", i), "arrow of B");
    return d;
  }
  if (k == "whq") {
    only_keys(j, "$", {"kind", "version", "dimension", "unit", "product", "counit", "coproduct", "antipode"});
    WhqDoc d;
    d.dimension = as_uint(field(j, "$", "dimension"), "$.dimension");
    if (d.dimension == 0 || d.dimension > 4096) range("$.dimension", "must lie in 1..4096");
    const auto n = d.dimension;
    d.unit = read_coefs(field(j, "$", "unit"), "$.unit", 1, n);
    d.product = read_coefs(field(j, "$", "product"), "$.product", 3, n);
    d.counit = read_coefs(field(j, "$", "counit"), "$.counit", 1, n);
    d.coproduct = read_coefs(field(j, "$", "coproduct"), "$.coproduct", 3, n);
    d.antipode = read_coefs(field(j, "$", "antipode"), "$.antipode", 2, n);
    return d;
  }
  schema("$.kind", "unknown kind \"" + k + "\"");
}

Document read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SchemaError, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse(os.str());
}

std::string emit(const Document& d) {
  json j = std::visit(Writer{}, d);
  j["kind"] = kind_name(d);
  j["version"] = kVersion;
  std::string out;
  layout(j, 0, out);
  out += "\n";
  return out;
}

// ---- conversions ----------------------------------------------------------

QuasigroupDoc to_doc(const FiniteQuasigroup& q) {
  return {q.order(), q.identity(), {q.table().begin(), q.table().end()}, q.names()};
}

FiniteQuasigroup to_quasigroup(const QuasigroupDoc& d) {
  return FiniteQuasigroup::create(d.order, d.table, d.identity, d.names);
}

QuasigroupoidData to_doc(const Quasigroupoid& q) { return q.data(); }

ActionDoc to_doc(const FiniteQuasigroup& q, std::uint32_t points, const std::vector<std::uint32_t>& psi) {
  return {to_doc(q), points, psi};
}

MatchedPairDoc to_doc(const MatchedPairData& mp) {
  MatchedPairDoc d{mp.a.data(), mp.h.data(), {}, {}};
  for (Arrow h = 0; h < mp.h.arrows(); ++h) {
    for (Arrow a = 0; a < mp.a.arrows(); ++a) {
      if (auto v = mp.left.at(h, a)) d.left.push_back({h, a, *v});
      if (auto v = mp.right.at(h, a)) d.right.push_back({h, a, *v});
    }
  }
  return d;
}

MatchedPairData to_matched_pair_data(const MatchedPairDoc& d) {
  Quasigroupoid a = Quasigroupoid::create(d.a);
  Quasigroupoid h = Quasigroupoid::create(d.h);
  auto table = [&](const std::vector<Triple>& entries, const char* name) {
    ActionTable t{h.arrows(), a.arrows(), std::vector<Arrow>(std::size_t{h.arrows()} * a.arrows(), kUndefined)};
    for (const auto& [x, y, v] : entries) {
      const std::string pair = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
      if (h.source(x) != a.target(y)) {
        throw Error(ErrorCode::DomainMismatch, std::string(name) + " entry on non-composable pair " + pair);
      }
      auto& slot = t.values[std::size_t{x} * a.arrows() + y];
      if (slot != kUndefined) throw Error(ErrorCode::DomainMismatch, std::string(name) + " has two entries for " + pair);
      slot = v;
    }
    return t;
  };
  return {a, h, table(d.left, "left"), table(d.right, "right")};
}

FactorizationDoc to_doc(const FactorizationCandidate& c) {
  return {c.b.data(), c.ia.source.data(), c.ih.source.data(), c.ia.arrow_map, c.ih.arrow_map};
}

FactorizationCandidate to_candidate(const FactorizationDoc& d) {
  Quasigroupoid b = Quasigroupoid::create(d.b);
  Quasigroupoid a = Quasigroupoid::create(d.a);
  Quasigroupoid h = Quasigroupoid::create(d.h);
  auto identity_objects = [](const Quasigroupoid& q) {
    std::vector<Object> m(q.objects());
    for (Object x = 0; x < q.objects(); ++x) m[x] = x;
    return m;
  };
  QgpdMorphism ia{a, b, identity_objects(a), d.ia};
  QgpdMorphism ih{h, b, identity_objects(h), d.ih};
  return {b, ia, ih};
}

template <class F>
WhqDoc to_doc(const MagmaCoalgebra<F>& d) {
  WhqDoc out;
  out.dimension = d.n;
  const std::uint64_t n = d.n;
  for (const auto& [i, c] : d.unit.entries) out.unit.push_back({{i}, F::format(c)});
  for (std::uint64_t ij = 0; ij < n * n; ++ij) {
    for (const auto& [k, c] : d.product.cols[ij].entries) out.product.push_back({{ij / n, ij % n, k}, F::format(c)});
  }
  for (std::uint64_t i = 0; i < n; ++i) {
    for (const auto& [z, c] : d.counit.cols[i].entries) {
      (void)z;
      out.counit.push_back({{i}, F::format(c)});
    }
    for (const auto& [jk, c] : d.coproduct.cols[i].entries) out.coproduct.push_back({{i, jk / n, jk % n}, F::format(c)});
    for (const auto& [j, c] : d.antipode.cols[i].entries) out.antipode.push_back({{i, j}, F::format(c)});
  }
  return out;
}

template <class F>
MagmaCoalgebra<F> to_magma(const WhqDoc& doc, const F& field) {
  using T = typename F::value_type;
  const std::uint64_t n = doc.dimension;
  for (const auto* list : {&doc.unit, &doc.product, &doc.counit, &doc.coproduct, &doc.antipode}) {
    for (const auto& c : *list) {
      for (auto i : c.index) {
        if (i >= n) throw Error(ErrorCode::RangeError, "basis index " + std::to_string(i) + " outside dimension");
      }
    }
  }
  MagmaCoalgebra<F> d{field, n, {}, {}, {}, {}, {}};
  std::vector<std::pair<std::uint64_t, T>> unit;
  for (const auto& c : doc.unit) unit.emplace_back(c.index[0], field.parse(c.value));
  d.unit = linalg::make_vector(std::move(unit));
  auto build = [&](const std::vector<WhqDoc::Coef>& cs, std::uint64_t dom, std::uint64_t cod, auto col, auto row) {
    std::vector<std::vector<std::pair<std::uint64_t, T>>> cols(dom);
    for (const auto& c : cs) cols[col(c.index)].emplace_back(row(c.index), field.parse(c.value));
    linalg::LinearMap<T> m{dom, cod, {}};
    for (auto& e : cols) m.cols.push_back(linalg::make_vector(std::move(e)));
    return m;
  };
  using Ix = const std::vector<std::uint64_t>&;
  d.product = build(doc.product, n * n, n, [&](Ix i) { return i[0] * n + i[1]; }, [](Ix i) { return i[2]; });
  d.counit = build(doc.counit, n, 1, [](Ix i) { return i[0]; }, [](Ix) { return std::uint64_t{0}; });
  d.coproduct = build(doc.coproduct, n, n * n, [](Ix i) { return i[0]; }, [&](Ix i) { return i[1] * n + i[2]; });
  d.antipode = build(doc.antipode, n, n, [](Ix i) { return i[0]; }, [](Ix i) { return i[1]; });
  return d;
}

template WhqDoc to_doc(const MagmaCoalgebra<linalg::RationalField>&);
template WhqDoc to_doc(const MagmaCoalgebra<linalg::PrimeField>&);
template MagmaCoalgebra<linalg::RationalField> to_magma(const WhqDoc&, const linalg::RationalField&);
template MagmaCoalgebra<linalg::PrimeField> to_magma(const WhqDoc&, const linalg::PrimeField&);

}  // namespace qgkit::io
