#pragma once
// Exact linear algebra over a field: sparse basis-indexed vectors, linear
// maps stored by columns, lazily applied tensor products of maps, and rank.
//
// Tensor bases are row-major: e_i ⊗ e_j has index i * n + j, and a tensor
// of k factors is a mixed-radix number whose first factor is the most
// significant digit.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qgkit/error.hpp"

namespace qgkit::linalg {

// ---- scalars --------------------------------------------------------------

inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }

// Element of GF(p). The modulus travels with the value.
struct ModP {
  std::uint32_t v = 0;
  std::uint32_t p = 2;

  friend ModP operator+(ModP a, ModP b) { return {static_cast<std::uint32_t>((std::uint64_t{a.v} + b.v) % a.p), a.p}; }
  friend ModP operator-(ModP a, ModP b) { return {static_cast<std::uint32_t>((std::uint64_t{a.v} + a.p - b.v) % a.p), a.p}; }
  friend ModP operator*(ModP a, ModP b) { return {static_cast<std::uint32_t>(std::uint64_t{a.v} * b.v % a.p), a.p}; }
  ModP operator-() const { return {v == 0 ? 0 : p - v, p}; }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  friend bool operator==(ModP a, ModP b) { return a.v == b.v; }
};

inline bool is_zero(const ModP& x) { return x.v == 0; }

// The rationals, backed by GMP.
struct RationalField {
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long n) const { return n; }
  static value_type inverse(const value_type& x) { return 1 / x; }
  std::string name() const { return "Q"; }
  static std::string format(const value_type& x);
  // "n" or "n/d". Throws Error(SchemaError) on bad syntax and
  // Error(RangeError) on a zero denominator.
  value_type parse(const std::string& text) const;
  bool operator==(const RationalField&) const = default;
};

// GF(p) for a prime p < 2^31.
struct PrimeField {
  using value_type = ModP;

  std::uint32_t p = 2;

  value_type zero() const { return {0, p}; }
  value_type one() const { return {1 % p, p}; }
  value_type from_int(long n) const {
    long r = n % static_cast<long>(p);
    return {static_cast<std::uint32_t>(r < 0 ? r + p : r), p};
  }
  value_type inverse(const value_type& x) const;
  std::string name() const { return "GF" + std::to_string(p); }
  static std::string format(const value_type& x) { return std::to_string(x.v); }
  // Rationals are reduced modulo p; Error(RangeError) if the denominator
  // vanishes.
  value_type parse(const std::string& text) const;
  bool operator==(const PrimeField&) const = default;
};

bool is_prime(std::uint32_t p);

// ---- vectors ----------------------------------------------------------------

template <class T>
struct SparseVector {
  // Sorted by index, no explicit zeros.
  std::vector<std::pair<std::uint64_t, T>> entries;

  bool empty() const { return entries.empty(); }
  bool operator==(const SparseVector& o) const { return entries == o.entries; }
};

// Sorts, merges duplicate indices and drops zeros.
template <class T>
void normalize(std::vector<std::pair<std::uint64_t, T>>& e) {
  std::sort(e.begin(), e.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < e.size();) {
    std::size_t j = i + 1;
    T sum = e[i].second;
    while (j < e.size() && e[j].first == e[i].first) sum += e[j++].second;
    if (!is_zero(sum)) e[out++] = {e[i].first, std::move(sum)};
    i = j;
  }
  e.resize(out);
}

template <class T>
SparseVector<T> make_vector(std::vector<std::pair<std::uint64_t, T>> e) {
  normalize(e);
  return {std::move(e)};
}

template <class T>
SparseVector<T> basis_vector(std::uint64_t i, const T& one) {
  return {{{i, one}}};
}

template <class T>
SparseVector<T> add(const SparseVector<T>& a, const SparseVector<T>& b) {
  auto e = a.entries;
  e.insert(e.end(), b.entries.begin(), b.entries.end());
  return make_vector(std::move(e));
}

template <class T>
SparseVector<T> scale(const T& c, const SparseVector<T>& a) {
  std::vector<std::pair<std::uint64_t, T>> e;
  e.reserve(a.entries.size());
  for (const auto& [i, x] : a.entries) e.emplace_back(i, c * x);
  return make_vector(std::move(e));
}

// Coefficient of e_i.
template <class T>
const T* coefficient(const SparseVector<T>& v, std::uint64_t i) {
  auto it = std::lower_bound(v.entries.begin(), v.entries.end(), i,
                             [](const auto& e, std::uint64_t k) { return e.first < k; });
  if (it == v.entries.end() || it->first != i) return nullptr;
  return &it->second;
}

// v ⊗ w with w of dimension dim_w.
template <class T>
SparseVector<T> tensor(const SparseVector<T>& v, const SparseVector<T>& w, std::uint64_t dim_w) {
  SparseVector<T> out;
  out.entries.reserve(v.entries.size() * w.entries.size());
  for (const auto& [i, x] : v.entries) {
    for (const auto& [j, y] : w.entries) out.entries.emplace_back(i * dim_w + j, x * y);
  }
  return out;
}

std::uint64_t tensor_index(std::uint64_t i, std::uint64_t j, std::uint64_t n);
// Mixed-radix digits of idx, most significant first.
std::vector<std::uint64_t> decode_index(std::uint64_t idx, std::span<const std::uint64_t> dims);

// ---- maps -----------------------------------------------------------------

template <class T>
struct LinearMap {
  std::uint64_t dom = 0;
  std::uint64_t cod = 0;
  std::vector<SparseVector<T>> cols;  // image of each basis vector

  const SparseVector<T>& col(std::uint64_t i) const { return cols[i]; }
  bool operator==(const LinearMap& o) const { return dom == o.dom && cod == o.cod && cols == o.cols; }
};

template <class T>
LinearMap<T> zero_map(std::uint64_t dom, std::uint64_t cod) {
  return {dom, cod, std::vector<SparseVector<T>>(dom)};
}

template <class T>
LinearMap<T> identity_map(std::uint64_t n, const T& one) {
  LinearMap<T> m{n, n, {}};
  m.cols.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) m.cols.push_back(basis_vector(i, one));
  return m;
}

// A map whose basis vectors go to basis vectors (or to zero, for kUndefined
// style sentinels passed as `none`).
template <class T>
LinearMap<T> basis_map(std::uint64_t cod, const std::vector<std::uint64_t>& images, const T& one,
                       std::uint64_t none = ~std::uint64_t{0}) {
  LinearMap<T> m{images.size(), cod, {}};
  m.cols.reserve(images.size());
  for (std::uint64_t x : images) m.cols.push_back(x == none ? SparseVector<T>{} : basis_vector(x, one));
  return m;
}

template <class T>
SparseVector<T> apply(const LinearMap<T>& f, const SparseVector<T>& v) {
  std::vector<std::pair<std::uint64_t, T>> e;
  for (const auto& [i, x] : v.entries) {
    for (const auto& [j, y] : f.cols[i].entries) e.emplace_back(j, x * y);
  }
  return make_vector(std::move(e));
}

// One factor of a tensor product of maps; a null map is the identity on a
// space of dimension `dim`.
template <class T>
struct Factor {
  const LinearMap<T>* map = nullptr;
  std::uint64_t dim = 0;

  std::uint64_t dom() const { return map ? map->dom : dim; }
  std::uint64_t cod() const { return map ? map->cod : dim; }
};

template <class T>
Factor<T> id_factor(std::uint64_t n) {
  return {nullptr, n};
}
template <class T>
Factor<T> map_factor(const LinearMap<T>& m) {
  return {&m, 0};
}

// (f_1 ⊗ ... ⊗ f_k)(v) without materializing the product map.
template <class T>
SparseVector<T> apply_tensor(std::span<const Factor<T>> fs, const SparseVector<T>& v) {
  const std::size_t k = fs.size();
  std::vector<std::uint64_t> digits(k);
  std::vector<std::pair<std::uint64_t, T>> out;
  for (const auto& [idx, c] : v.entries) {
    std::uint64_t x = idx;
    for (std::size_t i = k; i-- > 0;) {
      digits[i] = x % fs[i].dom();
      x /= fs[i].dom();
    }
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t index, const T& coef) -> void {
      if (i == k) {
        out.emplace_back(index, coef);
        return;
      }
      const std::uint64_t base = index * fs[i].cod();
      if (!fs[i].map) {
        self(self, i + 1, base + digits[i], coef);
        return;
      }
      for (const auto& [j, y] : fs[i].map->cols[digits[i]].entries) self(self, i + 1, base + j, coef * y);
    };
    rec(rec, 0, 0, c);
  }
  return make_vector(std::move(out));
}

template <class T>
SparseVector<T> apply_tensor(std::initializer_list<Factor<T>> fs, const SparseVector<T>& v) {
  return apply_tensor(std::span<const Factor<T>>(fs.begin(), fs.size()), v);
}

// Builds a map column by column from a function on basis vectors.
template <class T, class Fn>
LinearMap<T> materialize(std::uint64_t dom, std::uint64_t cod, const T& one, Fn&& fn) {
  LinearMap<T> m{dom, cod, {}};
  m.cols.reserve(dom);
  for (std::uint64_t i = 0; i < dom; ++i) m.cols.push_back(fn(basis_vector(i, one)));
  return m;
}

template <class T>
LinearMap<T> compose(const LinearMap<T>& g, const LinearMap<T>& f) {
  if (g.dom != f.cod) throw Error(ErrorCode::DimensionMismatch, "compose: inner codomain differs from outer domain");
  LinearMap<T> m{f.dom, g.cod, {}};
  m.cols.reserve(f.dom);
  for (const auto& c : f.cols) m.cols.push_back(apply(g, c));
  return m;
}

template <class T>
LinearMap<T> add(const LinearMap<T>& f, const LinearMap<T>& g) {
  if (f.dom != g.dom || f.cod != g.cod) throw Error(ErrorCode::DimensionMismatch, "add: shapes differ");
  LinearMap<T> m{f.dom, f.cod, {}};
  for (std::uint64_t i = 0; i < f.dom; ++i) m.cols.push_back(add(f.cols[i], g.cols[i]));
  return m;
}

template <class T>
LinearMap<T> scale(const T& c, const LinearMap<T>& f) {
  LinearMap<T> m{f.dom, f.cod, {}};
  for (const auto& col : f.cols) m.cols.push_back(scale(c, col));
  return m;
}

template <class T>
LinearMap<T> tensor_of_maps(const LinearMap<T>& f, const LinearMap<T>& g) {
  LinearMap<T> m{f.dom * g.dom, f.cod * g.cod, {}};
  m.cols.reserve(m.dom);
  for (std::uint64_t i = 0; i < f.dom; ++i) {
    for (std::uint64_t j = 0; j < g.dom; ++j) {
      auto e = tensor(f.cols[i], g.cols[j], g.cod).entries;
      m.cols.push_back(make_vector(std::move(e)));
    }
  }
  return m;
}

template <class T>
bool map_equal(const LinearMap<T>& f, const LinearMap<T>& g) {
  if (f.dom != g.dom || f.cod != g.cod) throw Error(ErrorCode::DimensionMismatch, "map_equal: shapes differ");
  return f.cols == g.cols;
}

// c_{m,n}: e_i ⊗ e_j -> e_j ⊗ e_i for i < m, j < n.
template <class T>
LinearMap<T> twist(std::uint64_t m, std::uint64_t n, const T& one) {
  if (m == 0 || n == 0) throw Error(ErrorCode::DimensionMismatch, "twist of a zero space");
  std::vector<std::uint64_t> images(m * n);
  for (std::uint64_t i = 0; i < m; ++i) {
    for (std::uint64_t j = 0; j < n; ++j) images[i * n + j] = j * m + i;
  }
  return basis_map(m * n, images, one);
}

template <class T>
struct Coalgebra {
  LinearMap<T> coproduct;  // n -> n²
  LinearMap<T> counit;     // n -> 1
};

// Group-like basis: δ(e_s) = e_s ⊗ e_s, ε(e_s) = 1.
template <class T>
Coalgebra<T> free_coalgebra(std::uint64_t n, const T& one) {
  Coalgebra<T> c{{n, n * n, {}}, {n, 1, {}}};
  for (std::uint64_t s = 0; s < n; ++s) {
    c.coproduct.cols.push_back(basis_vector(s * n + s, one));
    c.counit.cols.push_back(basis_vector(0, one));
  }
  return c;
}

// (f ∗ g)(c) = μ((f ⊗ g)(δ(c))).
template <class T>
LinearMap<T> convolution(const LinearMap<T>& f, const LinearMap<T>& g, const LinearMap<T>& delta,
                         const LinearMap<T>& mu) {
  const std::uint64_t n = f.dom;
  if (g.dom != n || delta.dom != n || delta.cod != n * n || f.cod != g.cod || mu.dom != f.cod * f.cod) {
    throw Error(ErrorCode::DimensionMismatch, "convolution: incompatible shapes");
  }
  LinearMap<T> m{n, mu.cod, {}};
  m.cols.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    m.cols.push_back(apply(mu, apply_tensor({map_factor(f), map_factor(g)}, delta.cols[i])));
  }
  return m;
}

// ---- rank -------------------------------------------------------------------

// Rank of the matrix whose columns are given (each of dimension rows).
std::size_t rank(const RationalField& field, const std::vector<SparseVector<mpq_class>>& columns, std::uint64_t rows);
std::size_t rank(const PrimeField& field, const std::vector<SparseVector<ModP>>& columns, std::uint64_t rows);

template <class F>
bool same_column_space(const F& field, const LinearMap<typename F::value_type>& a,
                       const LinearMap<typename F::value_type>& b) {
  if (a.cod != b.cod) throw Error(ErrorCode::DimensionMismatch, "column spaces of different ambient spaces");
  const std::size_t ra = rank(field, a.cols, a.cod);
  const std::size_t rb = rank(field, b.cols, b.cod);
  auto both = a.cols;
  both.insert(both.end(), b.cols.begin(), b.cols.end());
  return ra == rb && rank(field, both, a.cod) == ra;
}

}  // namespace qgkit::linalg
