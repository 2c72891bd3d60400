#include "qgkit/linalg.hpp"

#include <cctype>

#include "qgkit/kernels.hpp"

namespace qgkit::linalg {

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

// Splits "n" or "n/d" into validated integer literals.
std::pair<mpz_class, mpz_class> split_fraction(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw Error(ErrorCode::SchemaError, "malformed coefficient \"" + text + "\"");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den[0] == '+' ? den.substr(1) : den, 10);
  if (d == 0) throw Error(ErrorCode::RangeError, "zero denominator in \"" + text + "\"");
  return {n, d};
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

std::string RationalField::format(const value_type& x) { return x.get_str(); }

RationalField::value_type RationalField::parse(const std::string& text) const {
  auto [n, d] = split_fraction(text);
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

PrimeField::value_type PrimeField::inverse(const value_type& x) const {
  if (x.v == 0) throw Error(ErrorCode::RangeError, "inverse of zero");
  // Fermat: x^(p-2).
  std::uint64_t result = 1, base = x.v, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return {static_cast<std::uint32_t>(result), p};
}

PrimeField::value_type PrimeField::parse(const std::string& text) const {
  auto [n, d] = split_fraction(text);
  const value_type dv{reduce(d, p), p};
  if (dv.v == 0) throw Error(ErrorCode::RangeError, "denominator of \"" + text + "\" vanishes mod " + std::to_string(p));
  return value_type{reduce(n, p), p} * inverse(dv);
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t tensor_index(std::uint64_t i, std::uint64_t j, std::uint64_t n) { return i * n + j; }

std::vector<std::uint64_t> decode_index(std::uint64_t idx, std::span<const std::uint64_t> dims) {
  std::vector<std::uint64_t> out(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    out[i] = idx % dims[i];
    idx /= dims[i];
  }
  return out;
}

std::size_t rank(const RationalField&, const std::vector<SparseVector<mpq_class>>& columns, std::uint64_t rows) {
  // Rows of the transpose: one per column vector.
  std::vector<std::vector<mpq_class>> m;
  m.reserve(columns.size());
  for (const auto& c : columns) {
    if (c.empty()) continue;
    std::vector<mpq_class> row(rows);
    for (const auto& [i, x] : c.entries) row[i] = x;
    m.push_back(std::move(row));
  }
  std::size_t r = 0;
  for (std::uint64_t col = 0; col < rows && r < m.size(); ++col) {
    std::size_t piv = r;
    while (piv < m.size() && sgn(m[piv][col]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t k = r + 1; k < m.size(); ++k) {
      if (sgn(m[k][col]) == 0) continue;
      const mpq_class f = m[k][col] / m[r][col];
      for (std::uint64_t j = col; j < rows; ++j) m[k][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::size_t rank(const PrimeField& field, const std::vector<SparseVector<ModP>>& columns, std::uint64_t rows) {
  const std::uint32_t p = field.p;
  std::vector<std::vector<std::uint32_t>> m;
  m.reserve(columns.size());
  for (const auto& c : columns) {
    if (c.empty()) continue;
    std::vector<std::uint32_t> row(rows);
    for (const auto& [i, x] : c.entries) row[i] = x.v;
    m.push_back(std::move(row));
  }
  std::size_t r = 0;
  for (std::uint64_t col = 0; col < rows && r < m.size(); ++col) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const std::uint32_t inv = field.inverse({m[r][col], p}).v;
    for (std::size_t k = r + 1; k < m.size(); ++k) {
      if (m[k][col] == 0) continue;
      const auto f = static_cast<std::uint32_t>(std::uint64_t{m[k][col]} * inv % p);
      kernels::gf_axpy(m[k], m[r], f == 0 ? 0 : p - f, p);
    }
    ++r;
  }
  return r;
}

}  // namespace qgkit::linalg
