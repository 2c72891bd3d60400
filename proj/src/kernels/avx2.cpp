#include "qgkit/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace qgkit::kernels::avx2 {

#if defined(__AVX2__)

namespace {

inline const int* as_int(const std::uint32_t* p) { return reinterpret_cast<const int*>(p); }

inline __m256i load8(const std::uint32_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

// Bit i set when lane i differs.
inline unsigned mismatch_mask(__m256i a, __m256i b) {
  const __m256i eq = _mm256_cmpeq_epi32(a, b);
  return ~static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq))) & 0xffu;
}

const __m256i kIota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);

}  // namespace

std::optional<Triple> associativity_witness(std::span<const std::uint32_t> t, std::uint32_t n) {
  const std::uint32_t* base = t.data();
  const std::uint32_t body = n & ~7u;
  for (std::uint32_t u = 0; u < n; ++u) {
    const __m256i row_u = _mm256_set1_epi32(static_cast<int>(u * n));
    for (std::uint32_t v = 0; v < n; ++v) {
      const std::uint32_t uv = base[u * n + v];
      const std::uint32_t* left_row = base + uv * n;
      const std::uint32_t* row_v = base + v * n;
      std::uint32_t w = 0;
      for (; w < body; w += 8) {
        const __m256i left = load8(left_row + w);
        const __m256i idx = _mm256_add_epi32(load8(row_v + w), row_u);
        const __m256i right = _mm256_i32gather_epi32(as_int(base), idx, 4);
        if (const unsigned m = mismatch_mask(left, right)) {
          return Triple{u, v, w + static_cast<std::uint32_t>(__builtin_ctz(m))};
        }
      }
      for (; w < n; ++w) {
        if (left_row[w] != base[u * n + row_v[w]]) return Triple{u, v, w};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::uint32_t> left_inverse_failure(std::span<const std::uint32_t> t,
                                                  std::uint32_t n, std::uint32_t u,
                                                  std::uint32_t w) {
  const std::uint32_t* base = t.data();
  const std::uint32_t* row_u = base + u * n;
  const __m256i row_w = _mm256_set1_epi32(static_cast<int>(w * n));
  const std::uint32_t body = n & ~7u;
  std::uint32_t v = 0;
  for (; v < body; v += 8) {
    const __m256i idx = _mm256_add_epi32(load8(row_u + v), row_w);
    const __m256i got = _mm256_i32gather_epi32(as_int(base), idx, 4);
    const __m256i want = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(v)), kIota);
    if (const unsigned m = mismatch_mask(got, want)) {
      return v + static_cast<std::uint32_t>(__builtin_ctz(m));
    }
  }
  for (; v < n; ++v) {
    if (base[w * n + row_u[v]] != v) return v;
  }
  return std::nullopt;
}

std::optional<std::uint32_t> right_inverse_failure(std::span<const std::uint32_t> t,
                                                   std::uint32_t n, std::uint32_t u,
                                                   std::uint32_t w) {
  const std::uint32_t* base = t.data();
  const __m256i vn = _mm256_set1_epi32(static_cast<int>(n));
  const __m256i vu = _mm256_set1_epi32(static_cast<int>(u));
  const __m256i vw = _mm256_set1_epi32(static_cast<int>(w));
  const std::uint32_t body = n & ~7u;
  std::uint32_t v = 0;
  for (; v < body; v += 8) {
    const __m256i vs = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(v)), kIota);
    const __m256i col_idx = _mm256_add_epi32(_mm256_mullo_epi32(vs, vn), vu);
    const __m256i vu_prod = _mm256_i32gather_epi32(as_int(base), col_idx, 4);
    const __m256i idx = _mm256_add_epi32(_mm256_mullo_epi32(vu_prod, vn), vw);
    const __m256i got = _mm256_i32gather_epi32(as_int(base), idx, 4);
    if (const unsigned m = mismatch_mask(got, vs)) {
      return v + static_cast<std::uint32_t>(__builtin_ctz(m));
    }
  }
  for (; v < n; ++v) {
    if (base[base[v * n + u] * n + w] != v) return v;
  }
  return std::nullopt;
}

void gf_axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
             std::uint32_t factor, std::uint32_t p) {
  if (p >= kSimdModulusLimit) {
    scalar::gf_axpy(dst, src, factor, p);
    return;
  }
  // Barrett reduction with m = floor(2^32 / p): for x < 2^31 the quotient
  // estimate is off by at most one, fixed by a single conditional subtract.
  const std::uint32_t magic = static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(magic));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(factor));
  const __m256i hi_mask = _mm256_set1_epi64x(static_cast<long long>(0xffffffff00000000ull));
  const std::size_t size = dst.size();
  const std::size_t body = size & ~std::size_t{7};
  std::size_t i = 0;
  for (; i < body; i += 8) {
    const __m256i d = load8(dst.data() + i);
    const __m256i s = load8(src.data() + i);
    const __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vf));
    const __m256i q_even = _mm256_srli_epi64(_mm256_mul_epu32(x, vm), 32);
    const __m256i q_odd = _mm256_and_si256(_mm256_mul_epu32(_mm256_srli_epi64(x, 32), vm), hi_mask);
    const __m256i q = _mm256_or_si256(q_even, q_odd);
    const __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
    const __m256i reduced = _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), reduced);
  }
  if (i < size) scalar::gf_axpy(dst.subspan(i), src.subspan(i), factor, p);
}

#else  // no AVX2 at compile time: never selected by dispatch

std::optional<Triple> associativity_witness(std::span<const std::uint32_t> t, std::uint32_t n) {
  return scalar::associativity_witness(t, n);
}
std::optional<std::uint32_t> left_inverse_failure(std::span<const std::uint32_t> t,
                                                  std::uint32_t n, std::uint32_t u,
                                                  std::uint32_t w) {
  return scalar::left_inverse_failure(t, n, u, w);
}
std::optional<std::uint32_t> right_inverse_failure(std::span<const std::uint32_t> t,
                                                   std::uint32_t n, std::uint32_t u,
                                                   std::uint32_t w) {
  return scalar::right_inverse_failure(t, n, u, w);
}
void gf_axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
             std::uint32_t factor, std::uint32_t p) {
  scalar::gf_axpy(dst, src, factor, p);
}

#endif

}  // namespace qgkit::kernels::avx2
