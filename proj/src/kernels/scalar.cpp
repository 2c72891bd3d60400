#include "qgkit/kernels.hpp"

namespace qgkit::kernels::scalar {

std::optional<Triple> associativity_witness(std::span<const std::uint32_t> t, std::uint32_t n) {
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = 0; v < n; ++v) {
      const std::uint32_t uv = t[u * n + v];
      for (std::uint32_t w = 0; w < n; ++w) {
        if (t[uv * n + w] != t[u * n + t[v * n + w]]) return Triple{u, v, w};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::uint32_t> left_inverse_failure(std::span<const std::uint32_t> t,
                                                  std::uint32_t n, std::uint32_t u,
                                                  std::uint32_t w) {
  for (std::uint32_t v = 0; v < n; ++v) {
    if (t[w * n + t[u * n + v]] != v) return v;
  }
  return std::nullopt;
}

std::optional<std::uint32_t> right_inverse_failure(std::span<const std::uint32_t> t,
                                                   std::uint32_t n, std::uint32_t u,
                                                   std::uint32_t w) {
  for (std::uint32_t v = 0; v < n; ++v) {
    if (t[t[v * n + u] * n + w] != v) return v;
  }
  return std::nullopt;
}

void gf_axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
             std::uint32_t factor, std::uint32_t p) {
  const std::uint64_t f = factor;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + f * src[i]) % p);
  }
}

}  // namespace qgkit::kernels::scalar
