#pragma once

// Data-parallel inner loops used by the exhaustive sweeps. Every kernel has
// a portable scalar reference and an AVX2 variant; callers go through the
// dispatching entry points, which pick the widest variant the running CPU
// supports. The scalar variants define the semantics and the SIMD variants
// are tested for exact equivalence against them.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace qgkit::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

// Best instruction set usable on this machine.
Isa detected_isa();
bool available(Isa isa);

struct Triple {
  std::uint32_t u, v, w;
  bool operator==(const Triple&) const = default;
};

// Cayley tables are n×n, row-major, entries < n.

// Lexicographically smallest (u, v, w) with (u·v)·w != u·(v·w).
std::optional<Triple> associativity_witness(std::span<const std::uint32_t> table,
                                            std::uint32_t n, Isa isa = detected_isa());

// Smallest v with w·(u·v) != v.
std::optional<std::uint32_t> left_inverse_failure(std::span<const std::uint32_t> table,
                                                  std::uint32_t n, std::uint32_t u,
                                                  std::uint32_t w, Isa isa = detected_isa());

// Smallest v with (v·u)·w != v.
std::optional<std::uint32_t> right_inverse_failure(std::span<const std::uint32_t> table,
                                                   std::uint32_t n, std::uint32_t u,
                                                   std::uint32_t w, Isa isa = detected_isa());

// dst[i] = (dst[i] + factor * src[i]) mod p, with every input already reduced.
// The SIMD path requires p < 2^15 and falls back to scalar otherwise.
void gf_axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
             std::uint32_t factor, std::uint32_t p, Isa isa = detected_isa());

inline constexpr std::uint32_t kSimdModulusLimit = 1u << 15;

namespace scalar {
std::optional<Triple> associativity_witness(std::span<const std::uint32_t> table, std::uint32_t n);
std::optional<std::uint32_t> left_inverse_failure(std::span<const std::uint32_t> table,
                                                  std::uint32_t n, std::uint32_t u,
                                                  std::uint32_t w);
std::optional<std::uint32_t> right_inverse_failure(std::span<const std::uint32_t> table,
                                                   std::uint32_t n, std::uint32_t u,
                                                   std::uint32_t w);
void gf_axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
             std::uint32_t factor, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
// Only callable when available(Isa::Avx2).
std::optional<Triple> associativity_witness(std::span<const std::uint32_t> table, std::uint32_t n);
std::optional<std::uint32_t> left_inverse_failure(std::span<const std::uint32_t> table,
                                                  std::uint32_t n, std::uint32_t u,
                                                  std::uint32_t w);
std::optional<std::uint32_t> right_inverse_failure(std::span<const std::uint32_t> table,
                                                   std::uint32_t n, std::uint32_t u,
                                                   std::uint32_t w);
void gf_axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
             std::uint32_t factor, std::uint32_t p);
}  // namespace avx2

}  // namespace qgkit::kernels
