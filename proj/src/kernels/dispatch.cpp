#include "qgkit/kernels.hpp"

namespace qgkit::kernels {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() {
  static const Isa isa = available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
  return isa;
}

namespace {
bool use_avx2(Isa isa) { return isa == Isa::Avx2 && available(Isa::Avx2); }
}  // namespace

std::optional<Triple> associativity_witness(std::span<const std::uint32_t> table,
                                            std::uint32_t n, Isa isa) {
  return use_avx2(isa) ? avx2::associativity_witness(table, n)
                       : scalar::associativity_witness(table, n);
}

std::optional<std::uint32_t> left_inverse_failure(std::span<const std::uint32_t> table,
                                                  std::uint32_t n, std::uint32_t u,
                                                  std::uint32_t w, Isa isa) {
  return use_avx2(isa) ? avx2::left_inverse_failure(table, n, u, w)
                       : scalar::left_inverse_failure(table, n, u, w);
}

std::optional<std::uint32_t> right_inverse_failure(std::span<const std::uint32_t> table,
                                                   std::uint32_t n, std::uint32_t u,
                                                   std::uint32_t w, Isa isa) {
  return use_avx2(isa) ? avx2::right_inverse_failure(table, n, u, w)
                       : scalar::right_inverse_failure(table, n, u, w);
}

void gf_axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
             std::uint32_t factor, std::uint32_t p, Isa isa) {
  if (use_avx2(isa)) {
    avx2::gf_axpy(dst, src, factor, p);
  } else {
    scalar::gf_axpy(dst, src, factor, p);
  }
}

}  // namespace qgkit::kernels
