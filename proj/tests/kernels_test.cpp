#include <doctest.h>

#include <random>
#include <vector>

#include "qgkit/kernels.hpp"
#include "qgkit/quasigroup.hpp"
#include "qgkit/stock.hpp"

using namespace qgkit;
namespace k = qgkit::kernels;

namespace {

std::vector<std::uint32_t> random_table(std::uint32_t n, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, n - 1);
  std::vector<std::uint32_t> t(n * n);
  for (auto& x : t) x = d(rng);
  return t;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar associativity witness on known tables") {
    const auto z4 = cyclic_group(4);
    CHECK_FALSE(k::scalar::associativity_witness(z4.table(), 4).has_value());
    const auto m = stock::ms3();
    const auto w = k::scalar::associativity_witness(m.table(), m.order());
    REQUIRE(w.has_value());
    CHECK(m.mul(m.mul(w->u, w->v), w->w) != m.mul(w->u, m.mul(w->v, w->w)));
  }

  TEST_CASE("avx2 matches scalar on random and structured tables") {
    if (!k::available(k::Isa::Avx2)) {
      MESSAGE("AVX2 not available, equivalence not exercised");
      return;
    }
    std::mt19937 rng(7);
    std::vector<std::vector<std::uint32_t>> tables;
    std::vector<std::uint32_t> orders;
    for (std::uint32_t n : {1u, 2u, 3u, 7u, 8u, 9u, 12u, 17u, 33u}) {
      tables.push_back(random_table(n, rng));
      orders.push_back(n);
    }
    for (const auto& g : small_groups()) {
      tables.emplace_back(g.table().begin(), g.table().end());
      orders.push_back(g.order());
    }
    const auto m = chein_double(symmetric_group(3));
    tables.emplace_back(m.table().begin(), m.table().end());
    orders.push_back(m.order());
    for (std::size_t i = 0; i < tables.size(); ++i) {
      const auto n = orders[i];
      CAPTURE(n);
      CHECK(k::scalar::associativity_witness(tables[i], n) == k::avx2::associativity_witness(tables[i], n));
      for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t w = 0; w < n; ++w) {
          CHECK(k::scalar::left_inverse_failure(tables[i], n, u, w) == k::avx2::left_inverse_failure(tables[i], n, u, w));
          CHECK(k::scalar::right_inverse_failure(tables[i], n, u, w) ==
                k::avx2::right_inverse_failure(tables[i], n, u, w));
        }
      }
    }
  }

  TEST_CASE("gf_axpy variants agree") {
    std::mt19937 rng(11);
    for (std::uint32_t p : {2u, 3u, 251u, 32749u, 65537u, 2147483647u}) {
      for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 64u, 101u}) {
        std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
        std::vector<std::uint32_t> dst(len), src(len);
        for (auto& x : dst) x = d(rng);
        for (auto& x : src) x = d(rng);
        const std::uint32_t f = d(rng);
        auto ref = dst;
        k::scalar::gf_axpy(ref, src, f, p);
        for (std::size_t i = 0; i < len; ++i) {
          CHECK(ref[i] == static_cast<std::uint32_t>((std::uint64_t{dst[i]} + std::uint64_t{f} * src[i]) % p));
        }
        auto got = dst;
        k::gf_axpy(got, src, f, p);
        CHECK(got == ref);
        if (k::available(k::Isa::Avx2)) {
          auto simd = dst;
          k::gf_axpy(simd, src, f, p, k::Isa::Avx2);
          CHECK(simd == ref);
        }
      }
    }
  }

  TEST_CASE("dispatch reports a usable isa") {
    CHECK(k::available(k::Isa::Scalar));
    CHECK(k::available(k::detected_isa()));
    CHECK_FALSE(k::to_string(k::detected_isa()).empty());
  }
}
