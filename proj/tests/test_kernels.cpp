#include <doctest.h>

#include <random>
#include <vector>

#include "delcode/kernels.hpp"

using namespace delcode;
namespace k = delcode::kernels;

namespace {

std::vector<std::uint8_t> random_symbols(std::mt19937_64& rng, std::size_t n, unsigned q) {
  std::uniform_int_distribution<unsigned> d(0, q - 1);
  std::vector<std::uint8_t> v(n);
  for (auto& s : v) s = static_cast<std::uint8_t>(d(rng));
  return v;
}

}  // namespace

TEST_CASE("dispatch selects a usable variant and can be forced") {
  CHECK(k::available(k::Isa::scalar));
  const k::Isa before = k::active();
  k::force(k::Isa::scalar);
  CHECK(k::active() == k::Isa::scalar);
  k::force(k::Isa::avx2);
  CHECK(k::active() == (k::available(k::Isa::avx2) ? k::Isa::avx2 : k::Isa::scalar));
  k::force(before);
}

TEST_CASE("avx2 and scalar kernels agree") {
  if (!k::available(k::Isa::avx2)) {
    MESSAGE("AVX2 not available; equivalence skipped");
    return;
  }
  std::mt19937_64 rng(7);
  for (unsigned q : {2u, 3u, 4u, 7u, 128u, 200u, 256u}) {
    for (std::size_t n : {0ul, 1ul, 31ul, 32ul, 33ul, 34ul, 63ul, 64ul, 65ul, 100ul, 1000ul, 4099ul}) {
      for (int rep = 0; rep < 4; ++rep) {
        auto x = random_symbols(rng, n, q);
        if (rep == 1) std::fill(x.begin(), x.end(), static_cast<std::uint8_t>(q - 1));
        std::vector<std::uint8_t> a(n + 1), b(n + 1);
        k::scalar::psi(x.data(), n, q, a.data());
        k::avx2::psi(x.data(), n, q, b.data());
        REQUIRE(a == b);
        auto va = k::scalar::vt_sum(x.data(), n);
        auto vb = k::avx2::vt_sum(x.data(), n);
        REQUIRE(va.vt == vb.vt);
        REQUIRE(va.sum == vb.sum);
      }
    }
  }
  for (unsigned q : {2u, 3u, 4u}) {
    for (std::size_t n : {10ul, 50ul, 200ul, 3000ul}) {
      for (std::size_t m : {1ul, 5ul, 17ul, 40ul}) {
        if (m > n) continue;
        for (int rep = 0; rep < 20; ++rep) {
          auto x = random_symbols(rng, n, q);
          const std::int64_t center = static_cast<std::int64_t>((q - 1) * m) / 2;
          const std::int64_t r = rep % 5;
          const std::size_t from = rep % 3 == 0 ? 0 : rng() % n;
          REQUIRE(k::scalar::first_window_outside(x.data(), n, m, center - r, center + r, from) ==
                  k::avx2::first_window_outside(x.data(), n, m, center - r, center + r, from));
        }
      }
    }
  }
}

TEST_CASE("scalar kernels match direct formulas") {
  std::vector<std::uint8_t> x{0, 2, 0, 0};
  std::vector<std::uint8_t> y(5);
  k::scalar::psi(x.data(), 4, 3, y.data());
  CHECK(y == std::vector<std::uint8_t>{0, 1, 2, 0, 0});
  auto vs = k::scalar::vt_sum(y.data(), 5);
  CHECK(vs.vt == 8);
  CHECK(vs.sum == 3);
  std::vector<std::uint8_t> z{1, 1, 0, 1, 1, 1};
  CHECK(k::scalar::first_window_outside(z.data(), 6, 4, 1, 3, 0) == 6);
  CHECK(k::scalar::first_window_outside(z.data(), 6, 4, 1, 2, 0) == 0);
  CHECK(k::scalar::first_window_outside(z.data(), 6, 4, 1, 2, 1) == 1);
  CHECK(k::scalar::first_window_outside(z.data(), 3, 4, 1, 2, 0) == 3);
}
