#pragma once

#include <cstddef>
#include <cstdint>

// Hot loops with a scalar reference and an AVX2 variant chosen at runtime.
namespace delcode::kernels {

enum class Isa { scalar, avx2 };

bool available(Isa isa) noexcept;
Isa active() noexcept;
// Overrides runtime selection; falls back to scalar if isa is unavailable.
// DELCODE_FORCE_SCALAR=1 in the environment has the same effect at startup.
void force(Isa isa) noexcept;
const char* name(Isa isa) noexcept;

struct VtSum {
  std::int64_t vt = 0;
  std::int64_t sum = 0;
};

// y[0..n] from x[0..n-1]: y[i] = (x[i-1] - x[i]) mod q with zero padding.
void psi(const std::uint8_t* x, std::size_t n, unsigned q, std::uint8_t* y);
// vt = sum (i+1)*y[i], sum = sum y[i].
VtSum vt_sum(const std::uint8_t* y, std::size_t n);
// Start of the first length-m window at or after `from` whose weight lies
// outside [lo, hi]; returns n when there is none (or n < m).
std::size_t first_window_outside(const std::uint8_t* y, std::size_t n, std::size_t m,
                                 std::int64_t lo, std::int64_t hi, std::size_t from);

namespace scalar {
void psi(const std::uint8_t* x, std::size_t n, unsigned q, std::uint8_t* y);
VtSum vt_sum(const std::uint8_t* y, std::size_t n);
std::size_t first_window_outside(const std::uint8_t* y, std::size_t n, std::size_t m,
                                 std::int64_t lo, std::int64_t hi, std::size_t from);
}  // namespace scalar

namespace avx2 {
void psi(const std::uint8_t* x, std::size_t n, unsigned q, std::uint8_t* y);
VtSum vt_sum(const std::uint8_t* y, std::size_t n);
std::size_t first_window_outside(const std::uint8_t* y, std::size_t n, std::size_t m,
                                 std::int64_t lo, std::int64_t hi, std::size_t from);
}  // namespace avx2

}  // namespace delcode::kernels
