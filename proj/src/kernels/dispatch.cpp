#include <atomic>
#include <cstdlib>
#include <cstring>

#include "delcode/kernels.hpp"

namespace delcode::kernels {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial() noexcept {
  const char* env = std::getenv("DELCODE_FORCE_SCALAR");
  if (env != nullptr && std::strcmp(env, "0") != 0 && *env != '\0') return Isa::scalar;
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() noexcept {
  static std::atomic<Isa> isa{initial()};
  return isa;
}

}  // namespace

bool available(Isa isa) noexcept { return isa == Isa::scalar || cpu_has_avx2(); }

Isa active() noexcept { return current().load(std::memory_order_relaxed); }

void force(Isa isa) noexcept {
  current().store(available(isa) ? isa : Isa::scalar, std::memory_order_relaxed);
}

const char* name(Isa isa) noexcept { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void psi(const std::uint8_t* x, std::size_t n, unsigned q, std::uint8_t* y) {
  if (active() == Isa::avx2) return avx2::psi(x, n, q, y);
  scalar::psi(x, n, q, y);
}

VtSum vt_sum(const std::uint8_t* y, std::size_t n) {
  if (active() == Isa::avx2) return avx2::vt_sum(y, n);
  return scalar::vt_sum(y, n);
}

std::size_t first_window_outside(const std::uint8_t* y, std::size_t n, std::size_t m,
                                 std::int64_t lo, std::int64_t hi, std::size_t from) {
  if (active() == Isa::avx2) return avx2::first_window_outside(y, n, m, lo, hi, from);
  return scalar::first_window_outside(y, n, m, lo, hi, from);
}

}  // namespace delcode::kernels
