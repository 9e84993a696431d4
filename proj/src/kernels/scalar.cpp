#include "delcode/kernels.hpp"

namespace delcode::kernels::scalar {

void psi(const std::uint8_t* x, std::size_t n, unsigned q, std::uint8_t* y) {
  unsigned prev = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    unsigned cur = i < n ? x[i] : 0;
    y[i] = static_cast<std::uint8_t>(prev >= cur ? prev - cur : prev + q - cur);
    prev = cur;
  }
}

VtSum vt_sum(const std::uint8_t* y, std::size_t n) {
  VtSum r;
  for (std::size_t i = 0; i < n; ++i) {
    r.vt += static_cast<std::int64_t>(i + 1) * y[i];
    r.sum += y[i];
  }
  return r;
}

std::size_t first_window_outside(const std::uint8_t* y, std::size_t n, std::size_t m,
                                 std::int64_t lo, std::int64_t hi, std::size_t from) {
  if (m == 0 || n < m || from > n - m) return n;
  std::int64_t w = 0;
  for (std::size_t k = 0; k < m; ++k) w += y[from + k];
  for (std::size_t i = from;; ++i) {
    if (w < lo || w > hi) return i;
    if (i + m >= n) break;
    w += y[i + m];
    w -= y[i];
  }
  return n;
}

}  // namespace delcode::kernels::scalar
