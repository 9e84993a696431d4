#include "delcode/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#pragma GCC target("avx2")
#include <immintrin.h>

#include <vector>

namespace delcode::kernels::avx2 {

void psi(const std::uint8_t* x, std::size_t n, unsigned q, std::uint8_t* y) {
  if (n < 34) return scalar::psi(x, n, q, y);
  y[0] = x[0] == 0 ? 0 : static_cast<std::uint8_t>(q - x[0]);
  const __m256i qv = _mm256_set1_epi8(static_cast<char>(q & 0xff));
  std::size_t i = 1;
  for (; i + 32 <= n; i += 32) {
    __m256i prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i - 1));
    __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i ge = _mm256_cmpeq_epi8(_mm256_max_epu8(prev, cur), prev);
    __m256i d = _mm256_sub_epi8(prev, cur);
    d = _mm256_add_epi8(d, _mm256_andnot_si256(ge, qv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), d);
  }
  for (; i <= n; ++i) {
    unsigned prev = x[i - 1];
    unsigned cur = i < n ? x[i] : 0;
    y[i] = static_cast<std::uint8_t>(prev >= cur ? prev - cur : prev + q - cur);
  }
}

VtSum vt_sum(const std::uint8_t* y, std::size_t n) {
  const __m256i weights = _mm256_setr_epi8(1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14,
                                           15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25,
                                           26, 27, 28, 29, 30, 31, 32);
  const __m256i ones16 = _mm256_set1_epi16(1);
  const __m256i zero = _mm256_setzero_si256();
  __m256i local = zero;   // sum of (k+1)*y within each block, 64-bit lanes
  __m256i offset = zero;  // sum of block_index * block_sum
  __m256i total = zero;
  std::size_t i = 0;
  std::uint32_t block = 0;
  for (; i + 32 <= n; i += 32, ++block) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i prod = _mm256_madd_epi16(_mm256_maddubs_epi16(v, weights), ones16);
    local = _mm256_add_epi64(local, _mm256_cvtepi32_epi64(_mm256_castsi256_si128(prod)));
    local = _mm256_add_epi64(local, _mm256_cvtepi32_epi64(_mm256_extracti128_si256(prod, 1)));
    __m256i s = _mm256_sad_epu8(v, zero);
    total = _mm256_add_epi64(total, s);
    offset = _mm256_add_epi64(offset, _mm256_mul_epu32(s, _mm256_set1_epi32(static_cast<int>(block))));
  }
  alignas(32) std::int64_t a[4], b[4], c[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(a), local);
  _mm256_store_si256(reinterpret_cast<__m256i*>(b), offset);
  _mm256_store_si256(reinterpret_cast<__m256i*>(c), total);
  VtSum r;
  r.vt = a[0] + a[1] + a[2] + a[3] + 32 * (b[0] + b[1] + b[2] + b[3]);
  r.sum = c[0] + c[1] + c[2] + c[3];
  for (; i < n; ++i) {
    r.vt += static_cast<std::int64_t>(i + 1) * y[i];
    r.sum += y[i];
  }
  return r;
}

std::size_t first_window_outside(const std::uint8_t* y, std::size_t n, std::size_t m,
                                 std::int64_t lo, std::int64_t hi, std::size_t from) {
  if (m == 0 || n < m || from > n - m) return n;
  const std::size_t len = n - from;
  if (len < m + 16 || len > (std::size_t{1} << 23)) {
    return scalar::first_window_outside(y, n, m, lo, hi, from);
  }
  // Window weights never exceed 255 * 2^23 < 2^31 here.
  if (lo < 0) lo = -1;
  if (hi > INT32_MAX) hi = INT32_MAX;
  thread_local std::vector<std::int32_t> prefix;
  prefix.resize(len + 1);
  prefix[0] = 0;
  for (std::size_t k = 0; k < len; ++k) prefix[k + 1] = prefix[k] + y[from + k];

  const std::size_t count = len - m + 1;
  const __m256i lov = _mm256_set1_epi32(static_cast<int>(lo));
  const __m256i hiv = _mm256_set1_epi32(static_cast<int>(hi));
  std::size_t k = 0;
  for (; k + 8 <= count; k += 8) {
    __m256i head = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prefix.data() + k));
    __m256i tail = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prefix.data() + k + m));
    __m256i w = _mm256_sub_epi32(tail, head);
    __m256i bad = _mm256_or_si256(_mm256_cmpgt_epi32(lov, w), _mm256_cmpgt_epi32(w, hiv));
    int mask = _mm256_movemask_ps(_mm256_castsi256_ps(bad));
    if (mask != 0) return from + k + static_cast<std::size_t>(__builtin_ctz(mask));
  }
  for (; k < count; ++k) {
    std::int64_t w = prefix[k + m] - prefix[k];
    if (w < lo || w > hi) return from + k;
  }
  return n;
}

}  // namespace delcode::kernels::avx2

#else

namespace delcode::kernels::avx2 {
void psi(const std::uint8_t* x, std::size_t n, unsigned q, std::uint8_t* y) {
  scalar::psi(x, n, q, y);
}
VtSum vt_sum(const std::uint8_t* y, std::size_t n) { return scalar::vt_sum(y, n); }
std::size_t first_window_outside(const std::uint8_t* y, std::size_t n, std::size_t m,
                                 std::int64_t lo, std::int64_t hi, std::size_t from) {
  return scalar::first_window_outside(y, n, m, lo, hi, from);
}
}  // namespace delcode::kernels::avx2

#endif
