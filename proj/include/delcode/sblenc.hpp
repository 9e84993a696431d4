#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "delcode/balance.hpp"
#include "delcode/rational.hpp"
#include "delcode/word.hpp"

namespace delcode {

struct EncoderParams {
  unsigned q = 2;
  std::size_t n = 0;    // codeword length
  Rational eps;
  Rational eta1;
  Rational eta2;
  unsigned s = 1;
  std::size_t ell = 0;  // s * m + 1
  std::size_t m = 0;    // inner window length (ell_1)
  std::int64_t k = 0;   // m - 3 - ceil(log_q n)
  double C = 0;         // m / log_q n
  std::int64_t lo = 0;  // stage-1 window band [ceil(p1(eta1) m), floor(p2(eta1) m)]
  std::int64_t hi = 0;

  // Re-evaluates every constraint exactly; throws ArgumentError.
  void validate() const;
};

// Builds params from explicit choices; validates.
EncoderParams make_encoder_params(unsigned q, std::size_t n, const Rational& eps, const Rational& eta1,
                                  unsigned s, std::size_t m);
// Scans eta1 = j (q-1)/80, s = 1..8 and returns the feasible choice with the
// smallest ell. Throws ArgumentError when none exists.
EncoderParams select_params(unsigned q, std::size_t n, const Rational& eps);

// Two-stage encoder: Sigma_q^{n-2} -> words x of length n with psi(x)
// strong-(ell, eps) balanced.
//
// Stage-1 layout (working buffer w, |w| = n at the start, shrinks by 2 per
// record; output = front pad + final buffer):
//   start        w = u . 0
//   normal       leftmost forbidden window at p excised, record appended:
//                body (m-4 symbols) . 0 . (q-1); body unranks
//                d |F| + rank_F(window), d = symbols of w after the window
//   terminal     |w| = L_T in {m, m+1} with a forbidden window: w replaced by
//                body (L_T-4 symbols) . (q-1) . (q-1); body unranks rank_G(w)
//   pad          symbols prepended one at a time, each keeping the new
//                leftmost window in band and closest to the center
class BalancedEncoder {
 public:
  explicit BalancedEncoder(EncoderParams params);
  ~BalancedEncoder();
  BalancedEncoder(BalancedEncoder&&) noexcept;

  const EncoderParams& params() const noexcept { return p_; }

  Word encode(const Word& x) const;          // n-2 -> n
  Word decode(const Word& x) const;          // n -> n-2
  Word encode_stage1(const Word& u) const;   // n-1 -> n
  Word decode_stage1(const Word& v) const;   // n -> n-1
  static Word encode_stage2(const Word& y_prime);  // y' -> y' a

  // Capacities of the record classes against what they must hold.
  BigInt forbidden_count() const;
  BigInt normal_capacity() const;
  BigInt normal_demand() const;
  BigInt terminal_capacity() const;
  BigInt terminal_demand() const;

 private:
  struct Tables;
  Word stage1_raw(const Word& u) const;

  EncoderParams p_;
  std::unique_ptr<Tables> tab_;
};

Word encode_stage2(const Word& y_prime);

}  // namespace delcode
