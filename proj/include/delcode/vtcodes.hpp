#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delcode/rational.hpp"
#include "delcode/sketch.hpp"
#include "delcode/word.hpp"

namespace delcode {

enum class Mode { single, burst, localized, binary_le3_lite };

const char* to_string(Mode m) noexcept;
Mode parse_mode(const std::string& s);

struct Residues {
  std::int64_t b = 0;                 // VT(psi(x)) mod N (the single code's a)
  std::int64_t c = 0;                 // Sum(psi(x)) = c q mod (t+1) q
  std::map<unsigned, std::uint32_t> a;  // t' -> sketch value
};

struct CodeParams {
  Mode mode = Mode::burst;
  unsigned q = 2;
  std::size_t n = 0;
  unsigned t = 1;
  Rational eps{1, 4};
  std::size_t ell = 0;  // 0 disables the balance constraint (single mode)
  std::size_t P = 0;
  std::int64_t N = 1;
  std::optional<Residues> residues;
  std::optional<Rational> M;  // M for burst modes, M' for localized
  bool ell_exceeds_M = false;

  std::int64_t sum_modulus() const { return static_cast<std::int64_t>(t + 1) * q; }
  // Orders t' carrying a sketch constraint.
  std::vector<unsigned> sketch_orders() const;
  // (t1, t2) of the burst-error the order-t' sketch must correct.
  std::pair<unsigned, unsigned> sketch_shape(unsigned t_prime) const;
  std::int64_t min_N() const;
  void validate() const;  // throws ArgumentError
};

// Fills ell, P, default N and M; residues left unset. ell_override replaces
// the ln-based ell (used to exercise localization at small n).
CodeParams derive_params(unsigned q, unsigned t, const Rational& eps, std::size_t n, Mode mode,
                         std::optional<std::size_t> ell_override = std::nullopt);
// Single-deletion code C_psi with modulus N (default (n+1) q).
CodeParams single_params(unsigned q, std::size_t n, std::optional<std::int64_t> N = std::nullopt);

std::size_t default_ell(unsigned q, const Rational& eps, std::size_t n);

bool member_single(const Word& x, const CodeParams& params);
bool member_burst(const Word& x, const CodeParams& params, const SketchProvider& sketch);
bool member_localized(const Word& x, const CodeParams& params, const SketchProvider& sketch);
bool member(const Word& x, const CodeParams& params, const SketchProvider& sketch);

// Membership without the sketch constraints (VT, Sum and balance only).
bool member_outer(const Word& x, const CodeParams& params);

struct DecodeTrace {
  unsigned t_prime = 0;
  std::int64_t delta = 0;
  std::int64_t delta_sum = 0;
  std::size_t j = 0;
  std::int64_t sigma_j = 0;
  // Leading deletion index range [window_lo, window_hi] in 1-based
  // transmitted coordinates; candidates are confined to [span_lo, span_hi].
  std::size_t window_lo = 0;
  std::size_t window_hi = 0;
  std::size_t span_lo = 0;
  std::size_t span_hi = 0;
  std::size_t candidates_considered = 0;
};

// Single deletion with modulus N and residue `a` (params.residues->b).
Word decode_single(const Word& received, const CodeParams& params, DecodeTrace* trace = nullptr);
std::pair<Word, DecodeTrace> decode_burst(const Word& received, const CodeParams& params,
                                          const SketchProvider& sketch);
std::pair<Word, DecodeTrace> decode_localized(const Word& received, const CodeParams& params,
                                              const SketchProvider& sketch);
std::pair<Word, DecodeTrace> decode(const Word& received, const CodeParams& params,
                                    const SketchProvider& sketch);

}  // namespace delcode
