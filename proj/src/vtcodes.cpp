#include "delcode/vtcodes.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "delcode/balance.hpp"
#include "delcode/error.hpp"
#include "delcode/kernels.hpp"
#include "delcode/seqcore.hpp"
#include "delcode/triples.hpp"

namespace delcode {

const char* to_string(Mode m) noexcept {
  switch (m) {
    case Mode::single: return "single";
    case Mode::burst: return "burst";
    case Mode::localized: return "localized";
    case Mode::binary_le3_lite: return "binary_le3_lite";
  }
  return "unknown";
}

Mode parse_mode(const std::string& s) {
  if (s == "single") return Mode::single;
  if (s == "burst") return Mode::burst;
  if (s == "localized") return Mode::localized;
  if (s == "binary_le3_lite") return Mode::binary_le3_lite;
  throw ArgumentError("unknown mode: " + s);
}

std::vector<unsigned> CodeParams::sketch_orders() const {
  switch (mode) {
    case Mode::single: return {};
    case Mode::binary_le3_lite: return {3};
    case Mode::burst:
    case Mode::localized: {
      std::vector<unsigned> v;
      for (unsigned tp = 2; tp <= t; ++tp) v.push_back(tp);
      return v;
    }
  }
  return {};
}

std::pair<unsigned, unsigned> CodeParams::sketch_shape(unsigned t_prime) const {
  if (mode == Mode::localized) return {t, t - t_prime};
  return {t_prime, 0};
}

std::int64_t CodeParams::min_N() const {
  const std::int64_t Q = q, T = t, n_ = static_cast<std::int64_t>(n);
  switch (mode) {
    case Mode::single: return (n_ + 1) * Q;
    case Mode::burst:
    case Mode::binary_le3_lite: return (n_ * Q + Q - 1) * T;
    case Mode::localized: return (T * (n_ + T) - 1) * Q;
  }
  return 1;
}

void CodeParams::validate() const {
  if (q < 2 || q > 256) throw ArgumentError("alphabet size must be in [2, 256]");
  if (n < 1) throw ArgumentError("n must be positive");
  if (mode == Mode::binary_le3_lite && (q != 2 || t != 3)) {
    throw ArgumentError("binary_le3_lite requires q = 2 and t = 3");
  }
  if (mode == Mode::localized && t < 3) throw ArgumentError("localized mode requires t >= 3");
  if (mode != Mode::single && (t < 2 || t > n)) throw ArgumentError("t must lie in [2, n]");
  if (N < min_N()) throw ArgumentError("N below the lower bound for this mode");
  if (residues) {
    if (residues->b < 0 || residues->b >= N) throw ArgumentError("residue b outside [0, N)");
    if (mode != Mode::single && (residues->c < 0 || residues->c > static_cast<std::int64_t>(t))) {
      throw ArgumentError("residue c outside [0, t]");
    }
  }
}

std::size_t default_ell(unsigned q, const Rational& eps, std::size_t n) {
  const long double e = eps.to_long_double();
  const long double v = (q - 1.0L) * (q - 1.0L) / (e * e) *
                        std::log(2.0L * (n + 1) * std::sqrt(static_cast<long double>(q)));
  return static_cast<std::size_t>(std::ceil(v));
}

CodeParams derive_params(unsigned q, unsigned t, const Rational& eps, std::size_t n, Mode mode,
                         std::optional<std::size_t> ell_override) {
  if (mode == Mode::single) return single_params(q, n);
  if (n < 2) throw ArgumentError("n must be at least 2");
  const GoodTripleCert cert = classify(q, t, eps);
  if (!cert.is_good) throw ArgumentError("not a good triple: " + cert.reason);
  CodeParams p;
  p.mode = mode;
  p.q = q;
  p.n = n;
  p.t = t;
  p.eps = eps;
  p.ell = ell_override ? *ell_override : default_ell(q, eps, n);
  if (p.ell < 1) throw ArgumentError("ell must be >= 1");
  p.P = p.ell + t - 1;
  p.N = p.min_N();
  if (mode == Mode::localized) {
    if (t < 3) throw ArgumentError("localized mode requires t >= 3");
    p.M = cert.M_loc;
  } else {
    p.M = cert.M;
  }
  p.ell_exceeds_M = p.M && Rational(static_cast<std::int64_t>(p.ell)) > *p.M;
  p.validate();
  return p;
}

CodeParams single_params(unsigned q, std::size_t n, std::optional<std::int64_t> N) {
  CodeParams p;
  p.mode = Mode::single;
  p.q = q;
  p.n = n;
  p.t = 1;
  p.N = N ? *N : p.min_N();
  p.validate();
  return p;
}

namespace {

const Residues& need_residues(const CodeParams& p) {
  if (!p.residues) throw ArgumentError("residues are unset");
  return *p.residues;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

struct Syndromes {
  std::vector<Symbol> y;
  std::int64_t vt = 0;
  std::int64_t sum = 0;
};

Syndromes syndromes(const Word& x) {
  Syndromes s;
  s.y.resize(x.size() + 1);
  kernels::psi(x.symbols().data(), x.size(), x.q(), s.y.data());
  const auto vs = kernels::vt_sum(s.y.data(), s.y.size());
  s.vt = vs.vt;
  s.sum = vs.sum;
  return s;
}

bool sketches_match(const Word& x, const CodeParams& p, const SketchProvider& sketch) {
  const Residues& r = need_residues(p);
  for (unsigned tp : p.sketch_orders()) {
    auto want = r.a.find(tp);
    if (want == r.a.end()) throw ArgumentError("sketch residue a_" + std::to_string(tp) + " is unset");
    auto got = sketch.value(tp, x);
    if (!got) throw ArgumentError("sketch provider lacks order " + std::to_string(tp));
    if (*got != want->second) return false;
  }
  return true;
}

std::int64_t binom2(std::int64_t k) { return k * (k - 1) / 2; }

}  // namespace

bool member_outer(const Word& x, const CodeParams& p) {
  const Residues& r = need_residues(p);
  if (x.size() != p.n || x.q() != p.q) return false;
  const Syndromes s = syndromes(x);
  if (mod(s.vt, p.N) != r.b) return false;
  if (p.mode == Mode::single) return true;
  if (mod(s.sum, p.sum_modulus()) != r.c * p.q) return false;
  if (p.ell > 0 && !is_strong_locally_balanced(s.y, p.q, p.ell, p.eps)) return false;
  return true;
}

bool member_single(const Word& x, const CodeParams& p) {
  const Residues& r = need_residues(p);
  if (x.size() != p.n || x.q() != p.q) return false;
  return mod(syndromes(x).vt, p.N) == r.b;
}

bool member_burst(const Word& x, const CodeParams& p, const SketchProvider& sketch) {
  if (p.mode != Mode::burst && p.mode != Mode::binary_le3_lite) throw ArgumentError("params are not a burst code");
  return member_outer(x, p) && sketches_match(x, p, sketch);
}

bool member_localized(const Word& x, const CodeParams& p, const SketchProvider& sketch) {
  if (p.mode != Mode::localized) throw ArgumentError("params are not a localized code");
  return member_outer(x, p) && sketches_match(x, p, sketch);
}

bool member(const Word& x, const CodeParams& p, const SketchProvider& sketch) {
  switch (p.mode) {
    case Mode::single: return member_single(x, p);
    case Mode::burst:
    case Mode::binary_le3_lite: return member_burst(x, p, sketch);
    case Mode::localized: return member_localized(x, p, sketch);
  }
  return false;
}

Word decode_single(const Word& received, const CodeParams& p, DecodeTrace* trace) {
  const Residues& r = need_residues(p);
  if (received.size() + 1 != p.n) throw ArgumentError("single-deletion decoder needs length n - 1");
  const std::int64_t q = p.q;
  const Syndromes s = syndromes(received);  // y' has length n
  const std::int64_t delta = mod(r.b - s.vt, p.N);
  const std::int64_t delta_sum = delta > s.sum + q ? q : 0;
  std::int64_t suffix = 0;
  for (std::size_t j = p.n; j >= 1; --j) {
    const std::int64_t beta = delta - static_cast<std::int64_t>(j) * delta_sum - suffix;
    const std::int64_t alpha = s.y[j - 1] + delta_sum - beta;
    if (beta >= 0 && beta < q && alpha >= 0 && alpha < q) {
      std::vector<Symbol> y(s.y.begin(), s.y.begin() + static_cast<std::ptrdiff_t>(j - 1));
      y.push_back(static_cast<Symbol>(alpha));
      y.push_back(static_cast<Symbol>(beta));
      y.insert(y.end(), s.y.begin() + static_cast<std::ptrdiff_t>(j), s.y.end());
      Word x = psi_inverse(Word(p.q, std::move(y)));
      if (trace) {
        *trace = DecodeTrace{};
        trace->t_prime = 1;
        trace->delta = delta;
        trace->delta_sum = delta_sum;
        trace->j = j;
        trace->sigma_j = beta;
        trace->window_lo = trace->window_hi = trace->span_lo = trace->span_hi = j;
        trace->candidates_considered = 1;
      }
      return x;
    }
    suffix += s.y[j - 1];
  }
  throw DecodeError(DecodeError::Kind::no_valid_j, "no index admits a valid (alpha, beta) split");
}

namespace {

enum class Family { burst, localized };

std::pair<Word, DecodeTrace> decode_multi(const Word& received, const CodeParams& p,
                                          const SketchProvider& sketch, Family family) {
  const Residues& r = need_residues(p);
  if (received.q() != p.q) throw ArgumentError("alphabet mismatch");
  if (received.size() > p.n || received.size() + p.t < p.n) {
    throw ArgumentError("received length outside [n - t, n]");
  }
  auto is_member = [&](const Word& x) {
    return family == Family::burst ? member_burst(x, p, sketch) : member_localized(x, p, sketch);
  };
  const auto tp = static_cast<unsigned>(p.n - received.size());
  DecodeTrace trace;
  trace.t_prime = tp;
  if (tp == 0) {
    if (!is_member(received)) throw DecodeError(DecodeError::Kind::not_member, "received word is not a codeword");
    return {received, trace};
  }
  if (tp == 1) {
    Word x = decode_single(received, p, &trace);
    if (!is_member(x)) throw DecodeError(DecodeError::Kind::not_member, "single-deletion result is not a codeword");
    return {x, trace};
  }

  const std::int64_t q = p.q;
  const Syndromes s = syndromes(received);  // y' has length n + 1 - t'
  const std::int64_t delta = mod(r.b - s.vt, p.N);
  const std::int64_t delta_sum = mod(r.c * q - s.sum, p.sum_modulus());
  std::int64_t lo_sigma = 0;
  std::int64_t hi_sigma = binom2(tp + 1) * (q - 1);
  if (family == Family::localized) {
    lo_sigma = -(q - 1) * static_cast<std::int64_t>(p.t - tp) * tp;
    hi_sigma += q * static_cast<std::int64_t>(p.t) * (tp - 1);
  }
  std::size_t j = 0;
  std::int64_t sigma = 0;
  std::int64_t suffix = 0;
  for (std::size_t k = s.y.size(); k >= 1; --k) {
    const std::int64_t v = delta - static_cast<std::int64_t>(k) * delta_sum - static_cast<std::int64_t>(tp) * suffix;
    if (v >= lo_sigma && v <= hi_sigma) {
      j = k;
      sigma = v;
      break;
    }
    suffix += s.y[k - 1];
  }
  if (j == 0) throw DecodeError(DecodeError::Kind::no_valid_j, "no index satisfies the sigma range");
  trace.delta = delta;
  trace.delta_sum = delta_sum;
  trace.j = j;
  trace.sigma_j = sigma;
  trace.window_lo = j > p.ell ? j - p.ell + 1 : 1;
  trace.window_hi = j;

  std::size_t t1 = tp, t2 = 0;
  std::size_t lo = trace.window_lo, hi = std::min(p.n, j + tp - 1);
  if (family == Family::localized) {
    t1 = p.t;
    t2 = p.t - tp;
    hi = std::min(p.n, j + p.t - 1);
    if (hi - lo + 1 < p.t) {
      hi = std::min(p.n, lo + p.t - 1);
      lo = hi + 1 > p.t ? hi + 1 - p.t : 1;
    }
  }
  trace.span_lo = lo;
  trace.span_hi = hi;

  std::set<Word> survivors;
  trace.candidates_considered = for_each_preimage(received, p.n, t1, t2, lo, hi, [&](const Word& c, std::size_t) {
    if (is_member(c)) survivors.insert(c);
  });
  if (survivors.empty()) throw DecodeError(DecodeError::Kind::no_candidate, "no candidate in the window is a codeword");
  if (survivors.size() > 1) throw DecodeError(DecodeError::Kind::ambiguous, "several candidates are codewords");
  return {*survivors.begin(), trace};
}

}  // namespace

std::pair<Word, DecodeTrace> decode_burst(const Word& received, const CodeParams& p, const SketchProvider& sketch) {
  if (p.mode != Mode::burst && p.mode != Mode::binary_le3_lite) throw ArgumentError("params are not a burst code");
  return decode_multi(received, p, sketch, Family::burst);
}

std::pair<Word, DecodeTrace> decode_localized(const Word& received, const CodeParams& p,
                                              const SketchProvider& sketch) {
  if (p.mode != Mode::localized) throw ArgumentError("params are not a localized code");
  return decode_multi(received, p, sketch, Family::localized);
}

std::pair<Word, DecodeTrace> decode(const Word& received, const CodeParams& p, const SketchProvider& sketch) {
  if (p.mode == Mode::single) {
    DecodeTrace trace;
    if (received.size() == p.n) {
      if (!member_single(received, p)) throw DecodeError(DecodeError::Kind::not_member, "received word is not a codeword");
      return {received, trace};
    }
    Word x = decode_single(received, p, &trace);
    return {x, trace};
  }
  if (p.mode == Mode::localized) return decode_localized(received, p, sketch);
  return decode_burst(received, p, sketch);
}

}  // namespace delcode
