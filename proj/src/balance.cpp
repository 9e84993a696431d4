#include "delcode/balance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "delcode/error.hpp"
#include "delcode/kernels.hpp"

namespace delcode {

Rational p1(unsigned q, const Rational& eps) { return Rational(q - 1, 2) - eps; }
Rational p2(unsigned q, const Rational& eps) { return Rational(q - 1, 2) + eps; }

void BalanceSpec::validate() const {
  if (q < 2 || q > 256) throw ArgumentError("alphabet size must be in [2, 256]");
  if (ell < 1) throw ArgumentError("ell must be >= 1");
  if (!(eps > Rational(0)) || !(eps < Rational(q - 1, 2))) {
    throw ArgumentError("eps must lie strictly inside (0, (q-1)/2)");
  }
}

void WindowSpec::validate() const {
  if (q < 2 || q > 256) throw ArgumentError("alphabet size must be in [2, 256]");
  if (m < 1) throw ArgumentError("window length must be >= 1");
  const std::int64_t top = static_cast<std::int64_t>(m) * (q - 1);
  if (a < 0 || a > b || b > top) throw ArgumentError("weight interval outside achievable range");
}

WindowSpec WindowSpec::from_eps(unsigned q, std::size_t m, const Rational& eps) {
  const auto mm = static_cast<std::int64_t>(m);
  WindowSpec w{q, m, (p1(q, eps) * mm).ceil(), (p2(q, eps) * mm).floor()};
  w.a = std::max<std::int64_t>(w.a, 0);
  w.b = std::min<std::int64_t>(w.b, mm * (q - 1));
  return w;
}

bool is_strong_locally_balanced(std::span<const Symbol> x, unsigned q, std::size_t ell,
                                const Rational& eps) {
  const std::size_t n = x.size();
  if (n < ell) return true;
  // U_k = 2 den S_k - ((q-1) den - 2 num) k must be nondecreasing over gaps >= ell,
  // V_k = 2 den S_k - ((q-1) den + 2 num) k nonincreasing.
  const __int128 den = eps.den(), num = eps.num();
  const __int128 cu = (q - 1) * den - 2 * num;
  const __int128 cv = (q - 1) * den + 2 * num;
  std::vector<__int128> u(n + 1), v(n + 1);
  __int128 s = 0;
  u[0] = v[0] = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    s += x[k - 1];
    u[k] = 2 * den * s - cu * static_cast<__int128>(k);
    v[k] = 2 * den * s - cv * static_cast<__int128>(k);
  }
  __int128 umax = std::numeric_limits<__int128>::min();
  __int128 vmin = std::numeric_limits<__int128>::max();
  for (std::size_t j = ell; j <= n; ++j) {
    umax = std::max(umax, u[j - ell]);
    vmin = std::min(vmin, v[j - ell]);
    if (u[j] < umax || v[j] > vmin) return false;
  }
  return true;
}

bool is_strong_locally_balanced(const Word& x, const BalanceSpec& spec) {
  spec.validate();
  if (x.q() != spec.q) throw ArgumentError("alphabet mismatch");
  return is_strong_locally_balanced(x.symbols(), spec.q, spec.ell, spec.eps);
}

std::size_t longest_unbalanced(std::span<const Symbol> x, unsigned q, const Rational& eps) {
  const std::size_t n = x.size();
  const std::int64_t den = eps.den(), num = eps.num();
  const std::int64_t cu = (q - 1) * den - 2 * num;
  const std::int64_t cv = (q - 1) * den + 2 * num;
  std::int64_t prefix[64];
  std::vector<std::int64_t> big;
  std::int64_t* s = prefix;
  if (n + 1 > 64) {
    big.resize(n + 1);
    s = big.data();
  }
  s[0] = 0;
  for (std::size_t k = 0; k < n; ++k) s[k + 1] = s[k] + x[k];
  for (std::size_t len = n; len >= 1; --len) {
    const std::int64_t lo = cu * static_cast<std::int64_t>(len);
    const std::int64_t hi = cv * static_cast<std::int64_t>(len);
    for (std::size_t i = 0; i + len <= n; ++i) {
      const std::int64_t w = 2 * den * (s[i + len] - s[i]);
      if (w < lo || w > hi) return len;
    }
  }
  return 0;
}

bool is_window_bounded(const Word& x, const WindowSpec& spec) {
  spec.validate();
  if (x.q() != spec.q) throw ArgumentError("alphabet mismatch");
  if (x.size() < spec.m) throw ArgumentError("word shorter than the window");
  return kernels::first_window_outside(x.symbols().data(), x.size(), spec.m, spec.a, spec.b, 0) ==
         x.size();
}

WeightClass::WeightClass(unsigned q, std::size_t m, std::int64_t a, std::int64_t b)
    : WeightClass(q, m, [&] {
        std::vector<bool> allowed(m * (q - 1) + 1, false);
        for (std::int64_t w = std::max<std::int64_t>(a, 0);
             w <= std::min<std::int64_t>(b, static_cast<std::int64_t>(m * (q - 1))); ++w) {
          allowed[static_cast<std::size_t>(w)] = true;
        }
        return allowed;
      }()) {}

WeightClass::WeightClass(unsigned q, std::size_t m, std::vector<bool> allowed)
    : q_(q), m_(m), max_weight_(static_cast<std::int64_t>(m * (q - 1))), allowed_(std::move(allowed)) {
  if (q < 2 || q > 256) throw ArgumentError("alphabet size must be in [2, 256]");
  allowed_.resize(static_cast<std::size_t>(max_weight_) + 1, false);
  // count_[r] is indexed by prefix weight s in [0, max_weight_ - ...]; keep full width.
  const auto width = static_cast<std::size_t>(max_weight_) + 1;
  count_.assign(m + 1, std::vector<BigInt>(width));
  for (std::size_t s = 0; s < width; ++s) count_[0][s] = allowed_[s] ? 1 : 0;
  for (std::size_t r = 1; r <= m; ++r) {
    for (std::size_t s = 0; s < width; ++s) {
      BigInt acc = 0;
      for (unsigned a = 0; a < q && s + a < width; ++a) acc += count_[r - 1][s + a];
      count_[r][s] = std::move(acc);
    }
  }
}

const BigInt& WeightClass::completions(std::size_t r, std::int64_t s) const {
  return count_[r][static_cast<std::size_t>(s)];
}

bool WeightClass::contains(std::span<const Symbol> w) const {
  if (w.size() != m_) return false;
  std::int64_t s = 0;
  for (Symbol c : w) {
    if (c >= q_) return false;
    s += c;
  }
  return allowed_[static_cast<std::size_t>(s)];
}

BigInt WeightClass::rank(std::span<const Symbol> w) const {
  if (!contains(w)) throw ArgumentError("word outside weight class");
  BigInt r = 0;
  std::int64_t s = 0;
  for (std::size_t i = 0; i < m_; ++i) {
    const std::size_t rem = m_ - i - 1;
    for (unsigned a = 0; a < w[i]; ++a) r += completions(rem, s + a);
    s += w[i];
  }
  return r;
}

std::vector<Symbol> WeightClass::unrank(const BigInt& r) const {
  if (r < 0 || r >= size()) throw ArgumentError("rank out of range");
  BigInt left = r;
  std::vector<Symbol> w(m_);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < m_; ++i) {
    const std::size_t rem = m_ - i - 1;
    unsigned a = 0;
    for (;; ++a) {
      const BigInt& c = completions(rem, s + a);
      if (left < c) break;
      left -= c;
    }
    w[i] = static_cast<Symbol>(a);
    s += a;
  }
  return w;
}

BigInt count_weight_bounded(unsigned q, std::size_t m, std::int64_t a, std::int64_t b) {
  return WeightClass(q, m, a, b).size();
}

BigInt rank_in_weight_class(unsigned q, std::size_t m, std::int64_t a, std::int64_t b, const Word& w) {
  if (w.q() != q) throw ArgumentError("alphabet mismatch");
  return WeightClass(q, m, a, b).rank(w.symbols());
}

Word unrank_in_weight_class(unsigned q, std::size_t m, std::int64_t a, std::int64_t b, const BigInt& r) {
  return Word(q, WeightClass(q, m, a, b).unrank(r));
}

long double lemma_ell_bound(unsigned q, std::size_t n, const Rational& eps, unsigned s) {
  const long double e = eps.to_long_double();
  return (q - 1.0L) * (q - 1.0L) / (e * e) * std::log(2.0L * n * std::sqrt(static_cast<long double>(s)));
}

long double lemma_psi_ell_bound(unsigned q, std::size_t n, const Rational& eps) {
  const long double e = eps.to_long_double();
  return (q - 1.0L) * (q - 1.0L) / (e * e) *
         std::log(2.0L * (n + 1) * std::sqrt(static_cast<long double>(q)));
}

UnbalancedHistogram unbalanced_histogram(unsigned q, std::size_t n, const Rational& eps,
                                         std::uint64_t budget) {
  BalanceSpec{q, 1, eps}.validate();
  if (n > 40) throw BudgetError("word length beyond exhaustive budget");
  const std::uint64_t total = ipow(q, static_cast<unsigned>(n));
  if (total > budget) throw BudgetError("q^n exceeds the exhaustive budget");
  UnbalancedHistogram h;
  h.plain.assign(n + 1, 0);
  h.psi.assign(n + 2, 0);
  std::vector<Symbol> x(n, 0), y(n + 1);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    ++h.plain[longest_unbalanced(x, q, eps)];
    kernels::scalar::psi(x.data(), n, q, y.data());
    ++h.psi[longest_unbalanced(y, q, eps)];
    for (std::size_t k = n; k-- > 0;) {
      if (++x[k] < q) break;
      x[k] = 0;
    }
  }
  return h;
}

CountingLemmaReport check_counting_lemma(unsigned q, std::size_t n, std::size_t ell,
                                         const Rational& eps, unsigned s, std::uint64_t budget) {
  if (s < 1) throw ArgumentError("s must be >= 1");
  if (ell < 1) throw ArgumentError("ell must be >= 1");
  const UnbalancedHistogram h = unbalanced_histogram(q, n, eps, budget);
  CountingLemmaReport r;
  r.q = q;
  r.n = n;
  r.ell = ell;
  r.eps = eps;
  r.s = s;
  r.total = ipow(q, static_cast<unsigned>(n));
  for (std::size_t len = 0; len < ell && len < h.plain.size(); ++len) r.balanced += h.plain[len];
  for (std::size_t len = 0; len < ell && len < h.psi.size(); ++len) r.psi_balanced += h.psi[len];
  r.premise = static_cast<long double>(ell) >= lemma_ell_bound(q, n, eps, s);
  r.psi_premise = static_cast<long double>(ell) >= lemma_psi_ell_bound(q, n, eps);
  // balanced >= total (1 - 1/(2s))  <=>  2 s balanced >= total (2s - 1)
  if (r.premise) {
    r.bound_met = static_cast<__int128>(2 * s) * r.balanced >= static_cast<__int128>(r.total) * (2 * s - 1);
  }
  if (r.psi_premise) r.psi_bound_met = 2 * r.psi_balanced >= r.total;
  return r;
}

}  // namespace delcode
