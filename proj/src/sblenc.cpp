#include "delcode/sblenc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "delcode/error.hpp"
#include "delcode/kernels.hpp"
#include "delcode/seqcore.hpp"

namespace delcode {
namespace {

using R = Rational;

unsigned ceil_log(unsigned q, std::size_t n) {
  unsigned L = 0;
  std::uint64_t v = 1;
  while (v < n) {
    v *= q;
    ++L;
  }
  return L;
}

long double window_bound(unsigned q, const Rational& eta1, std::size_t n) {
  const long double e = eta1.to_long_double();
  return (q - 1.0L) * (q - 1.0L) / (e * e) * std::log(static_cast<long double>(n));
}

Rational eta2_floor(unsigned q, const Rational& eta1, unsigned s) {
  return eta1 - eta1 * eta1 / R(static_cast<std::int64_t>(q - 1) * s) + R(q - 1, 4 * s);
}

DecodeError malformed(const char* what) { return DecodeError(DecodeError::Kind::malformed, what); }

}  // namespace

void EncoderParams::validate() const {
  if (q < 2 || q > 256) throw ArgumentError("alphabet size must be in [2, 256]");
  const R half(q - 1, 2);
  if (n < 2ull * q * q * q) throw ArgumentError("n must be at least 2 q^3");
  if (s < 1) throw ArgumentError("s must be >= 1");
  if (!(R(0) < eta1 && eta1 < half)) throw ArgumentError("eta1 must lie in (0, (q-1)/2)");
  if (!(eta2_floor(q, eta1, s) <= eta2)) throw ArgumentError("eta2 below the stage-1 bound");
  if (!(eta2 < eps && eps < half)) throw ArgumentError("need eta2 < eps < (q-1)/2");
  const long double X = window_bound(q, eta1, n);
  if (static_cast<long double>(m) < X || m < 2ull * q * q - 1) throw ArgumentError("m below its lower bound");
  if (ell != s * m + 1) throw ArgumentError("ell must equal s m + 1");
  const auto reach = static_cast<std::int64_t>(std::ceil(s * X));
  if (!((eps - eta2) * R(reach) >= half - eta2)) throw ArgumentError("stage-2 extension constraint fails");
  if (k != static_cast<std::int64_t>(m) - 3 - ceil_log(q, n) || k <= 0) throw ArgumentError("payload width k must be positive");
  if (m + 2 > n) throw ArgumentError("window longer than the codeword");
  const auto mm = static_cast<std::int64_t>(m);
  if (lo != (p1(q, eta1) * R(mm)).ceil() || hi != (p2(q, eta1) * R(mm)).floor() || lo > hi) {
    throw ArgumentError("inconsistent window band");
  }
}

EncoderParams make_encoder_params(unsigned q, std::size_t n, const Rational& eps, const Rational& eta1,
                                  unsigned s, std::size_t m) {
  EncoderParams p;
  p.q = q;
  p.n = n;
  p.eps = eps;
  p.eta1 = eta1;
  p.s = s;
  p.eta2 = eta2_floor(q, eta1, s);
  p.m = m;
  p.ell = s * m + 1;
  p.k = static_cast<std::int64_t>(m) - 3 - ceil_log(q, n);
  p.C = static_cast<double>(m) / (std::log(static_cast<double>(n)) / std::log(static_cast<double>(q)));
  const auto mm = static_cast<std::int64_t>(m);
  p.lo = (p1(q, eta1) * R(mm)).ceil();
  p.hi = (p2(q, eta1) * R(mm)).floor();
  p.validate();
  return p;
}

EncoderParams select_params(unsigned q, std::size_t n, const Rational& eps) {
  if (q < 2 || q > 256) throw ArgumentError("alphabet size must be in [2, 256]");
  if (n < 2ull * q * q * q) throw ArgumentError("n must be at least 2 q^3");
  std::vector<std::tuple<std::size_t, unsigned, std::int64_t, std::size_t>> cand;  // ell, s, j, m
  for (unsigned s = 1; s <= 8; ++s) {
    for (std::int64_t j = 1; j < 80; ++j) {
      const R eta1(static_cast<std::int64_t>(q - 1) * j, 80);
      const long double X = window_bound(q, eta1, n);
      if (X > 1e6L) continue;
      const std::size_t m = std::max<std::size_t>(2ull * q * q - 1, static_cast<std::size_t>(std::ceil(X)));
      cand.emplace_back(s * m + 1, s, j, m);
    }
  }
  std::sort(cand.begin(), cand.end());
  for (const auto& [ell, s, j, m] : cand) {
    EncoderParams p;
    try {
      p = make_encoder_params(q, n, eps, R(static_cast<std::int64_t>(q - 1) * j, 80), s, m);
      BalancedEncoder probe(p);  // capacity checks
    } catch (const ArgumentError&) {
      continue;
    }
    return p;
  }
  throw ArgumentError("no feasible encoder parameters for this n");
}

struct BalancedEncoder::Tables {
  std::size_t LT = 0;  // terminal working length
  std::unique_ptr<WeightClass> F;
  std::unique_ptr<WeightClass> normal;
  std::unique_ptr<WeightClass> terminal;
  // G(m+1) split by (first, last) symbol; empty when LT == m.
  std::vector<std::unique_ptr<WeightClass>> pair;
  std::vector<BigInt> pair_offset;  // size q^2 + 1
  BigInt G_size;
  BigInt normal_demand;
};

BalancedEncoder::BalancedEncoder(EncoderParams params) : p_(std::move(params)), tab_(std::make_unique<Tables>()) {
  p_.validate();
  const unsigned q = p_.q;
  const std::size_t m = p_.m;
  const std::int64_t lo = p_.lo, hi = p_.hi;
  Tables& t = *tab_;
  t.LT = (m % 2 == p_.n % 2) ? m : m + 1;

  std::vector<bool> outside(m * (q - 1) + 1, true);
  for (std::int64_t w = lo; w <= hi; ++w) outside[static_cast<std::size_t>(w)] = false;
  t.F = std::make_unique<WeightClass>(q, m, outside);
  t.normal_demand = BigInt(p_.n - m + 1) * t.F->size();

  // Narrowest band around the center of the body that still holds every record.
  {
    const std::size_t len = m - 4;
    const std::int64_t top = static_cast<std::int64_t>(len * (q - 1));
    std::vector<BigInt> per_weight(static_cast<std::size_t>(top) + 1);
    per_weight[0] = 1;
    for (std::size_t r = 0; r < len; ++r) {
      for (std::size_t w = static_cast<std::size_t>(top) + 1; w-- > 0;) {
        BigInt acc = 0;
        for (unsigned a = 0; a < q && a <= w; ++a) acc += per_weight[w - a];
        per_weight[w] = std::move(acc);
      }
    }
    std::int64_t a = top / 2, b = (top + 1) / 2;
    BigInt have = per_weight[static_cast<std::size_t>(a)] + (a != b ? per_weight[static_cast<std::size_t>(b)] : BigInt(0));
    while (have < t.normal_demand && (a > 0 || b < top)) {
      if (a > 0) have += per_weight[static_cast<std::size_t>(--a)];
      if (b < top) have += per_weight[static_cast<std::size_t>(++b)];
    }
    if (have < t.normal_demand) throw ArgumentError("normal record class too small");
    t.normal = std::make_unique<WeightClass>(q, len, a, b);
  }

  if (t.LT == m) {
    t.G_size = t.F->size();
  } else {
    t.pair_offset.assign(1, 0);
    for (unsigned first = 0; first < q; ++first) {
      for (unsigned last = 0; last < q; ++last) {
        std::vector<bool> allowed((m - 1) * (q - 1) + 1, false);
        for (std::size_t w = 0; w < allowed.size(); ++w) {
          const auto iw = static_cast<std::int64_t>(w);
          const bool bad_head = iw + first < lo || iw + first > hi;
          const bool bad_tail = iw + last < lo || iw + last > hi;
          allowed[w] = bad_head || bad_tail;
        }
        t.pair.push_back(std::make_unique<WeightClass>(q, m - 1, std::move(allowed)));
        t.pair_offset.push_back(t.pair_offset.back() + t.pair.back()->size());
      }
    }
    t.G_size = t.pair_offset.back();
  }
  const std::int64_t mark = 2 * static_cast<std::int64_t>(q - 1);
  t.terminal = std::make_unique<WeightClass>(q, t.LT - 4, std::max<std::int64_t>(lo - mark, 0), hi - mark);
  if (hi - mark < 0 || t.terminal->size() < t.G_size) throw ArgumentError("terminal record class too small");
}

BalancedEncoder::~BalancedEncoder() = default;
BalancedEncoder::BalancedEncoder(BalancedEncoder&&) noexcept = default;

BigInt BalancedEncoder::forbidden_count() const { return tab_->F->size(); }
BigInt BalancedEncoder::normal_capacity() const { return tab_->normal->size(); }
BigInt BalancedEncoder::normal_demand() const { return tab_->normal_demand; }
BigInt BalancedEncoder::terminal_capacity() const { return tab_->terminal->size(); }
BigInt BalancedEncoder::terminal_demand() const { return tab_->G_size; }

Word BalancedEncoder::stage1_raw(const Word& u) const {
  const unsigned q = p_.q;
  const std::size_t n = p_.n, m = p_.m;
  const Tables& t = *tab_;
  const auto top = static_cast<Symbol>(q - 1);
  std::vector<Symbol> w(u.vec());
  w.push_back(0);
  std::size_t from = 0;
  while (w.size() >= m) {
    const std::size_t L = w.size();
    const std::size_t p = kernels::first_window_outside(w.data(), L, m, p_.lo, p_.hi, from);
    if (p == L) break;
    if (L >= m + 2) {
      std::span<const Symbol> win(w.data() + p, m);
      const BigInt r = BigInt(L - m - p) * t.F->size() + t.F->rank(win);
      std::vector<Symbol> body = t.normal->unrank(r);
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(p), w.begin() + static_cast<std::ptrdiff_t>(p + m));
      w.insert(w.end(), body.begin(), body.end());
      w.push_back(0);
      w.push_back(top);
      from = p + 1 > m ? p + 1 - m : 0;
    } else {
      if (L != t.LT) throw std::logic_error("terminal length mismatch");
      BigInt r;
      if (L == m) {
        r = t.F->rank(w);
      } else {
        const std::size_t id = static_cast<std::size_t>(w.front()) * q + w.back();
        r = t.pair_offset[id] + t.pair[id]->rank(std::span<const Symbol>(w.data() + 1, m - 1));
      }
      w = t.terminal->unrank(r);
      w.push_back(top);
      w.push_back(top);
      break;
    }
  }

  // Prepend the pad right to left.
  std::vector<Symbol> out(n);
  const std::size_t core = w.size();
  std::copy(w.begin(), w.end(), out.begin() + static_cast<std::ptrdiff_t>(n - core));
  std::int64_t ahead = 0;  // weight of out[i+1 .. i+m-1]
  for (std::size_t k = n - core; k < n && k < n - core + m - 1; ++k) ahead += out[k];
  const std::int64_t target = static_cast<std::int64_t>(q - 1) * static_cast<std::int64_t>(m);
  for (std::size_t i = n - core; i-- > 0;) {
    Symbol pick = 0;
    if (i + m <= n) {
      std::int64_t best = -1;
      for (unsigned b = 0; b < q; ++b) {
        const std::int64_t wt = ahead + b;
        if (wt < p_.lo || wt > p_.hi) continue;
        const std::int64_t dist = std::abs(2 * wt - target);
        if (best < 0 || dist < best) {
          best = dist;
          pick = static_cast<Symbol>(b);
        }
      }
      if (best < 0) throw std::logic_error("pad symbol cannot keep the window in band");
    }
    out[i] = pick;
    ahead += pick;
    if (i + m - 1 < n) ahead -= out[i + m - 1];
  }
  return Word(q, std::move(out));
}

Word BalancedEncoder::encode_stage1(const Word& u) const {
  if (u.q() != p_.q || u.size() + 1 != p_.n) throw ArgumentError("stage-1 input must have length n - 1");
  Word v = stage1_raw(u);
  if (kernels::first_window_outside(v.symbols().data(), v.size(), p_.m, p_.lo, p_.hi, 0) != v.size()) {
    throw std::logic_error("stage-1 output has a forbidden window");
  }
  return v;
}

Word BalancedEncoder::decode_stage1(const Word& v) const {
  const unsigned q = p_.q;
  const std::size_t n = p_.n, m = p_.m;
  const Tables& t = *tab_;
  if (v.q() != q || v.size() != n) throw malformed("stage-1 word has the wrong shape");
  const auto top = static_cast<Symbol>(q - 1);
  std::vector<Symbol> cur(v.vec());
  std::vector<Symbol> next;
  bool done = false;
  for (std::size_t step = 0; step <= n / 2 + 1; ++step) {
    if (cur[n - 1] == 0) {
      done = true;
      break;
    }
    if (cur[n - 1] != top) throw malformed("bad trailing control symbol");
    next.clear();
    if (cur[n - 2] == 0) {
      std::span<const Symbol> body(cur.data() + (n - m + 2), m - 4);
      if (!t.normal->contains(body)) throw malformed("record body outside its class");
      const BigInt r = t.normal->rank(body);
      const BigInt d = r / t.F->size();
      if (d > n - m) throw malformed("record pointer out of range");
      const std::vector<Symbol> win = t.F->unrank(r % t.F->size());
      const std::size_t a_len = n - m + 2;
      const std::size_t ins = a_len - static_cast<std::size_t>(d);
      next.assign(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(ins));
      next.insert(next.end(), win.begin(), win.end());
      next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(ins),
                  cur.begin() + static_cast<std::ptrdiff_t>(a_len));
    } else if (cur[n - 2] == top) {
      const std::size_t tl = t.LT - 2;
      std::span<const Symbol> body(cur.data() + (n - tl), tl - 2);
      if (!t.terminal->contains(body)) throw malformed("terminal body outside its class");
      const BigInt r = t.terminal->rank(body);
      if (r >= t.G_size) throw malformed("terminal rank out of range");
      std::vector<Symbol> w;
      if (t.LT == m) {
        w = t.F->unrank(r);
      } else {
        std::size_t id = 0;
        while (t.pair_offset[id + 1] <= r) ++id;
        std::vector<Symbol> mid = t.pair[id]->unrank(r - t.pair_offset[id]);
        w.push_back(static_cast<Symbol>(id / q));
        w.insert(w.end(), mid.begin(), mid.end());
        w.push_back(static_cast<Symbol>(id % q));
      }
      next.assign(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(n - tl));
      next.insert(next.end(), w.begin(), w.end());
    } else {
      throw malformed("bad record marker");
    }
    cur.assign(next.begin() + 2, next.end());
  }
  if (!done) throw malformed("record chain does not terminate");
  Word u(q, std::vector<Symbol>(cur.begin(), cur.end() - 1));
  if (stage1_raw(u) != v) throw malformed("word is not a stage-1 encoding");
  return u;
}

Word encode_stage2(const Word& y_prime) {
  const unsigned q = y_prime.q();
  const auto a = static_cast<Symbol>((q - l1sum(y_prime) % q) % q);
  std::vector<Symbol> y(y_prime.vec());
  y.push_back(a);
  return Word(q, std::move(y));
}

Word BalancedEncoder::encode_stage2(const Word& y_prime) { return delcode::encode_stage2(y_prime); }

Word BalancedEncoder::encode(const Word& x) const {
  if (x.q() != p_.q || x.size() + 2 != p_.n) throw ArgumentError("input must have length n - 2");
  return psi_inverse(encode_stage2(encode_stage1(psi(x))));
}

Word BalancedEncoder::decode(const Word& x) const {
  if (x.q() != p_.q || x.size() != p_.n) throw malformed("codeword has the wrong shape");
  const Word y = psi(x);
  const Word u = decode_stage1(y.sub(1, p_.n));
  if (l1sum(u) % p_.q != 0) throw malformed("stage-1 payload is not a differential sequence");
  return psi_inverse(u);
}

}  // namespace delcode
