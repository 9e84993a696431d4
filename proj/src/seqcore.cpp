#include "delcode/seqcore.hpp"

#include <algorithm>

#include "delcode/error.hpp"
#include "delcode/kernels.hpp"

namespace delcode {

Word psi(const Word& x) {
  std::vector<Symbol> y(x.size() + 1);
  kernels::psi(x.symbols().data(), x.size(), x.q(), y.data());
  return Word(x.q(), std::move(y));
}

Word psi_inverse(const Word& y) {
  const unsigned q = y.q();
  if (y.empty()) throw ArgumentError("psi_inverse of the empty word");
  if (l1sum(y) % q != 0) throw ArgumentError("weight not divisible by q");
  const std::size_t n = y.size() - 1;
  std::vector<Symbol> x(n);
  unsigned acc = 0;
  for (std::size_t i = n; i-- > 0;) {
    acc = (acc + y[i + 1]) % q;
    x[i] = static_cast<Symbol>(acc);
  }
  return Word(q, std::move(x));
}

Word dvt(const Word& x) {
  const unsigned q = x.q();
  std::vector<Symbol> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    unsigned a = x[i];
    unsigned b = i + 1 < x.size() ? x[i + 1] : 0;
    y[i] = static_cast<Symbol>((a + q - b) % q);
  }
  return Word(q, std::move(y));
}

std::int64_t vt(const Word& y) { return kernels::vt_sum(y.symbols().data(), y.size()).vt; }

std::int64_t l1sum(const Word& y) { return kernels::vt_sum(y.symbols().data(), y.size()).sum; }

std::int64_t l1sum(const Word& y, std::size_t a, std::size_t b) {
  if (b < a) return 0;
  if (a < 1 || b > y.size()) throw ArgumentError("range out of bounds");
  std::int64_t s = 0;
  for (std::size_t i = a - 1; i < b; ++i) s += y[i];
  return s;
}

Word apply_burst_deletion(const Word& x, std::size_t i, std::size_t len) {
  if (len == 0) {
    if (i < 1 || i > x.size() + 1) throw ArgumentError("deletion start out of range");
    return x;
  }
  if (i < 1 || i + len - 1 > x.size()) throw ArgumentError("deletion out of range");
  std::vector<Symbol> s;
  s.reserve(x.size() - len);
  s.insert(s.end(), x.vec().begin(), x.vec().begin() + static_cast<std::ptrdiff_t>(i - 1));
  s.insert(s.end(), x.vec().begin() + static_cast<std::ptrdiff_t>(i - 1 + len), x.vec().end());
  return Word(x.q(), std::move(s));
}

std::set<Word> burst_ball(const Word& x, std::size_t t) {
  std::set<Word> ball;
  for (std::size_t len = 1; len <= std::min(t, x.size()); ++len) {
    for (std::size_t i = 1; i + len - 1 <= x.size(); ++i) ball.insert(apply_burst_deletion(x, i, len));
  }
  return ball;
}

std::size_t LocalizedPattern::total() const {
  std::size_t s = 0;
  for (const auto& r : runs) s += r.second;
  return s;
}

bool LocalizedPattern::valid(std::size_t n) const {
  if (runs.empty()) return false;
  for (std::size_t s = 0; s < runs.size(); ++s) {
    if (runs[s].first < 1 || runs[s].second < 1) return false;
    if (s > 0 && runs[s].first <= runs[s - 1].first + runs[s - 1].second) return false;
  }
  const auto& last = runs.back();
  if (last.first + last.second - 1 > n) return false;
  if (last.first - runs.front().first + last.second > t) return false;
  const std::size_t tp = total();
  return tp >= 2 && tp <= t;
}

std::vector<std::size_t> LocalizedPattern::positions() const {
  std::vector<std::size_t> pos;
  for (const auto& [i, len] : runs) {
    for (std::size_t k = 0; k < len; ++k) pos.push_back(i + k);
  }
  return pos;
}

Word delete_positions(const Word& x, const std::vector<std::size_t>& pos) {
  std::vector<Symbol> s;
  s.reserve(x.size());
  std::size_t k = 0;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    if (k < pos.size() && pos[k] == i) {
      ++k;
      continue;
    }
    s.push_back(x[i - 1]);
  }
  if (k != pos.size()) throw ArgumentError("deletion positions out of range or unsorted");
  return Word(x.q(), std::move(s));
}

Word apply_localized(const Word& x, const LocalizedPattern& p) {
  if (!p.valid(x.size())) throw ArgumentError("invalid localized pattern");
  return delete_positions(x, p.positions());
}

std::vector<LocalizedPattern> localized_patterns(std::size_t n, std::size_t t) {
  std::vector<LocalizedPattern> out;
  if (t < 2) return out;
  for (std::size_t i1 = 1; i1 <= n; ++i1) {
    for (std::uint32_t mask = 1; mask < (1u << (t - 1)); ++mask) {
      // bit k set means position i1 + k + 1 is deleted
      std::size_t top = i1 + static_cast<std::size_t>(31 - __builtin_clz(mask)) + 1;
      if (top > n) continue;
      LocalizedPattern p;
      p.t = t;
      std::size_t start = i1, len = 1;
      for (std::size_t k = 0; k + 1 < t; ++k) {
        std::size_t pos = i1 + k + 1;
        if (mask & (1u << k)) {
          if (pos == start + len) {
            ++len;
          } else {
            p.runs.emplace_back(start, len);
            start = pos;
            len = 1;
          }
        }
      }
      p.runs.emplace_back(start, len);
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::set<Word> localized_ball(const Word& x, std::size_t t) {
  std::set<Word> ball;
  for (std::size_t i = 1; i <= x.size(); ++i) ball.insert(apply_burst_deletion(x, i, 1));
  for (const auto& p : localized_patterns(x.size(), t)) ball.insert(apply_localized(x, p));
  return ball;
}

}  // namespace delcode
