#include "delcode/triples.hpp"

#include "delcode/error.hpp"

namespace delcode {
namespace {

using R = Rational;

void fill_shape(GoodTripleCert& c, unsigned q, unsigned t, const Rational& eps) {
  c.q = q;
  c.t = t;
  c.eps = eps;
  c.t1 = t % 2 == 1 ? t : t - 1;
  c.t2 = t % 2 == 0 ? t : t - 1;
}

// The range required by the definition: 0 < eps < min{q/(2t), 1/2}.
bool in_range(GoodTripleCert& c) {
  if (c.q < 2 || c.t < 2) {
    c.reason = "q and t must be at least 2";
    return false;
  }
  if (!(c.eps > R(0))) {
    c.reason = "eps must be positive";
    return false;
  }
  if (!(c.eps < min(R(c.q, 2 * c.t), R(1, 2)))) {
    c.reason = "eps must be below min{q/(2t), 1/2}";
    return false;
  }
  return true;
}

void finish(GoodTripleCert& c) {
  c.M = compute_M(c);
  if (c.t >= 3) c.M_loc = compute_M_loc(c);
}

R h_loc(unsigned q, unsigned t, unsigned tp) {
  const std::int64_t Q = q, T = t, P = tp;
  return R((Q + 1) * P * P + ((4 * Q - 2) * T + Q - 1) * P - 2 * Q * T);
}

R den_f(unsigned q, unsigned tp, unsigned s, const R& eps) {
  return R(2 * static_cast<std::int64_t>(s) * q) - R(tp) * (R(q - 1) + R(2) * eps);
}

R den_g(unsigned q, unsigned tp, unsigned s, const R& eps) {
  return R(tp) * (R(q - 1) - R(2) * eps) - R(2 * (static_cast<std::int64_t>(s) - 1) * q);
}

void require_good(const GoodTripleCert& c) {
  if (!c.is_good) throw ArgumentError("not a good triple");
}

}  // namespace

OpenInterval interval_I(unsigned q, unsigned tp, const Rational& eps) {
  const R half(tp, 2);
  return {half - (R(1) - R(2) * eps) * R(tp, 2 * q), half + R(1) - (R(1) + R(2) * eps) * R(tp, 2 * q)};
}

GoodTripleCert classify(unsigned q, unsigned t, const Rational& eps) {
  GoodTripleCert c;
  fill_shape(c, q, t, eps);
  if (!in_range(c)) return c;
  bool good = false;
  if (q > t) {
    good = eps < min(min(R(q, 2 * c.t1) - R(1, 2), R(q, 2 * t)), R(1, 2));
    if (!good) c.reason = "eps must be below q/(2 t1) - 1/2";
  } else if (q % 2 != 0) {
    c.reason = "q must be even when t >= q";
  } else if (t == q) {
    good = eps < R(1, 2 * (q - 1));
    if (!good) c.reason = "eps must be below 1/(2(q-1))";
  } else if (t < 2 * q) {
    good = eps < min(min(R(q, 2 * t), R(q, c.t2) - R(1, 2)), R(1, 2 * (q + 1)));
    if (!good) c.reason = "eps must be below min{q/(2t), q/t2 - 1/2, 1/(2(q+1))}";
  } else {
    c.reason = "t must be below 2q";
  }
  if (!good) return c;
  c.is_good = true;
  for (unsigned tp = 2; tp <= t; ++tp) c.s_table[tp] = tp <= q ? (tp + 1) / 2 : tp / 2;
  finish(c);
  return c;
}

GoodTripleCert classify_bruteforce(unsigned q, unsigned t, const Rational& eps) {
  GoodTripleCert c;
  fill_shape(c, q, t, eps);
  if (!in_range(c)) return c;
  for (unsigned tp = 2; tp <= t; ++tp) {
    const OpenInterval I = interval_I(q, tp, eps);
    unsigned hits = 0, found = 0;
    for (unsigned s = 1; s <= tp; ++s) {
      if (I.contains(R(s))) {
        ++hits;
        found = s;
      }
    }
    if (hits == 0) {
      c.reason = "I_" + std::to_string(tp) + " contains no integer in [1, t']";
      c.s_table.clear();
      return c;
    }
    if (hits > 1) throw ArgumentError("interval holds more than one integer");
    c.s_table[tp] = found;
  }
  c.is_good = true;
  finish(c);
  return c;
}

Rational term_f(unsigned q, unsigned tp, unsigned s, const Rational& eps) {
  return R(static_cast<std::int64_t>(tp) * (tp + 1) * (q - 1)) / den_f(q, tp, s, eps);
}

Rational term_g(unsigned q, unsigned tp, unsigned s, const Rational& eps) {
  return R(static_cast<std::int64_t>(tp) * (tp + 1) * (q - 1)) / den_g(q, tp, s, eps);
}

Rational term_f_loc(unsigned q, unsigned t, unsigned tp, unsigned s, const Rational& eps) {
  return h_loc(q, t, tp) / den_f(q, tp, s, eps);
}

Rational term_g_loc(unsigned q, unsigned t, unsigned tp, unsigned s, const Rational& eps) {
  return h_loc(q, t, tp) / den_g(q, tp, s, eps);
}

Rational compute_M_direct(const GoodTripleCert& c) {
  require_good(c);
  R best(0);
  for (const auto& [tp, s] : c.s_table) {
    best = max(best, term_f(c.q, tp, s, c.eps));
    best = max(best, term_g(c.q, tp, s, c.eps));
  }
  return best;
}

Rational compute_M_loc_direct(const GoodTripleCert& c) {
  require_good(c);
  if (c.t < 3) throw ArgumentError("M_loc needs t >= 3");
  R best(0);
  for (const auto& [tp, s] : c.s_table) {
    best = max(best, term_f_loc(c.q, c.t, tp, s, c.eps));
    best = max(best, term_g_loc(c.q, c.t, tp, s, c.eps));
  }
  return best;
}

Rational compute_M(const GoodTripleCert& c) {
  require_good(c);
  const std::int64_t q = c.q, t = c.t, t1 = c.t1, t2 = c.t2;
  const R& e = c.eps;
  if (q > t) {
    R even = R((t2 + 1) * (q - 1)) / (R(1) - R(2) * e);
    R odd = R(t1 * (t1 + 1) * (q - 1)) / (R(q) - (R(1) + R(2) * e) * R(t1));
    return max(even, odd);
  }
  if (t == q) {
    if (q == 2) return R(3) / (R(1) - R(2) * e);
    return R(q * q * q - 2 * q * q + q) / (R(1) - R(2) * e * R(q - 1));
  }
  if (q == 2 && t == 3) return R(12) / (R(1) - R(6) * e);
  R best = R((q * q - 1) * (q + 2)) / (R(1) - R(2) * e * R(q + 1));
  // For even t' > q the g term dominates f, so the even branch peaks at g(t2).
  if (t2 > q) best = max(best, R((q - 1) * t2 * (t2 + 1)) / (R(2 * q) - (R(1) + R(2) * e) * R(t2)));
  return best;
}

Rational compute_M_loc(const GoodTripleCert& c) {
  require_good(c);
  if (c.t < 3) throw ArgumentError("M_loc needs t >= 3");
  auto s_of = [&](unsigned tp) { return c.s_table.at(tp); };
  R best = max(term_f_loc(c.q, c.t, c.t2, s_of(c.t2), c.eps), term_g_loc(c.q, c.t, c.t1, s_of(c.t1), c.eps));
  if (c.q < c.t) best = max(best, term_f_loc(c.q, c.t, c.q + 1, s_of(c.q + 1), c.eps));
  return best;
}

}  // namespace delcode
