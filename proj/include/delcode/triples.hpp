#pragma once

#include <map>
#include <optional>
#include <string>

#include "delcode/rational.hpp"

namespace delcode {

struct GoodTripleCert {
  unsigned q = 0;
  unsigned t = 0;
  Rational eps;
  bool is_good = false;
  std::string reason;                    // why not good; empty when good
  std::map<unsigned, unsigned> s_table;  // t' -> s_{t'}, filled iff good
  std::optional<Rational> M;
  std::optional<Rational> M_loc;         // t >= 3 only
  unsigned t1 = 0;                       // largest odd <= t
  unsigned t2 = 0;                       // largest even <= t
};

// Open interval I_{t'} = (lo, hi).
struct OpenInterval {
  Rational lo;
  Rational hi;
  bool contains(const Rational& x) const { return lo < x && x < hi; }
};
OpenInterval interval_I(unsigned q, unsigned tp, const Rational& eps);

// Closed-form classification; fills s_table, M and M_loc when good.
GoodTripleCert classify(unsigned q, unsigned t, const Rational& eps);
// Integer search in every I_{t'}; fills s_table with the (unique) hit.
GoodTripleCert classify_bruteforce(unsigned q, unsigned t, const Rational& eps);

// Closed forms. Throw ArgumentError unless cert.is_good (and t >= 3 for M_loc).
Rational compute_M(const GoodTripleCert& cert);
Rational compute_M_loc(const GoodTripleCert& cert);
// Term-by-term maxima over t' in [2, t] using cert.s_table.
Rational compute_M_direct(const GoodTripleCert& cert);
Rational compute_M_loc_direct(const GoodTripleCert& cert);

// The per-t' terms, exposed for tests and reports.
Rational term_f(unsigned q, unsigned tp, unsigned s, const Rational& eps);
Rational term_g(unsigned q, unsigned tp, unsigned s, const Rational& eps);
Rational term_f_loc(unsigned q, unsigned t, unsigned tp, unsigned s, const Rational& eps);
Rational term_g_loc(unsigned q, unsigned t, unsigned tp, unsigned s, const Rational& eps);

}  // namespace delcode
